"""
Tests for battery capacity and subadditivity.
"""

import math

import numpy as np
import pytest

from qbcap.capacity import (
    XState,
    active_passive,
    capacity_from_spectra,
    capacity_report,
    capacity_spectral,
    capacity_unitary_orbit,
    dephase,
    random_x_state,
    schur_convexity_check,
    subadditivity_check,
)
from qbcap.exceptions import DimensionMismatchError, InvalidXStateError, NotMajorizedError
from qbcap.linalg import DensityOperator, random_density_matrix, random_hermitian
from qbcap.model import HamiltonianParams, battery_hamiltonian, battery_population
from qbcap.resources import majorizes


class TestCapacitySpectral:
    """Test the spectral capacity formula."""

    def test_diagonal_state(self):
        """Test C(diag(0.2, 0.8); diag(−1, 1)) = 1.2."""
        rho = DensityOperator(np.diag([0.2, 0.8]))
        assert capacity_spectral(rho, np.diag([-1.0, 1.0])) == pytest.approx(1.2)

    def test_pure_state_width(self, rng):
        """Test that a pure state has capacity ε_max − ε_min."""
        h = random_hermitian(4, rng)
        rho = random_density_matrix(4, rng, rank=1)
        eps = np.linalg.eigvalsh(h)
        assert capacity_spectral(rho, h) == pytest.approx(eps[-1] - eps[0])

    def test_maximally_mixed(self, rng):
        """Test that I/d has zero capacity."""
        h = random_hermitian(4, rng)
        assert capacity_spectral(DensityOperator.maximally_mixed(4), h) == 0.0

    def test_unitary_invariance(self, rng):
        """Test that capacity depends only on the spectrum of ρ."""
        from scipy.stats import unitary_group

        h = random_hermitian(4, rng)
        rho = random_density_matrix(4, rng)
        u = unitary_group.rvs(4, random_state=rng)
        rotated = DensityOperator(u @ rho.matrix @ u.conj().T)
        assert capacity_spectral(rotated, h) == pytest.approx(capacity_spectral(rho, h))

    def test_dimension_mismatch(self):
        """Test rejection of mismatched Hamiltonians."""
        with pytest.raises(DimensionMismatchError):
            capacity_spectral(DensityOperator(np.eye(2) / 2), np.eye(4))

    def test_from_spectra(self, rng):
        """Test that precomputed spectra give the same capacity."""
        h = random_hermitian(4, rng)
        eps = np.linalg.eigvalsh(h)
        for _ in range(20):
            rho = random_density_matrix(4, rng)
            assert capacity_from_spectra(rho.eigenvalues, eps) == pytest.approx(
                capacity_spectral(rho, h), abs=1e-12
            )

        with pytest.raises(DimensionMismatchError):
            capacity_from_spectra(np.array([0.5, 0.5]), eps)


class TestActivePassive:
    """Test active and passive states."""

    def test_qubit(self):
        """Test the extreme states of diag(0.2, 0.8)."""
        h = np.diag([-1.0, 1.0])
        active, passive = active_passive(DensityOperator(np.diag([0.2, 0.8])), h)
        np.testing.assert_allclose(active.matrix, np.diag([0.2, 0.8]), atol=1e-12)
        np.testing.assert_allclose(passive.matrix, np.diag([0.8, 0.2]), atol=1e-12)

    def test_energy_gap(self, rng):
        """Test Tr(ρ_a H) − Tr(ρ_p H) = C(ρ; H)."""
        h = random_hermitian(4, rng)
        rho = random_density_matrix(4, rng)
        active, passive = active_passive(rho, h)
        gap = active.expectation(h) - passive.expectation(h)
        assert gap == pytest.approx(capacity_spectral(rho, h))


class TestUnitaryOrbit:
    """Test the brute-force capacity oracle."""

    def test_agrees_with_spectral(self, rng):
        """Test the Haar-sampled capacity against the spectral formula."""
        h = np.diag([-1.0, 1.0])
        for _ in range(5):
            rho = random_density_matrix(2, rng)
            exact = capacity_spectral(rho, h)
            sampled = capacity_unitary_orbit(rho, h, n_samples=100_000, rng=rng)
            assert sampled <= exact + 1e-12
            assert exact - sampled <= 5e-3

    @pytest.mark.slow
    def test_agrees_on_hundred_states(self, rng):
        """Test the oracle on 100 random qubit states with 10⁵ unitaries each."""
        h = np.diag([-1.0, 1.0])
        for _ in range(100):
            rho = random_density_matrix(2, rng)
            exact = capacity_spectral(rho, h)
            sampled = capacity_unitary_orbit(rho, h, n_samples=100_000, rng=rng)
            assert sampled <= exact + 1e-12
            assert exact - sampled <= 5e-3


class TestCapacityReport:
    """Test the battery/charger/total split."""

    def test_initial_report(self, resonant_params):
        """Test capacities of |01⟩."""
        report = capacity_report(resonant_params, 0.0)
        assert report.battery == pytest.approx(2.0)
        assert report.charger == pytest.approx(2.0)
        assert report.total == pytest.approx(4.0)
        assert report.residual == pytest.approx(0.0, abs=1e-12)

    def test_maximal_entanglement(self, resonant_params):
        """Test that local capacities vanish when the state is maximally entangled."""
        report = capacity_report(resonant_params, math.pi / (4 * 0.1))
        assert report.battery == pytest.approx(0.0, abs=1e-12)
        assert report.charger == pytest.approx(0.0, abs=1e-12)
        assert report.residual == pytest.approx(4.0)

    def test_closed_form(self, param_samples):
        """Test C_b = 2ω_b|1 − 2p| along the evolution."""
        for params in param_samples:
            for t in np.linspace(0, 50, 21):
                p = float(battery_population(params, t))
                report = capacity_report(params, t)
                assert report.battery == pytest.approx(2 * params.omega_b * abs(1 - 2 * p), abs=1e-12)
                assert report.total >= report.battery + report.charger - 1e-12

    def test_zero_battery_field(self):
        """Test rejection of a vanishing battery gap."""
        from qbcap.exceptions import ParameterError

        with pytest.raises(ParameterError):
            capacity_report(HamiltonianParams(0.0, 1.0, 0.1, 0.1), 1.0)


class TestXState:
    """Test X-state construction."""

    def test_valid_state(self):
        """Test a valid X-state and its matrix."""
        x = XState(populations=(0.4, 0.1, 0.1, 0.4), corner=0.3, center=0.05j)
        m = x.to_matrix()
        assert m[0, 3] == 0.3 and m[3, 0] == 0.3
        assert m[1, 2] == 0.05j and m[2, 1] == -0.05j
        assert XState.from_matrix(m) == x

    def test_invalid_states(self):
        """Test positivity and normalization checks."""
        with pytest.raises(InvalidXStateError):
            XState(populations=(0.5, 0.5, 0.5, -0.5))

        with pytest.raises(InvalidXStateError):
            XState(populations=(0.25, 0.25, 0.25, 0.3))

        with pytest.raises(InvalidXStateError):
            XState(populations=(0.1, 0.4, 0.4, 0.1), corner=0.2)

    def test_from_matrix_rejects_non_x(self):
        """Test rejection of entries outside the X."""
        m = np.eye(4, dtype=complex) / 4
        m[0, 1] = m[1, 0] = 0.1
        with pytest.raises(InvalidXStateError):
            XState.from_matrix(m)

    def test_random_states_are_valid(self, rng):
        """Test that sampled X-states are density operators."""
        for _ in range(200):
            rho = random_x_state(rng).density()
            assert rho.eigenvalues[0] >= -1e-10


class TestSubadditivity:
    """Test C_b + C_c ≤ C on X-states."""

    def test_random_x_states(self, rng):
        """Test subadditivity on random X-states and random models."""
        for _ in range(500):
            params = HamiltonianParams(
                omega_b=rng.uniform(0.1, 2.0),
                omega_c=rng.uniform(0.1, 2.0),
                j1=rng.uniform(0.0, 1.0),
                j2=rng.uniform(0.0, 1.0),
            )
            result = subadditivity_check(random_x_state(rng), params)
            assert result.holds
            assert result.slack >= -1e-9

    def test_product_state_saturates(self, resonant_params):
        """Test equality for |01⟩ on resonance."""
        x = XState(populations=(0.0, 1.0, 0.0, 0.0))
        result = subadditivity_check(x, resonant_params)
        assert result.lhs == pytest.approx(4.0)
        assert result.rhs == pytest.approx(4.0)
        assert result.holds

    def test_rejects_plain_matrix(self, resonant_params):
        """Test that only X-states are accepted."""
        with pytest.raises(InvalidXStateError):
            subadditivity_check(np.eye(4) / 4, resonant_params)


class TestSchurConvexity:
    """Test monotonicity of capacity under majorization."""

    def test_dephasing(self, rng):
        """Test C(Δ(ρ)) ≤ C(ρ) since the eigenvalues of Δ(ρ) are majorized by those of ρ."""
        h = random_hermitian(4, rng)
        for _ in range(20):
            rho = random_density_matrix(4, rng)
            assert schur_convexity_check(dephase(rho), rho, h)

    @pytest.mark.parametrize("dim", [2, 3, 4])
    def test_dephased_spectrum_majorized(self, rng, dim):
        """Test that the spectrum of Δ(ρ) is majorized by that of ρ on 1000 random states."""
        for _ in range(1000):
            rho = random_density_matrix(dim, rng)
            assert majorizes(dephase(rho).eigenvalues, rho.eigenvalues)

    @pytest.mark.parametrize("m", np.linspace(0.0, 1.0, 11))
    def test_mixture_with_maximally_mixed(self, rng, m):
        """Test C(m·σ + (1 − m)·I/d) ≤ C(σ) for the majorized mixture."""
        h = random_hermitian(4, rng)
        for _ in range(20):
            sigma = random_density_matrix(4, rng)
            mixture = DensityOperator(m * sigma.matrix + (1.0 - m) * np.eye(4) / 4)
            assert majorizes(mixture.eigenvalues, sigma.eigenvalues)
            assert schur_convexity_check(mixture, sigma, h)
            assert capacity_spectral(mixture, h) == pytest.approx(
                m * capacity_spectral(sigma, h), abs=1e-12
            )

    def test_not_majorized(self, resonant_params):
        """Test rejection when the spectra are in the wrong order."""
        pure = DensityOperator(np.diag([1.0, 0.0]))
        mixed = DensityOperator(np.eye(2) / 2)
        with pytest.raises(NotMajorizedError):
            schur_convexity_check(pure, mixed, battery_hamiltonian(resonant_params))
