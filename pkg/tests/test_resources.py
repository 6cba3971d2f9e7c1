"""
Tests for quantum resource measures and majorization.
"""

import math

import numpy as np
import pytest

from qbcap.exceptions import (
    DimensionMismatchError,
    LengthMismatchError,
    NotNormalizedError,
    NotPureError,
)
from qbcap.linalg import DensityOperator, ket, partial_trace
from qbcap.model import HamiltonianParams, evolved_density
from qbcap.resources import (
    bell_chsh,
    coherence_l1,
    concurrence,
    correlation_matrix,
    imaginarity_l1,
    majorizes,
    measure_all,
    steering_f3,
    texture_free_state,
    texture_tr,
)


@pytest.fixture
def bell_state():
    """(|01⟩ + |10⟩)/√2."""
    return DensityOperator.from_pure((ket("01") + ket("10")) / math.sqrt(2))


@pytest.fixture
def product_state():
    """|01⟩."""
    return DensityOperator.from_pure(ket("01"))


class TestCorrelationMatrix:
    """Test the Pauli correlation matrix."""

    def test_bell_state(self, bell_state):
        """Test T = diag(1, 1, −1)."""
        np.testing.assert_allclose(correlation_matrix(bell_state).t, np.diag([1.0, 1.0, -1.0]), atol=1e-12)

    def test_product_state(self, product_state):
        """Test T = diag(0, 0, −1)."""
        np.testing.assert_allclose(correlation_matrix(product_state).t, np.diag([0.0, 0.0, -1.0]))

    def test_closed_form(self, detuned_params):
        """Test the entries for α|01⟩ + β|10⟩."""
        rho = evolved_density(detuned_params, 2.3)
        product = rho.matrix[1, 2]  # αβ*
        t = correlation_matrix(rho).t
        assert t[0, 0] == pytest.approx(2 * product.real)
        assert t[1, 1] == pytest.approx(2 * product.real)
        assert t[0, 1] == pytest.approx(2 * product.imag)
        assert t[1, 0] == pytest.approx(-2 * product.imag)
        assert t[2, 2] == pytest.approx(-1.0)

    def test_wrong_dimension(self):
        """Test rejection of one-qubit states."""
        with pytest.raises(DimensionMismatchError):
            correlation_matrix(DensityOperator(np.eye(2) / 2))


class TestMeasures:
    """Test individual resource measures."""

    def test_bell_state_values(self, bell_state):
        """Test the maximally entangled values."""
        assert concurrence(bell_state) == pytest.approx(1.0)
        assert steering_f3(bell_state) == pytest.approx(2.0)
        assert bell_chsh(bell_state) == pytest.approx(2 * math.sqrt(2) - 2)
        assert coherence_l1(bell_state) == pytest.approx(1.0)
        assert imaginarity_l1(bell_state) == pytest.approx(0.0)

    def test_product_state_values(self, product_state):
        """Test that a product basis state carries no correlations."""
        assert concurrence(product_state) == 0.0
        assert steering_f3(product_state) == pytest.approx(0.0)
        assert bell_chsh(product_state) == pytest.approx(0.0)
        assert coherence_l1(product_state) == 0.0

    def test_imaginarity(self):
        """Test imaginarity of (|01⟩ + i|10⟩)/√2."""
        rho = DensityOperator.from_pure((ket("01") + 1j * ket("10")) / math.sqrt(2))
        assert imaginarity_l1(rho) == pytest.approx(1.0)
        assert coherence_l1(rho) == pytest.approx(1.0)

    def test_concurrence_needs_pure_state(self):
        """Test that mixed states are rejected."""
        with pytest.raises(NotPureError):
            concurrence(DensityOperator(np.eye(4) / 4))

    def test_resonant_concurrence(self, resonant_params):
        """Test E(t) = |sin(2J₁t)| on resonance."""
        rho = evolved_density(resonant_params, 5.005)
        assert concurrence(rho) == pytest.approx(abs(math.sin(1.001)), abs=1e-12)

    @pytest.mark.parametrize(
        "params, t",
        [
            (HamiltonianParams(0.5, 1.2, 0.5, 0.0), 0.0),
            (HamiltonianParams(0.5, 2.0, 1.0, 1.0), 3 * math.pi / math.sqrt(3.25)),
        ],
    )
    def test_concurrence_at_product_states(self, params, t):
        """Test E = C₁ = 0 to roundoff at t = 0 and at a revival."""
        rho = evolved_density(params, t)
        assert concurrence(rho) <= 1e-10
        assert abs(concurrence(rho) - coherence_l1(rho)) <= 1e-10

    def test_concurrence_equals_coherence(self, param_samples):
        """Test E = C₁ along the evolution, including near product states."""
        for params in param_samples:
            for t in np.linspace(0.0, 50.0, 201):
                rho = evolved_density(params, t)
                assert abs(concurrence(rho) - coherence_l1(rho)) <= 1e-12


class TestTexture:
    """Test state texture."""

    def test_free_state(self):
        """Test the uniform-superposition projector."""
        np.testing.assert_allclose(texture_free_state(2), np.full((2, 2), 0.5))
        assert texture_tr(DensityOperator(texture_free_state(2))) == pytest.approx(0.0, abs=1e-12)

    def test_reference_values(self):
        """Test texture of |0⟩⟨0| and I/2."""
        assert texture_tr(DensityOperator(np.diag([1.0, 0.0]))) == pytest.approx(math.sqrt(2) / 2)
        assert texture_tr(DensityOperator(np.eye(2) / 2)) == pytest.approx(0.5)

    def test_diagonal_states(self):
        """Test T_tr(diag(p, 1−p)) = √((p − ½)² + ¼)."""
        for p in (0.0, 0.2, 0.5, 0.9):
            rho = DensityOperator(np.diag([p, 1 - p]))
            assert texture_tr(rho) == pytest.approx(math.sqrt((p - 0.5) ** 2 + 0.25))


class TestMeasureAll:
    """Test the combined report."""

    def test_initial_state(self, resonant_params):
        """Test all six measures at t = 0."""
        rho = evolved_density(resonant_params, 0.0)
        report = measure_all(rho, partial_trace(rho, "battery"))
        assert report.concurrence == 0.0
        assert report.steering == pytest.approx(0.0)
        assert report.bell == pytest.approx(0.0)
        assert report.coherence_l1 == 0.0
        assert report.imaginarity_l1 == 0.0
        assert report.texture_tr == pytest.approx(math.sqrt(2) / 2)

    def test_to_dict(self, resonant_params):
        """Test dictionary keys."""
        rho = evolved_density(resonant_params, 1.0)
        report = measure_all(rho, partial_trace(rho, "battery"))
        assert list(report.to_dict()) == [
            "concurrence",
            "steering",
            "bell",
            "coherence_l1",
            "imaginarity_l1",
            "texture_tr",
        ]


class TestMajorization:
    """Test majorization of probability vectors."""

    def test_basic_relations(self):
        """Test uniform ≺ pure but not the reverse."""
        assert majorizes([0.5, 0.5], [1.0, 0.0])
        assert not majorizes([1.0, 0.0], [0.5, 0.5])

    def test_order_independent(self):
        """Test that input order does not matter."""
        assert majorizes([0.2, 0.3, 0.5], [0.0, 0.9, 0.1])

    def test_reflexive(self):
        """Test λ ≺ λ."""
        assert majorizes([0.1, 0.2, 0.7], [0.7, 0.1, 0.2])

    @staticmethod
    def _doubly_stochastic(dim, rng, n_terms=4):
        """Convex combination of random permutation matrices."""
        weights = rng.dirichlet(np.ones(n_terms))
        return sum(w * np.eye(dim)[rng.permutation(dim)] for w in weights)

    @pytest.mark.parametrize("dim", [2, 3, 5, 8])
    def test_transitive(self, rng, dim):
        """Test λ ≺ μ and μ ≺ η imply λ ≺ η along doubly stochastic chains."""
        for _ in range(200):
            eta = rng.dirichlet(np.ones(dim))
            mu = self._doubly_stochastic(dim, rng) @ eta
            lam = self._doubly_stochastic(dim, rng) @ mu
            assert majorizes(mu, eta)
            assert majorizes(lam, mu)
            assert majorizes(lam, eta)

    def test_transitive_random_triples(self, rng):
        """Test transitivity on unrelated random triples whenever both premises hold."""
        chains = 0
        for _ in range(2000):
            lam, mu, eta = rng.dirichlet(np.full(3, 0.5), size=3)
            if majorizes(lam, mu) and majorizes(mu, eta):
                chains += 1
                assert majorizes(lam, eta)
        assert chains > 0

    @pytest.mark.parametrize("dim", [2, 3, 4, 10])
    def test_extremes(self, rng, dim):
        """Test (1/d, …, 1/d) ≺ λ ≺ (1, 0, …, 0) for random λ."""
        pure = np.zeros(dim)
        pure[0] = 1.0
        uniform = np.full(dim, 1.0 / dim)
        for _ in range(100):
            lam = rng.dirichlet(np.ones(dim))
            assert majorizes(uniform, lam)
            assert majorizes(lam, pure)
            assert majorizes(uniform, pure)

    def test_invalid_inputs(self):
        """Test length and normalization checks."""
        with pytest.raises(LengthMismatchError):
            majorizes([0.5, 0.5], [1.0, 0.0, 0.0])

        with pytest.raises(NotNormalizedError):
            majorizes([0.5, 0.6], [1.0, 0.0])
