"""
qbcap Test Suite

This module contains unit and integration tests for the qbcap library.
"""
