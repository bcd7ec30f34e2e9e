"""Tests for the Hermitian linear algebra kernel."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lsmi.linalg import (
    DimensionMismatchError,
    NotHermitianError,
    NotPositiveDefiniteError,
    NotSquareError,
    add_scaled_identity,
    hermitian_factor,
    inner,
    solve,
)


def random_pd(n, rng, shift=1.0):
    b = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return b @ b.conj().T + shift * np.eye(n)


class TestHermitianFactor:
    def test_identity(self):
        f = hermitian_factor(np.eye(3, dtype=complex))
        assert np.allclose(f.lower, np.eye(3))

    def test_diagonal(self):
        f = hermitian_factor(np.diag([4.0, 9.0]).astype(complex))
        assert np.allclose(f.lower, np.diag([2.0, 3.0]))

    def test_reconstruction(self):
        rng = np.random.default_rng(0)
        a = random_pd(5, rng)
        f = hermitian_factor(a)
        err = np.linalg.norm(f.reconstruct() - a) / np.linalg.norm(a)
        assert err < 1e-12

    def test_diagonal_of_factor_real_positive(self):
        rng = np.random.default_rng(1)
        f = hermitian_factor(random_pd(6, rng))
        d = np.diag(f.lower)
        assert np.all(d.real > 0)
        assert np.allclose(d.imag, 0)

    def test_rejects_non_square(self):
        with pytest.raises(NotSquareError):
            hermitian_factor(np.ones((2, 3), dtype=complex))

    def test_rejects_non_hermitian(self):
        a = np.array([[1.0, 2.0], [0.0, 1.0]], dtype=complex)
        with pytest.raises(NotHermitianError):
            hermitian_factor(a)

    def test_rejects_negative_eigenvalue_with_pivot(self):
        # spectral synthesis: one eigenvalue flipped negative
        rng = np.random.default_rng(2)
        q, _ = np.linalg.qr(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
        a = q @ np.diag([3.0, 2.0, -1.0, 1.0]) @ q.conj().T
        with pytest.raises(NotPositiveDefiniteError) as exc:
            hermitian_factor(a)
        assert 0 <= exc.value.pivot < 4

    def test_absorbs_rounding_asymmetry(self):
        rng = np.random.default_rng(3)
        a = random_pd(4, rng)
        a[0, 1] += 1e-13  # below tolerance relative to scale
        hermitian_factor(a)


class TestSolve:
    def test_identity_roundtrip(self):
        f = hermitian_factor(np.eye(4, dtype=complex))
        b = np.arange(4) + 1j * np.arange(4)
        assert np.allclose(solve(f, b), b)

    def test_diagonal(self):
        f = hermitian_factor(np.diag([2.0, 5.0]).astype(complex))
        x = solve(f, np.array([2.0, 10.0], dtype=complex))
        assert np.allclose(x, [1.0, 2.0])

    def test_residual_random_pd(self):
        rng = np.random.default_rng(4)
        a = random_pd(8, rng)
        b = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        x = solve(hermitian_factor(a), b)
        assert np.linalg.norm(a @ x - b) / np.linalg.norm(b) < 1e-10

    def test_dimension_mismatch(self):
        f = hermitian_factor(np.eye(3, dtype=complex))
        with pytest.raises(DimensionMismatchError):
            solve(f, np.ones(4, dtype=complex))

    @given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=2, max_value=24))
    @settings(max_examples=30, deadline=None)
    def test_factor_solve_roundtrip_property(self, seed, n):
        rng = np.random.default_rng(seed)
        a = random_pd(n, rng)
        b = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        x = solve(hermitian_factor(a), b)
        assert np.linalg.norm(a @ x - b) / np.linalg.norm(b) <= 1e-10


class TestInner:
    def test_self_inner_is_norm(self):
        assert inner(np.array([1, 1j]), np.array([1, 1j])) == pytest.approx(2)

    def test_orthogonal(self):
        assert inner(np.array([1, 0]), np.array([0, 1])) == 0

    def test_conjugation_side(self):
        a = np.array([1j], dtype=complex)
        b = np.array([1.0], dtype=complex)
        assert inner(a, b) == pytest.approx(-1j)

    def test_against_extended_precision_sum(self):
        rng = np.random.default_rng(5)
        a = rng.standard_normal(200) + 1j * rng.standard_normal(200)
        b = rng.standard_normal(200) + 1j * rng.standard_normal(200)
        # extended-precision elementwise oracle
        terms = [complex(x) for x in np.conj(a) * b]
        ref = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
        got = inner(a, b)
        assert abs(got - ref) / abs(ref) < 1e-14

    def test_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            inner(np.ones(2), np.ones(3))

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=30, deadline=None)
    def test_self_inner_real_nonnegative(self, seed):
        rng = np.random.default_rng(seed)
        a = rng.standard_normal(16) + 1j * rng.standard_normal(16)
        z = inner(a, a)
        assert z.real >= 0
        assert abs(z.imag) <= 1e-14 * max(z.real, 1.0)


class TestAddScaledIdentity:
    def test_zero_matrix(self):
        out = add_scaled_identity(np.zeros((2, 2), dtype=complex), 3.0)
        assert np.allclose(out, np.diag([3.0, 3.0]))

    def test_alpha_zero_is_identity_op(self):
        a = np.eye(2, dtype=complex)
        assert np.allclose(add_scaled_identity(a, 0.0), a)

    def test_shifts_diagonal_only(self):
        rng = np.random.default_rng(6)
        a = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        out = add_scaled_identity(a, 0.7)
        assert np.allclose(np.diag(out), np.diag(a) + 0.7)
        off = out - np.diag(np.diag(out))
        assert np.allclose(off, a - np.diag(np.diag(a)))

    def test_input_unmodified(self):
        a = np.eye(3, dtype=complex)
        before = a.copy()
        add_scaled_identity(a, 2.0)
        assert np.array_equal(a, before)

    def test_rejects_rectangular(self):
        with pytest.raises(NotSquareError):
            add_scaled_identity(np.ones((2, 3), dtype=complex), 1.0)
