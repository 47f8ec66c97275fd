"""Tests for the dense Hermitian linear-algebra kernel."""

import numpy as np
import pytest

from statediscrim.exceptions import NotHermitian, OutOfRange, SingularInput
from statediscrim.numerics import (
    MAP_ZERO_TO_ZERO,
    REJECT,
    Tolerance,
    hermitian_eig,
    hermitize,
    matrix_function,
    min_eigenvalue,
)
from statediscrim.verification import random_unitary


def random_hermitian(rng, dim, scale=1.0):
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return hermitize(scale * z)


def test_identity_eigendecomposition():
    dec = hermitian_eig(np.eye(2))
    np.testing.assert_allclose(dec.eigenvalues, [1.0, 1.0])
    np.testing.assert_allclose(np.abs(dec.eigenvectors), np.eye(2), atol=1e-12)


def test_diagonal_eigenvalues_ascending():
    dec = hermitian_eig(np.diag([3.0, -1.0]))
    np.testing.assert_allclose(dec.eigenvalues, [-1.0, 3.0])


def test_pauli_x_eigenvalues():
    dec = hermitian_eig(np.array([[0.0, 1.0], [1.0, 0.0]]))
    np.testing.assert_allclose(dec.eigenvalues, [-1.0, 1.0], atol=1e-12)


def test_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_rejects_non_square():
    with pytest.raises(NotHermitian):
        min_eigenvalue(np.zeros((2, 3)))


def test_rejects_non_finite_entries():
    with pytest.raises(OutOfRange):
        hermitian_eig(np.array([[np.nan, 0.0], [0.0, 1.0]]))


@pytest.mark.parametrize("dim", [2, 3, 4, 5, 6])
def test_reconstruction_and_orthonormal_vectors(dim):
    rng = np.random.default_rng(dim)
    a = random_hermitian(rng, dim, scale=100.0)
    dec = hermitian_eig(a)
    assert np.max(np.abs(dec.reconstruct() - a)) <= 1e-10
    v = dec.eigenvectors
    assert np.max(np.abs(v.conj().T @ v - np.eye(dim))) <= 1e-10


@pytest.mark.parametrize("dim", [2, 3, 4, 5, 6])
def test_eigenvalue_sum_equals_trace(dim):
    rng = np.random.default_rng(10 + dim)
    a = random_hermitian(rng, dim)
    dec = hermitian_eig(a)
    assert abs(np.sum(dec.eigenvalues) - np.trace(a).real) <= 1e-9


def test_min_eigenvalue_examples():
    assert min_eigenvalue(np.eye(3)) == pytest.approx(1.0)
    assert min_eigenvalue(np.diag([0.3, -0.2])) == pytest.approx(-0.2)
    projector = np.diag([1.0, 0.0])
    assert abs(min_eigenvalue(projector)) <= 1e-12


def test_matrix_function_identity_map():
    rng = np.random.default_rng(3)
    a = random_hermitian(rng, 4)
    out = matrix_function(a, lambda x: x, null_policy=MAP_ZERO_TO_ZERO)
    assert np.max(np.abs(out - a)) <= 1e-10


def test_matrix_function_inverse_sqrt_diagonal():
    out = matrix_function(np.diag([4.0, 1.0]), lambda x: x**-0.5)
    np.testing.assert_allclose(out, np.diag([0.5, 1.0]), atol=1e-12)


def test_matrix_function_inverse_sqrt_of_orthonormal_frame():
    # Equal-coefficient symmetric states are orthonormal, so their frame
    # operator is the identity and so is its inverse square root.
    from statediscrim.ensembles import make_symmetric, realize

    e = realize(make_symmetric(3, np.ones(3)))
    phi = sum(np.outer(s.amplitudes, s.amplitudes.conj()) for s in e.states)
    out = matrix_function(hermitize(phi), lambda x: x**-0.5, null_policy=MAP_ZERO_TO_ZERO)
    np.testing.assert_allclose(out, np.eye(3), atol=1e-10)


def test_matrix_function_sqrt_squares_back():
    rng = np.random.default_rng(4)
    for dim in (2, 4, 6):
        b = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        a = hermitize(b @ b.conj().T)
        root = matrix_function(a, np.sqrt, null_policy=MAP_ZERO_TO_ZERO)
        assert np.max(np.abs(root @ root - a)) <= 1e-9


@pytest.mark.parametrize("dim", [2, 3, 4, 5, 6])
def test_matrix_function_basis_covariance(dim):
    rng = np.random.default_rng(20 + dim)
    a = random_hermitian(rng, dim)
    u = random_unitary(rng, dim)
    f = lambda x: x**3
    left = matrix_function(u @ a @ u.conj().T, f)
    right = u @ matrix_function(a, f) @ u.conj().T
    assert np.max(np.abs(left - right)) <= 1e-9


def test_matrix_function_null_policies():
    singular = np.diag([1.0, 0.0])
    with pytest.raises(SingularInput):
        matrix_function(singular, lambda x: x**-0.5, null_policy=REJECT)
    out = matrix_function(singular, lambda x: x**-0.5, null_policy=MAP_ZERO_TO_ZERO)
    np.testing.assert_allclose(out, np.diag([1.0, 0.0]), atol=1e-12)
    # Maps regular at zero pass through under REJECT even on singular input.
    out = matrix_function(singular, lambda x: x, null_policy=REJECT)
    np.testing.assert_allclose(out, singular, atol=1e-12)


def test_matrix_function_unknown_policy():
    with pytest.raises(OutOfRange):
        matrix_function(np.eye(2), lambda x: x, null_policy="bogus")


def test_tolerance_validation():
    with pytest.raises(OutOfRange):
        Tolerance(psd_floor=1e-3)
    with pytest.raises(OutOfRange):
        Tolerance(equality_eps=0.0)
    tol = Tolerance(psd_floor=-1e-8, equality_eps=1e-8)
    assert tol.psd_floor == -1e-8
