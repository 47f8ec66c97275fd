"""Dense complex Hermitian linear algebra with explicit tolerance semantics.

Everything downstream operates on small dense complex matrices (dimension
rarely above 16), so this kernel wraps numpy's Hermitian eigensolver with
the symmetry checks and null-space conventions the rest of the package
relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exceptions import (
    DimensionMismatch,
    NotHermitian,
    NumericalFailure,
    OutOfRange,
    SingularInput,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "MAP_ZERO_TO_ZERO",
    "REJECT",
    "HermitianEigenDecomposition",
    "Tolerance",
    "as_complex_matrix",
    "hermitian_eig",
    "hermitize",
    "matrix_function",
    "min_eigenvalue",
]

# Null-space policies for matrix_function.
REJECT = "reject"
MAP_ZERO_TO_ZERO = "map_zero_to_zero"


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds used by eigenvalue-based checks.

    psd_floor is the most negative eigenvalue still accepted as "positive
    semidefinite"; equality_eps bounds entrywise equality checks and marks
    the numerical null space.
    """

    psd_floor: float = -1e-10
    equality_eps: float = 1e-10

    def __post_init__(self) -> None:
        if self.psd_floor > 0:
            raise OutOfRange(f"psd_floor must be <= 0, got {self.psd_floor}")
        if self.equality_eps <= 0:
            raise OutOfRange(f"equality_eps must be > 0, got {self.equality_eps}")


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True, eq=False)
class HermitianEigenDecomposition:
    """Spectral decomposition A = V diag(eigenvalues) V^dagger.

    Eigenvalues are real and ascending; eigenvectors are the orthonormal
    columns of ``eigenvectors``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_complex_matrix(a) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting NaN/Inf entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise OutOfRange("matrix entries must be finite")
    return m


def hermitize(a) -> np.ndarray:
    """Symmetrize (A + A^dagger)/2 to suppress round-off drift.

    Applied after every construction from outer products so downstream
    eigensolvers stay in contract.
    """
    m = as_complex_matrix(a)
    return 0.5 * (m + m.conj().T)


def _require_hermitian(a, tol: Tolerance) -> np.ndarray:
    m = as_complex_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise NotHermitian(f"matrix is not square: shape {m.shape}")
    deviation = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if deviation > tol.equality_eps:
        raise NotHermitian(
            f"max |A - A^dagger| = {deviation:.3e} exceeds {tol.equality_eps:.1e}"
        )
    return 0.5 * (m + m.conj().T)


def hermitian_eig(a, tol: Tolerance = DEFAULT_TOLERANCE) -> HermitianEigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    m = _require_hermitian(a, tol)
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigensolver did not converge: {exc}") from exc
    return HermitianEigenDecomposition(eigenvalues=w, eigenvectors=v)


def min_eigenvalue(a, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    m = _require_hermitian(a, tol)
    try:
        w = np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigensolver did not converge: {exc}") from exc
    return float(w[0])


def _map_is_singular_at_zero(f: Callable[[float], float]) -> bool:
    try:
        probe = float(f(0.0))
    except (ArithmeticError, ValueError):
        return True
    return not np.isfinite(probe)


def matrix_function(
    a,
    f: Callable[[float], float],
    null_policy: str = REJECT,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> np.ndarray:
    """Apply a real scalar map to a Hermitian matrix through its spectrum.

    Returns V f(Lambda) V^dagger.  Eigenvalues within ``tol.equality_eps``
    of zero form the numerical null space: with ``MAP_ZERO_TO_ZERO`` they
    are sent to zero (the pseudo-function used for inverse square roots),
    while ``REJECT`` raises SingularInput when such an eigenvalue meets a
    map that is singular at zero.
    """
    if null_policy not in (REJECT, MAP_ZERO_TO_ZERO):
        raise OutOfRange(f"unknown null policy {null_policy!r}")
    dec = hermitian_eig(a, tol)
    w = dec.eigenvalues
    null = np.abs(w) <= tol.equality_eps
    mapped = np.empty_like(w)
    if np.any(null):
        if null_policy == MAP_ZERO_TO_ZERO:
            mapped[null] = 0.0
        elif _map_is_singular_at_zero(f):
            raise SingularInput(
                "matrix has numerically zero eigenvalues and the scalar map "
                "is singular at zero"
            )
        else:
            mapped[null] = [float(f(x)) for x in w[null]]
    keep = ~null
    mapped[keep] = [float(f(x)) for x in w[keep]]
    v = dec.eigenvectors
    return hermitize((v * mapped) @ v.conj().T)
