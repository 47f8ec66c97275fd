"""Closed-form distinguishability measures and measurement construction.

Two-state formulas take the scalar pair (overlap, delta) directly, where
overlap = |<psi_1|psi_2>| and delta = |p_1 - p_2|; symmetric-family
formulas take the coefficient vector.  The square-root measurement gives
the numerical route that the closed forms are cross-validated against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numerics
from .ensembles import Ensemble, SymmetricEnsemble, gram
from .exceptions import DimensionMismatch, InvariantViolation, OutOfRange, SingularFrame
from .numerics import DEFAULT_TOLERANCE, MAP_ZERO_TO_ZERO, Tolerance, hermitize

__all__ = [
    "CLOSED_FORM",
    "COMPLETENESS_EPS",
    "ORACLE",
    "MeasureReport",
    "Povm",
    "ensemble_entropy_two_state",
    "helstrom_two_state",
    "hyp_success_probability",
    "jaeger_shimony",
    "optimality_certificate",
    "p_hyp_symmetric",
    "p_usd_symmetric",
    "square_root_measurement",
    "two_state_overlap_delta",
]

# Entrywise tolerance for POVM completeness (sum of elements vs identity).
COMPLETENESS_EPS = 1e-9

# Hermiticity tolerance for the optimality certificate's Upsilon operator.
_CERT_HERMITICITY_EPS = 1e-8

CLOSED_FORM = "closed_form"
ORACLE = "oracle"


@dataclass(frozen=True, eq=False)
class Povm:
    """Positive operators summing to the identity."""

    elements: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise InvariantViolation("a POVM needs at least one element")
        mats = tuple(numerics.as_complex_matrix(m) for m in self.elements)
        dim = mats[0].shape[0]
        total = np.zeros((dim, dim), dtype=complex)
        for m in mats:
            if m.shape != (dim, dim):
                raise DimensionMismatch("POVM elements must share one square shape")
            if numerics.min_eigenvalue(m) < DEFAULT_TOLERANCE.psd_floor:
                raise InvariantViolation("POVM element is not positive semidefinite")
            total += m
        if np.max(np.abs(total - np.eye(dim))) > COMPLETENESS_EPS:
            raise InvariantViolation("POVM elements do not sum to the identity")
        object.__setattr__(self, "elements", mats)

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class MeasureReport:
    """A named probability measure with provenance and certificate status."""

    measure_name: str
    value: float
    method: str
    certificate_ok: bool | None = None

    def __post_init__(self) -> None:
        if not -1e-12 <= self.value <= 1.0 + 1e-12:
            raise InvariantViolation(
                f"{self.measure_name} value {self.value!r} is not a probability"
            )
        if self.method not in (CLOSED_FORM, ORACLE):
            raise OutOfRange(f"unknown method {self.method!r}")


def _check_unit_interval(value: float, name: str) -> float:
    v = float(value)
    if not 0.0 <= v <= 1.0 or math.isnan(v):
        raise OutOfRange(f"{name} must lie in [0, 1], got {value!r}")
    return v


def helstrom_two_state(overlap: float, delta: float) -> float:
    """Best achievable two-state identification probability.

    (1/2) * (1 + sqrt(1 - (1 - delta^2) * overlap^2))
    """
    s = _check_unit_interval(overlap, "overlap")
    d = _check_unit_interval(delta, "delta")
    return 0.5 * (1.0 + math.sqrt(1.0 - (1.0 - d * d) * s * s))


def jaeger_shimony(overlap: float, delta: float) -> float:
    """Best achievable two-state unambiguous-discrimination probability.

    1 - sqrt(1 - delta^2) * overlap           while sqrt((1-delta)/(1+delta)) >= overlap,
    (1/2) * (1 + delta) * (1 - overlap^2)     otherwise.

    The two branches agree at the boundary overlap, where both equal delta.
    """
    s = _check_unit_interval(overlap, "overlap")
    d = float(delta)
    if not 0.0 <= d < 1.0 or math.isnan(d):
        raise OutOfRange(f"delta must lie in [0, 1), got {delta!r}")
    if math.sqrt((1.0 - d) / (1.0 + d)) >= s:
        return 1.0 - math.sqrt(1.0 - d * d) * s
    return 0.5 * (1.0 + d) * (1.0 - s * s)


def p_usd_symmetric(sym: SymmetricEnsemble) -> float:
    """Unambiguous-discrimination maximum for a symmetric ensemble:
    n * min_r coeffs[r]^2."""
    return sym.n * float(np.min(sym.coeffs)) ** 2


def p_hyp_symmetric(sym: SymmetricEnsemble) -> float:
    """Hypothesis-testing maximum for a symmetric ensemble:
    (sum_r coeffs[r])^2 / n."""
    return float(np.sum(sym.coeffs)) ** 2 / sym.n


def square_root_measurement(e: Ensemble, tol: Tolerance = DEFAULT_TOLERANCE) -> Povm:
    """POVM with elements |w_j><w_j| where w_j = Phi^{-1/2} psi_j and
    Phi = sum_j |psi_j><psi_j|.

    The inverse square root is the pseudo-function (zero eigenvalues map to
    zero); when Phi has a null space, the projector onto it is appended so
    the POVM closes to the identity.
    """
    d = e.dim
    phi = np.zeros((d, d), dtype=complex)
    for s in e.states:
        phi += np.outer(s.amplitudes, s.amplitudes.conj())
    phi = hermitize(phi)
    inv_sqrt = numerics.matrix_function(
        phi, lambda x: x**-0.5, null_policy=MAP_ZERO_TO_ZERO, tol=tol
    )
    # States must live in the numerical span of Phi, else w_j is meaningless.
    span_projector = hermitize(inv_sqrt @ phi @ inv_sqrt)
    for s in e.states:
        leakage = 1.0 - float(np.real(np.vdot(s.amplitudes, span_projector @ s.amplitudes)))
        if leakage > math.sqrt(tol.equality_eps):
            raise SingularFrame(
                "frame operator is numerically singular on the states' span"
            )
    elements = [
        hermitize(np.outer(inv_sqrt @ s.amplitudes, (inv_sqrt @ s.amplitudes).conj()))
        for s in e.states
    ]
    completion = np.eye(d) - sum(elements)
    if np.max(np.abs(completion)) > tol.equality_eps:
        elements.append(hermitize(completion))
    return Povm(tuple(elements))


def hyp_success_probability(e: Ensemble, m: Povm) -> float:
    """sum_j priors[j] * <psi_j| E_j |psi_j>, with element j scoring state j."""
    if len(m) < e.size:
        raise DimensionMismatch(f"{len(m)} POVM elements for {e.size} states")
    if m.dim != e.dim:
        raise DimensionMismatch("POVM and ensemble dimensions differ")
    total = 0.0
    for p, s, el in zip(e.priors, e.states, m.elements):
        total += p * float(np.real(np.vdot(s.amplitudes, el @ s.amplitudes)))
    return total


def optimality_certificate(
    e: Ensemble, m: Povm, tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Check the standard minimum-error optimality conditions.

    Builds Upsilon = sum_j priors[j] E_j rho_j with rho_j = |psi_j><psi_j|
    and returns True iff Upsilon is Hermitian within 1e-8 and
    Upsilon - priors[j] rho_j is positive semidefinite (within psd_floor
    scaled by the dimension) for every j.
    """
    if len(m) < e.size:
        raise DimensionMismatch(f"{len(m)} POVM elements for {e.size} states")
    if m.dim != e.dim:
        raise DimensionMismatch("POVM and ensemble dimensions differ")
    d = e.dim
    upsilon = np.zeros((d, d), dtype=complex)
    projectors = []
    for p, s, el in zip(e.priors, e.states, m.elements):
        rho = np.outer(s.amplitudes, s.amplitudes.conj())
        projectors.append(p * rho)
        upsilon += p * (el @ rho)
    if float(np.max(np.abs(upsilon - upsilon.conj().T))) > _CERT_HERMITICITY_EPS:
        return False
    upsilon = hermitize(upsilon)
    floor = tol.psd_floor * d
    return all(
        numerics.min_eigenvalue(hermitize(upsilon - pr)) >= floor for pr in projectors
    )


def ensemble_entropy_two_state(overlap: float, delta: float) -> float:
    """Entropy in bits of a two-state ensemble's density operator.

    Binary entropy of x = (1/2)(1 + sqrt(1 - (1 - delta^2)(1 - overlap^2))),
    with the convention 0*log(0) = 0.
    """
    s = _check_unit_interval(overlap, "overlap")
    d = _check_unit_interval(delta, "delta")
    x = 0.5 * (1.0 + math.sqrt(1.0 - (1.0 - d * d) * (1.0 - s * s)))
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -(x * math.log2(x) + (1.0 - x) * math.log2(1.0 - x))


def two_state_overlap_delta(e: Ensemble) -> tuple[float, float]:
    """Extract (overlap, delta) from a two-state ensemble's Gram matrix
    and priors."""
    if e.size != 2:
        raise DimensionMismatch(f"expected 2 states, got {e.size}")
    g = gram(e).entries
    overlap = min(1.0, float(abs(g[0, 1])))
    delta = min(1.0, float(abs(e.priors[0] - e.priors[1])))
    return overlap, delta
