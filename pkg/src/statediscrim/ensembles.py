"""Pure-state ensembles, including the canonical symmetric family.

A symmetric ensemble is generated from one positive coefficient vector
c_r by n-th-root-of-unity phase patterns over the computational basis:

    psi_j[r] = c_r * exp(2*pi*i*j*r/n),   j, r = 0..n-1

with equal priors 1/n.  Its Gram matrix is circulant with eigenvalues
{n * c_r^2}, which is what makes the closed-form measures possible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import numerics
from .exceptions import (
    BadLength,
    DimensionMismatch,
    FormatError,
    InvariantViolation,
    OutOfRange,
    ZeroCoefficient,
)
from .numerics import DEFAULT_TOLERANCE

__all__ = [
    "INDEPENDENCE_THRESHOLD",
    "Ensemble",
    "GramMatrix",
    "LoadedEnsemble",
    "PureState",
    "SymmetricEnsemble",
    "ensemble_from_dict",
    "ensemble_to_dict",
    "gram",
    "is_linearly_independent",
    "load_ensemble",
    "make_symmetric",
    "realize",
]

# Minimum Gram eigenvalue that still counts as linearly independent;
# separates round-off noise from genuine degeneracy at these dimensions.
INDEPENDENCE_THRESHOLD = 1e-9

_NORM_EPS = 1e-10
_PRIOR_EPS = 1e-12


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm complex amplitude vector."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.ndim != 1 or amps.size == 0:
            raise DimensionMismatch("amplitudes must form a nonempty vector")
        if not np.all(np.isfinite(amps)):
            raise InvariantViolation("amplitudes must be finite")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > _NORM_EPS:
            raise InvariantViolation(f"state norm {norm!r} is not 1 within {_NORM_EPS}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Pure states together with their preparation probabilities."""

    states: tuple[PureState, ...]
    priors: np.ndarray

    def __post_init__(self) -> None:
        states = tuple(self.states)
        if not states:
            raise InvariantViolation("ensemble needs at least one state")
        dim = states[0].dim
        if any(s.dim != dim for s in states):
            raise DimensionMismatch("all states must share one dimension")
        priors = np.asarray(self.priors, dtype=float)
        if priors.ndim != 1 or priors.size != len(states):
            raise BadLength(
                f"{priors.size} priors for {len(states)} states"
            )
        if np.any(priors < 0) or not np.all(np.isfinite(priors)):
            raise InvariantViolation("priors must be nonnegative and finite")
        total = float(np.sum(priors))
        if abs(total - 1.0) > _PRIOR_EPS:
            raise InvariantViolation(f"priors sum to {total!r}, not 1")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "priors", priors)

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def dim(self) -> int:
        return self.states[0].dim

    def state_matrix(self) -> np.ndarray:
        """States as the columns of a dim x size matrix."""
        return np.column_stack([s.amplitudes for s in self.states])


@dataclass(frozen=True, eq=False)
class SymmetricEnsemble:
    """Coefficient vector and size encoding a symmetric ensemble canonically.

    Coefficients are real and strictly positive (phases are absorbed into
    the basis) with sum of squares 1; zero coefficients are rejected since
    they break linear independence.
    """

    n: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.asarray(self.coeffs, dtype=float)
        if coeffs.ndim != 1 or coeffs.size != self.n:
            raise BadLength(f"{coeffs.size} coefficients for n={self.n}")
        if np.any(coeffs <= 0) or not np.all(np.isfinite(coeffs)):
            raise ZeroCoefficient("coefficients must be strictly positive")
        total = float(np.sum(coeffs**2))
        if abs(total - 1.0) > _PRIOR_EPS:
            raise InvariantViolation(f"sum of squared coefficients is {total!r}, not 1")
        object.__setattr__(self, "coeffs", coeffs)


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Matrix of pairwise inner products <psi_j|psi_k>."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        m = numerics.hermitize(self.entries)
        if np.max(np.abs(np.diag(m) - 1.0)) > _NORM_EPS:
            raise InvariantViolation("Gram matrix must have unit diagonal")
        if numerics.min_eigenvalue(m) < DEFAULT_TOLERANCE.psd_floor:
            raise InvariantViolation("Gram matrix must be positive semidefinite")
        object.__setattr__(self, "entries", m)


def make_symmetric(n: int, coeffs) -> SymmetricEnsemble:
    """Canonical symmetric ensemble from unnormalized positive magnitudes.

    Inputs are normalized to unit sum of squares; inputs already normalized
    within 1e-13 are kept bit-exact.
    """
    if n < 2:
        raise OutOfRange(f"n must be >= 2, got {n}")
    if np.iscomplexobj(coeffs):
        raise ZeroCoefficient(
            "coefficients must be real and positive; the phase convention "
            "absorbs them into the basis"
        )
    arr = np.asarray(coeffs, dtype=float)
    if arr.ndim != 1 or arr.size != n:
        raise BadLength(f"expected {n} coefficients, got {arr.size}")
    if np.any(arr <= 0) or not np.all(np.isfinite(arr)):
        raise ZeroCoefficient("coefficients must be strictly positive")
    scale = float(np.linalg.norm(arr))
    if abs(scale - 1.0) > 1e-13:
        arr = arr / scale
    return SymmetricEnsemble(n=n, coeffs=arr)


def realize(sym: SymmetricEnsemble) -> Ensemble:
    """Equal-prior ensemble of the n symmetric states in dimension n.

    State j has amplitude coeffs[r] * exp(2*pi*i*j*r/n) at basis index r.
    """
    n = sym.n
    r = np.arange(n)
    states = tuple(
        PureState(sym.coeffs * np.exp(2j * np.pi * j * r / n)) for j in range(n)
    )
    return Ensemble(states=states, priors=np.full(n, 1.0 / n))


def gram(e: Ensemble) -> GramMatrix:
    """Gram matrix of the ensemble's states.

    For symmetric ensembles the result is circulant: entry (j, k) depends
    only on (k - j) mod n.
    """
    s = e.state_matrix()
    return GramMatrix(s.conj().T @ s)


def is_linearly_independent(
    e: Ensemble, threshold: float = INDEPENDENCE_THRESHOLD
) -> bool:
    """Whether the states' Gram matrix has minimum eigenvalue above threshold."""
    return numerics.min_eigenvalue(gram(e).entries) > threshold


# ---------------------------------------------------------------------------
# JSON ensemble files
# ---------------------------------------------------------------------------
#
# {"kind": "symmetric", "n": 3, "coeffs": [...]}             coefficients may
#                                                            be unnormalized
# {"kind": "explicit", "priors": [...],
#  "states": [[[re, im], ...], ...]}                         unit-norm states


@dataclass(frozen=True, eq=False)
class LoadedEnsemble:
    """An ensemble parsed from a file plus its bookkeeping."""

    kind: str
    ensemble: Ensemble
    symmetric: SymmetricEnsemble | None
    scale: float


def _require_key(obj: dict, key: str):
    if key not in obj:
        raise FormatError(f"missing field {key!r}")
    return obj[key]


def ensemble_from_dict(obj) -> LoadedEnsemble:
    """Parse the ensemble JSON schema; wrapper objects with an "ensemble"
    key (e.g. compute reports) are descended into."""
    if not isinstance(obj, dict):
        raise FormatError("top-level value must be an object")
    if "ensemble" in obj and "kind" not in obj:
        obj = obj["ensemble"]
        if not isinstance(obj, dict):
            raise FormatError("field 'ensemble' must be an object")
    kind = _require_key(obj, "kind")
    if kind == "symmetric":
        n = _require_key(obj, "n")
        raw = _require_key(obj, "coeffs")
        if not isinstance(n, int) or isinstance(n, bool):
            raise FormatError("field 'n' must be an integer")
        try:
            coeffs = np.asarray(raw, dtype=float)
        except (TypeError, ValueError) as exc:
            raise FormatError(f"field 'coeffs' must be a list of reals: {exc}") from exc
        scale = float(np.linalg.norm(coeffs)) if coeffs.size else 0.0
        sym = make_symmetric(n, raw)
        return LoadedEnsemble(
            kind="symmetric",
            ensemble=realize(sym),
            symmetric=sym,
            scale=scale if abs(scale - 1.0) > 1e-13 else 1.0,
        )
    if kind == "explicit":
        priors = _require_key(obj, "priors")
        raw_states = _require_key(obj, "states")
        if not isinstance(raw_states, list) or not raw_states:
            raise FormatError("field 'states' must be a nonempty list")
        states = []
        for idx, entry in enumerate(raw_states):
            try:
                pairs = np.asarray(entry, dtype=float)
            except (TypeError, ValueError) as exc:
                raise FormatError(f"state {idx} is not a list of [re, im] pairs") from exc
            if pairs.ndim != 2 or pairs.shape[1] != 2:
                raise FormatError(f"state {idx} is not a list of [re, im] pairs")
            states.append(PureState(pairs[:, 0] + 1j * pairs[:, 1]))
        try:
            prior_arr = np.asarray(priors, dtype=float)
        except (TypeError, ValueError) as exc:
            raise FormatError(f"field 'priors' must be a list of reals: {exc}") from exc
        ensemble = Ensemble(states=tuple(states), priors=prior_arr)
        return LoadedEnsemble(kind="explicit", ensemble=ensemble, symmetric=None, scale=1.0)
    raise FormatError(f"unknown kind {kind!r} (expected 'symmetric' or 'explicit')")


def ensemble_to_dict(loaded: LoadedEnsemble) -> dict:
    """Serialize back to the file schema (normalized, full precision)."""
    if loaded.kind == "symmetric":
        assert loaded.symmetric is not None
        return {
            "kind": "symmetric",
            "n": loaded.symmetric.n,
            "coeffs": [float(c) for c in loaded.symmetric.coeffs],
        }
    e = loaded.ensemble
    return {
        "kind": "explicit",
        "priors": [float(p) for p in e.priors],
        "states": [
            [[float(a.real), float(a.imag)] for a in s.amplitudes] for s in e.states
        ],
    }


def load_ensemble(path: str) -> LoadedEnsemble:
    """Load an ensemble JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    return ensemble_from_dict(obj)
