"""Brute-force verifiers independent of the closed forms.

Each oracle recomputes a measure by a route the closed forms never touch:
unambiguous discrimination via a feasibility hill-climb over conclusive
probabilities, hypothesis testing via random POVM sampling (a stochastic
lower bound, never an optimality certificate), and entropy via the density
operator's spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import numerics
from .ensembles import Ensemble, PureState, gram, is_linearly_independent
from .exceptions import InvariantViolation, LinearlyDependent, NonConvergence
from .measures import Povm, hyp_success_probability
from .numerics import DEFAULT_TOLERANCE, MAP_ZERO_TO_ZERO, Tolerance, hermitize

__all__ = [
    "UsdSolution",
    "entropy_oracle",
    "hyp_random_search",
    "reciprocal_states",
    "usd_oracle",
]

_EQUAL_PRIOR_EPS = 1e-12


@dataclass(frozen=True, eq=False)
class UsdSolution:
    """Best unambiguous strategy found: per-state conclusive probabilities,
    their prior-weighted average, and the inconclusive operator's smallest
    eigenvalue (feasibility margin)."""

    conclusive_probs: np.ndarray
    average: float
    inconclusive_min_eig: float

    def __post_init__(self) -> None:
        probs = np.asarray(self.conclusive_probs, dtype=float)
        if np.any(probs < -1e-12) or np.any(probs > 1.0 + 1e-12):
            raise InvariantViolation("conclusive probabilities must lie in [0, 1]")
        if self.inconclusive_min_eig < DEFAULT_TOLERANCE.psd_floor:
            raise InvariantViolation("inconclusive operator is not PSD within tolerance")
        object.__setattr__(self, "conclusive_probs", probs)


def reciprocal_states(e: Ensemble) -> list[PureState]:
    """States phi_j with <phi_j|psi_k> = 0 for k != j, normalized.

    Computed from the inverse Gram frame: the unnormalized reciprocals are
    the columns of S G^{-1} where S holds the states as columns.
    """
    if not is_linearly_independent(e):
        raise LinearlyDependent("reciprocal states need a linearly independent set")
    s = e.state_matrix()
    dual = s @ np.linalg.inv(gram(e).entries)
    return [
        PureState(dual[:, j] / np.linalg.norm(dual[:, j])) for j in range(e.size)
    ]


def _dual_projectors(e: Ensemble) -> list[np.ndarray]:
    # |phi~_j><phi~_j| built from the unnormalized duals; scaling a
    # conclusive element by P_j then gives state j conclusive probability
    # exactly P_j while keeping every other state's outcome at zero.
    s = e.state_matrix()
    dual = s @ np.linalg.inv(gram(e).entries)
    return [
        hermitize(np.outer(dual[:, j], dual[:, j].conj())) for j in range(e.size)
    ]


def usd_oracle(
    e: Ensemble, refinement_steps: int, tol: Tolerance = DEFAULT_TOLERANCE
) -> UsdSolution:
    """Maximize the average conclusive probability by coordinate ascent.

    Conclusive elements are rank-one along the reciprocal states, so the
    free variables are the per-state conclusive probabilities P_j and the
    only constraint is that the inconclusive operator I - sum_j P_j F_j
    stays positive semidefinite.  The climb starts from the largest uniform
    feasible point (the Gram matrix's smallest eigenvalue) and sweeps
    coordinates with a step that starts at 0.1 and halves each round.
    Running out of improving moves is not an error; the best point found is
    returned.
    """
    priors = e.priors
    if np.max(np.abs(priors - priors[0])) > _EQUAL_PRIOR_EPS:
        raise ValueError("usd_oracle supports equal priors only")
    if not is_linearly_independent(e):
        raise LinearlyDependent("unambiguous discrimination needs independent states")
    frames = _dual_projectors(e)
    identity = np.eye(e.dim, dtype=complex)

    def inconclusive_min_eig(probs: np.ndarray) -> float:
        op = identity - sum(p * f for p, f in zip(probs, frames))
        return numerics.min_eigenvalue(hermitize(op))

    start = min(1.0, max(0.0, numerics.min_eigenvalue(gram(e).entries)))
    probs = np.full(e.size, start)
    for _ in range(100):
        if inconclusive_min_eig(probs) >= tol.psd_floor:
            break
        probs *= 1.0 - 1e-9
    else:
        raise NonConvergence("no feasible starting point found")

    step = 0.1
    for _ in range(refinement_steps):
        improved = True
        sweeps = 0
        while improved and sweeps < 64:
            improved = False
            sweeps += 1
            for j in range(e.size):
                # Only upward moves can raise the average.
                candidate = min(1.0, probs[j] + step)
                if candidate <= probs[j]:
                    continue
                trial = probs.copy()
                trial[j] = candidate
                if inconclusive_min_eig(trial) >= tol.psd_floor:
                    probs = trial
                    improved = True
        step /= 2.0
    return UsdSolution(
        conclusive_probs=probs,
        average=float(np.dot(priors, probs)),
        inconclusive_min_eig=inconclusive_min_eig(probs),
    )


def hyp_random_search(
    e: Ensemble, trials: int, seed: int = 0, tol: Tolerance = DEFAULT_TOLERANCE
) -> float:
    """Best success probability over random POVMs: a stochastic lower bound.

    Each trial draws one PSD operator per state and normalizes the set via
    the inverse square root of the sum, E_j = S^{-1/2} A_j S^{-1/2}.  Trial
    i derives its generator from seed + i, so the best-so-far is monotone
    in the trial count and reproducible per seed.
    """
    d = e.dim
    best = 0.0
    for i in range(trials):
        rng = np.random.default_rng(seed + i)
        raw = rng.standard_normal((e.size, d, d)) + 1j * rng.standard_normal(
            (e.size, d, d)
        )
        mats = [m @ m.conj().T for m in raw]
        total = hermitize(sum(mats))
        if numerics.min_eigenvalue(total) <= tol.equality_eps:
            continue  # astronomically rare degenerate draw
        inv_sqrt = numerics.matrix_function(
            total, lambda x: x**-0.5, null_policy=MAP_ZERO_TO_ZERO, tol=tol
        )
        povm = Povm(tuple(hermitize(inv_sqrt @ m @ inv_sqrt) for m in mats))
        best = max(best, hyp_success_probability(e, povm))
    return best


def entropy_oracle(e: Ensemble) -> float:
    """Entropy in bits of rho = sum_j priors[j] |psi_j><psi_j| via its
    spectrum; zero eigenvalues contribute nothing."""
    d = e.dim
    rho = np.zeros((d, d), dtype=complex)
    for p, s in zip(e.priors, e.states):
        rho += p * np.outer(s.amplitudes, s.amplitudes.conj())
    eigenvalues = np.linalg.eigvalsh(hermitize(rho))
    positive = eigenvalues[eigenvalues > 0.0]
    return max(0.0, float(-np.sum(positive * np.log2(positive))))
