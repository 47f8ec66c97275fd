"""Cross-validation suites: every closed form against an independent route.

Each suite returns its worst observed deviation next to the tolerance it
must stay under, so a report can show the margins, not just PASS/FAIL.
All randomness is seeded and the pass status is insensitive to the seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ensembles import Ensemble, PureState, SymmetricEnsemble, make_symmetric, realize
from .extremal import (
    ExtremalConfig,
    extremal_coefficients,
    extremum_profile,
    local_extremum_p_hyp,
    p_hyp_lower_bound,
    p_hyp_upper_bound,
)
from .measures import (
    ensemble_entropy_two_state,
    helstrom_two_state,
    hyp_success_probability,
    jaeger_shimony,
    optimality_certificate,
    p_hyp_symmetric,
    p_usd_symmetric,
    square_root_measurement,
)
from .oracles import entropy_oracle, hyp_random_search, usd_oracle
from .ordering import check_reversal, two_state_relation, verify_no_two_state_reversal

__all__ = [
    "SuiteResult",
    "random_symmetric",
    "random_unitary",
    "run_all_suites",
    "two_state_ensemble",
]


@dataclass(frozen=True)
class SuiteResult:
    """Outcome of one suite: pass iff worst <= tolerance."""

    name: str
    passed: bool
    worst: float
    tolerance: float
    detail: str = ""


def _result(name: str, worst: float, tolerance: float, detail: str = "") -> SuiteResult:
    return SuiteResult(
        name=name, passed=worst <= tolerance, worst=worst, tolerance=tolerance,
        detail=detail,
    )


def random_symmetric(rng: np.random.Generator, n: int, floor: float = 0.05) -> SymmetricEnsemble:
    """Random symmetric ensemble with coefficients bounded away from zero
    (keeps the instances well-conditioned)."""
    return make_symmetric(n, rng.uniform(floor, 1.0, n))


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Gaussian matrix."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    phases = np.diag(r).copy()
    phases /= np.abs(phases)
    return q * phases.conj()


def two_state_ensemble(overlap: float, delta: float) -> Ensemble:
    """Explicit two-state ensemble with the given overlap and prior gap."""
    first = PureState(np.array([1.0, 0.0], dtype=complex))
    second = PureState(np.array([overlap, np.sqrt(1.0 - overlap**2)], dtype=complex))
    priors = np.array([(1.0 + delta) / 2.0, (1.0 - delta) / 2.0])
    return Ensemble(states=(first, second), priors=priors)


def _sampled_symmetric(seed: int, count: int, sizes: tuple[int, ...]) -> list[SymmetricEnsemble]:
    rng = np.random.default_rng(seed)
    return [random_symmetric(rng, sizes[i % len(sizes)]) for i in range(count)]


def suite_srm_agreement(seed: int) -> SuiteResult:
    """Closed-form p_hyp vs the numerically evaluated square-root measurement."""
    worst = 0.0
    for sym in _sampled_symmetric(seed, 120, (2, 3, 4, 5, 6)):
        e = realize(sym)
        numeric = hyp_success_probability(e, square_root_measurement(e))
        worst = max(worst, abs(p_hyp_symmetric(sym) - numeric))
    return _result("srm-agreement", worst, 1e-10, "120 random symmetric, n in 2..6")


def suite_povm_completeness(seed: int) -> SuiteResult:
    worst = 0.0
    for sym in _sampled_symmetric(seed, 120, (2, 3, 4, 5, 6)):
        e = realize(sym)
        povm = square_root_measurement(e)
        total = sum(povm.elements)
        worst = max(worst, float(np.max(np.abs(total - np.eye(e.dim)))))
    return _result("povm-completeness", worst, 1e-9, "max-entry |sum E_j - I|")


def suite_srm_certificate(seed: int) -> SuiteResult:
    failures = 0
    for sym in _sampled_symmetric(seed, 120, (2, 3, 4, 5, 6)):
        e = realize(sym)
        if not optimality_certificate(e, square_root_measurement(e)):
            failures += 1
    return _result("srm-certificate", float(failures), 0.0, "failed instances")


def suite_usd_agreement(seed: int) -> SuiteResult:
    """Hill-climb oracle vs n * min coefficient^2 on symmetric triples."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    worst_psd = 0.0
    for _ in range(50):
        sym = random_symmetric(rng, 3)
        sol = usd_oracle(realize(sym), refinement_steps=25)
        worst = max(worst, abs(sol.average - p_usd_symmetric(sym)))
        worst_psd = max(worst_psd, -sol.inconclusive_min_eig)
    detail = f"50 random symmetric n=3; worst PSD defect {worst_psd:.3e}"
    if worst_psd > 1e-10:
        return _result("usd-agreement", float("inf"), 1e-6, detail)
    return _result("usd-agreement", worst, 1e-6, detail)


def suite_entropy_agreement(seed: int) -> SuiteResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(100):
        overlap = rng.uniform(0.0, 1.0)
        delta = rng.uniform(0.0, 1.0)
        closed = ensemble_entropy_two_state(overlap, delta)
        spectral = entropy_oracle(two_state_ensemble(overlap, delta))
        worst = max(worst, abs(closed - spectral))
    return _result("entropy-agreement", worst, 1e-12, "100 random (overlap, delta)")


def suite_entropy_rotation(seed: int) -> SuiteResult:
    """Entropy must be invariant under a global basis rotation."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(20):
        sym = random_symmetric(rng, int(rng.integers(2, 7)))
        e = realize(sym)
        u = random_unitary(rng, e.dim)
        rotated = Ensemble(
            states=tuple(PureState(u @ s.amplitudes) for s in e.states),
            priors=e.priors,
        )
        worst = max(worst, abs(entropy_oracle(e) - entropy_oracle(rotated)))
    return _result("entropy-rotation", worst, 1e-10, "20 random unitary conjugations")


def suite_extremal_consistency(seed: int) -> SuiteResult:
    """Envelope formula vs measures of the constructed coefficient vector."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for n in range(2, 9):
        for n0 in range(1, n):
            for p in np.linspace(0.05, 1.0, 20):
                cfg = ExtremalConfig(n=n, n0=n0, p_usd=float(p))
                built = p_hyp_symmetric(extremal_coefficients(cfg))
                worst = max(worst, abs(local_extremum_p_hyp(cfg) - built))
            cfg = ExtremalConfig(n=n, n0=n0, p_usd=float(rng.uniform(0.01, 1.0)))
            built = p_hyp_symmetric(extremal_coefficients(cfg))
            worst = max(worst, abs(local_extremum_p_hyp(cfg) - built))
    return _result("extremal-consistency", worst, 1e-12, "n in 2..8, all n0, p grid")


def suite_sandwich(seed: int) -> SuiteResult:
    """Every symmetric ensemble's (p_usd, p_hyp) sits inside the envelope."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(100):
        sym = random_symmetric(rng, int(rng.integers(3, 7)))
        p_usd = p_usd_symmetric(sym)
        p_hyp = p_hyp_symmetric(sym)
        lower = p_hyp_lower_bound(sym.n, p_usd)
        upper = p_hyp_upper_bound(sym.n, p_usd)
        worst = max(worst, lower - p_hyp, p_hyp - upper, 0.0)
    return _result("sandwich", worst, 1e-10, "100 random symmetric, n in 3..6")


def suite_bound_tightness(seed: int) -> SuiteResult:
    """The n0=1 and n0=n-1 families attain the bounds exactly."""
    worst = 0.0
    for n in range(3, 9):
        for p in np.linspace(0.05, 1.0, 20):
            peak = extremal_coefficients(ExtremalConfig(n=n, n0=1, p_usd=float(p)))
            flat = extremal_coefficients(ExtremalConfig(n=n, n0=n - 1, p_usd=float(p)))
            worst = max(
                worst,
                abs(p_hyp_symmetric(peak) - p_hyp_upper_bound(n, float(p))),
                abs(p_hyp_symmetric(flat) - p_hyp_lower_bound(n, float(p))),
            )
    return _result("bound-tightness", worst, 1e-12, "n in 3..8, p grid")


def suite_n0_monotonicity(seed: int) -> SuiteResult:
    grid = np.linspace(0.05, 0.95, 19)
    worst = 0.0
    for n in range(3, 11):
        for p in grid:
            worst = max(worst, float(np.max(np.diff(extremum_profile(n, float(p))))))
    return _result("n0-monotonicity", max(worst, 0.0), 1e-12, "n in 3..10, 19-point grid")


def suite_two_state_relation(seed: int) -> SuiteResult:
    """Relation p_usd -> p_hyp vs the numeric measurement on real pairs."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(40):
        sym = random_symmetric(rng, 2)
        e = realize(sym)
        numeric = hyp_success_probability(e, square_root_measurement(e))
        worst = max(worst, abs(two_state_relation(p_usd_symmetric(sym)) - numeric))
    return _result("two-state-relation", worst, 1e-10, "40 random symmetric pairs")


def suite_two_state_no_reversal(seed: int) -> SuiteResult:
    """Strict monotonicity plus an exhaustive pair scan finding no witness."""
    violations = 0
    if not verify_no_two_state_reversal(1000):
        violations += 1
    ensembles = [
        make_symmetric(2, [np.sqrt(k / 400.0), np.sqrt(1.0 - k / 400.0)])
        for k in range(1, 201)
    ]
    for a in ensembles:
        for b in ensembles:
            if check_reversal(a, b) is not None:
                violations += 1
    return _result(
        "two-state-no-reversal", float(violations), 0.0, "1000-point grid + 200x200 scan"
    )


def suite_branch_continuity(seed: int) -> SuiteResult:
    """Both two-state USD branches meet at the boundary overlap, where both
    equal delta."""
    worst = 0.0
    for delta in np.arange(0.0, 0.91, 0.1):
        boundary = np.sqrt((1.0 - delta) / (1.0 + delta))
        first = 1.0 - np.sqrt(1.0 - delta * delta) * boundary
        second = 0.5 * (1.0 + delta) * (1.0 - boundary * boundary)
        worst = max(worst, abs(first - second), abs(first - delta), abs(second - delta))
    return _result("branch-continuity", worst, 1e-12, "delta in 0, 0.1, .., 0.9")


def suite_monotonicity(seed: int) -> SuiteResult:
    """Both two-state measures fall with overlap and rise with the prior gap."""
    worst = 0.0
    overlaps = np.linspace(0.0, 1.0, 1000)
    hyp = [helstrom_two_state(s, 0.0) for s in overlaps]
    usd = [jaeger_shimony(s, 0.0) for s in overlaps]
    worst = max(worst, float(np.max(np.diff(hyp))), float(np.max(np.diff(usd))))
    deltas = np.linspace(0.0, 0.99, 200)
    for s in np.linspace(0.0, 1.0, 11):
        hyp_d = [helstrom_two_state(s, d) for d in deltas]
        usd_d = [jaeger_shimony(s, d) for d in deltas]
        worst = max(worst, float(np.max(-np.diff(hyp_d))), float(np.max(-np.diff(usd_d))))
    return _result("two-state-monotonicity", max(worst, 0.0), 1e-12, "overlap and delta grids")


def suite_random_search_bound(seed: int) -> SuiteResult:
    """Random POVM search stays below the certified maximum, grows with the
    trial budget, and reproduces per seed."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for sym in [make_symmetric(3, np.ones(3)), random_symmetric(rng, 3)]:
        e = realize(sym)
        ceiling = p_hyp_symmetric(sym)
        short = hyp_random_search(e, trials=60, seed=seed)
        long = hyp_random_search(e, trials=150, seed=seed)
        again = hyp_random_search(e, trials=150, seed=seed)
        if long < short or again != long:
            return _result("random-search-bound", float("inf"), 1e-9, "monotonicity broke")
        worst = max(worst, long - ceiling)
    return _result("random-search-bound", max(worst, 0.0), 1e-9, "150-trial search vs closed form")


_SUITES = (
    suite_srm_agreement,
    suite_povm_completeness,
    suite_srm_certificate,
    suite_usd_agreement,
    suite_entropy_agreement,
    suite_entropy_rotation,
    suite_extremal_consistency,
    suite_sandwich,
    suite_bound_tightness,
    suite_n0_monotonicity,
    suite_two_state_relation,
    suite_two_state_no_reversal,
    suite_branch_continuity,
    suite_monotonicity,
    suite_random_search_bound,
)


def run_all_suites(seed: int = 0) -> list[SuiteResult]:
    """Run every suite with the given seed."""
    return [suite(seed) for suite in _SUITES]
