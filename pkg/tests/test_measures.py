"""Tests for the closed-form measures and the square-root measurement."""

import numpy as np
import pytest

from statediscrim.ensembles import Ensemble, PureState, make_symmetric, realize
from statediscrim.exceptions import DimensionMismatch, InvariantViolation, OutOfRange
from statediscrim.measures import (
    CLOSED_FORM,
    MeasureReport,
    Povm,
    ensemble_entropy_two_state,
    helstrom_two_state,
    hyp_success_probability,
    jaeger_shimony,
    optimality_certificate,
    p_hyp_symmetric,
    p_usd_symmetric,
    square_root_measurement,
    two_state_overlap_delta,
)
from statediscrim.verification import random_symmetric, two_state_ensemble

E1 = make_symmetric(3, [np.sqrt(1.0 / 6.0), np.sqrt(1.0 / 6.0), np.sqrt(2.0 / 3.0)])
E2 = make_symmetric(3, [np.sqrt(0.4 / 3.0), np.sqrt(1.3 / 3.0), np.sqrt(1.3 / 3.0)])


# ---------------------------------------------------------------------------
# two-state closed forms
# ---------------------------------------------------------------------------


def test_helstrom_extremes():
    assert helstrom_two_state(0.0, 0.0) == 1.0
    assert helstrom_two_state(1.0, 0.0) == 0.5


def test_helstrom_frozen_value():
    assert abs(helstrom_two_state(0.6, 0.0) - 0.9) <= 1e-15


def test_helstrom_matches_srm_on_explicit_pair():
    e = two_state_ensemble(0.6, 0.0)
    numeric = hyp_success_probability(e, square_root_measurement(e))
    assert abs(numeric - helstrom_two_state(0.6, 0.0)) <= 1e-10


def test_helstrom_range_checks():
    with pytest.raises(OutOfRange):
        helstrom_two_state(1.5, 0.0)
    with pytest.raises(OutOfRange):
        helstrom_two_state(0.5, -0.1)


def test_jaeger_shimony_equal_priors_is_one_minus_overlap():
    for s in np.linspace(0.0, 1.0, 11):
        assert abs(jaeger_shimony(s, 0.0) - (1.0 - s)) <= 1e-15


def test_jaeger_shimony_orthogonal_states():
    for delta in (0.0, 0.3, 0.9):
        assert jaeger_shimony(0.0, delta) == 1.0


@pytest.mark.parametrize("delta", np.arange(0.0, 0.91, 0.1))
def test_jaeger_shimony_branches_agree_at_boundary(delta):
    boundary = np.sqrt((1.0 - delta) / (1.0 + delta))
    first = 1.0 - np.sqrt(1.0 - delta * delta) * boundary
    second = 0.5 * (1.0 + delta) * (1.0 - boundary * boundary)
    assert abs(first - second) <= 1e-12
    assert abs(first - delta) <= 1e-12
    assert abs(jaeger_shimony(boundary, delta) - delta) <= 1e-12


def test_jaeger_shimony_range_checks():
    with pytest.raises(OutOfRange):
        jaeger_shimony(0.5, 1.0)
    with pytest.raises(OutOfRange):
        jaeger_shimony(-0.1, 0.0)


def test_two_state_monotonicity_in_overlap():
    overlaps = np.linspace(0.0, 1.0, 1000)
    hyp = np.array([helstrom_two_state(s, 0.0) for s in overlaps])
    usd = np.array([jaeger_shimony(s, 0.0) for s in overlaps])
    assert np.all(np.diff(hyp) <= 1e-12)
    assert np.all(np.diff(usd) <= 1e-12)


def test_two_state_monotonicity_in_prior_gap():
    deltas = np.linspace(0.0, 0.99, 100)
    for s in (0.2, 0.5, 0.9):
        hyp = np.array([helstrom_two_state(s, d) for d in deltas])
        usd = np.array([jaeger_shimony(s, d) for d in deltas])
        assert np.all(np.diff(hyp) >= -1e-12)
        assert np.all(np.diff(usd) >= -1e-12)


# ---------------------------------------------------------------------------
# symmetric-family closed forms
# ---------------------------------------------------------------------------


def test_symmetric_measures_orthonormal_case():
    sym = make_symmetric(3, np.ones(3))
    assert p_usd_symmetric(sym) == pytest.approx(1.0, abs=1e-15)
    assert p_hyp_symmetric(sym) == pytest.approx(1.0, abs=1e-15)


def test_symmetric_measures_worked_example():
    assert abs(p_usd_symmetric(E1) - 0.5) <= 1e-12
    assert abs(p_hyp_symmetric(E1) - 8.0 / 9.0) <= 1e-12
    assert abs(p_usd_symmetric(E2) - 0.4) <= 1e-12
    assert abs(p_hyp_symmetric(E2) - 0.9427156689301327) <= 1e-12


# ---------------------------------------------------------------------------
# square-root measurement
# ---------------------------------------------------------------------------


def test_srm_on_orthonormal_states_is_projective():
    e = realize(make_symmetric(3, np.ones(3)))
    povm = square_root_measurement(e)
    assert len(povm) == 3
    for element, s in zip(povm.elements, e.states):
        projector = np.outer(s.amplitudes, s.amplitudes.conj())
        assert np.max(np.abs(element - projector)) <= 1e-10


@pytest.mark.parametrize("seed", range(12))
def test_srm_matches_closed_form(seed):
    rng = np.random.default_rng(seed)
    sym = random_symmetric(rng, int(rng.integers(2, 7)))
    e = realize(sym)
    numeric = hyp_success_probability(e, square_root_measurement(e))
    assert abs(numeric - p_hyp_symmetric(sym)) <= 1e-10


@pytest.mark.parametrize("overlap", [0.0, 0.2, 0.6, 0.9])
def test_srm_is_optimal_for_two_equal_prior_states(overlap):
    e = two_state_ensemble(overlap, 0.0)
    numeric = hyp_success_probability(e, square_root_measurement(e))
    assert abs(numeric - helstrom_two_state(overlap, 0.0)) <= 1e-10


def test_srm_completeness_property():
    rng = np.random.default_rng(99)
    for _ in range(10):
        e = realize(random_symmetric(rng, int(rng.integers(2, 7))))
        povm = square_root_measurement(e)
        total = sum(povm.elements)
        assert np.max(np.abs(total - np.eye(e.dim))) <= 1e-9


def test_srm_appends_completion_for_non_spanning_states():
    # Three dependent "symmetric" states with a zero coefficient, written
    # out explicitly: they live in a 2-d subspace of a 3-d space, so the
    # measurement needs the null-space completion element.
    a, b = 0.6, 0.8
    states = []
    for j in range(3):
        amps = np.array(
            [0.0, a * np.exp(2j * np.pi * j / 3), b * np.exp(4j * np.pi * j / 3)]
        )
        states.append(PureState(amps))
    e = Ensemble(states=tuple(states), priors=np.full(3, 1.0 / 3.0))
    povm = square_root_measurement(e)
    assert len(povm) == 4
    success = hyp_success_probability(e, povm)
    assert abs(success - (a + b) ** 2 / 3.0) <= 1e-10
    # The measurement stays optimal even though the states are dependent.
    assert optimality_certificate(e, povm)


# ---------------------------------------------------------------------------
# success probability and certificate
# ---------------------------------------------------------------------------


def test_success_probability_projective_on_orthonormal():
    e = realize(make_symmetric(3, np.ones(3)))
    povm = square_root_measurement(e)
    assert hyp_success_probability(e, povm) == pytest.approx(1.0, abs=1e-12)


def test_success_probability_uniform_split_guess():
    e = realize(make_symmetric(3, np.ones(3)))
    povm = Povm(tuple(np.eye(3) / 3.0 for _ in range(3)))
    assert hyp_success_probability(e, povm) == pytest.approx(1.0 / 3.0, abs=1e-12)


def test_success_probability_dimension_checks():
    e = realize(make_symmetric(3, np.ones(3)))
    with pytest.raises(DimensionMismatch):
        hyp_success_probability(e, Povm((np.eye(3),)))
    with pytest.raises(DimensionMismatch):
        hyp_success_probability(e, Povm(tuple(np.eye(2) / 3.0 for _ in range(3))))


def test_certificate_accepts_projective_on_orthonormal():
    e = realize(make_symmetric(3, np.ones(3)))
    assert optimality_certificate(e, square_root_measurement(e))


def test_certificate_rejects_uniform_split_on_distinguishable_states():
    e = realize(make_symmetric(3, np.ones(3)))
    povm = Povm(tuple(np.eye(3) / 3.0 for _ in range(3)))
    assert not optimality_certificate(e, povm)


@pytest.mark.parametrize("seed", range(8))
def test_certificate_accepts_srm_on_random_symmetric(seed):
    rng = np.random.default_rng(200 + seed)
    e = realize(random_symmetric(rng, int(rng.integers(2, 7))))
    assert optimality_certificate(e, square_root_measurement(e))


# ---------------------------------------------------------------------------
# entropy closed form
# ---------------------------------------------------------------------------


def test_entropy_orthogonal_equiprobable_pair_is_one_bit():
    assert ensemble_entropy_two_state(0.0, 0.0) == pytest.approx(1.0, abs=1e-15)


def test_entropy_vanishes_when_one_prior_is_one():
    for s in (0.0, 0.3, 1.0):
        assert ensemble_entropy_two_state(s, 1.0) == 0.0


def test_entropy_range_checks():
    with pytest.raises(OutOfRange):
        ensemble_entropy_two_state(1.1, 0.0)
    with pytest.raises(OutOfRange):
        ensemble_entropy_two_state(0.5, 2.0)


# ---------------------------------------------------------------------------
# value types
# ---------------------------------------------------------------------------


def test_measure_report_validation():
    report = MeasureReport("p_usd", 0.5, CLOSED_FORM)
    assert report.certificate_ok is None
    with pytest.raises(InvariantViolation):
        MeasureReport("p_usd", 1.5, CLOSED_FORM)
    with pytest.raises(OutOfRange):
        MeasureReport("p_usd", 0.5, "guesswork")


def test_povm_validation():
    with pytest.raises(InvariantViolation):
        Povm((np.diag([1.0, -0.2]), np.diag([0.0, 1.2])))
    with pytest.raises(InvariantViolation):
        Povm((np.eye(2) * 0.4, np.eye(2) * 0.4))
    with pytest.raises(DimensionMismatch):
        Povm((np.eye(2), np.eye(3)))


def test_two_state_overlap_delta_extraction():
    e = two_state_ensemble(0.6, 0.2)
    overlap, delta = two_state_overlap_delta(e)
    assert abs(overlap - 0.6) <= 1e-12
    assert abs(delta - 0.2) <= 1e-12
    with pytest.raises(DimensionMismatch):
        two_state_overlap_delta(realize(make_symmetric(3, np.ones(3))))
