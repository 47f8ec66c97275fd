"""Command-line surface.

Subcommands: compute (measures for an ensemble file), bounds (envelope at
one p_usd), scan (ratio grid to CSV/JSON, optionally a contour figure),
reproduce (the built-in three-state example pair), verify (closed-form vs
oracle suites).

Exit codes: 0 success, 2 input error, 3 invariant violation, 4 I/O error,
5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .ensembles import (
    LoadedEnsemble,
    ensemble_to_dict,
    is_linearly_independent,
    load_ensemble,
)
from .exceptions import (
    BadLength,
    DimensionMismatch,
    FormatError,
    InfeasibleConfig,
    InvariantViolation,
    LinearlyDependent,
    NotHermitian,
    OutOfRange,
    SingularFrame,
    ZeroCoefficient,
)
from .extremal import extremum_profile, p_hyp_lower_bound, p_hyp_upper_bound
from .measures import (
    CLOSED_FORM,
    ORACLE,
    MeasureReport,
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
from .oracles import entropy_oracle, usd_oracle
from .ordering import (
    build_candidate_pair,
    check_reversal,
    grid_summary,
    grid_to_csv,
    grid_to_json,
    ratio_grid,
)
from .verification import run_all_suites

__all__ = ["build_parser", "entry_point", "main"]

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_INVARIANT = 3
EXIT_IO_ERROR = 4
EXIT_VERIFY_FAILED = 5

_INPUT_ERRORS = (
    FormatError,
    BadLength,
    OutOfRange,
    InfeasibleConfig,
    DimensionMismatch,
    json.JSONDecodeError,
)
_INVARIANT_ERRORS = (
    InvariantViolation,
    ZeroCoefficient,
    NotHermitian,
    LinearlyDependent,
    SingularFrame,
)


def _sig12(value: float) -> float:
    return float(format(float(value), ".12g"))


def _fmt4(value: float) -> str:
    return format(float(value), ".4g")


def _write_atomic(path: str, data: str) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(data)
    os.replace(tmp, path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="statediscrim",
        description="Distinguishability measures for pure-state ensembles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute measures for an ensemble file")
    compute.add_argument("--input", required=True, help="ensemble JSON file")
    compute.add_argument("--format", choices=["json", "text"], default="text")

    bounds = sub.add_parser("bounds", help="p_hyp envelope at a fixed p_usd")
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--p-usd", type=float, required=True, dest="p_usd")
    bounds.add_argument("--format", choices=["json", "text"], default="text")

    scan = sub.add_parser("scan", help="write the ratio grid over (p_usd_1, epsilon)")
    scan.add_argument("--n", type=int, required=True)
    scan.add_argument("--p-usd-steps", type=int, required=True, dest="p_usd_steps")
    scan.add_argument("--epsilon-steps", type=int, required=True, dest="epsilon_steps")
    scan.add_argument("--output", required=True)
    scan.add_argument("--format", choices=["csv", "json"], default="csv")
    scan.add_argument("--plot", help="also render a contour figure to this file")

    sub.add_parser(
        "reproduce",
        help="build the reference three-state pair and check its known values",
    )

    verify = sub.add_parser("verify", help="run the closed-form vs oracle suites")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--verbose", action="store_true")
    return parser


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def build_compute_report(loaded: LoadedEnsemble) -> dict:
    """Measures, entropy, independence flag and the normalized ensemble."""
    e = loaded.ensemble
    independent = is_linearly_independent(e)
    measures: list[MeasureReport] = []
    notes: list[str] = []
    if loaded.symmetric is not None:
        sym = loaded.symmetric
        povm = square_root_measurement(e)
        certified = optimality_certificate(e, povm)
        measures.append(MeasureReport("p_usd", p_usd_symmetric(sym), CLOSED_FORM))
        measures.append(
            MeasureReport("p_hyp", p_hyp_symmetric(sym), CLOSED_FORM, certificate_ok=certified)
        )
        entropy = entropy_oracle(e)
    elif e.size == 2:
        overlap, delta = two_state_overlap_delta(e)
        if delta < 1.0:
            measures.append(MeasureReport("p_usd", jaeger_shimony(overlap, delta), CLOSED_FORM))
        else:
            notes.append("p_usd omitted: one prior equals 1")
        measures.append(MeasureReport("p_hyp", helstrom_two_state(overlap, delta), CLOSED_FORM))
        entropy = ensemble_entropy_two_state(overlap, delta)
    else:
        equal_priors = float(np.max(np.abs(e.priors - e.priors[0]))) <= 1e-12
        if equal_priors and independent:
            solution = usd_oracle(e, refinement_steps=25)
            measures.append(MeasureReport("p_usd", solution.average, ORACLE))
        else:
            notes.append("p_usd omitted: needs equal priors and linear independence")
        povm = square_root_measurement(e)
        certified = optimality_certificate(e, povm)
        measures.append(
            MeasureReport(
                "p_hyp", hyp_success_probability(e, povm), ORACLE, certificate_ok=certified
            )
        )
        if not certified:
            notes.append("p_hyp certificate failed: value is a lower bound")
        entropy = entropy_oracle(e)
    return {
        "kind": loaded.kind,
        "normalization_scale": loaded.scale,
        "linearly_independent": independent,
        "measures": measures,
        "entropy_bits": entropy,
        "notes": notes,
        "ensemble": ensemble_to_dict(loaded),
    }


def _report_to_json(report: dict) -> dict:
    return {
        "kind": report["kind"],
        "normalization_scale": _sig12(report["normalization_scale"]),
        "linearly_independent": report["linearly_independent"],
        "measures": [
            {
                "measure": m.measure_name,
                "value": _sig12(m.value),
                "method": m.method,
                "certificate_ok": m.certificate_ok,
            }
            for m in report["measures"]
        ],
        "entropy_bits": _sig12(report["entropy_bits"]),
        "notes": report["notes"],
        "ensemble": report["ensemble"],
    }


def _report_to_text(report: dict) -> list[str]:
    lines = [
        f"kind: {report['kind']}",
        f"normalization scale: {_fmt4(report['normalization_scale'])}",
        f"linearly independent: {'yes' if report['linearly_independent'] else 'no'}",
    ]
    for m in report["measures"]:
        method = "closed form" if m.method == CLOSED_FORM else "oracle"
        suffix = ""
        if m.certificate_ok is True:
            suffix = ", certificate ok"
        elif m.certificate_ok is False:
            suffix = ", certificate FAILED"
        lines.append(f"{m.measure_name} = {_fmt4(m.value)}  [{method}{suffix}]")
    lines.append(f"entropy = {_fmt4(report['entropy_bits'])} bits")
    for note in report["notes"]:
        lines.append(f"note: {note}")
    return lines


def cmd_compute(args: argparse.Namespace) -> int:
    loaded = load_ensemble(args.input)
    report = build_compute_report(loaded)
    if args.format == "json":
        print(json.dumps(_report_to_json(report), indent=2))
    else:
        print("\n".join(_report_to_text(report)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------


def cmd_bounds(args: argparse.Namespace) -> int:
    lower = p_hyp_lower_bound(args.n, args.p_usd)
    upper = p_hyp_upper_bound(args.n, args.p_usd)
    profile = extremum_profile(args.n, args.p_usd)
    if args.format == "json":
        payload = {
            "n": args.n,
            "p_usd": _sig12(args.p_usd),
            "p_hyp_lower": _sig12(lower),
            "p_hyp_upper": _sig12(upper),
            "profile": [
                {"n0": n0, "p_hyp": _sig12(value)}
                for n0, value in enumerate(profile, start=1)
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"p_hyp envelope for n={args.n} at p_usd={_fmt4(args.p_usd)}")
        print(f"  lower bound (n0={args.n - 1}): {_fmt4(lower)}")
        print(f"  upper bound (n0=1): {_fmt4(upper)}")
        print("  profile over n0:")
        for n0, value in enumerate(profile, start=1):
            print(f"    n0={n0}: {_fmt4(value)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------


def cmd_scan(args: argparse.Namespace) -> int:
    grid = ratio_grid(args.n, args.p_usd_steps, args.epsilon_steps)
    payload = grid_to_csv(grid) if args.format == "csv" else grid_to_json(grid)
    _write_atomic(args.output, payload)
    summary = grid_summary(grid)
    print(
        f"grid: n={args.n}, {args.p_usd_steps} x {args.epsilon_steps} cells "
        f"({summary['valid_cells']} valid)"
    )
    print(f"ratio > 1 fraction: {_fmt4(summary['ratio_gt_1_fraction'])}")
    print(
        f"max ratio: {_fmt4(summary['max_ratio'])} at "
        f"p_usd_1={_fmt4(summary['max_ratio_p_usd_1'])}, "
        f"epsilon={_fmt4(summary['max_ratio_epsilon'])}"
    )
    print(f"wrote {args.output}")
    if args.plot:
        from .plots import render_ratio_contour

        render_ratio_contour(grid, args.plot)
        print(f"wrote {args.plot}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# reproduce
# ---------------------------------------------------------------------------


def cmd_reproduce(args: argparse.Namespace) -> int:
    e1, e2 = build_candidate_pair(3, 0.5, 0.1)
    p_usd_1, p_usd_2 = p_usd_symmetric(e1), p_usd_symmetric(e2)
    p_hyp_1, p_hyp_2 = p_hyp_symmetric(e1), p_hyp_symmetric(e2)
    witness = check_reversal(e1, e2)
    checks = [
        (
            "p_usd values equal (0.5, 0.4) within 1e-12",
            abs(p_usd_1 - 0.5) <= 1e-12 and abs(p_usd_2 - 0.4) <= 1e-12,
        ),
        ("p_hyp(E1) equals 8/9 within 1e-12", abs(p_hyp_1 - 8.0 / 9.0) <= 1e-12),
        ("p_hyp(E2) equals 0.943 within 1e-3", abs(p_hyp_2 - 0.943) <= 1e-3),
        ("reversal witness present", witness is not None),
    ]
    print("candidate pair: n=3, p_usd_1=0.5, epsilon=0.1")
    print(f"  E1 (n0=2): p_usd = {_fmt4(p_usd_1)}   p_hyp = {_fmt4(p_hyp_1)}")
    print(f"  E2 (n0=1): p_usd = {_fmt4(p_usd_2)}   p_hyp = {_fmt4(p_hyp_2)}")
    print(f"  p_hyp ratio E2/E1: {_fmt4(p_hyp_2 / p_hyp_1)}")
    print(f"  reversal witness: {'present' if witness is not None else 'absent'}")
    for label, good in checks:
        print(f"  check {label}: {'PASS' if good else 'FAIL'}")
    passed = all(good for _, good in checks)
    print(f"result: {'PASS' if passed else 'FAIL'}")
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_all_suites(seed=args.seed)
    print(f"seed: {args.seed}")
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"suite {r.name:<24} {status}  worst {r.worst:.3e} (tol {r.tolerance:.0e})")
        if args.verbose and r.detail:
            print(f"      {r.detail}")
    passed = sum(1 for r in results if r.passed)
    all_ok = passed == len(results)
    print(f"result: {'PASS' if all_ok else 'FAIL'} ({passed}/{len(results)} suites)")
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


_HANDLERS = {
    "compute": cmd_compute,
    "bounds": cmd_bounds,
    "scan": cmd_scan,
    "reproduce": cmd_reproduce,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own diagnostics
        code = exc.code
        if code is None:
            return EXIT_OK
        return code if isinstance(code, int) else EXIT_INPUT_ERROR
    try:
        return _HANDLERS[args.command](args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except _INVARIANT_ERRORS as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO_ERROR


def entry_point() -> None:
    raise SystemExit(main())
