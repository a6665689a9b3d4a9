"""Command-line front end: single checks, bulk enumeration, verifications.

Exit codes are a stable contract: 0 ok, 2 usage/input error, 10 criterion
unsatisfied (check only), 11 documented discrepancy (verify only), 1
unexpected failure.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys

from . import geometry, jacobsthal, searchverify
from .classifier import (
    Lattice,
    classify_triple,
    counterexample_triple,
    lattice_status,
    triples_for_n,
)
from .criterion import Region, Triple, Verdict, mw_witness, mw_witness_hinted, region
from .modular import omega, radical

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_UNSATISFIED = 10
EXIT_DISCREPANCY = 11

SCHEMA = "trirank-record/1"

RECORD_FIELDS = (
    "p",
    "q",
    "r",
    "n",
    "region",
    "mw_satisfied",
    "witness",
    "families",
    "lattice_status",
    "provenance",
)

_REGION_CHOICES = {
    "obtuse": Region.OBTUSE,
    "strongly-obtuse": Region.STRONGLY_OBTUSE,
    "very-obtuse": Region.VERY_OBTUSE,
}


def triple_record(t: Triple, verdict: Verdict, families) -> dict:
    """Output record for one triple; field order is part of the format."""
    ls = lattice_status(t)
    return {
        "p": t.p,
        "q": t.q,
        "r": t.r,
        "n": t.n,
        "region": region(t).value,
        "mw_satisfied": verdict.satisfied,
        "witness": verdict.witness,
        "families": sorted(f.value for f in families),
        "lattice_status": ls.status.value,
        "provenance": ls.provenance,
    }


def _record_to_csv_row(rec: dict) -> str:
    vals = []
    for key in RECORD_FIELDS:
        v = rec[key]
        if v is None:
            vals.append("")
        elif isinstance(v, bool):
            vals.append("true" if v else "false")
        elif isinstance(v, list):
            vals.append(";".join(v))
        else:
            vals.append(str(v))
    return ",".join(vals)


# ---------------------------------------------------------------------------
# check


def cmd_check(args) -> int:
    try:
        p, q, r = sorted((args.p, args.q, args.r))
        t = Triple(p, q, r)
        if 2 * t.r <= t.n:
            raise ValueError(
                f"triangle {t.as_tuple()} is not obtuse (r <= n/2); "
                "the criterion does not apply"
            )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    t, verdict, families = classify_triple(t, validate=args.validate_oracle)
    print(json.dumps(triple_record(t, verdict, families)))
    return EXIT_OK if verdict.satisfied else EXIT_UNSATISFIED


# ---------------------------------------------------------------------------
# enumerate


def _worker(task) -> list[dict]:
    n, region_name, validate, hinted, hints_validate = task
    minimum = _REGION_CHOICES[region_name]
    out = []
    for t in triples_for_n(n, minimum):
        t, verdict, families = classify_triple(t, validate=validate, hinted=hinted)
        if hints_validate:
            other = mw_witness(t) if hinted else mw_witness_hinted(t)
            if (other.satisfied, other.witness) != (verdict.satisfied, verdict.witness):
                raise AssertionError(
                    f"hinted scan diverged on {t.as_tuple()}: {verdict} vs {other}"
                )
        out.append(triple_record(t, verdict, families))
    return out


def _iter_record_batches(args):
    tasks = [
        (n, args.region, args.validate_oracle, args.hints, args.hints_validate)
        for n in range(3, args.n_max + 1)
    ]
    if args.workers <= 1:
        for task in tasks:
            yield _worker(task)
        return
    chunk = max(1, len(tasks) // (args.workers * 8))
    with multiprocessing.Pool(args.workers) as pool:
        yield from pool.imap(_worker, tasks, chunksize=chunk)


def cmd_enumerate(args) -> int:
    if args.n_max < 6:
        print("error: --n-max must be >= 6", file=sys.stderr)
        return EXIT_USAGE
    if args.workers < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE

    out = sys.stdout
    close_out = False
    if args.output:
        out = open(args.output, "w", encoding="utf-8")
        close_out = True

    totals = {"records": 0, "satisfied": 0, "unsatisfied": 0}
    family_counts: dict[str, int] = {}
    try:
        if args.format == "jsonl":
            # header carries run semantics but nothing execution-specific
            # (worker count must not change the bytes)
            header = {
                "schema": SCHEMA,
                "n_max": args.n_max,
                "region": args.region,
                "failures_only": args.failures_only,
            }
            out.write(json.dumps(header) + "\n")
        elif args.format == "csv":
            out.write(",".join(RECORD_FIELDS) + "\n")

        for batch in _iter_record_batches(args):
            for rec in batch:
                if args.failures_only and rec["mw_satisfied"]:
                    continue
                totals["records"] += 1
                totals["satisfied" if rec["mw_satisfied"] else "unsatisfied"] += 1
                for fam in rec["families"]:
                    family_counts[fam] = family_counts.get(fam, 0) + 1
                if args.format == "jsonl":
                    out.write(json.dumps(rec) + "\n")
                elif args.format == "csv":
                    out.write(_record_to_csv_row(rec) + "\n")

        summary = {
            "records": totals["records"],
            "satisfied": totals["satisfied"],
            "unsatisfied": totals["unsatisfied"],
            "families": dict(sorted(family_counts.items())),
            "oracle_validated": args.validate_oracle,
            "oracle_disagreements": 0 if args.validate_oracle else None,
        }
        if args.format == "summary":
            out.write(json.dumps(summary, indent=2) + "\n")
        else:
            print(f"summary: {json.dumps(summary)}", file=sys.stderr)
    finally:
        if close_out:
            out.close()
    return EXIT_OK


# ---------------------------------------------------------------------------
# counterexample


def cmd_counterexample(args) -> int:
    try:
        t = counterexample_triple(args.p, args.x)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.skip_check:
        rec = {
            "p": t.p,
            "q": t.q,
            "r": t.r,
            "n": t.n,
            "region": region(t).value,
            "mw_satisfied": None,
        }
        print(json.dumps(rec))
        return EXIT_OK
    t, verdict, families = classify_triple(t)
    print(json.dumps(triple_record(t, verdict, families)))
    if verdict.satisfied:
        print(
            "error: generated triple unexpectedly satisfies the criterion",
            file=sys.stderr,
        )
        return EXIT_FAILURE
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify subcommands


def _verify_beta() -> int:
    exceptions = searchverify.beta_search(4, 10000)
    found = [e.beta for e in exceptions]
    reference = list(searchverify.REFERENCE_BETA_EXCEPTIONS)
    print(f"strict window [beta/9, 2*beta/9], beta in [4, 10000]")
    print(f"exceptions found:    {found}")
    print(f"reference list:      {reference}")
    bad_fallback = [e.beta for e in exceptions if not e.fallback_ok]
    for e in exceptions:
        print(
            f"  beta={e.beta}: fallback_ok={e.fallback_ok} "
            f"(overshoot unit {e.overshoot_unit}, undershoot unit {e.undershoot_unit})"
        )
    if bad_fallback:
        print(f"FAIL: exceptions without widened-window fallback: {bad_fallback}")
        return EXIT_FAILURE
    divergence = sorted(set(found) ^ set(reference))
    if divergence:
        print(
            f"DISCREPANCY: computed exception set differs from the reference "
            f"list at beta = {divergence}; every exception passes the "
            f"widened-window fallback, so the downstream argument is unaffected."
        )
        return EXIT_DISCREPANCY
    print("OK: exception set matches the reference list")
    return EXIT_OK


# documented bad ranges, in subinterval units
COVERAGE_EXPECTED_BAD = {
    "A": [(9914, 10000)],
    "B": [(4000, 4005), (5997, 6007), (8000, 8005), (11991, 12000)],
}


def _verify_coverage(regime: str | None, boundary: str | None) -> int:
    regimes = [regime] if regime else ["A", "B"]
    ok = True
    for reg in regimes:
        report = searchverify.coverage_check(reg, boundary=boundary)
        allowed = set()
        for lo, hi in COVERAGE_EXPECTED_BAD[reg]:
            allowed.update(range(lo, hi))
        outside = [j for j in report.bad_indices if j not in allowed]
        print(
            f"regime {reg}: M={report.subinterval_count}, prime powers <= "
            f"{report.prime_power_limit}, target [0, {report.target}] "
            f"({report.boundary} right end)"
        )
        print(
            f"  bad subintervals: {len(report.bad_indices)} "
            f"(documented ranges {COVERAGE_EXPECTED_BAD[reg]})"
        )
        if outside:
            print(f"  FAIL: bad indices outside the documented ranges: {outside[:20]}")
            ok = False
        else:
            print("  OK: all bad indices lie inside the documented ranges")
    return EXIT_OK if ok else EXIT_FAILURE


def _verify_jacobsthal(n_sweep: int = 100_000) -> int:
    bad = []
    for n in range(1, n_sweep + 1):
        j = jacobsthal.jacobsthal(n)
        if j != jacobsthal.jacobsthal(radical(n)):
            bad.append(("radical", n))
        if j > 2 ** omega(n):
            bad.append(("kanold", n))
        if n >= 3 and not jacobsthal.robin_check(n):
            bad.append(("robin", n))
        if jacobsthal.bound_j(n) < j:
            bad.append(("bound", n))
        if bad:
            break
    if bad:
        print(f"FAIL: first violated property: {bad[0]}")
        return EXIT_FAILURE
    print(
        f"OK: j(n) = j(rad(n)), j(n) <= 2^omega(n), Robin's bound and "
        f"bound_j(n) >= j(n) all hold for n <= {n_sweep}"
    )
    return EXIT_OK


def _verify_reduction() -> int:
    report = jacobsthal.verify_reduction_chain()
    print(f"25th primorial: {report.primorial_25}")
    for step in report.enumeration_steps:
        print(
            f"  omega <= {step.omega_cap} -> j <= {step.gap_cap} -> "
            f"threshold 24^2*{step.gap_cap}^4 = {step.threshold}"
        )
    print(f"enumeration threshold: {report.enumeration_threshold}")
    for step in report.window_steps:
        print(
            f"  omega <= {step.omega_cap} -> j <= {step.gap_cap} -> "
            f"threshold 36*{step.gap_cap}^2 = {step.threshold}"
        )
    print(f"window threshold: {report.window_threshold}")
    if report.enumeration_threshold != 1474560000 or report.window_threshold != 7056:
        print("FAIL: final thresholds do not match the embedded constants")
        return EXIT_FAILURE
    print("OK: reduction chains reproduce 1.47456e9 and 7056")
    return EXIT_OK


def _verify_geometry(n_limit: int = 2012) -> int:
    ratio12 = geometry.moduli_ratio(12)
    print(f"n=12 moduli ratio: {ratio12!r}")
    if abs(ratio12 - 3) > 1e-12:
        print("FAIL: n=12 ratio must be 3")
        return EXIT_FAILURE
    for n in range(12, n_limit + 1, 8):
        top, bottom = geometry.star_cylinders(n)
        two_path = bottom.modulus / top.modulus
        if abs(two_path - geometry.moduli_ratio(n)) > geometry.RATIO_AGREEMENT_TOL:
            print(f"FAIL: two-path ratio disagreement at n={n}")
            return EXIT_FAILURE
        verdict = geometry.family3_verdict(n)
        expected = Lattice.LATTICE if n == 12 else Lattice.NOT_LATTICE
        if verdict.status is not expected:
            print(f"FAIL: unexpected verdict at n={n}: {verdict}")
            return EXIT_FAILURE
    print(
        f"OK: two evaluation paths agree (<= {geometry.RATIO_AGREEMENT_TOL}) and "
        f"the moduli ratio is irrational for every n in (12, {n_limit}], "
        f"n = 4 mod 8"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.target == "beta":
        return _verify_beta()
    if args.target == "coverage":
        return _verify_coverage(args.regime, args.boundary)
    if args.target == "jacobsthal":
        return _verify_jacobsthal()
    if args.target == "reduction":
        return _verify_reduction()
    if args.target == "geometry":
        return _verify_geometry()
    raise AssertionError(f"unhandled verify target {args.target}")


# ---------------------------------------------------------------------------
# parser


def build_parser() -> tuple[argparse.ArgumentParser, list[argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(
        prog="trirank",
        description="Rank-criterion classification of rational obtuse triangles",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    subparsers = []

    p_check = sub.add_parser("check", help="run the criterion on one triple")
    p_check.add_argument("p", type=int)
    p_check.add_argument("q", type=int)
    p_check.add_argument("r", type=int)
    p_check.add_argument("--validate-oracle", action="store_true")
    p_check.add_argument("--config", help="JSON file with flag defaults")
    p_check.set_defaults(func=cmd_check)
    subparsers.append(p_check)

    p_enum = sub.add_parser("enumerate", help="classify all triples up to n-max")
    p_enum.add_argument("--n-max", type=int, required=True)
    p_enum.add_argument(
        "--region",
        choices=sorted(_REGION_CHOICES),
        default="strongly-obtuse",
        help="minimum obtuseness of enumerated triples",
    )
    p_enum.add_argument("--failures-only", action="store_true")
    p_enum.add_argument("--workers", type=int, default=1)
    p_enum.add_argument("--format", choices=("jsonl", "csv", "summary"), default="jsonl")
    p_enum.add_argument("--validate-oracle", action="store_true")
    p_enum.add_argument("--hints", action="store_true", help="hint-capped witness scan")
    p_enum.add_argument(
        "--hints-validate",
        action="store_true",
        help="run hinted and plain scans and compare",
    )
    p_enum.add_argument("--output", help="write records here instead of stdout")
    p_enum.add_argument("--config", help="JSON file with flag defaults")
    p_enum.set_defaults(func=cmd_enumerate)
    subparsers.append(p_enum)

    p_verify = sub.add_parser("verify", help="reproduce one embedded verification")
    p_verify.add_argument(
        "target", choices=("beta", "coverage", "jacobsthal", "reduction", "geometry")
    )
    p_verify.add_argument("--regime", choices=("A", "B"))
    p_verify.add_argument("--boundary", choices=("open", "closed"))
    p_verify.add_argument("--config", help="JSON file with flag defaults")
    p_verify.set_defaults(func=cmd_verify)
    subparsers.append(p_verify)

    p_ce = sub.add_parser(
        "counterexample", help="generate an obtuse triple on which the criterion fails"
    )
    p_ce.add_argument("--p", type=int, required=True, help="odd prime")
    p_ce.add_argument("--x", type=int, required=True, help="scale parameter >= 1")
    p_ce.add_argument(
        "--skip-check", action="store_true", help="emit the triple without the scan"
    )
    p_ce.add_argument("--config", help="JSON file with flag defaults")
    p_ce.set_defaults(func=cmd_counterexample)
    subparsers.append(p_ce)

    return parser, subparsers


_CONFIG_KEYS = {
    "n_max",
    "region",
    "failures_only",
    "workers",
    "format",
    "validate_oracle",
    "hints",
    "hints_validate",
    "output",
    "regime",
    "boundary",
    "skip_check",
}


def _apply_config(argv: list[str], parser, subparsers) -> int | None:
    """Load --config (if present) and install its values as parser defaults.

    Flags given explicitly on the command line still win. Returns an exit
    code on error, None on success.
    """
    path = None
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            path = argv[i + 1]
        elif tok.startswith("--config="):
            path = tok.split("=", 1)[1]
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read config {path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not isinstance(cfg, dict):
        print("error: config must be a JSON object", file=sys.stderr)
        return EXIT_USAGE
    cfg = {k.replace("-", "_"): v for k, v in cfg.items()}
    unknown = set(cfg) - _CONFIG_KEYS
    if unknown:
        print(f"error: unknown config keys: {sorted(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    for sp in subparsers:
        sp.set_defaults(**cfg)
    return None


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, subparsers = build_parser()
    rc = _apply_config(argv, parser, subparsers)
    if rc is not None:
        return rc
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK
    except Exception as exc:  # noqa: BLE001 - exit-code contract
        print(f"unexpected failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
