"""Command-line entry point: ``lefschetz <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .complete_intersection import CiTriple, ci_hf, ci_lambda_stats
from .errors import NegativeEntry, NotSorted
from .gorenstein import gorenstein_hf, mci_data, reduce, validate_gaeta
from .hilbert_seq import HilbertFunction, difference, is_wls, lam
from .liaison import aci_degrees, link_hf
from .monomial_oracle import monomial_hf, parse_generators
from .verifier import SweepConfig, sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CSV_COLUMNS = ["delta", "alpha", "hq", "tau", "claim_ok", "wls", "failed_checks"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_ints(text):
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise UsageError("empty integer list")
    if any(v < 0 for v in values):
        raise NegativeEntry(f"negative entry in {values}")
    return values


def parse_ci(text):
    values = parse_ints(text)
    if len(values) != 3:
        raise UsageError(f"a CI triple needs exactly 3 degrees, got {values}")
    if values != sorted(values):
        raise NotSorted(f"degrees must be nondecreasing: {values}")
    return CiTriple(*values)


def _join(seq):
    return ",".join(str(x) for x in seq)


def cmd_ci(args):
    alpha = parse_ci(args.degrees)
    h = ci_hf(alpha)
    lam_z, at_lam = ci_lambda_stats(alpha)
    return {
        "hf": list(h),
        "delta": list(difference(h)),
        "theta": alpha.theta,
        "lambda": lam_z,
        "delta_at_lambda": at_lam,
    }, EXIT_OK


def cmd_gor(args):
    delta = validate_gaeta(parse_ints(args.degrees))
    h = gorenstein_hf(delta)
    data = mci_data(delta)
    return {
        "theta": delta.theta,
        "hf": list(h),
        "lambda": lam(h),
        "b_set": list(data.b_set),
        "c_set": list(data.c_set),
        "mci": list(data.mci),
        "reduced": data.reduced,
    }, EXIT_OK


def cmd_mci(args):
    data = mci_data(parse_ints(args.degrees))
    return {"b_set": list(data.b_set), "c_set": list(data.c_set), "mci": list(data.mci)}, EXIT_OK


def cmd_reduce(args):
    delta = validate_gaeta(parse_ints(args.degrees))
    out = reduce(delta)
    return {
        "reduced_degrees": list(out.degrees),
        "hf_preserved": gorenstein_hf(out) == gorenstein_hf(delta),
    }, EXIT_OK


def cmd_link(args):
    alpha = parse_ci(args.ci)
    delta = validate_gaeta(parse_ints(args.gor))
    pair = link_hf(alpha, delta)
    aci = aci_degrees(alpha, delta)
    return {
        "hq": list(pair.h_q),
        "tau": pair.tau,
        "e_degrees": list(aci.degrees),
        "normalized": aci.normalized,
        "wls": is_wls(pair.h_q).as_dict(),
    }, EXIT_OK


def cmd_check(args):
    h = HilbertFunction(parse_ints(args.sequence))
    verdict = is_wls(h)
    code = EXIT_FAIL if args.expect_wls and not verdict.is_wls else EXIT_OK
    return verdict.as_dict(), code


def cmd_monomial_hf(args):
    h = monomial_hf(parse_generators(args.gens))
    return {"hf": list(h), "wls": is_wls(h).as_dict()}, EXIT_OK


def _sweep_config(args):
    fields = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            fields.update(json.load(fh))
    for name, value in (("d_max", args.d_max), ("m_max", args.m_max), ("alpha_offset", args.offset)):
        if value is not None:
            fields[name] = value
    if args.no_normalization:
        fields["enforce_normalization"] = False
    missing = {"d_max", "m_max"} - set(fields)
    if missing:
        raise UsageError(f"sweep needs {', '.join(sorted('--' + m.replace('_', '-') for m in missing))}")
    try:
        return SweepConfig(**fields)
    except TypeError as exc:
        raise UsageError(f"bad sweep config: {exc}") from None


def write_csv(path, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for v in rows:
            writer.writerow([_join(v.delta), _join(v.alpha), _join(v.h_q), v.tau,
                             str(v.claim_ok).lower(), str(v.wls["is_wls"]).lower(),
                             ";".join(v.failed)])


def cmd_sweep(args):
    config = _sweep_config(args)
    report = sweep(config, workers=args.workers, keep_rows=bool(args.csv))
    if args.csv:
        write_csv(args.csv, report.rows)
    payload = report.as_dict()
    code = EXIT_FAIL if report.failures else EXIT_OK
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps(payload) + "\n")
        summary = {k: payload[k] for k in ("deltas_enumerated", "pairs_checked", "distinct_hq", "elapsed")}
        summary["failures"] = len(report.failures)
        return summary, code
    return payload, code


def build_parser():
    parser = _Parser(prog="lefschetz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ci", help="complete intersection Hilbert function")
    p.add_argument("--degrees", required=True, help="a1,a2,a3")
    p.set_defaults(func=cmd_ci)

    for name, func, help_ in (("gor", cmd_gor, "Gorenstein Hilbert function and mci data"),
                              ("mci", cmd_mci, "B-set, C-set and minimal CI triple"),
                              ("reduce", cmd_reduce, "strip ghost pairs")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--degrees", required=True, help="d1,...,d_{2m+1}, nondecreasing")
        p.set_defaults(func=func)

    p = sub.add_parser("link", help="linked Hilbert function of a CI inside a Gorenstein ideal")
    p.add_argument("--ci", required=True)
    p.add_argument("--gor", required=True)
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("check", help="Weak Lefschetz sequence verdict for a Hilbert function")
    p.add_argument("--sequence", required=True, help="h0,h1,...")
    p.add_argument("--expect-wls", action="store_true", help="exit 1 unless the verdict is true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("monomial-hf", help="Hilbert function of a monomial quotient")
    p.add_argument("--gens", required=True, help="exponent triples, e.g. 3:0:0,0:3:0,0:0:3,1:1:1")
    p.set_defaults(func=cmd_monomial_hf)

    p = sub.add_parser("sweep", help="exhaustive verification sweep")
    p.add_argument("--d-max", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--offset", type=int)
    p.add_argument("--no-normalization", action="store_true")
    p.add_argument("--config", help="JSON file with SweepConfig fields; flags override it")
    p.add_argument("--workers", type=int, help="default: LEFSCHETZ_THREADS or CPU count")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--csv", help="write one row per checked pair")
    p.set_defaults(func=cmd_sweep)
    return parser


def dumps(obj):
    return json.dumps(obj, sort_keys=True)


def run(argv, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        payload, code = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return EXIT_USAGE
    print(dumps(payload), file=stdout)
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
