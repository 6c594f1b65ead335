"""Command-line front end: build series, expand them, count, cross-verify."""
from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from typing import Iterable, Sequence

from .extraction import count_degree_sequence, count_table
from .graph_series import WeightProfile, build_F, build_G
from .oracle import DESK_BOUND, OracleConfig, count_matrices, probe_loop_conventions
from .series import Basis, ConsistencyError, SymSeries, format_series, p_to_m

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONSISTENCY = 3
EXIT_MISMATCH = 4


def _positive_ints(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("expected integers >= 1")
    return values


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("expected an integer >= 1")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("expected an integer >= 0")
    return value


def _add_weight_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--edge-weights",
        type=_positive_ints,
        metavar="J",
        help="allowed edge multiplicities, comma-separated (e.g. 2,3)",
    )
    group.add_argument(
        "--edge-weights-up-to",
        type=_positive_int,
        metavar="B",
        help="shorthand for the full alphabet 1,2,...,B",
    )
    parser.add_argument(
        "--loops",
        action="store_true",
        help="admit loops, weighted like edges (a loop adds twice its weight)",
    )


def _add_format_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )


def _profile(args: argparse.Namespace) -> WeightProfile:
    if args.edge_weights_up_to is not None:
        weights = frozenset(range(1, args.edge_weights_up_to + 1))
    else:
        weights = frozenset(args.edge_weights)
    return WeightProfile(edge_weights=weights, loops=args.loops)


def cmd_series(args: argparse.Namespace) -> int:
    profile = _profile(args)
    table = count_table(
        profile, set(args.degrees), args.n_max, degree_mode=args.degree_mode
    )
    if args.format == "json":
        payload = {
            "J": sorted(profile.edge_weights),
            "K": sorted(table.degree_set),
            "loops": profile.loops,
            "counts": [
                {"n": n, "count": str(table[n])} for n in range(table.n_max + 1)
            ],
        }
        print(json.dumps(payload))
    else:
        print(",".join(str(c) for c in table.counts))
    return EXIT_OK


def cmd_expand(args: argparse.Namespace) -> int:
    profile = _profile(args)
    if args.f_only:
        series = build_F(profile.edge_weights, args.max_degree)
    else:
        series = build_G(profile, args.max_degree)
    mono = p_to_m(series)
    # The constant term is the empty assembly; the listing shows proper terms.
    display = SymSeries(
        Basis.MONOMIAL,
        {part: c for part, c in mono.terms() if part},
        mono.max_degree,
    )
    if args.format == "json":
        print(display.to_json())
    else:
        print(format_series(display))
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    profile = _profile(args)
    value = count_degree_sequence(profile, args.degree_seq)
    if args.format == "json":
        payload = {
            "J": sorted(profile.edge_weights),
            "d": list(args.degree_seq),
            "loops": profile.loops,
            "count": str(value),
        }
        print(json.dumps(payload))
    else:
        print(value)
    return EXIT_OK


def _nonempty_subsets(pool: Iterable[int]) -> list[frozenset[int]]:
    values = sorted(set(pool))
    return [
        frozenset(c)
        for r in range(1, len(values) + 1)
        for c in combinations(values, r)
    ]


def _run_probe(args: argparse.Namespace) -> int:
    n_values = list(range(1, min(args.n_max, 4) + 1))
    ks = frozenset(args.degree_pool)
    probes = []
    for weights in _nonempty_subsets(args.edge_weight_pool):
        report = probe_loop_conventions(
            weights, ks, n_values, desk_bound=args.oracle_bound
        )
        probes.append({"J": sorted(weights), "K": sorted(ks), "report": report})
    if args.format == "json":
        print(json.dumps({"loops_probe": probes}))
    else:
        print(f"loops probe over K={sorted(ks)}, n in {n_values}:")
        labels = sorted(probes[0]["report"]) if probes else []
        for label in labels:
            ok = all(p["report"][label]["all_match"] for p in probes)
            verdict = "matches the loop-weighted series" if ok else "does not match"
            print(f"  {label}: {verdict}")
        for p in probes:
            line = ", ".join(
                f"{label}={'ok' if p['report'][label]['all_match'] else 'FAIL'}"
                for label in labels
            )
            print(f"  J={sorted(p['J'])}: {line}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.oracle_bound > DESK_BOUND and not args.i_know_this_is_slow:
        print(
            f"--oracle-bound beyond {DESK_BOUND} requires --i-know-this-is-slow",
            file=sys.stderr,
        )
        return EXIT_USAGE
    if args.loops_probe:
        return _run_probe(args)
    cases = []
    mismatches = 0
    first = True
    for weights in _nonempty_subsets(args.edge_weight_pool):
        for ks in _nonempty_subsets(args.degree_pool):
            profile = WeightProfile(edge_weights=weights, loops=False)
            table = count_table(profile, ks, args.n_max, degree_mode="assigned")
            for n in range(args.n_max + 1):
                algebra = table[n]
                if args.inject_fault and first:
                    algebra += 1
                    first = False
                enumerated = count_matrices(
                    OracleConfig(
                        n=n, off_diagonal=weights | {0}, row_sums=ks
                    ),
                    desk_bound=args.oracle_bound,
                )
                match = algebra == enumerated
                mismatches += 0 if match else 1
                cases.append(
                    {
                        "J": sorted(weights),
                        "K": sorted(ks),
                        "n": n,
                        "algebra": str(algebra),
                        "oracle": str(enumerated),
                        "match": match,
                    }
                )
    if args.format == "json":
        print(json.dumps({"cases": cases, "mismatches": mismatches}))
    else:
        for case in cases:
            status = "ok" if case["match"] else "MISMATCH"
            print(
                f"J={case['J']} K={case['K']} n={case['n']} "
                f"algebra={case['algebra']} oracle={case['oracle']} {status}"
            )
        if mismatches:
            print(f"{mismatches} mismatches out of {len(cases)} cases")
        else:
            print(f"all {len(cases)} cases agree")
    return EXIT_MISMATCH if mismatches else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symgraphs",
        description=(
            "Exact counts of well-labelled multigraphs with edge multiplicities "
            "from a fixed set and degrees from a fixed set, via symmetric series."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_series = sub.add_parser(
        "series", help="counts by vertex number, n = 0..n-max"
    )
    _add_weight_args(p_series)
    p_series.add_argument(
        "--degrees",
        type=_positive_ints,
        required=True,
        metavar="K",
        help="allowed vertex degrees, comma-separated",
    )
    p_series.add_argument("--n-max", type=_nonneg_int, required=True)
    p_series.add_argument(
        "--degree-mode",
        choices=("multiset", "assigned"),
        default="multiset",
        help=(
            "multiset: one count per unordered degree profile (default); "
            "assigned: per-vertex degree constraints, the matrix-model count"
        ),
    )
    _add_format_arg(p_series)
    p_series.set_defaults(handler=cmd_series)

    p_expand = sub.add_parser(
        "expand", help="monomial-basis expansion of the graph series"
    )
    _add_weight_args(p_expand)
    p_expand.add_argument("--max-degree", type=_nonneg_int, required=True)
    p_expand.add_argument(
        "--f-only",
        action="store_true",
        help="expand the edge-assembly series F instead of the graph series G",
    )
    _add_format_arg(p_expand)
    p_expand.set_defaults(handler=cmd_expand)

    p_count = sub.add_parser(
        "count", help="graphs with one exact degree sequence"
    )
    _add_weight_args(p_count)
    p_count.add_argument(
        "--degree-seq",
        type=_positive_ints,
        required=True,
        metavar="D",
        help="exact degree sequence, comma-separated",
    )
    _add_format_arg(p_count)
    p_count.set_defaults(handler=cmd_count)

    p_verify = sub.add_parser(
        "verify", help="cross-check algebraic counts against matrix enumeration"
    )
    p_verify.add_argument(
        "--edge-weight-pool",
        type=_positive_ints,
        default=(1, 2, 3),
        metavar="POOL",
        help="sweep all non-empty subsets of this multiplicity pool",
    )
    p_verify.add_argument(
        "--degree-pool",
        type=_positive_ints,
        default=(2, 3),
        metavar="POOL",
        help="sweep all non-empty subsets of this degree pool",
    )
    p_verify.add_argument("--n-max", type=_nonneg_int, default=4)
    p_verify.add_argument(
        "--oracle-bound",
        type=_positive_int,
        default=DESK_BOUND,
        help=f"enumeration size cap (default {DESK_BOUND})",
    )
    p_verify.add_argument(
        "--i-know-this-is-slow",
        action="store_true",
        help="required to raise --oracle-bound beyond the default",
    )
    p_verify.add_argument(
        "--loops-probe",
        action="store_true",
        help="probe which diagonal alphabet matches the loop-weighted series",
    )
    p_verify.add_argument(
        "--inject-fault", action="store_true", help=argparse.SUPPRESS
    )
    _add_format_arg(p_verify)
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConsistencyError as exc:
        print(f"internal consistency violation: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
