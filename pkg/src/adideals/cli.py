"""Command-line interface: ``adideals {ideal,table,verify,count}``.

``--size`` is the matrix size ``n`` of ``sl(n)`` for type A and the rank
for types B, C and D.  Exit codes: 0 success, 1 input or guard error,
2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import oracle
from .construct import generator_set, index_assignment, minimal_ideal
from .dynkin import dynkin_element, lower_bound_m, system_of
from .errors import AdIdealsError, GuardError, InputError, InternalError
from .partitions import OrbitLabel, format_partition, orbit_label, orbit_labels, parse_partition
from .rootsys import build, count_ideals, ferrers_diagram, format_root

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2
TABLE_MAX_RANK = 12


class _Parser(argparse.ArgumentParser):
    """Argument errors exit with code 1; code 2 is reserved for failed verification."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_system_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="kind", required=True, type=str.upper, choices=["A", "B", "C", "D"])
    p.add_argument("--size", required=True, type=int,
                   help="matrix size n for type A (sl_n), rank n for B, C, D")
    p.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adideals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ideal", help="construct the minimal ideal of one orbit")
    _add_system_args(p)
    p.add_argument("--partition", required=True, help='parts in non-increasing order, e.g. "4,2"')
    p.add_argument("--variant", choices=["I", "II"], default=None,
                   help="required for very even type-D partitions")

    p = sub.add_parser("table", help="m and constructed dimension for every orbit")
    _add_system_args(p)

    p = sub.add_parser("verify", help="compare constructed ideals with exhaustive enumeration")
    _add_system_args(p)
    p.add_argument("--seed", type=int, default=None,
                   help=f"RNG seed (default: ${oracle.SEED_ENV} or {oracle.DEFAULT_SEED})")
    p.add_argument("--trials", type=int, default=oracle.DEFAULT_TRIALS)

    p = sub.add_parser("count", help="number of ad-nilpotent ideals")
    _add_system_args(p)
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _label_row(label: OrbitLabel) -> dict:
    return {"partition": format_partition(label.partition), "variant": label.variant}


def ideal_payload(label: OrbitLabel) -> dict:
    """The JSON document printed by ``ideal --format json``."""
    H = dynkin_element(label)
    C = generator_set(label, index_assignment(label)).roots
    I = minimal_ideal(label)
    return {
        "type": label.kind,
        "size": label.size,
        "partition": list(label.partition),
        "variant": label.variant,
        "h": list(H.effective()),
        "m": lower_bound_m(label),
        "dim": I.dim,
        "generators": [list(r) for r in C],
        "roots": [list(r) for r in I.roots],
    }


def cmd_ideal(args) -> int:
    label = orbit_label(args.kind, args.size, parse_partition(args.partition), args.variant)
    data = ideal_payload(label)
    if args.fmt == "json":
        print(_dump(data))
        return EXIT_OK
    print(f"orbit       {label}")
    print(f"h           {' '.join(map(str, data['h']))}")
    print(f"m           {data['m']}")
    print(f"dim         {data['dim']}")
    print(f"generators  {', '.join(format_root(r) for r in data['generators'])}")
    if label.kind == "A":
        print("ferrers diagram (# = root in the ideal):")
        print(ferrers_diagram(system_of(label), minimal_ideal(label)))
    return EXIT_OK


def cmd_table(args) -> int:
    rs = build(args.kind, args.size)
    if rs.rank > TABLE_MAX_RANK:
        raise GuardError(f"table is limited to rank {TABLE_MAX_RANK}; {rs} has rank {rs.rank}")
    rows = []
    for label in orbit_labels(args.kind, args.size):
        m, dim = lower_bound_m(label), minimal_ideal(label).dim
        rows.append({**_label_row(label), "m": m, "dim": dim, "match": m == dim})
    if args.fmt == "json":
        print(_dump({"type": args.kind, "size": args.size, "rows": rows}))
    else:
        print(f"{'partition':<18}{'variant':<9}{'m':>5}{'dim':>6}  match")
        for r in rows:
            print(f"{r['partition']:<18}{r['variant'] or '-':<9}{r['m']:>5}{r['dim']:>6}  {'yes' if r['match'] else 'NO'}")
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_VERIFY


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise InputError("--trials must be at least 1")
    seed = oracle.default_seed() if args.seed is None else args.seed
    rs = build(args.kind, args.size)
    minima = oracle.min_dims_by_orbit(args.kind, args.size, seed=seed, trials=args.trials)
    rows = []
    for label in orbit_labels(args.kind, args.size):
        ideal = minimal_ideal(label)
        found = minima.get(label.partition)
        orbit = oracle.associated_orbit(rs, ideal, seed=seed, trials=args.trials)
        m = lower_bound_m(label)
        enumerated = found.dim if found else None
        rows.append({
            **_label_row(label),
            "enumerated_min": enumerated,
            "m": m,
            "dim": ideal.dim,
            "orbit_ok": orbit == label.partition,
            "ok": enumerated == m == ideal.dim and orbit == label.partition,
        })
    ok = all(r["ok"] for r in rows)
    if args.fmt == "json":
        print(_dump({"type": args.kind, "size": args.size, "seed": seed, "trials": args.trials,
                     "ok": ok, "rows": rows}))
    else:
        print(f"{rs}: seed {seed}, {args.trials} trials per ideal")
        print(f"{'partition':<18}{'variant':<9}{'enum':>5}{'m':>5}{'dim':>6}  orbit  status")
        for r in rows:
            print(f"{r['partition']:<18}{r['variant'] or '-':<9}{r['enumerated_min']!s:>5}{r['m']:>5}"
                  f"{r['dim']:>6}  {'ok' if r['orbit_ok'] else 'BAD':<5}  {'pass' if r['ok'] else 'FAIL'}")
        print("all orbits pass" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_count(args) -> int:
    rs = build(args.kind, args.size)
    oracle.check_guard(rs)
    n = count_ideals(rs)
    if args.fmt == "json":
        print(_dump({"type": args.kind, "size": args.size, "count": n}))
    else:
        print(n)
    return EXIT_OK


COMMANDS = {"ideal": cmd_ideal, "table": cmd_table, "verify": cmd_verify, "count": cmd_count}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InternalError as exc:
        print(f"adideals: internal check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except AdIdealsError as exc:
        print(f"adideals: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
