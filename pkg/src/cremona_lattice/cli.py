"""Command-line front end: ``cremona <command> ...``.

Exit codes: 0 all verdicts passed, 1 some verdict failed, 2 usage error,
3 resource cap (large enumeration without ``--allow-large``, closure cap).
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from . import actions as A
from . import cases
from . import curves as C
from . import lattice as L
from . import surfaces as S
from . import tables as T
from . import weyl as W

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

LARGE_HINT = ("enumerating W(E7) needs --allow-large (about 3 million elements); "
              "without it, `verify` runs in reduced mode")


class UsageError(Exception):
    pass


class ResourceCap(Exception):
    pass


def _r_of_degree(d: int) -> int:
    if not 1 <= d <= 8:
        raise UsageError(f"degree must be between 1 and 8, got {d}")
    return 9 - d


def _emit(args: argparse.Namespace, data: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_count(args: argparse.Namespace) -> int:
    r = _r_of_degree(args.degree)
    vectors = L.enumerate_roots(r) if args.command == "roots" else L.enumerate_minus_one_classes(r)
    data = {"degree": args.degree, "r": r, "count": len(vectors)}
    lines = [str(len(vectors))]
    if args.list:
        data["vectors"] = [list(v.coords) for v in vectors]
        lines += [" ".join(map(str, v.coords)) for v in vectors]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    raw = _load_json(args.matrix_file)
    try:
        w = W.Isometry.from_json(raw)
    except (W.InvalidIsometry, ValueError) as exc:
        raise UsageError(f"invalid isometry: {exc}") from None
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed isometry JSON: {exc}") from None
    inv = W.class_invariant(w)
    type_label = T.RANK_TYPE.get(w.r)
    data = {
        "r": w.r,
        "type": type_label,
        "order": inv.order,
        "charpoly": inv.charpoly_string(type_label),
        "factors": inv.to_json()["charpoly"],
        "trace": inv.trace,
        "trace_pic": inv.trace + 1,
        "minimal": A.cyclic_minimality(w),
        "lefschetz": A.lefschetz_fixed_euler(w),
        "carter_candidates": sorted(inv.labels),
    }
    lines = [
        f"order       {data['order']}",
        f"charpoly    {data['charpoly']}",
        f"trace       {data['trace']} on E_r, {data['trace_pic']} on Pic",
        f"minimal     {'yes' if data['minimal'] else 'no'}",
        f"lefschetz   {data['lefschetz']}",
        f"carter      {', '.join(data['carter_candidates']) or '-'}",
    ]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_action(args: argparse.Namespace) -> int:
    raw = _load_json(args.action_file)
    try:
        spec = A.ActionSpec.from_json(raw)
    except (W.InvalidIsometry, ValueError, L.DegreeMismatch) as exc:
        raise UsageError(f"invalid action: {exc}") from None
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed action JSON: {exc}") from None
    try:
        group = A.group_of(spec, args.cap)
        rank = A.invariant_picard_rank(spec, args.cap)
        oracle = A.fixed_sublattice_rank(spec, args.cap)
    except W.OrderCapExceeded as exc:
        raise ResourceCap(str(exc)) from None
    configs = C.invariant_exceptional(list(spec.generators), spec.sigma, spec.r)
    orbit_sizes = sorted(len(o) for o in C.orbits(list(spec.generators), spec.r))
    data = {
        "r": spec.r,
        "group_order": len(group),
        "invariant_rank": rank,
        "invariant_rank_oracle": oracle,
        "invariant_configurations": [c.to_json() for c in configs],
        "orbit_sizes": orbit_sizes,
    }
    lines = [
        f"group order        {len(group)}",
        f"invariant rank     {rank} (oracle {oracle})",
        f"invariant configs  {len(configs)}",
        *(f"  {c.kind}: " + "; ".join(" ".join(map(str, v.coords)) for v in c.classes) for c in configs),
        f"orbit sizes        {' '.join(map(str, orbit_sizes))}",
    ]
    _emit(args, data, lines)
    return EXIT_OK if rank == oracle else EXIT_FAIL


def table_tsv() -> str:
    """Tables 1, 2, 4, 6, 7, 8 and 9 as TSV blocks, recomputed where cheap."""
    out = io.StringIO()
    out.write("# table 1: (-1)-curves\ndegree\tcount\n")
    for d in sorted(T.MINUS_ONE_COUNTS, reverse=True):
        out.write(f"{d}\t{len(L.enumerate_minus_one_classes(9 - d))}\n")
    out.write("\n# table 2: Weyl groups\ndegree\troot_system\torder\n")
    for d in sorted(T.ROOT_TYPES, reverse=True):
        label = T.ROOT_TYPES[d]
        out.write(f"{d}\t{label}\t{T.WEYL_ORDERS[label]}\n")
    blocks = [
        ("4", "W(E6), orders 2, 3, 6, 9", "E6", T.E6_TABLE),
        ("6", "W(E7), order 6 without eigenvalue 1", "E7", T.E7_NO_EIG1_ORDER6),
        ("7", "W(E8), order 3", "E8", T.E8_ORDER3_TABLE),
        ("8", "W(E7), orders 2, 3, 6", "E7", T.E7_TABLE),
        ("9", "W(E8), order 6", "E8", T.E8_ORDER6_TABLE),
    ]
    for num, title, _, rows in blocks:
        out.write(f"\n# table {num}: {title}\nlabel\tcharpoly\ttrace\torder\n")
        for row in rows:
            out.write(f"{row.label}\t{row.charpoly}\t{row.computed_trace}\t{row.order}\n")
    return out.getvalue()


def _summary(verdicts: list[cases.Verdict]) -> list[str]:
    lines = []
    for v in verdicts:
        lines.append(f"{'PASS' if v.passed else 'FAIL'}  {v.case_id:10s} "
                     f"{sum(c.holds for c in v.claims)}/{len(v.claims)} claims")
        for c in v.failures():
            lines.append(f"      failed: {c.description}  [{json.dumps(cases._plain(c.witness))[:200]}]")
        for f in v.flags:
            lines.append(f"      note: {f}")
    return lines


def cmd_verify(args: argparse.Namespace) -> int:
    if args.strict and not args.allow_large:
        raise ResourceCap(LARGE_HINT)
    verdicts = cases.run_suite(args.suite, args.allow_large, args.seed)
    if args.json:
        print(cases.dumps(verdicts))
    else:
        print("\n".join(_summary(verdicts)))
    if args.emit_tables:
        print(table_tsv(), end="")
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_FAIL


def cmd_surfaces(args: argparse.Namespace) -> int:
    fn = S.EXAMPLES[args.example]
    v = fn(symbolic=True) if args.symbolic and args.example == "g0" else fn()
    if args.json:
        print(cases.dumps([v]))
    else:
        print("\n".join(_summary([v])))
    return EXIT_OK if v.passed else EXIT_FAIL


def cmd_group(args: argparse.Namespace) -> int:
    label = args.type
    if label == "E8":
        raise ResourceCap(f"W(E8) has {T.WEYL_ORDERS['E8']} elements and is not enumerated; "
                          "use carter_representative for class representatives")
    if label == "E7" and not args.allow_large:
        raise ResourceCap(LARGE_HINT)
    g = W.generate_group(label)
    data: dict = {"type": label, "order": len(g), "expected": T.WEYL_ORDERS[label]}
    lines = [f"|W({label})| = {len(g)}"]
    if label in T.TABLE_ORDERS:
        orders = T.TABLE_ORDERS[label]
        parts = g.class_partition(orders)
        data["classes"] = [c.to_json() for c in parts]
        lines.append(f"classes of order {', '.join(map(str, orders))}: {len(parts)}")
        for c in sorted(parts, key=lambda c: (c.invariant.order, -c.invariant.trace)):
            inv = c.invariant
            lines.append(f"{inv.order}\t{inv.charpoly_string(label)}\t{inv.trace}\t{c.size}\t"
                         f"{', '.join(sorted(inv.labels))}")
    _emit(args, data, lines)
    return EXIT_OK if len(g) == T.WEYL_ORDERS[label] else EXIT_FAIL


def cmd_graph(args: argparse.Namespace) -> int:
    g = C.build_graph(_r_of_degree(args.degree))
    print(g.to_dot() if args.format == "dot" else json.dumps(g.to_json(), indent=2))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cremona", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(q: argparse.ArgumentParser) -> None:
        q.add_argument("--json", action="store_true", help="machine-readable output")

    for name, what in (("roots", "roots"), ("lines", "(-1)-classes")):
        q = sub.add_parser(name, help=f"count {what} of a del Pezzo surface")
        q.add_argument("--degree", type=int, required=True)
        q.add_argument("--list", action="store_true", help="also print the vectors")
        common(q)
        q.set_defaults(func=cmd_count)

    q = sub.add_parser("classify", help="order, characteristic polynomial and class of an isometry")
    q.add_argument("matrix_file", help='JSON {"r": r, "matrix": [[...], ...]}')
    common(q)
    q.set_defaults(func=cmd_classify)

    q = sub.add_parser("action", help="invariant Picard rank and orbits of a group action")
    q.add_argument("action_file", help='JSON {"r": r, "generators": [...], "sigma": matrix|null}')
    q.add_argument("--cap", type=int, default=A.CLOSURE_CAP, help="group closure cap")
    common(q)
    q.set_defaults(func=cmd_action)

    q = sub.add_parser("verify", help="run verification suites")
    q.add_argument("--suite", default="all", choices=[*cases.SUITES, "all"])
    q.add_argument("--allow-large", action="store_true", help="enumerate W(E7) in full")
    q.add_argument("--strict", action="store_true", help="refuse reduced mode (needs --allow-large)")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--emit-tables", action="store_true", help="append the tables as TSV")
    common(q)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("surfaces", help="exact checks on explicit equations")
    ssub = q.add_subparsers(dest="surfaces_command", required=True, parser_class=_Parser)
    qq = ssub.add_parser("verify")
    qq.add_argument("--example", required=True, choices=list(S.EXAMPLES))
    qq.add_argument("--symbolic", action="store_true", help="g0: also check g0^5 = id as a map")
    common(qq)
    qq.set_defaults(func=cmd_surfaces)

    q = sub.add_parser("group", help="enumerate a Weyl group and its class inventory")
    q.add_argument("--type", required=True, choices=["A1xA2", "A4", "D5", "E6", "E7", "E8"])
    q.add_argument("--allow-large", action="store_true")
    common(q)
    q.set_defaults(func=cmd_group)

    q = sub.add_parser("graph", help="incidence graph of the (-1)-classes")
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--format", choices=["dot", "json"], default="dot")
    q.set_defaults(func=cmd_graph)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCap as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
