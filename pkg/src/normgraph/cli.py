"""Command line: analyze groups, run the verification suite, export DOT."""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import builders, checks
from .analysis import analysis_payload, facts_for
from .digraph import dot_payload
from .graphs import GRAPH_KINDS
from .group import GroupError


class SpecError(GroupError):
    pass


_FAMILIES = {
    "C": builders.cyclic,
    "D": builders.dihedral,
    "Q": builders.quaternion,
    "S": builders.symmetric,
}

_NAMED = {
    "Mod16": builders.mod16,
    "C3xQ8": builders.c3_semidirect_q8,
    "TwoFrob294": builders.two_frob_294,
    "F20": builders.frobenius20,
    "F21": builders.frobenius21,
}


def _split_pair(body: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1 :]
    raise SpecError(f"expected two comma-separated specs in {body!r}")


def parse_group(text: str):
    """Build a group from a spec string.

    Grammar: C:n | D:2n | Q:2^k | S:m | Mod16 | C3xQ8 | TwoFrob294 |
    prod(a,b) | file:path | perm:path, plus bare catalog names like S4.
    """
    s = text.strip()
    if not s:
        raise SpecError("empty group spec")
    if s.startswith("prod(") and s.endswith(")"):
        left, right = _split_pair(s[5:-1])
        return builders.product(parse_group(left), parse_group(right))
    if s.startswith("file:"):
        return builders.ingest_cayley(s[5:])
    if s.startswith("perm:"):
        return builders.ingest_permutations(s[5:])
    head, sep, tail = s.partition(":")
    if sep and head in _FAMILIES:
        try:
            n = int(tail)
        except ValueError:
            raise SpecError(f"bad order in {s!r}") from None
        return _FAMILIES[head](n)
    if s in _NAMED:
        return _NAMED[s]()
    m = re.fullmatch(r"([CDQS])(\d+)", s)
    if m:
        return _FAMILIES[m.group(1)](int(m.group(2)))
    try:
        return builders.catalog_group(s)
    except GroupError:
        raise SpecError(f"cannot parse group spec {s!r}") from None


def _emit(obj, fmt: str, lines) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        for ln in lines:
            print(ln)


def cmd_analyze(args) -> int:
    g = parse_group(args.spec)
    payload = analysis_payload(g, kinds=(args.graph,))
    if args.dot:
        f = facts_for(g)
        with open(args.dot, "w") as fh:
            fh.write(dot_payload(f.graph(args.graph), labeler=f.label))
    gp = payload["graphs"][args.graph]
    lines = [
        f"{payload['group']['name']}  order {payload['group']['order']}",
        "sizes: " + "  ".join(f"{k}={v}" for k, v in payload["sizes"].items()),
        f"univ_is_subgroup: {payload['univ_is_subgroup']}",
        f"kind: {payload['classification']['kind']}",
        f"{args.graph}: vertices={gp['vertices']} edges={gp['edges']}"
        f" scc={gp['scc_count']} diameter={gp['diameter']}"
        f" complete(directed)={gp['complete_directed']}"
        f" complete(undirected)={gp['complete_undirected']}",
        f"scc sizes {gp['scc_sizes']} diameters {gp['scc_diameters']}",
    ]
    _emit(payload, args.format, lines)
    return 0


def _coverage_lines() -> list[str]:
    out = ["statement coverage:"]
    for row in checks.coverage_rows():
        ids = ", ".join(row["checks"]) if row["checks"] else "-"
        out.append(f"  [{row['status']}] {row['statement']}  ({ids})")
    return out


def cmd_verify(args) -> int:
    groups = []
    if args.catalog == "builtin":
        groups.extend(builders.catalog())
    for spec in args.group or ():
        groups.append(parse_group(spec))
    if not groups:
        raise SpecError("verify needs --catalog builtin and/or --group SPEC")
    cfg = checks.SuiteConfig(heavy_order_cap=args.heavy_cap)
    results = checks.run_suite(groups, checks.REGISTRY, cfg)
    summary = checks.summarize(results)
    payload = {
        "suite": args.suite,
        "groups": [g.name for g in groups],
        "summary": summary,
        "results": [
            {
                "check": r.check_id,
                "group": r.group,
                "verdict": r.verdict,
                "witness": r.witness,
            }
            for r in results
        ],
        "coverage": checks.coverage_rows(),
    }
    per: dict[str, dict[str, int]] = {}
    for r in results:
        per.setdefault(r.check_id, {}).setdefault(r.verdict, 0)
        per[r.check_id][r.verdict] += 1
    lines = [f"suite {args.suite}: {len(groups)} groups, {summary['total']} check runs"]
    for cid in sorted(per):
        cnt = per[cid]
        lines.append(
            f"  {cid:45} pass={cnt.get('pass', 0):<4} n/a={cnt.get('n/a', 0):<4}"
            f" fail={cnt.get('fail', 0):<3} error={cnt.get('error', 0)}"
        )
    for bad in summary["failures"]:
        lines.append(f"  FAILED {bad['check']} on {bad['group']}: {bad['witness']}")
    lines.append(
        "totals: " + "  ".join(f"{k}={v}" for k, v in summary["counts"].items())
    )
    lines.extend(_coverage_lines())
    _emit(payload, args.format, lines)
    return 0 if summary["counts"]["fail"] == 0 and summary["counts"]["error"] == 0 else 1


def cmd_export_dot(args) -> int:
    g = parse_group(args.spec)
    f = facts_for(g)
    text = dot_payload(f.graph(args.graph), labeler=f.label)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


def cmd_catalog(args) -> int:
    for g in builders.catalog():
        print(f"{g.name} (order {g.order})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="normgraph",
        description="Directed normalizing graphs of finite groups.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="invariants and graph summary of one group")
    pa.add_argument("spec", help="group spec, e.g. S4, C:12, prod(S3,S3), file:g.json")
    pa.add_argument("--graph", choices=GRAPH_KINDS, default="delta")
    pa.add_argument("--format", choices=("json", "text"), default="json")
    pa.add_argument("--dot", metavar="PATH", help="also write the graph as DOT")
    pa.set_defaults(func=cmd_analyze)

    pv = sub.add_parser("verify", help="run the statement checks")
    pv.add_argument("--suite", choices=("paper",), default="paper")
    pv.add_argument("--catalog", choices=("builtin",), default=None)
    pv.add_argument("--group", action="append", metavar="SPEC")
    pv.add_argument("--heavy-cap", type=int, default=checks.SuiteConfig().heavy_order_cap)
    pv.add_argument("--format", choices=("json", "text"), default="text")
    pv.set_defaults(func=cmd_verify)

    pe = sub.add_parser("export-dot", help="write one graph in DOT format")
    pe.add_argument("spec")
    pe.add_argument("--graph", choices=GRAPH_KINDS, default="delta")
    pe.add_argument("--out", default="-", help="output path, - for stdout")
    pe.set_defaults(func=cmd_export_dot)

    pc = sub.add_parser("catalog", help="list the built-in groups")
    pc.add_argument("action", nargs="?", choices=("list",), default="list")
    pc.set_defaults(func=cmd_catalog)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
