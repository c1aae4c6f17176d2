"""Command-line interface: element parsing, DOT/JSON export, and the driver.

Subcommands:

- ``wset``: print the W-set of an element, one permutation per line or JSON;
- ``chains``: enumerate (or just count) the labeled maximal chains from the
  bottom element up to a given element;
- ``hasse``: print a whole poset as DOT (default) or JSON;
- ``verify``: rebuild every poset up to a size cap, check gradedness, and
  check that the direct W-set of every element agrees with the chain oracle;
- ``rank``: print the rank of an element.

Element grammar: a sequence of cycles "(a,b)" and, for clans, signed
vertices "(v+)" or "(v-)"; whitespace is ignored.  Involutions leave fixed
points implicit, so they need an explicit --n; "id" names the involution
with no two-cycles.  Clan text must mention every vertex, so n is inferred.

Exit codes: 0 success, 1 verification failure, 2 malformed input or bad
arguments.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .involutions import (
    Clan,
    FpfInvolution,
    Involution,
    rank_clan,
    rank_fpf,
    rank_involution,
)
from .matchings import CoverType
from .posets import (
    FAMILIES,
    Element,
    WeakOrderPoset,
    build_poset,
    count_maximal_chains,
    maximal_chains,
    verify_graded,
)
from .wsets import wset_direct, wset_oracle

__all__ = ["parse_element", "export_dot", "export_json", "run", "main"]

_CYCLE = re.compile(r"\((\d+),(\d+)\)|\((\d+)([+-])\)")


def parse_element(text: str, family: str, n: "int | None" = None) -> Element:
    """Parse cycle/sign notation into an element of the named family.

    >>> parse_element("(1,4)(2,3)", "involution", n=4).cycles
    ((1, 4), (2, 3))
    >>> parse_element("(1,6)(2,3)(4+)(5-)(7+)", "clan").text()
    '(1,6)(2,3)(4+)(5-)(7+)'
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty element text")
    pairs: list[tuple[int, int]] = []
    signs: dict[int, int] = {}
    seen: set[int] = set()
    if compact == "id":
        if family != "involution":
            raise ValueError(
                "'id' names the involution with no two-cycles; "
                "spell the element out for this family"
            )
    else:
        at = 0
        while at < len(compact):
            got = _CYCLE.match(compact, at)
            if got is None:
                raise ValueError(
                    f"malformed element text {text!r} near {compact[at:at + 12]!r}"
                )
            if got.group(1) is not None:
                a, b = int(got.group(1)), int(got.group(2))
                if a == b:
                    raise ValueError(f"cycle ({a},{b}) repeats vertex {a}")
                fresh = (a, b)
                pairs.append((a, b))
            else:
                v = int(got.group(3))
                fresh = (v,)
                signs[v] = 1 if got.group(4) == "+" else -1
            for v in fresh:
                if v in seen:
                    raise ValueError(f"vertex {v} appears more than once in {text!r}")
                seen.add(v)
            at = got.end()
    if signs and family != "clan":
        raise ValueError(f"signed vertices {sorted(signs)} are only valid for clans")
    if family == "involution":
        if n is None:
            raise ValueError("n is required for involutions: fixed points are implicit")
    elif n is None:
        n = max(seen, default=0)
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    bad = sorted(v for v in seen if not 1 <= v <= n)
    if bad:
        raise ValueError(f"vertex {bad[0]} out of range 1..{n}")
    if family == "involution":
        return Involution.from_cycles(n, pairs)
    if family == "fpf":
        return FpfInvolution.from_cycles(n, pairs)
    missing = [v for v in range(1, n + 1) if v not in seen]
    if missing:
        raise ValueError(
            f"clan text must mention every vertex of 1..{n}; missing {missing}"
        )
    return Clan.from_parts(n, pairs, signs)


def _describe(family: str, param: "int | tuple[int, int]") -> str:
    if family == "clan":
        p, q = param
        return f"clan (p,q)=({p},{q})"
    return f"{family} n={param}"


def export_dot(P: WeakOrderPoset) -> str:
    """Graphviz text for the Hasse diagram, deterministic byte for byte.

    Nodes are numbered in (rank, text) order and labeled with the canonical
    text; each cover is one edge labeled by its comma-joined label set, with
    attach edges (type II) drawn bold.
    """
    lines = [
        "digraph {",
        "  rankdir=BT;",
        f'  label="{_describe(P.family, P.param)}";',
        "  node [shape=plaintext];",
    ]
    for j, e in enumerate(P.elements):
        lines.append(f'  {j} [label="{e.text()}"];')
    for e in P.edges:
        attrs = ['label="' + ",".join(str(i) for i in e.labels) + '"']
        if all(t is CoverType.II for t in e.types):
            attrs.append("style=bold")
        lines.append(f"  {e.lo} -> {e.hi} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(P: WeakOrderPoset) -> str:
    """JSON dump of the poset: elements with ids and ranks, labeled edges."""
    if P.family == "clan":
        params: dict[str, int] = {"p": P.param[0], "q": P.param[1]}
    else:
        params = {"n": P.param}
    payload = {
        "family": P.family,
        "params": params,
        "elements": [
            {"id": j, "text": e.text(), "rank": P.ranks[j]}
            for j, e in enumerate(P.elements)
        ],
        "edges": [
            {
                "lo": e.lo,
                "hi": e.hi,
                "labels": list(e.labels),
                "types": [str(t) for t in e.types],
            }
            for e in P.edges
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _rank_of(family: str, x: Element) -> int:
    if family == "involution":
        return rank_involution(x)
    if family == "fpf":
        return rank_fpf(x)
    return rank_clan(x)


def _param_of(family: str, x: Element) -> "int | tuple[int, int]":
    return (x.p, x.q) if family == "clan" else x.n


def _element_from_args(args: argparse.Namespace) -> Element:
    if args.family != "clan" and (args.p is not None or args.q is not None):
        raise ValueError("--p/--q only apply to clans")
    x = parse_element(args.element, args.family, n=args.n)
    if args.family == "clan":
        if (args.p is None) != (args.q is None):
            raise ValueError("give both --p and --q or neither")
        if args.p is not None and (x.p, x.q) != (args.p, args.q):
            raise ValueError(
                f"element {x.text()} has signature ({x.p},{x.q}), "
                f"flags say ({args.p},{args.q})"
            )
    return x


def _param_from_flags(args: argparse.Namespace) -> "int | tuple[int, int]":
    if args.family == "clan":
        if args.p is None or args.q is None:
            raise ValueError("clan posets need --p and --q")
        if args.n is not None and args.n != args.p + args.q:
            raise ValueError(f"--n {args.n} disagrees with p+q={args.p + args.q}")
        return (args.p, args.q)
    if args.p is not None or args.q is not None:
        raise ValueError("--p/--q only apply to clans")
    if args.n is None:
        raise ValueError(f"{args.family} posets need --n")
    return args.n


def _cmd_wset(args: argparse.Namespace) -> int:
    x = _element_from_args(args)
    if args.compact and x.n > 9:
        raise ValueError("--compact digit form is only defined for n <= 9")
    ws = wset_direct(args.family, x)
    if args.json:
        payload = {
            "family": args.family,
            "element": x.text(),
            "rank": ws.rank,
            "members": [list(w.word) for w in ws.members],
        }
        print(json.dumps(payload, indent=2))
    else:
        for w in ws.members:
            print(w.as_text(compact=args.compact))
    return 0


def _cmd_chains(args: argparse.Namespace) -> int:
    x = _element_from_args(args)
    P = build_poset(args.family, _param_of(args.family, x))
    if args.count:
        total = count_maximal_chains(P, x)
        print(json.dumps({"element": x.text(), "count": total}) if args.json else total)
        return 0
    if args.json:
        payload = {
            "element": x.text(),
            "count": count_maximal_chains(P, x),
            "chains": [list(c.labels) for c in maximal_chains(P, x)],
        }
        print(json.dumps(payload, indent=2))
    else:
        for c in maximal_chains(P, x):
            print(",".join(str(i) for i in c.labels))
    return 0


def _cmd_hasse(args: argparse.Namespace) -> int:
    P = build_poset(args.family, _param_from_flags(args))
    sys.stdout.write(export_json(P) if args.json else export_dot(P))
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    x = _element_from_args(args)
    r = _rank_of(args.family, x)
    if args.json:
        print(json.dumps({"element": x.text(), "rank": r}))
    else:
        print(r)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    jobs: list[tuple[str, "int | tuple[int, int]"]] = []
    families = FAMILIES if args.family == "all" else (args.family,)
    for fam in families:
        if fam == "involution":
            cap = args.n if args.n is not None else 6
            jobs += [(fam, n) for n in range(1, cap + 1)]
        elif fam == "fpf":
            cap = args.n if args.n is not None else 8
            jobs += [(fam, n) for n in range(2, cap + 1, 2)]
        else:
            cap = args.n if args.n is not None else 6
            jobs += [
                (fam, (p, total - p))
                for total in range(2, cap + 1)
                for p in range(1, total)
            ]
    failures: list[str] = []
    for fam, param in jobs:
        P = build_poset(fam, param)
        report = verify_graded(P)
        for v in report.violations:
            failures.append(f"{_describe(fam, param)}: {v}")
        agree = 0
        for x in P.elements:
            if wset_direct(fam, x).members == wset_oracle(P, x).members:
                agree += 1
            else:
                failures.append(f"{_describe(fam, param)}: W-set mismatch at {x.text()}")
        status = "ok" if report.ok and agree == len(P.elements) else "FAIL"
        print(
            f"{_describe(fam, param)}: {len(P.elements)} elements, "
            f"{len(P.edges)} edges, {agree}/{len(P.elements)} W-sets agree [{status}]"
        )
    for line in failures:
        print(f"verification failure: {line}", file=sys.stderr)
    return 1 if failures else 0


def _add_element_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--element", required=True, help="cycle/sign notation, e.g. (1,4)(2,3)")
    _add_size_args(sp)


def _add_size_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--n", type=int, help="ambient size (required for involutions)")
    sp.add_argument("--p", type=int, help="clan signature, plus part")
    sp.add_argument("--q", type=int, help="clan signature, minus part")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weakorder",
        description="Weak order posets on involutions, their chains and W-sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fam = {"choices": ["inv", "involution", "fpf", "clan"], "required": True}

    sp = sub.add_parser("wset", help="print the W-set of an element")
    sp.add_argument("--family", **fam)
    _add_element_args(sp)
    sp.add_argument("--compact", action="store_true", help="digit form when n <= 9")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=_cmd_wset)

    sp = sub.add_parser("chains", help="labeled maximal chains up to an element")
    sp.add_argument("--family", **fam)
    _add_element_args(sp)
    sp.add_argument("--count", action="store_true", help="print only the chain count")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=_cmd_chains)

    sp = sub.add_parser("hasse", help="export a whole poset as DOT or JSON")
    sp.add_argument("--family", **fam)
    _add_size_args(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=_cmd_hasse)

    sp = sub.add_parser("verify", help="gradedness and W-set oracle checks")
    sp.add_argument(
        "--family", choices=["inv", "involution", "fpf", "clan", "all"], default="all"
    )
    sp.add_argument("--n", type=int, help="size cap (p+q for clans)")
    sp.set_defaults(handler=_cmd_verify)

    sp = sub.add_parser("rank", help="print the rank of an element")
    sp.add_argument("--family", **fam)
    _add_element_args(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=_cmd_rank)

    return parser


def run(argv: "list[str] | None" = None) -> int:
    """Parse argv and run one subcommand; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code or 0)
    if args.family == "inv":
        args.family = "involution"
    try:
        return args.handler(args)
    except ValueError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
