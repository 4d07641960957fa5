"""Command line interface.

Exit codes: 0 success / holds / found, 1 not found / violated (an expected
negative), 2 usage or input error, 3 search budget exhausted, 4 refutation
event.  The TBL_BUDGET environment variable overrides the default search
budget wherever --budget is not given.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath

from . import digraph as dg
from . import metrics
from .connectivity import cut_vertices_ordered, internally_disjoint_paths
from .errors import (
    BadParams,
    BudgetExceeded,
    CapExceeded,
    DuplicateArc,
    Infeasible,
    NoCycle,
    NotOnCycle,
    NotPresent,
    OutOfRange,
    ParseError,
    PreconditionFailed,
    SelfLoop,
    Unreachable,
)
from .generators import complete_biorientation, random_girth_constrained, ring_of_cycles
from .harness import explore_gap, verify_construction, verify_theorem
from .probe import VIOLATED, probe_claims
from .subdivision import budget_from_env, find_subdivision

_INPUT_ERRORS = (
    ParseError,
    OutOfRange,
    SelfLoop,
    DuplicateArc,
    NotPresent,
    NotOnCycle,
    BadParams,
    PreconditionFailed,
    FileNotFoundError,
    IsADirectoryError,
)


def _load(path: str) -> dg.Digraph:
    return dg.parse_digraph(FsPath(path).read_text())


def _emit(data) -> None:
    print(json.dumps(data, indent=2))


def _fmt(value) -> str:
    return "inf" if value is metrics.INFINITE else str(value)


def _cmd_girth(args) -> int:
    g = metrics.girth(_load(args.file))
    print(_fmt(g))
    return 0 if g is not metrics.INFINITE else 1


def _cmd_distance(args) -> int:
    d = metrics.distance(_load(args.file), args.u, args.v)
    print(_fmt(d))
    return 0 if d is not metrics.INFINITE else 1


def _cmd_scc(args) -> int:
    con = dg.condensation(_load(args.file))
    _emit(
        {
            "components": [list(c) for c in con.components],
            "strongly_connected": con.is_strongly_connected,
            "sink": list(con.sink_component),
        }
    )
    return 0


def _cmd_menger(args) -> int:
    count, paths = internally_disjoint_paths(_load(args.file), args.s, args.t)
    _emit({"count": count, "paths": [list(p.vertices) for p in paths]})
    return 0


def _cmd_cutverts(args) -> int:
    chain = cut_vertices_ordered(_load(args.file), args.s, args.t)
    _emit(list(chain))
    return 0


def _cmd_find(args) -> int:
    budget = args.budget if args.budget is not None else budget_from_env()
    ell = args.l if args.l is not None else args.k
    witness = find_subdivision(_load(args.file), args.k, ell, budget_limit=budget)
    if witness is None:
        print("none")
        return 1
    _emit(witness.to_json_dict())
    return 0


def _parse_choices(tokens: list[str] | None) -> list[tuple[int, int]] | None:
    if not tokens:
        return None
    pairs = []
    for token in tokens:
        parts = token.split(",")
        if len(parts) != 2:
            raise BadParams(f"choices look like P,Q; got {token!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return pairs


def _cmd_gen(args) -> int:
    if args.family == "dk":
        pairs = _parse_choices(args.choices)
        D = ring_of_cycles(args.k, pairs[0] if pairs and len(pairs) == 1 else pairs)
    elif args.family == "biorient":
        D = complete_biorientation(args.n)
    else:
        D = random_girth_constrained(
            args.n, args.g, min_outdeg=args.min_outdeg, seed=args.seed
        )
    sys.stdout.write(dg.serialize(D))
    return 0


def _cmd_verify_theorem(args) -> int:
    report = verify_theorem(
        k=args.k,
        trials=args.trials,
        nmin=args.nmin,
        nmax=args.nmax,
        seed=args.seed,
        root=args.root,
        budget=budget_from_env(),
    )
    sys.stdout.write(report.to_json())
    return 4 if report.summary["refutations"] else 0


def _cmd_verify_construction(args) -> int:
    report = verify_construction(args.k, all_choices=args.all_choices, budget=budget_from_env())
    sys.stdout.write(report.to_json())
    return 4 if report.summary["failed_choices"] else 0


def _cmd_explore_gap(args) -> int:
    report = explore_gap(
        k=args.k,
        target_girth=args.g,
        budget=args.budget,
        seed=args.seed,
        out_dir=args.out,
        finder_budget=budget_from_env(),
    )
    sys.stdout.write(report.to_json())
    return 0 if report.summary["certified"] else 1


def _cmd_probe(args) -> int:
    D = _load(args.file)
    C, _ = metrics.max_rho_isometric_cycle(D)
    arc = tuple(args.arc) if args.arc else None
    reports = probe_claims(D, C, args.k, arc=arc, root=args.root)
    _emit([r.to_json_dict() for r in reports])
    return 1 if any(r.status == VIOLATED for r in reports) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoblock",
        description="Digraph search and certification around two-block cycle subdivisions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("girth", help="shortest cycle length, or inf")
    p.add_argument("file")
    p.set_defaults(run=_cmd_girth)

    p = sub.add_parser("distance", help="BFS distance between two vertices")
    p.add_argument("file")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.set_defaults(run=_cmd_distance)

    p = sub.add_parser("scc", help="strongly connected components in topological order")
    p.add_argument("file")
    p.set_defaults(run=_cmd_scc)

    p = sub.add_parser("menger", help="max internally disjoint path family")
    p.add_argument("file")
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(run=_cmd_menger)

    p = sub.add_parser("cutverts", help="ordered cut vertices between two vertices")
    p.add_argument("file")
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(run=_cmd_cutverts)

    p = sub.add_parser("find", help="search for a two-block (k, l) subdivision")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-l", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(run=_cmd_find)

    p = sub.add_parser("gen", help="emit a generated digraph as an arc list")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("dk", help="ring of cycles with girth k and min out-degree 2")
    q.add_argument("-k", type=int, required=True)
    q.add_argument("--choices", nargs="*", default=None, metavar="P,Q")
    q.set_defaults(run=_cmd_gen)
    q = fam.add_parser("biorient", help="complete biorientation of n vertices")
    q.add_argument("-n", type=int, required=True)
    q.set_defaults(run=_cmd_gen)
    q = fam.add_parser("random", help="random digraph with a girth floor")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("-g", type=int, required=True)
    q.add_argument("--min-outdeg", type=int, default=2, dest="min_outdeg")
    q.add_argument("--seed", type=int, required=True)
    q.set_defaults(run=_cmd_gen)

    p = sub.add_parser(
        "verify-theorem",
        help="randomized check that high girth and out-degree 2 force a witness",
    )
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--nmin", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--root", type=int, default=None)
    p.set_defaults(run=_cmd_verify_theorem)

    p = sub.add_parser(
        "verify-construction", help="certify the ring-of-cycles lower bound family"
    )
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--all-choices", action="store_true", dest="all_choices")
    p.set_defaults(run=_cmd_verify_construction)

    p = sub.add_parser("explore-gap", help="search for high-girth witness-free digraphs")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-g", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(run=_cmd_explore_gap)

    p = sub.add_parser("probe", help="evaluate the window claims on one input")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--arc", type=int, nargs=2, default=None, metavar=("U", "V"))
    p.add_argument("--root", type=int, default=None)
    p.set_defaults(run=_cmd_probe)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (BudgetExceeded, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (Unreachable, Infeasible, NoCycle) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
