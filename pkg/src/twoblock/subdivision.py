"""Exact search for subdivisions of two-block cycles.

A two-block cycle with parameters (k, l) consists of two internally
disjoint directed paths of lengths k and l from a source to a sink.  A
subdivision of it in a digraph D is therefore a pair of internally
disjoint s->t paths, one of length >= k and one of length >= l, that are
not the same single arc.

The finder is complete: for every candidate pair (s, t) that admits two
internally disjoint paths at all, it enumerates first paths of sufficient
length and asks for a second path in the residual digraph.  Exhaustive
search is kept honest by a node-expansion budget; running out raises
BudgetExceeded, which callers must report separately from "none".
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .digraph import Digraph
from .errors import BadParams, BudgetExceeded
from .metrics import (
    INFINITE,
    Path,
    all_pairs_distances,
    girth,
    reachable_set,
    shortest_path,
)
from .connectivity import internally_disjoint_paths

DEFAULT_BUDGET = 10**8
BUDGET_ENV_VAR = "TBL_BUDGET"


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    """Search budget, honoring the TBL_BUDGET environment override."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise BadParams(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise BadParams(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


class Budget:
    """A mutable node-expansion allowance shared across one search."""

    __slots__ = ("remaining",)

    def __init__(self, limit: int):
        self.remaining = limit

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise BudgetExceeded("search budget exhausted")


@dataclass(frozen=True)
class SubdivisionWitness:
    """Two internally disjoint s->t paths covering lengths k and l."""

    s: int
    t: int
    p1: Path
    p2: Path
    k: int
    ell: int

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "p1": list(self.p1.vertices),
            "p2": list(self.p2.vertices),
            "k": self.k,
            "l": self.ell,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> SubdivisionWitness:
        return cls(
            s=data["s"],
            t=data["t"],
            p1=Path(tuple(data["p1"])),
            p2=Path(tuple(data["p2"])),
            k=data["k"],
            ell=data["l"],
        )


def verify_witness(D: Digraph, w: SubdivisionWitness) -> bool:
    """Re-check every witness requirement from scratch; never raises."""
    try:
        if w.s == w.t or w.k < 1 or w.ell < 1:
            return False
        for p in (w.p1, w.p2):
            if p.init != w.s or p.term != w.t or not p.is_valid_in(D):
                return False
        if w.p1 == w.p2:
            return False
        if set(w.p1.vertices) & set(w.p2.vertices) != {w.s, w.t}:
            return False
        a, b = w.p1.length, w.p2.length
        return (a >= w.k and b >= w.ell) or (a >= w.ell and b >= w.k)
    except Exception:
        return False


def exists_path_min_length(
    D: Digraph,
    s: int,
    t: int,
    min_len: int,
    forbidden: frozenset[int] | set[int] = frozenset(),
    budget: Budget | None = None,
) -> Path | None:
    """Some simple s->t path of length >= min_len avoiding forbidden, or None.

    Cheap cases first: if even the shortest surviving path is long enough it
    is returned outright.  Otherwise a depth-first search runs with two
    prunes: branches from which t is unreachable die, and so do branches
    whose remaining reachable pool cannot stretch the path to min_len.
    """
    if s == t:
        raise BadParams("path endpoints must differ")
    if s in forbidden or t in forbidden:
        return None
    if budget is None:
        budget = Budget(DEFAULT_BUDGET)
    blocked = frozenset(forbidden)
    quick = shortest_path(D, s, t, blocked=blocked)
    if quick is None:
        return None
    if quick.length >= min_len:
        return quick

    path = [s]
    on_path = {s}

    def dfs(v: int) -> Path | None:
        budget.spend()
        pool = reachable_set(D, v, blocked=blocked | (on_path - {v}))
        if t not in pool:
            return None
        if len(path) - 1 + len(pool) - 1 < min_len:
            return None
        neighbors = [w for w in D.out_adj[v] if w != t] + ([t] if t in D.out_adj[v] else [])
        for w in neighbors:
            if w in blocked or w in on_path:
                continue
            if w == t:
                if len(path) >= min_len:
                    return Path(tuple(path) + (t,))
                continue
            path.append(w)
            on_path.add(w)
            found = dfs(w)
            if found is not None:
                return found
            path.pop()
            on_path.discard(w)
        return None

    return dfs(s)


def _iter_paths_min_length(D: Digraph, s: int, t: int, min_len: int, budget: Budget):
    """Yield every simple s->t path of length >= min_len.

    Extensions that stay away from t come first, so long paths surface
    early; that tends to leave a thinner residual digraph for the partner
    path and finds witnesses sooner in dense inputs.
    """
    path = [s]
    on_path = {s}

    def dfs(v: int):
        budget.spend()
        pool = reachable_set(D, v, blocked=on_path - {v})
        if t not in pool:
            return
        if len(path) - 1 + len(pool) - 1 < min_len:
            return
        for w in [w for w in D.out_adj[v] if w != t] + ([t] if t in D.out_adj[v] else []):
            if w in on_path:
                continue
            if w == t:
                if len(path) >= min_len:
                    yield Path(tuple(path) + (t,))
                continue
            path.append(w)
            on_path.add(w)
            yield from dfs(w)
            path.pop()
            on_path.discard(w)

    yield from dfs(s)


def find_subdivision(
    D: Digraph, k: int, ell: int, budget_limit: int | None = None
) -> SubdivisionWitness | None:
    """A verified two-block witness with parameters (k, l), or None.

    Candidate endpoint pairs are ranked by their internally-disjoint path
    count, densest first.  For each pair the search enumerates first paths
    of length >= k and asks the residual digraph for a partner of length
    >= l, then retries with the roles swapped.
    """
    if k < 1 or ell < 1:
        raise BadParams(f"block lengths must be positive, got ({k}, {ell})")
    if D.n < k + ell:
        return None  # a witness needs k + l distinct vertices
    budget = Budget(DEFAULT_BUDGET if budget_limit is None else budget_limit)

    quick = girth_shortcut(D, k, ell)
    if quick is not None:
        return quick

    ranked = []
    for s in range(D.n):
        for t in range(D.n):
            if s == t:
                continue
            count, _ = internally_disjoint_paths(D, s, t)
            if count >= 2:
                ranked.append((-count, s, t))
    ranked.sort()

    role_orders = [(k, ell)] if k == ell else [(k, ell), (ell, k)]
    for _, s, t in ranked:
        for first_len, second_len in role_orders:
            for p1 in _iter_paths_min_length(D, s, t, first_len, budget):
                need = second_len if p1.length > 1 else max(second_len, 2)
                p2 = exists_path_min_length(
                    D, s, t, need, forbidden=p1.interior, budget=budget
                )
                if p2 is None:
                    continue
                if first_len == k:
                    witness = SubdivisionWitness(s, t, p1, p2, k, ell)
                else:
                    witness = SubdivisionWitness(s, t, p2, p1, k, ell)
                assert verify_witness(D, witness)
                return witness
    return None


def girth_shortcut(D: Digraph, k: int, ell: int) -> SubdivisionWitness | None:
    """Sound but incomplete fast path.

    Any s->t path closes into a cycle through a shortest t->s return of
    length d, so every s->t path has length >= girth - d.  Whenever that
    slack covers max(k, l) and two internally disjoint s->t paths exist,
    those two paths already witness the subdivision.
    """
    g = girth(D)
    if g == INFINITE:
        return None
    dist = all_pairs_distances(D)
    need = max(k, ell)
    for t in range(D.n):
        for s in range(D.n):
            if s == t:
                continue
            d = dist[t][s]
            if d == INFINITE or g - d < need:
                continue
            count, paths = internally_disjoint_paths(D, s, t)
            if count >= 2:
                witness = SubdivisionWitness(s, t, paths[0], paths[1], k, ell)
                if verify_witness(D, witness):
                    return witness
    return None


def brute_oracle(D: Digraph, k: int, ell: int) -> bool:
    """Reference decision by plain enumeration of all path pairs.

    No pruning, no budget, no shortcut: for every ordered endpoint pair,
    list every simple path and test every pair of them.  Only suitable for
    small digraphs; exists to cross-check the finder.
    """
    if k < 1 or ell < 1:
        raise BadParams(f"block lengths must be positive, got ({k}, {ell})")

    def all_paths(s: int, t: int) -> list[tuple[int, ...]]:
        found = []

        def walk(v: int, path: tuple[int, ...]) -> None:
            if v == t:
                found.append(path)
                return
            for w in D.out_adj[v]:
                if w not in path:
                    walk(w, path + (w,))

        walk(s, (s,))
        return found

    lo = min(k, ell)
    for s in range(D.n):
        for t in range(D.n):
            if s == t:
                continue
            paths = [p for p in all_paths(s, t) if len(p) - 1 >= lo]
            sets = [set(p) for p in paths]
            ends = {s, t}
            for i, p1 in enumerate(paths):
                len1 = len(p1) - 1
                for j, p2 in enumerate(paths):
                    if i == j:
                        continue
                    len2 = len(p2) - 1
                    if not ((len1 >= k and len2 >= ell) or (len1 >= ell and len2 >= k)):
                        continue
                    if sets[i] & sets[j] == ends:
                        return True
    return False
