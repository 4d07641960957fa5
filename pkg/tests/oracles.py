"""Independent brute-force reference implementations for tests.

Everything here is deliberately naive and shares no code with the package
algorithms: reachability runs as a fixpoint sweep instead of BFS, weak
components use union-find, path and cycle enumeration recurse without any
pruning.  Expected values in the test suite marked as derived were frozen
from these.
"""

from __future__ import annotations

import random
from itertools import combinations

from twoblock import Digraph, build


def all_paths(D: Digraph, s: int, t: int) -> list[tuple[int, ...]]:
    """Every simple s->t path by plain recursion."""
    found: list[tuple[int, ...]] = []

    def walk(v: int, path: tuple[int, ...]) -> None:
        if v == t:
            found.append(path)
            return
        for w in D.out(v):
            if w not in path:
                walk(w, path + (w,))

    walk(s, (s,))
    return found


def all_cycles(D: Digraph) -> list[tuple[int, ...]]:
    """Every simple cycle, canonically rotated to start at its minimum."""
    found: list[tuple[int, ...]] = []

    def walk(root: int, v: int, path: tuple[int, ...]) -> None:
        for w in D.out(v):
            if w == root and len(path) >= 2:
                found.append(path)
            elif w > root and w not in path:
                walk(root, w, path + (w,))

    for root in range(D.n):
        walk(root, root, (root,))
    return found


def brute_girth(D: Digraph) -> float:
    lengths = [len(c) for c in all_cycles(D)]
    return min(lengths) if lengths else float("inf")


def reachable_fixpoint(D: Digraph, src: int, removed: set[int] = frozenset()) -> set[int]:
    """Closure by sweeping all arcs until nothing changes."""
    if src in removed:
        return set()
    reach = {src}
    changed = True
    while changed:
        changed = False
        for u, v in D.arcs:
            if u in reach and v not in reach and v not in removed:
                reach.add(v)
                changed = True
    return reach


def brute_distance(D: Digraph, s: int, t: int, removed: set[int] = frozenset()) -> float:
    """Shortest path length as the minimum over all enumerated paths."""
    if s in removed or t in removed:
        return float("inf")
    best = float("inf")

    def walk(v: int, path: tuple[int, ...]) -> None:
        nonlocal best
        if len(path) - 1 >= best:
            return
        if v == t:
            best = len(path) - 1
            return
        for w in D.out(v):
            if w not in path and w not in removed:
                walk(w, path + (w,))

    walk(s, (s,))
    return best


def weak_components_union_find(D: Digraph, removed: set[int]) -> list[set[int]]:
    alive = [v for v in range(D.n) if v not in removed]
    parent = {v: v for v in alive}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in D.arcs:
        if u in parent and v in parent:
            parent[find(u)] = find(v)
    groups: dict[int, set[int]] = {}
    for v in alive:
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def brute_rho(D: Digraph, cycle_vertices: set[int]) -> int:
    comps = weak_components_union_find(D, cycle_vertices)
    return max((len(c) for c in comps), default=0)


def max_disjoint_family(D: Digraph, s: int, t: int) -> int:
    """Largest set of pairwise internally disjoint s->t paths, by
    backtracking over the full path list."""
    paths = all_paths(D, s, t)
    interiors = [set(p) - {s, t} for p in paths]
    best = 0

    def extend(start: int, used: set[int], size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(paths) - start) <= best:
            return
        for i in range(start, len(paths)):
            if not (interiors[i] & used):
                extend(i + 1, used | interiors[i], size + 1)

    extend(0, set(), 0)
    return best


def min_internal_cut(D: Digraph, s: int, t: int) -> int | None:
    """Smallest vertex set (avoiding s, t) meeting every s->t path.

    None when a direct arc makes separation impossible.  Included to check
    the Menger duality on small instances."""
    if not all_paths(D, s, t):
        return 0
    if (s, t) in D.arcs:
        return None
    others = [v for v in range(D.n) if v not in (s, t)]
    for size in range(len(others) + 1):
        for cut in combinations(others, size):
            if all(set(cut) & set(p) for p in all_paths(D, s, t)):
                return size
    return len(others)


def is_two_block_witness_pair(
    p1: tuple[int, ...], p2: tuple[int, ...], k: int, ell: int
) -> bool:
    if p1 == p2 or p1[0] != p2[0] or p1[-1] != p2[-1]:
        return False
    if set(p1) & set(p2) != {p1[0], p1[-1]}:
        return False
    a, b = len(p1) - 1, len(p2) - 1
    return (a >= k and b >= ell) or (a >= ell and b >= k)


def random_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return build(n, arcs)


def random_strong_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    """Random arcs over a hamiltonian backbone, so always strongly connected."""
    arcs = {(v, (v + 1) % n) for v in range(n)}
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                arcs.add((u, v))
    return build(n, sorted(arcs))
