"""Internally disjoint paths, ordered cut vertices, and cut windows.

The Menger count is computed as a unit-capacity max flow after splitting
every vertex into an in-copy and an out-copy, so vertex capacities become
arc capacities.  Cut vertices of an ordered pair are exactly the vertices
whose removal kills all paths; they lie on every path and are therefore
linearly ordered by distance from the source.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .digraph import Arc, Digraph
from .errors import BadParams, NoCutVertex, NotOnCycle, NoWindow, Unreachable
from .metrics import (
    INFINITE,
    Cycle,
    Path,
    bfs_distances,
    bfs_distances_rev,
    is_isometric,
)


def internally_disjoint_paths(D: Digraph, s: int, t: int) -> tuple[int, list[Path]]:
    """Largest family of s->t paths sharing only the endpoints, with witnesses.

    Returns (0, []) when t is unreachable.  A direct arc s->t counts as one
    path of the family.
    """
    if s == t:
        raise BadParams("endpoints of a disjoint path family must differ")
    # Flow node 2v is the in-copy of v, 2v+1 its out-copy.
    source, sink = 2 * s + 1, 2 * t
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * D.n)]

    def add_edge(a: int, b: int, c: int) -> None:
        cap[(a, b)] = c
        cap[(b, a)] = cap.get((b, a), 0)
        adj[a].append(b)
        adj[b].append(a)

    for v in range(D.n):
        add_edge(2 * v, 2 * v + 1, D.n if v in (s, t) else 1)
    for a in D.sorted_arcs():
        add_edge(2 * a.tail + 1, 2 * a.head, 1)

    flow: dict[tuple[int, int], int] = {e: 0 for e in cap}
    count = 0
    while True:
        parent: dict[int, int] = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y in adj[x]:
                if y not in parent and cap[(x, y)] - flow[(x, y)] > 0:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while y != source:
            x = parent[y]
            flow[(x, y)] += 1
            flow[(y, x)] -= 1
            y = x
        count += 1

    paths: list[Path] = []
    for _ in range(count):
        walk = [source]
        while walk[-1] != sink:
            x = walk[-1]
            nxt = next(y for y in sorted(adj[x]) if flow[(x, y)] > 0)
            flow[(x, nxt)] -= 1
            walk.append(nxt)
        verts = [s] + [node // 2 for node in walk if node % 2 == 0]
        paths.append(Path(tuple(verts)))

    _assert_internally_disjoint(D, s, t, paths)
    return count, paths


def _assert_internally_disjoint(D: Digraph, s: int, t: int, paths: list[Path]) -> None:
    seen_inner: set[int] = set()
    for p in paths:
        if p.init != s or p.term != t or not p.is_valid_in(D):
            raise AssertionError(f"flow decomposition produced a bad path {p.vertices}")
        inner = set(p.vertices) - {s, t}
        if inner & seen_inner:
            raise AssertionError("flow decomposition produced overlapping paths")
        seen_inner |= inner


def cut_vertices_ordered(D: Digraph, s: int, t: int) -> tuple[int, ...]:
    """Vertices outside {s, t} that every s->t path must visit, ordered by
    increasing distance from s.  Raises Unreachable when no path exists."""
    if s == t:
        raise BadParams("cut vertices are defined for distinct endpoints")
    dist_from_s = bfs_distances(D, s)
    if dist_from_s[t] == INFINITE:
        raise Unreachable(f"no path from {s} to {t}")
    cuts = []
    for w in range(D.n):
        if w in (s, t) or dist_from_s[w] == INFINITE:
            continue
        if bfs_distances(D, s, blocked=(w,))[t] == INFINITE:
            cuts.append(w)
    cuts.sort(key=lambda w: dist_from_s[w])
    # Cut vertices sit on every s->t path, so their distances are distinct.
    for a, b in zip(cuts, cuts[1:]):
        assert dist_from_s[a] < dist_from_s[b]
    return tuple(cuts)


@dataclass(frozen=True)
class CutWindow:
    """The distance-k window of the cut-vertex chain of an arc (a, b).

    The chain lists the (b, a)-cut vertices in order of distance from b.
    Entry i0 is the first at distance >= k from b, entry i1 the last at
    distance >= k to a; both are 1-based positions in the chain.  The
    window vertices chain[i0-1 .. i1-1] form the tilde list.
    """

    arc: Arc
    chain: tuple[int, ...]
    i0: int
    i1: int
    off_cycle: tuple[int, ...]
    dist_from_b: tuple[int, ...] = field(repr=False)
    dist_to_a: tuple[int, ...] = field(repr=False)

    @property
    def l(self) -> int:
        return len(self.chain)

    @property
    def h(self) -> int:
        return self.i1 - self.i0

    @property
    def tilde(self) -> tuple[int, ...]:
        return self.chain[self.i0 - 1 : self.i1]

    def chain_after(self, pos: int) -> int:
        """The cut vertex after 1-based position pos, or the arc tail once
        the chain is exhausted."""
        return self.chain[pos] if pos < self.l else self.arc.tail


def cut_window(D: Digraph, C: Cycle, arc: tuple[int, int], k: int) -> CutWindow:
    """Locate the window of cut vertices at distance >= k from both ends
    of the arc's return trip.

    Raises NotOnCycle when the arc is not on C, NoCutVertex when head and
    tail admit two internally disjoint return paths, and NoWindow when the
    distance thresholds select nothing (the window is empty)."""
    if k < 1:
        raise BadParams(f"window radius must be positive, got {k}")
    a, b = arc
    if Arc(a, b) not in D.arcs or C.successor(a) != b:
        raise NotOnCycle(f"({a}, {b}) is not an arc of the cycle")
    chain = cut_vertices_ordered(D, b, a)
    if not chain:
        raise NoCutVertex(f"no ({b}, {a})-cut vertex exists")
    dist_b = bfs_distances(D, b)
    dist_a = bfs_distances_rev(D, a)
    i0 = next((i for i, c in enumerate(chain, start=1) if dist_b[c] >= k), None)
    i1 = next((i for i, c in reversed(list(enumerate(chain, start=1))) if dist_a[c] >= k), None)
    if i0 is None:
        raise NoWindow(f"every cut vertex is closer than {k} to {b}")
    if i1 is None:
        raise NoWindow(f"every cut vertex is closer than {k} to {a}")
    if i0 > i1:
        raise NoWindow("the distance thresholds cross; the window is empty")
    cycle_vertices = set(C.vertices)
    return CutWindow(
        arc=Arc(a, b),
        chain=chain,
        i0=i0,
        i1=i1,
        off_cycle=tuple(c for c in chain if c not in cycle_vertices),
        dist_from_b=tuple(dist_b[c] for c in chain),
        dist_to_a=tuple(dist_a[c] for c in chain),
    )


@dataclass(frozen=True)
class CutOrderResult:
    ok: bool
    counterexample: Path | None
    exhaustive: bool
    paths_checked: int

    def __bool__(self) -> bool:
        return self.ok


def _iter_all_paths(D: Digraph, s: int, t: int) -> Iterator[tuple[int, ...]]:
    stack: list[tuple[int, ...]] = [(s,)]
    while stack:
        path = stack.pop()
        v = path[-1]
        if v == t:
            yield path
            continue
        for w in reversed(D.out_adj[v]):
            if w not in path:
                stack.append(path + (w,))


def _sample_path(D: Digraph, s: int, t: int, rng: random.Random) -> tuple[int, ...] | None:
    """One random s->t path via randomized depth-first search."""
    path = [s]
    on_path = {s}
    choices = [sorted(D.out_adj[s])]
    rng.shuffle(choices[0])
    while path:
        if path[-1] == t:
            return tuple(path)
        if choices[-1]:
            w = choices[-1].pop()
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            nxt = sorted(D.out_adj[w])
            rng.shuffle(nxt)
            choices.append(nxt)
        else:
            on_path.discard(path.pop())
            choices.pop()
    return None


def check_cut_order(
    D: Digraph,
    s: int,
    t: int,
    sample_paths: int = 1000,
    seed: int = 0,
    exhaustive_budget: int = 10**6,
) -> CutOrderResult:
    """Do all s->t paths visit the cut-vertex chain in ascending order?

    Every path is checked when there are at most exhaustive_budget of them;
    otherwise sample_paths random paths are drawn.  A path that skips a cut
    vertex or meets the chain out of order is returned as a counterexample.
    """
    chain = cut_vertices_ordered(D, s, t)
    if not chain:
        return CutOrderResult(True, None, True, 0)
    position = {c: i for i, c in enumerate(chain)}

    def violates(path: tuple[int, ...]) -> bool:
        hits = [position[v] for v in path if v in position]
        return hits != list(range(len(chain)))

    checked = 0
    for path in _iter_all_paths(D, s, t):
        checked += 1
        if checked > exhaustive_budget:
            break
        if violates(path):
            return CutOrderResult(False, Path(path), True, checked)
    else:
        return CutOrderResult(True, None, True, checked)

    rng = random.Random(seed)
    for _ in range(sample_paths):
        path = _sample_path(D, s, t, rng)
        if path is not None and violates(path):
            return CutOrderResult(False, Path(path), False, checked)
        checked += 1
    return CutOrderResult(True, None, False, checked)


def special_arc(D: Digraph, C: Cycle, k: int) -> Arc | None:
    """First arc of C (in lexicographic order) whose window starts exactly
    at distance k from the arc head.  Arcs whose window does not exist are
    skipped.  Returns None when no arc qualifies."""
    if not is_isometric(D, C):
        raise BadParams("special arc scan expects an isometric cycle")
    for arc in sorted(C.arcs()):
        try:
            window = cut_window(D, C, arc, k)
        except (NoCutVertex, NoWindow, Unreachable):
            continue
        if window.dist_from_b[window.i0 - 1] == k:
            return arc
    return None
