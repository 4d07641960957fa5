"""Distances, girth, isometric cycles and cycle neighborhood sizes.

Distances are BFS shortest path lengths counted in arcs; unreachable pairs
get math.inf.  A cycle is isometric when walking along it between any two of
its vertices is never longer than the shortest path in the whole digraph.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Collection, Iterator, Literal

from .digraph import Arc, Digraph
from .errors import BadParams, CapExceeded, NoCycle, NotOnCycle, OutOfRange

INFINITE = math.inf

Distance = int | float


@dataclass(frozen=True)
class Path:
    """A directed path given as its vertex sequence (distinct, nonempty)."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise BadParams("a path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise BadParams(f"path vertices repeat: {self.vertices}")

    @property
    def length(self) -> int:
        """Number of arcs."""
        return len(self.vertices) - 1

    @property
    def init(self) -> int:
        return self.vertices[0]

    @property
    def term(self) -> int:
        return self.vertices[-1]

    def arcs(self) -> list[Arc]:
        vs = self.vertices
        return [Arc(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    @property
    def interior(self) -> frozenset[int]:
        return frozenset(self.vertices[1:-1])

    def is_valid_in(self, D: Digraph) -> bool:
        return all(0 <= v < D.n for v in self.vertices) and all(
            a in D.arcs for a in self.arcs()
        )


@dataclass(frozen=True)
class Cycle:
    """A directed cycle as a cyclic vertex sequence (distinct, >= 2)."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 2:
            raise BadParams("a cycle has at least two vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise BadParams(f"cycle vertices repeat: {self.vertices}")

    @property
    def length(self) -> int:
        """Number of arcs, which equals the number of vertices."""
        return len(self.vertices)

    def arcs(self) -> list[Arc]:
        vs = self.vertices
        return [Arc(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def canonical(self) -> Cycle:
        """Rotation that starts at the smallest vertex id."""
        i = self.vertices.index(min(self.vertices))
        return Cycle(self.vertices[i:] + self.vertices[:i])

    def index_of(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise NotOnCycle(f"vertex {v} is not on the cycle") from None

    def successor(self, v: int) -> int:
        return self.vertices[(self.index_of(v) + 1) % len(self.vertices)]

    def is_valid_in(self, D: Digraph) -> bool:
        return all(0 <= v < D.n for v in self.vertices) and all(
            a in D.arcs for a in self.arcs()
        )

    def __contains__(self, v: int) -> bool:
        return v in self.vertices


def _check_vertex(D: Digraph, v: int) -> None:
    if not (0 <= v < D.n):
        raise OutOfRange(f"vertex {v} is not in the digraph")


def bfs_distances(D: Digraph, source: int, blocked: Collection[int] = ()) -> list:
    """Distances from source with some vertices withheld; inf when unreached.

    A blocked source yields all-inf (nothing is reachable, not even itself).
    """
    dist = [INFINITE] * D.n
    if source in blocked:
        return dist
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in D.out_adj[v]:
            if dist[w] == INFINITE and w not in blocked:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def bfs_distances_rev(D: Digraph, sink: int, blocked: Collection[int] = ()) -> list:
    """Distances *to* sink along arc directions; inf when the sink is unreachable."""
    dist = [INFINITE] * D.n
    if sink in blocked:
        return dist
    dist[sink] = 0
    queue = deque([sink])
    while queue:
        v = queue.popleft()
        for w in D.in_adj[v]:
            if dist[w] == INFINITE and w not in blocked:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance(D: Digraph, u: int, v: int):
    _check_vertex(D, u)
    _check_vertex(D, v)
    if u == v:
        return 0
    return bfs_distances(D, u)[v]


def shortest_path(D: Digraph, u: int, v: int, blocked: Collection[int] = ()) -> Path | None:
    """A shortest u->v path, or None when v is unreachable."""
    _check_vertex(D, u)
    _check_vertex(D, v)
    if u in blocked or v in blocked:
        return None
    if u == v:
        return Path((u,))
    parent = [-1] * D.n
    seen = [False] * D.n
    seen[u] = True
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in D.out_adj[x]:
            if not seen[w] and w not in blocked:
                seen[w] = True
                parent[w] = x
                if w == v:
                    queue.clear()
                    break
                queue.append(w)
    if not seen[v]:
        return None
    rev = [v]
    while rev[-1] != u:
        rev.append(parent[rev[-1]])
    return Path(tuple(reversed(rev)))


def reachable_set(D: Digraph, source: int, blocked: Collection[int] = ()) -> frozenset[int]:
    """All vertices reachable from source (source included) avoiding blocked."""
    if source in blocked:
        return frozenset()
    seen = {source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in D.out_adj[v]:
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def all_pairs_distances(D: Digraph) -> list[list]:
    return [bfs_distances(D, s) for s in range(D.n)]


def girth(D: Digraph):
    """Length of a shortest directed cycle; inf for acyclic digraphs."""
    C = shortest_cycle(D)
    return INFINITE if C is None else C.length


def shortest_cycle(D: Digraph) -> Cycle | None:
    """A shortest cycle in canonical rotation, or None when acyclic.

    One BFS per start vertex; a cycle through s closes with an arc back
    into s from some BFS-reached in-neighbor.
    """
    best_len = INFINITE
    best: tuple[int, int] | None = None
    for s in range(D.n):
        dist = bfs_distances(D, s)
        for w in D.in_adj[s]:
            if dist[w] != INFINITE and dist[w] + 1 < best_len:
                best_len = dist[w] + 1
                best = (s, w)
        if best_len == 2:
            break
    if best is None:
        return None
    s, w = best
    spine = shortest_path(D, s, w)
    assert spine is not None and spine.length + 1 == best_len
    return Cycle(spine.vertices).canonical()


SegmentMode = Literal["closed", "left_open", "right_open", "open"]


def segment(C: Cycle, a: int, b: int, mode: SegmentMode = "closed"):
    """The stretch of C from a forward to b.

    Closed mode returns a Path (a single vertex when a == b).  The open
    modes drop an endpoint and return the ordered vertex tuple, which may
    be empty.
    """
    ia = C.index_of(a)
    ib = C.index_of(b)
    L = C.length
    span = (ib - ia) % L
    verts = tuple(C.vertices[(ia + j) % L] for j in range(span + 1))
    if mode == "closed":
        return Path(verts)
    if mode == "left_open":
        return verts[1:]
    if mode == "right_open":
        return verts[:-1]
    if mode == "open":
        return verts[1:-1]
    raise BadParams(f"unknown segment mode {mode!r}")


def is_isometric(D: Digraph, C: Cycle, dist_matrix: list[list] | None = None) -> bool:
    """True when every forward stretch of C realises the digraph distance."""
    if not C.is_valid_in(D):
        raise NotOnCycle("cycle is not a cycle of this digraph")
    L = C.length
    for i, a in enumerate(C.vertices):
        dist = dist_matrix[a] if dist_matrix is not None else bfs_distances(D, a)
        for j, b in enumerate(C.vertices):
            if a == b:
                continue
            if dist[b] != (j - i) % L:
                return False
    return True


def _weak_component_sizes(D: Digraph, removed: Collection[int]) -> list[int]:
    removed = set(removed)
    seen: set[int] = set()
    sizes = []
    for start in range(D.n):
        if start in removed or start in seen:
            continue
        size = 0
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            size += 1
            for w in D.out_adj[v] + D.in_adj[v]:
                if w not in removed and w not in seen:
                    seen.add(w)
                    queue.append(w)
        sizes.append(size)
    return sizes


def rho(D: Digraph, C: Cycle) -> int:
    """Order of the largest weakly connected piece left after removing C."""
    if not C.is_valid_in(D):
        raise NotOnCycle("cycle is not a cycle of this digraph")
    sizes = _weak_component_sizes(D, set(C.vertices))
    return max(sizes, default=0)


def enumerate_cycles(
    D: Digraph, max_len: int | None = None, budget: int = 10**6
) -> Iterator[Cycle]:
    """All simple cycles with at most max_len arcs, each exactly once.

    Cycles are rooted at their smallest vertex, so every cycle comes out
    already canonical.  Raises CapExceeded when the expansion budget runs
    out; the budget counts visited search nodes.
    """
    cap = D.n if max_len is None else min(max_len, D.n)
    spent = 0
    for root in range(D.n):
        path = [root]
        on_path = {root}
        # stack of iterators over admissible extensions
        iters = [iter([w for w in D.out_adj[root] if w > root or w == root])]
        # the root's iterator also sees the root itself to close 1-cycles;
        # self-loops cannot exist, so only w > root matters below.
        while iters:
            spent += 1
            if spent > budget:
                raise CapExceeded(f"cycle enumeration exceeded {budget} expansions")
            advanced = False
            for w in iters[-1]:
                if w == root:
                    if len(path) >= 2:
                        yield Cycle(tuple(path))
                    continue
                if w < root or w in on_path or len(path) >= cap:
                    continue
                path.append(w)
                on_path.add(w)
                ext = [x for x in D.out_adj[w] if x == root or (x > root and x not in on_path)]
                iters.append(iter(ext))
                advanced = True
                break
            if not advanced:
                iters.pop()
                dropped = path.pop()
                on_path.discard(dropped)


def max_rho_isometric_cycle(
    D: Digraph, max_len: int | None = None, budget: int = 10**6
) -> tuple[Cycle, int]:
    """Among all isometric cycles (within the length cap), one leaving the
    largest weak component behind.  Ties go to the lexicographically least
    canonical vertex sequence.  Raises NoCycle when nothing qualifies."""
    dist_matrix = all_pairs_distances(D)
    best: tuple[int, tuple[int, ...]] | None = None
    best_cycle: Cycle | None = None
    for C in enumerate_cycles(D, max_len=max_len, budget=budget):
        if not is_isometric(D, C, dist_matrix):
            continue
        key = (-rho(D, C), C.vertices)
        if best is None or key < best:
            best = key
            best_cycle = C
    if best_cycle is None:
        raise NoCycle("no isometric cycle within the length cap")
    return best_cycle, -best[0]
