"""Immutable simple digraphs on dense integer vertex ids.

Vertices are 0..n-1.  Arcs are ordered pairs without self-loops and without
duplicates.  All algorithms in the package iterate adjacency in sorted order
so that results are reproducible run to run.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import DuplicateArc, NotPresent, OutOfRange, ParseError, SelfLoop


class Arc(NamedTuple):
    tail: int
    head: int


@dataclass(frozen=True)
class Digraph:
    """A simple digraph. Build through :func:`build`, never directly."""

    n: int
    arcs: frozenset[Arc]
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(self.n)

    def out(self, v: int) -> tuple[int, ...]:
        """Out-neighbors of v in ascending order."""
        return self.out_adj[v]

    def in_(self, v: int) -> tuple[int, ...]:
        """In-neighbors of v in ascending order."""
        return self.in_adj[v]

    def has_arc(self, u: int, v: int) -> bool:
        return Arc(u, v) in self.arcs

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


def build(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Validate and freeze a digraph from a vertex count and arc pairs.

    Raises OutOfRange, SelfLoop or DuplicateArc on the first bad arc.
    """
    if n < 0:
        raise OutOfRange(f"vertex count must be nonnegative, got {n}")
    seen: set[Arc] = set()
    out_sets: list[set[int]] = [set() for _ in range(n)]
    in_sets: list[set[int]] = [set() for _ in range(n)]
    for tail, head in arcs:
        if not (0 <= tail < n) or not (0 <= head < n):
            raise OutOfRange(f"arc ({tail}, {head}) leaves the vertex range [0, {n})")
        if tail == head:
            raise SelfLoop(f"self-loop at vertex {tail}")
        arc = Arc(tail, head)
        if arc in seen:
            raise DuplicateArc(f"arc ({tail}, {head}) supplied twice")
        seen.add(arc)
        out_sets[tail].add(head)
        in_sets[head].add(tail)
    return Digraph(
        n=n,
        arcs=frozenset(seen),
        out_adj=tuple(tuple(sorted(s)) for s in out_sets),
        in_adj=tuple(tuple(sorted(s)) for s in in_sets),
    )


@dataclass(frozen=True)
class DegreeSummary:
    """Per-vertex degree sequences plus extrema; extrema are None when n=0."""

    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]
    min_out: int | None
    min_in: int | None
    max_out: int | None
    max_in: int | None


def degrees(D: Digraph) -> DegreeSummary:
    outs = tuple(len(a) for a in D.out_adj)
    ins = tuple(len(a) for a in D.in_adj)
    if D.n == 0:
        return DegreeSummary(outs, ins, None, None, None, None)
    return DegreeSummary(outs, ins, min(outs), min(ins), max(outs), max(ins))


def delete(
    D: Digraph,
    vertices: Iterable[int] = (),
    arcs: Iterable[tuple[int, int]] = (),
) -> tuple[Digraph, dict[int, int]]:
    """Remove vertices (with incident arcs) and arcs; relabel densely.

    Returns the new digraph and the old-id -> new-id map for survivors.
    """
    doomed = set(vertices)
    for v in doomed:
        if not (0 <= v < D.n):
            raise NotPresent(f"vertex {v} is not in the digraph")
    doomed_arcs = set()
    for tail, head in arcs:
        arc = Arc(tail, head)
        if arc not in D.arcs:
            raise NotPresent(f"arc ({tail}, {head}) is not in the digraph")
        doomed_arcs.add(arc)
    relabel = {}
    for v in range(D.n):
        if v not in doomed:
            relabel[v] = len(relabel)
    kept = [
        (relabel[a.tail], relabel[a.head])
        for a in D.sorted_arcs()
        if a.tail not in doomed and a.head not in doomed and a not in doomed_arcs
    ]
    return build(len(relabel), kept), relabel


@dataclass(frozen=True)
class Condensation:
    """Strongly connected components in an order with all arcs pointing
    from earlier components to later ones; the last component is a sink."""

    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    is_strongly_connected: bool

    @property
    def sink_component(self) -> tuple[int, ...]:
        return self.components[-1]


def condensation(D: Digraph) -> Condensation:
    """Tarjan's algorithm, iterative to survive deep recursions."""
    index_of = [-1] * D.n
    low = [0] * D.n
    on_stack = [False] * D.n
    stack: list[int] = []
    sccs: list[tuple[int, ...]] = []
    counter = 0
    for root in range(D.n):
        if index_of[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index_of[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recursed = False
            out = D.out_adj[v]
            while pi < len(out):
                w = out[pi]
                pi += 1
                if index_of[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    recursed = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index_of[w])
            if recursed:
                continue
            work.pop()
            if low[v] == index_of[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(tuple(sorted(comp)))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    # Tarjan emits sinks first; reverse so arcs go earlier -> later.
    sccs.reverse()
    component_of = [0] * D.n
    for i, comp in enumerate(sccs):
        for v in comp:
            component_of[v] = i
    return Condensation(
        components=tuple(sccs),
        component_of=tuple(component_of),
        is_strongly_connected=len(sccs) <= 1 if D.n else True,
    )


def parse_digraph(text: str) -> Digraph:
    """Read the arc-list format: a header line "n m" followed by m lines
    "u v".  Lines starting with '#' and blank lines are skipped."""
    header: tuple[int, int] | None = None
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {raw!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {raw!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(f"header counts must be nonnegative, got {raw!r}", lineno)
            header = (a, b)
            continue
        n = header[0]
        if len(arcs) >= header[1]:
            raise ParseError(f"more than the declared {header[1]} arcs", lineno)
        if not (0 <= a < n) or not (0 <= b < n):
            raise ParseError(f"arc ({a}, {b}) leaves the vertex range [0, {n})", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        if (a, b) in seen:
            raise ParseError(f"arc ({a}, {b}) supplied twice", lineno)
        seen.add((a, b))
        arcs.append((a, b))
    if header is None:
        raise ParseError("missing header line")
    if len(arcs) != header[1]:
        raise ParseError(f"declared {header[1]} arcs but found {len(arcs)}")
    return build(header[0], arcs)


def serialize(D: Digraph) -> str:
    """Canonical arc-list text: header, then arcs sorted lexicographically."""
    lines = [f"{D.n} {D.m}"]
    lines.extend(f"{a.tail} {a.head}" for a in D.sorted_arcs())
    return "\n".join(lines) + "\n"


def to_dot(D: Digraph) -> str:
    """GraphViz text with bare integer vertex names."""
    lines = ["digraph G {"]
    with_arcs = {v for arc in D.arcs for v in arc}
    for v in range(D.n):
        if v not in with_arcs:
            lines.append(f"  {v};")
    for a in D.sorted_arcs():
        lines.append(f"  {a.tail} -> {a.head};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_sha(D: Digraph) -> str:
    """Short content hash of the canonical serialization."""
    return hashlib.sha256(serialize(D).encode()).hexdigest()[:16]
