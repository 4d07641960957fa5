"""Instance generators: certified families and seeded random digraphs.

The ring of cycles is the min-out-degree-2 family with girth k and no
two-block (k, k) subdivision for k >= 3; it pins the lower bound side of
the girth threshold question.  The random generator grows girth-bounded
digraphs arc by arc and is the workhorse for randomized verification.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Sequence

from .digraph import Arc, Digraph, build, degrees
from .errors import BadParams, Infeasible, NoMove
from .metrics import INFINITE, girth


def ring_of_cycles(
    k: int, choices: Sequence[tuple[int, int]] | tuple[int, int] | None = None
) -> Digraph:
    """k hub vertices threaded through k disjoint k-cycles.

    Hub i points at two vertices of cycle i (positions given by choices),
    and every vertex of cycle i points back at hub i+1 (mod k).  Vertices
    0..k-1 are the hubs; cycle i occupies ids k + i*k .. k + i*k + k - 1 in
    cyclic order.  The result has k + k^2 vertices, 2k + 2k^2 arcs, minimum
    out-degree 2 and girth exactly k.

    choices may be a single position pair applied to every cycle or one
    pair per cycle; positions are taken within [0, k).  Default is (0, 1).
    """
    if k < 2:
        raise BadParams(f"the ring construction needs k >= 2, got {k}")
    if choices is None:
        per_block = [(0, 1)] * k
    elif choices and isinstance(choices[0], int):
        per_block = [tuple(choices)] * k  # type: ignore[list-item]
    else:
        per_block = [tuple(c) for c in choices]  # type: ignore[union-attr]
        if len(per_block) != k:
            raise BadParams(f"need one position pair per cycle, got {len(per_block)}")
    for p, q in per_block:
        if p == q:
            raise BadParams(f"out-neighbor positions must differ, got ({p}, {q})")
        if not (0 <= p < k and 0 <= q < k):
            raise BadParams(f"positions ({p}, {q}) leave the range [0, {k})")

    arcs: list[tuple[int, int]] = []
    for i in range(k):
        base = k + i * k
        for j in range(k):
            arcs.append((base + j, base + (j + 1) % k))  # cycle i
            arcs.append((base + j, (i + 1) % k))  # back to the next hub
        p, q = per_block[i]
        arcs.append((i, base + p))
        arcs.append((i, base + q))
    return build(k + k * k, arcs)


def ring_block(k: int, i: int) -> tuple[int, ...]:
    """Vertex ids of cycle i inside ring_of_cycles(k), in cyclic order."""
    if not (0 <= i < k):
        raise BadParams(f"block index {i} leaves the range [0, {k})")
    base = k + i * k
    return tuple(range(base, base + k))


def all_position_pairs(k: int) -> list[tuple[int, int]]:
    """Every unordered out-neighbor position pair for the ring construction."""
    return [(p, q) for p in range(k) for q in range(p + 1, k)]


def complete_biorientation(n: int) -> Digraph:
    """Both arcs between every two of n vertices."""
    if n < 0:
        raise BadParams(f"vertex count must be nonnegative, got {n}")
    return build(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise BadParams(f"a directed cycle needs n >= 2, got {n}")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def theta(a: int, b: int) -> Digraph:
    """Two internally disjoint paths of lengths a and b between one source
    and one sink.  Vertex 0 is the source, vertex a the sink; the first
    path runs 0..a, the second through fresh ids a+1..a+b-1."""
    if a < 1 or b < 1:
        raise BadParams(f"path lengths must be positive, got ({a}, {b})")
    if a + b < 3:
        raise BadParams("two length-1 paths would need a duplicate arc")
    arcs = [(i, i + 1) for i in range(a)]
    prev = 0
    for j in range(a + 1, a + b):
        arcs.append((prev, j))
        prev = j
    arcs.append((prev, a))
    return build(a + b, arcs)


def _sets_bfs(adj: list[set[int]], source: int) -> dict[int, int]:
    """Distances from source in a digraph held as adjacency sets."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def random_girth_constrained(
    n: int,
    girth_lb: int,
    min_outdeg: int = 2,
    seed: int = 0,
    retries: int = 32,
) -> Digraph:
    """A random digraph with girth >= girth_lb and min out-degree >= min_outdeg.

    Grow-and-check: start from the directed n-cycle (girth n) and add arcs
    (u, w), each accepted only when dist(w, u) + 1 >= girth_lb at that moment,
    so no accepted arc ever closes a short cycle.  Heads are drawn at random
    from the acceptable candidates that sit closest ahead of u (small
    dist(u, w)): a long-range shortcut collapses distances across the whole
    digraph and strands the tails processed after it, while short forward
    jumps leave the remaining slack almost untouched.  Adding arcs only
    shrinks distances, so a tail with no acceptable head at its turn can
    never recover; such attempts restart with a derived seed, and Infeasible
    is raised after `retries` restarts.

    The result is re-verified (girth and degrees) before being returned.
    """
    if n < 2 or girth_lb < 2:
        raise BadParams(f"need n >= 2 and girth_lb >= 2, got n={n}, girth_lb={girth_lb}")
    if min_outdeg < 1:
        raise BadParams(f"min out-degree must be positive, got {min_outdeg}")
    if girth_lb > n:
        raise Infeasible(f"girth {girth_lb} cannot fit in {n} vertices")
    if min_outdeg > n - 1:
        raise Infeasible(f"out-degree {min_outdeg} needs at least {min_outdeg + 1} vertices")

    master = random.Random(seed)
    attempt_seeds = [master.getrandbits(64) for _ in range(max(1, retries))]
    for attempt_index, attempt_seed in enumerate(attempt_seeds):
        # Later attempts tolerate no slack at all in the jump length; the
        # tighter picks are less varied but nearly always complete.
        spread = 1 if attempt_index < len(attempt_seeds) // 2 else 0
        rng = random.Random(attempt_seed)
        adj: list[set[int]] = [{(v + 1) % n} for v in range(n)]
        radj: list[set[int]] = [{(v - 1) % n} for v in range(n)]
        present = {(v, (v + 1) % n) for v in range(n)}
        deficient = [v for v in range(n) if len(adj[v]) < min_outdeg]
        rng.shuffle(deficient)
        happy = True
        for u in deficient:
            while len(adj[u]) < min_outdeg:
                dist_to_u = _sets_bfs(radj, u)
                acceptable = [
                    w
                    for w in range(n)
                    if w != u
                    and (u, w) not in present
                    and dist_to_u.get(w, INFINITE) + 1 >= girth_lb
                ]
                if not acceptable:
                    happy = False
                    break
                dist_from_u = _sets_bfs(adj, u)
                nearest = min(dist_from_u.get(w, n) for w in acceptable)
                pool = [w for w in acceptable if dist_from_u.get(w, n) <= nearest + spread]
                w = rng.choice(pool)
                adj[u].add(w)
                radj[w].add(u)
                present.add((u, w))
            if not happy:
                break
        if not happy:
            continue
        D = build(n, sorted(present))
        if girth(D) >= girth_lb and degrees(D).min_out >= min_outdeg:
            return D
    raise Infeasible(
        f"no digraph with n={n}, girth >= {girth_lb}, out-degree >= {min_outdeg} "
        f"found in {max(1, retries)} attempts"
    )


def mutate(D: Digraph, seed: int = 0) -> Digraph:
    """One random local edit preserving simplicity and min out-degree >= 2.

    Moves: rewire an arc head, add an arc, remove an arc whose tail keeps
    out-degree >= 2, or subdivide an arc (the fresh midpoint gets a second
    out-arc to stay at out-degree 2).  The move kind is drawn at random and
    falls through to the next kind when no instance is legal; NoMove when
    nothing at all is."""
    if D.n == 0 or degrees(D).min_out < 2:
        raise BadParams("mutation expects min out-degree >= 2")
    rng = random.Random(seed)
    kinds = ["rewire", "add", "remove", "subdivide"]
    rng.shuffle(kinds)
    sorted_arcs = D.sorted_arcs()
    for kind in kinds:
        if kind == "rewire":
            options = [
                (u, v, w)
                for u, v in sorted_arcs
                for w in range(D.n)
                if w not in (u, v) and not D.has_arc(u, w)
            ]
            if options:
                u, v, w = rng.choice(options)
                arcs = [a for a in sorted_arcs if a != (u, v)] + [(u, w)]
                return build(D.n, arcs)
        elif kind == "add":
            options = [
                (u, w)
                for u in range(D.n)
                for w in range(D.n)
                if u != w and not D.has_arc(u, w)
            ]
            if options:
                return build(D.n, sorted_arcs + [rng.choice(options)])
        elif kind == "remove":
            options = [a for a in sorted_arcs if D.out_degree(a.tail) >= 3]
            if options:
                doomed = rng.choice(options)
                return build(D.n, [a for a in sorted_arcs if a != doomed])
        else:
            if sorted_arcs:
                u, v = rng.choice(sorted_arcs)
                extra = rng.choice([y for y in range(D.n) if y != v])
                mid = D.n
                arcs = [a for a in sorted_arcs if a != (u, v)]
                arcs += [(u, mid), (mid, v), (mid, extra)]
                return build(D.n + 1, arcs)
    raise NoMove("no legal mutation exists")
