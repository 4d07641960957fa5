"""Executable probes for the structure theory behind the finder.

Given a digraph, an isometric cycle C, an arc (a, b) of C and a radius k,
the cut-vertex chain of the return trip b -> a carries a window of
vertices at distance >= k from both ends.  Each window vertex spawns a
stratum: everything reachable from it once the next window vertex is
removed.  Several non-obvious facts about these strata hold whenever the
digraph is a minimal candidate counterexample; on ordinary inputs they can
fail, and each check below reports holds / violated / not_applicable with
re-checkable evidence instead of assuming anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .connectivity import CutWindow, cut_window, special_arc
from .digraph import Arc, Digraph
from .errors import (
    BadParams,
    NoCutVertex,
    NotOnCycle,
    NoWindow,
    PreconditionFailed,
    Unreachable,
)
from .metrics import Cycle, reachable_set, segment

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    status: str
    evidence: tuple | None = None
    detail: str = ""

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "status": self.status,
            "evidence": list(self.evidence) if self.evidence is not None else None,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Strata:
    """The window's reachability strata, cyclically indexed mod h+1."""

    cycle: Cycle
    window: CutWindow
    sets: tuple[frozenset[int], ...]

    @property
    def h(self) -> int:
        return self.window.h

    def tilde(self, i: int) -> int:
        return self.window.tilde[i % (self.h + 1)]

    def stratum(self, i: int) -> frozenset[int]:
        return self.sets[i % (self.h + 1)]


def reachability_strata(D: Digraph, C: Cycle, arc: tuple[int, int], k: int) -> Strata:
    """Stratum i is everything reachable from window vertex i in the
    digraph with window vertex i+1 (cyclically) deleted."""
    window = cut_window(D, C, arc, k)
    if window.h < 1:
        raise NoWindow("a single-vertex window has no strata to separate")
    tilde = window.tilde
    count = window.h + 1
    sets = []
    for i in range(count):
        removed = tilde[(i + 1) % count]
        sets.append(reachable_set(D, tilde[i], blocked=(removed,)))
    strata = Strata(cycle=C, window=window, sets=tuple(sets))
    for i in range(count):
        assert tilde[i] in sets[i] and tilde[(i + 1) % count] not in sets[i]
    return strata


def check_strata_cycle_footprint(D: Digraph, strata: Strata) -> ClaimReport:
    """Each stratum should meet the cycle exactly in the half-open stretch
    from its window vertex to the next one."""
    C = strata.cycle
    on_cycle = set(C.vertices)
    for i in range(strata.h + 1):
        expected = set(segment(C, strata.tilde(i), strata.tilde(i + 1), "right_open"))
        actual = strata.stratum(i) & on_cycle
        for v in sorted(actual - expected):
            return ClaimReport(
                "strata_cycle_footprint",
                VIOLATED,
                (i, v),
                f"stratum {i} reaches cycle vertex {v} outside its stretch",
            )
        for v in sorted(expected - actual):
            return ClaimReport(
                "strata_cycle_footprint",
                VIOLATED,
                (i, v),
                f"stratum {i} misses cycle vertex {v} of its stretch",
            )
    return ClaimReport("strata_cycle_footprint", HOLDS)


def check_strata_overlaps(
    D: Digraph, strata: Strata, root: int | None = None
) -> list[ClaimReport]:
    """Three facts about which strata may intersect.

    adjacency: only cyclically consecutive strata intersect.
    chord: a consecutive overlap forces the next chain arc to exist.
    root: a consecutive overlap traps the designated root in the union
    (reported not_applicable when no root is given).
    """
    h = strata.h
    count = h + 1
    reports = []

    adjacency: ClaimReport | None = None
    for i in range(count):
        for j in range(i + 1, count):
            if j - i in (1, h):
                continue
            common = strata.sets[i] & strata.sets[j]
            if common:
                adjacency = ClaimReport(
                    "strata_overlap_adjacency",
                    VIOLATED,
                    (i, j, min(common)),
                    f"strata {i} and {j} are not consecutive yet share {min(common)}",
                )
                break
        if adjacency:
            break
    reports.append(adjacency or ClaimReport("strata_overlap_adjacency", HOLDS))

    chord: ClaimReport | None = None
    window = strata.window
    for i in range(count):
        if not strata.sets[i] & strata.sets[(i + 1) % count]:
            continue
        if i == h - 1:
            required = Arc(window.chain[window.i1 - 1], window.chain_after(window.i1))
        else:
            required = Arc(strata.tilde(i + 1), strata.tilde(i + 2))
        if required not in D.arcs:
            chord = ClaimReport(
                "strata_overlap_chord",
                VIOLATED,
                (i, required.tail, required.head),
                f"strata {i} and {i + 1} overlap but arc {tuple(required)} is absent",
            )
            break
    reports.append(chord or ClaimReport("strata_overlap_chord", HOLDS))

    if root is None:
        reports.append(
            ClaimReport("strata_overlap_root", NOT_APPLICABLE, None, "no root supplied")
        )
    else:
        verdict: ClaimReport | None = None
        for i in range(count):
            if not strata.sets[i] & strata.sets[(i + 1) % count]:
                continue
            if root not in strata.sets[i] | strata.sets[(i + 1) % count]:
                verdict = ClaimReport(
                    "strata_overlap_root",
                    VIOLATED,
                    (i, root),
                    f"strata {i} and {i + 1} overlap without containing root {root}",
                )
                break
        reports.append(verdict or ClaimReport("strata_overlap_root", HOLDS))
    return reports


def check_no_cross_arcs(D: Digraph, strata: Strata, i: int, j: int) -> ClaimReport:
    """Two disjoint strata should exchange no arc off the cycle.

    Precondition: the strata are disjoint; PreconditionFailed otherwise.
    """
    count = strata.h + 1
    if not (0 <= i < count and 0 <= j < count) or i == j:
        raise BadParams(f"stratum indices must be distinct and within [0, {count})")
    xi, xj = strata.sets[i], strata.sets[j]
    if xi & xj:
        raise PreconditionFailed(f"strata {i} and {j} intersect")
    on_cycle = set(strata.cycle.vertices)
    side_i = xi - on_cycle
    side_j = xj - on_cycle
    for u, v in sorted(D.arcs):
        if (u in side_i and v in side_j) or (u in side_j and v in side_i):
            return ClaimReport(
                "no_cross_arcs",
                VIOLATED,
                (i, j, u, v),
                f"arc ({u}, {v}) crosses between strata {i} and {j} off the cycle",
            )
    return ClaimReport("no_cross_arcs", HOLDS)


def window_cycle_bound(h: int, k: int) -> int:
    """Upper bound on the cycle length carried by a window of span h."""
    if h < 0 or k < 1:
        raise BadParams(f"need h >= 0 and k >= 1, got h={h}, k={k}")
    return (h + 3) * k - (h + 1)


def probe_claims(
    D: Digraph,
    C: Cycle,
    k: int,
    arc: tuple[int, int] | None = None,
    root: int | None = None,
) -> list[ClaimReport]:
    """Evaluate every checkable claim on one (cycle, arc, radius) triple.

    When no arc is given, the special arc (window starting at distance
    exactly k) is preferred and the lexicographically first cycle arc is
    the fallback.  If the window cannot be built at all, every claim is
    reported not_applicable with the reason in the detail field.
    """
    if arc is None:
        try:
            arc = special_arc(D, C, k)
        except (Unreachable, BadParams):
            arc = None
        if arc is None:
            arc = min(C.arcs())
    try:
        strata = reachability_strata(D, C, tuple(arc), k)
    except (NoCutVertex, NoWindow, Unreachable, NotOnCycle) as exc:
        reason = f"{type(exc).__name__}: {exc}"
        names = [
            "strata_cycle_footprint",
            "strata_overlap_adjacency",
            "strata_overlap_chord",
            "strata_overlap_root",
            "no_cross_arcs",
        ]
        return [ClaimReport(name, NOT_APPLICABLE, None, reason) for name in names]

    reports = [check_strata_cycle_footprint(D, strata)]
    reports.extend(check_strata_overlaps(D, strata, root=root))

    cross: ClaimReport | None = None
    count = strata.h + 1
    for i in range(count):
        for j in range(i + 1, count):
            if strata.sets[i] & strata.sets[j]:
                continue
            report = check_no_cross_arcs(D, strata, i, j)
            if report.status == VIOLATED:
                cross = report
                break
        if cross:
            break
    reports.append(cross or ClaimReport("no_cross_arcs", HOLDS))
    return reports
