"""
Windows, strata, and checkable claims
=====================================

The forcing argument walks along a shortest cycle, picks an arc whose
endpoints are far apart once the cycle is cut there (a "window"), and
studies how far vertices reach back into the cycle.  Those reach sets
("strata") obey structural claims that hold whenever no witness exists.
Each claim is a concrete predicate this module can evaluate, so a
violated claim on a high-girth instance must come with a finder witness
somewhere else in the digraph.

Run with:  python3 demos/probe_window_claims.py
"""

from twoblock.connectivity import cut_window, special_arc
from twoblock.digraph import build
from twoblock.generators import directed_cycle, random_girth_constrained
from twoblock.metrics import shortest_cycle
from twoblock.probe import probe_claims, reachability_strata, window_cycle_bound
from twoblock.subdivision import find_subdivision

# Start on the cleanest possible stage: a plain 14-cycle with k = 3.
D = directed_cycle(14)
C = shortest_cycle(D)
print("cycle:", C.vertices)

# The window for arc (0, 1): cut the cycle at the arc, list the cut
# vertices between the endpoints in visiting order.
window = cut_window(D, C, (0, 1), k=3)
print("window chain:", window.chain)

# Strata: stratum i holds the vertices that reach the cycle first at
# chain position i.  On a bare cycle each vertex sits alone.
strata = reachability_strata(D, C, (0, 1), k=3)
for i in range(strata.h + 1):
    print("  stratum %d: %s" % (i, sorted(strata.stratum(i))))

# All five claims hold here, trivially.
for r in probe_claims(D, C, 3):
    print("%-28s %s" % (r.claim, r.status))

# A window of span h cannot carry arbitrarily long cycles; the bound is
# what turns local window structure into the global girth contradiction.
print("\ncycle-length bound for span 2, k=3:", window_cycle_bound(2, 3))

# Claims can fail.  Pinch the 14-cycle by letting two of its vertices
# feed a common outside vertex: strata 0 and 4 now overlap in vertex 14
# even though they are not adjacent on the chain.
arcs = [(i, (i + 1) % 14) for i in range(14)] + [(4, 14), (8, 14)]
P = build(15, arcs)
C = shortest_cycle(P)
print("\npinched 14-cycle:")
for r in probe_claims(P, C, 3, arc=(0, 1)):
    print("%-28s %-14s %s" % (r.claim, r.status, r.evidence or r.detail or ""))

# A violated claim is only meaningful below the forcing girth.  On
# instances with girth >= 4k+2 the contract is one-directional: a
# violation must come with a finder witness.  These dense random
# instances usually have no usable window at all (the chords give the
# arc endpoints alternative routes, so the cut chain collapses), which
# the reports state rather than hide.
D = random_girth_constrained(n=24, girth_lb=10, min_outdeg=2, seed=5)
C = shortest_cycle(D)
print("\ngenerated girth-%d instance, special arc at k=2: %s" % (C.length, special_arc(D, C, 2)))
reports = probe_claims(D, C, 2)
print("claim statuses:", sorted({r.status for r in reports}))
violated = [r.claim for r in reports if r.status == "violated"]
w = find_subdivision(D, 2, 2)
print("violated claims:", violated)
print("finder witness exists:", w is not None)
assert not (violated and w is None)
