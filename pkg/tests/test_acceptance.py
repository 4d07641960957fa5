"""Acceptance gate: one test per advertised guarantee.

Each test checks a headline capability end to end at its stated tolerance
and prints a single PASS line (visible with -s or in captured output on
failure).  Budgets are wall-clock upper bounds, not targets.
"""

import random
import time

from oracles import (
    brute_girth,
    max_disjoint_family,
    random_digraph,
    random_strong_digraph,
)
from twoblock.connectivity import check_cut_order, internally_disjoint_paths
from twoblock.digraph import degrees, serialize
from twoblock.generators import (
    complete_biorientation,
    random_girth_constrained,
    ring_of_cycles,
)
from twoblock.harness import NONE, explore_gap, verify_construction, verify_theorem
from twoblock.metrics import girth, is_isometric, shortest_cycle
from twoblock.probe import VIOLATED, probe_claims
from twoblock.subdivision import brute_oracle, find_subdivision, verify_witness


def _ok(num, label, elapsed):
    print(f"criterion {num} PASS: {label} ({elapsed:.1f}s)")


def test_criterion_1_ring_construction_certified():
    t0 = time.monotonic()
    rep3 = verify_construction(3)
    fast = time.monotonic() - t0
    assert fast < 1.0
    rep4 = verify_construction(4)
    for rep, k in ((rep3, 3), (rep4, 4)):
        record = rep.trials[0]
        assert record.girth == k
        assert record.delta_plus == 2
        assert record.verdict == NONE
        assert rep.summary["verdicts"] == {NONE: 1}
        assert rep.summary["certified_choices"] == 1
        assert rep.summary["failed_choices"] == 0
    # independent route: exhaustive per-pair path enumeration on the k=3 ring
    assert not brute_oracle(ring_of_cycles(3), 3, 3)
    elapsed = time.monotonic() - t0
    assert elapsed < 300
    _ok(1, "ring construction certified for k=3 and k=4", elapsed)


def test_criterion_2_biorientation_threshold():
    t0 = time.monotonic()
    for k in (2, 3):
        below = complete_biorientation(2 * k - 1)
        assert find_subdivision(below, k, k) is None
        at = complete_biorientation(2 * k)
        w = find_subdivision(at, k, k)
        assert w is not None and verify_witness(at, w)
    elapsed = time.monotonic() - t0
    assert elapsed < 10
    _ok(2, "threshold exact on bioriented cliques, k in {2, 3}", elapsed)


def test_criterion_3_high_girth_forces_witness():
    t0 = time.monotonic()
    runs = [
        verify_theorem(k=1, trials=100, nmin=12, nmax=20, seed=11),
        verify_theorem(k=2, trials=25, nmin=24, nmax=40, seed=22),
        verify_theorem(k=1, trials=25, nmin=12, nmax=20, seed=33, root=0),
    ]
    for rep in runs:
        s = rep.summary
        assert s["refutations"] == 0
        assert s["inconclusive"] <= 0.10 * s["trials"]
        conclusive = s["trials"] - s["inconclusive"]
        assert conclusive > 0
        assert s["witnesses"] == conclusive
    elapsed = time.monotonic() - t0
    assert elapsed < 600
    _ok(3, "150 trials (incl. rooted), every conclusive one a witness", elapsed)


def test_criterion_4_finder_matches_brute_oracle():
    t0 = time.monotonic()
    rng = random.Random(40)
    compared = 0
    for _ in range(300):
        n = rng.randint(3, 8)
        D = random_digraph(rng, n, rng.choice([0.2, 0.35, 0.5]))
        for k in (1, 2, 3):
            for ell in (1, 2, 3):
                w = find_subdivision(D, k, ell)
                assert (w is not None) == brute_oracle(D, k, ell)
                if w is not None:
                    assert verify_witness(D, w)
                compared += 1
    assert compared == 2700
    elapsed = time.monotonic() - t0
    assert elapsed < 300
    _ok(4, "finder vs brute oracle, 2700 comparisons, 0 disagreements", elapsed)


def test_criterion_5_menger_count_matches_brute_family():
    t0 = time.monotonic()
    rng = random.Random(50)
    pairs = 0
    for _ in range(200):
        n = rng.randint(2, 7)
        D = random_digraph(rng, n, rng.choice([0.25, 0.45]))
        for s in range(n):
            for t in range(n):
                if s == t:
                    continue
                count, paths = internally_disjoint_paths(D, s, t)
                assert count == len(paths) == max_disjoint_family(D, s, t)
                pairs += 1
    elapsed = time.monotonic() - t0
    _ok(5, f"disjoint-path count matches brute maximum on {pairs} pairs", elapsed)


def test_criterion_6_girth_matches_brute_and_is_isometric():
    t0 = time.monotonic()
    rng = random.Random(60)
    cyclic = 0
    for _ in range(200):
        n = rng.randint(2, 10)
        D = random_digraph(rng, n, rng.choice([0.15, 0.3]))
        assert girth(D) == brute_girth(D)
        C = shortest_cycle(D)
        if C is not None:
            cyclic += 1
            assert C.length == girth(D)
            assert is_isometric(D, C)
    assert cyclic >= 50  # the sample must actually exercise the cyclic branch
    elapsed = time.monotonic() - t0
    _ok(6, f"girth exact on 200 digraphs, {cyclic} shortest cycles isometric", elapsed)


def test_criterion_7_cut_order_on_strong_digraphs():
    t0 = time.monotonic()
    rng = random.Random(70)
    pairs = 0
    for _ in range(100):
        n = rng.randint(3, 10)
        D = random_strong_digraph(rng, n, rng.choice([0.2, 0.35]))
        for s in range(n):
            for t in range(n):
                if s == t:
                    continue
                result = check_cut_order(D, s, t, exhaustive_budget=10**9)
                assert result.exhaustive and result.ok, (serialize(D), s, t)
                pairs += 1
    elapsed = time.monotonic() - t0
    _ok(7, f"cut-vertex order ascending on all {pairs} pairs", elapsed)


def test_criterion_8_violated_claims_imply_witness():
    t0 = time.monotonic()
    for k in (1, 2):
        g = 4 * k + 2
        rng = random.Random(80 + k)
        lo, hi = (12, 20) if k == 1 else (24, 40)
        for _ in range(25):
            n = rng.randint(lo, hi)
            D = random_girth_constrained(n, g, 2, seed=rng.getrandbits(64))
            assert girth(D) >= g and degrees(D).min_out >= 2
            C = shortest_cycle(D)
            claims = probe_claims(D, C, k)
            violated = [r.claim for r in claims if r.status == VIOLATED]
            w = find_subdivision(D, k, k)
            if violated:
                assert w is not None, (serialize(D), violated)
            if w is not None:
                assert verify_witness(D, w)
    elapsed = time.monotonic() - t0
    _ok(8, "no instance pairs a violated claim with verdict none", elapsed)


def test_criterion_9_reports_are_deterministic():
    t0 = time.monotonic()

    def trial_run(workers):
        return verify_theorem(
            k=1, trials=10, nmin=12, nmax=16, seed=7, workers=workers
        ).canonical_json()

    baseline = trial_run(1)
    assert baseline == trial_run(1)
    assert baseline == trial_run(3)

    def gap_run():
        return explore_gap(k=2, target_girth=2, budget=6, seed=5, population=3)

    assert gap_run().canonical_json() == gap_run().canonical_json()
    assert (
        verify_construction(3, all_choices=True).canonical_json()
        == verify_construction(3, all_choices=True).canonical_json()
    )
    assert serialize(random_girth_constrained(16, 6, 2, seed=9)) == serialize(
        random_girth_constrained(16, 6, 2, seed=9)
    )
    elapsed = time.monotonic() - t0
    _ok(9, "seeded reports byte-identical, worker count irrelevant", elapsed)
