"""Simplification, invariant separation, and equivalence verdicts."""

import json

import pytest

from knotlab.catalog import catalog_get, catalog_names
from knotlab.diagram import Diagram, canonical, emit_pd, mirror, parse_pd
from knotlab.equivalence import (
    SearchStats,
    Verdict,
    decide_equivalent,
    diagram_key,
    distinguish,
    simplify,
)
from knotlab.invariants import (
    jones_polynomial,
    linking_matrix,
    tricolor_count,
)
from knotlab.diagram import trace
from knotlab.moves import MoveSite, apply_move, random_walk


def _cat(name):
    return catalog_get(name).diagram


def _replay(d, path):
    for site in path:
        d = apply_move(d, site)
    return d


def _corpus():
    out = []
    for name in catalog_names():
        base = _cat(name)
        out.append(base)
        for seed in (3, 17):
            out.append(random_walk(base, 3, seed=seed)[0])
    return out


# ── diagram_key ──────────────────────────────────────────────────────


@pytest.mark.parametrize("d", _corpus(), ids=lambda d: emit_pd(d)[:40] or "empty")
def test_diagram_key_matches_canonical_emission(d):
    assert diagram_key(d) == emit_pd(canonical(d))


# ── simplify ─────────────────────────────────────────────────────────


def test_simplify_unknot_is_identity():
    d, path = simplify(_cat("unknot"))
    assert emit_pd(d) == "O"
    assert path == []


def test_simplify_trefoil_finds_nothing_smaller():
    d, path = simplify(_cat("trefoil"), max_extra_crossings=2, node_budget=100_000)
    assert d.crossing_count == 3
    assert path == []


def test_simplify_hopf_stays_minimal():
    d, _ = simplify(_cat("hopf"))
    assert d.crossing_count == 2


def test_simplify_scramble_returns_to_zero():
    scrambled, _ = random_walk(_cat("unknot"), 6, seed=42)
    assert scrambled.crossing_count > 0
    d, path = simplify(scrambled)
    assert d.crossing_count == 0
    assert emit_pd(_replay(scrambled, path)) == emit_pd(d)


@pytest.mark.parametrize("seed", range(8))
def test_simplify_path_replays_exactly(seed):
    scrambled, _ = random_walk(_cat("trefoil"), 4, seed=seed)
    d, path = simplify(scrambled, node_budget=300)
    assert emit_pd(_replay(scrambled, path)) == emit_pd(d)
    assert d.crossing_count <= scrambled.crossing_count


def test_simplify_zero_budget_still_reduces_greedily():
    scrambled, _ = random_walk(_cat("unknot"), 5, seed=11)
    d, path = simplify(scrambled, node_budget=0)
    assert emit_pd(_replay(scrambled, path)) == emit_pd(d)
    assert d.crossing_count <= scrambled.crossing_count


def test_simplify_deterministic():
    scrambled, _ = random_walk(_cat("figure_eight"), 3, seed=9)
    first = simplify(scrambled, node_budget=200)
    second = simplify(scrambled, node_budget=200)
    assert emit_pd(first[0]) == emit_pd(second[0])
    assert first[1] == second[1]


def test_simplify_never_grows_the_answer():
    for d in _corpus():
        out, _ = simplify(d, node_budget=50)
        assert out.crossing_count <= d.crossing_count


# ── distinguish ──────────────────────────────────────────────────────


def test_distinguish_trefoil_hopf_by_components():
    got = distinguish(_cat("trefoil"), _cat("hopf"))
    assert got == {"name": "component_count", "value_a": 1, "value_b": 2}


def test_distinguish_trefoil_unknot_by_tricolor():
    got = distinguish(_cat("trefoil"), _cat("unknot"))
    assert got == {"name": "tricolor_count", "value_a": 9, "value_b": 3}


def test_distinguish_trefoil_figure_eight_by_tricolor():
    got = distinguish(_cat("trefoil"), _cat("figure_eight"))
    assert got["name"] == "tricolor_count"
    assert (got["value_a"], got["value_b"]) == (9, 3)


def test_distinguish_invariant_under_moves():
    tref = _cat("trefoil")
    walked, _ = random_walk(tref, 10, seed=5)
    assert distinguish(tref, walked) is None


def test_distinguish_hopf_from_its_mirror_by_linking():
    hopf = _cat("hopf")
    got = distinguish(hopf, mirror(hopf))
    assert got["name"] == "linking_multiset"
    assert sorted((got["value_a"][0], got["value_b"][0])) == [-1, 1]


def test_distinguish_hopf_solomon_by_linking():
    got = distinguish(_cat("hopf"), _cat("solomon"))
    assert got["name"] == "linking_multiset"


def test_distinguish_trefoil_mirror_by_jones():
    tref = _cat("trefoil")
    got = distinguish(tref, mirror(tref))
    assert got["name"] == "jones_polynomial"
    assert got["value_a"] == jones_polynomial(tref)
    assert got["value_b"] == jones_polynomial(tref).inverted()


def test_distinguish_skips_jones_over_budget():
    tref = _cat("trefoil")
    assert distinguish(tref, mirror(tref), bracket_budget=2) is None


def test_distinguish_self_is_none():
    for name in catalog_names():
        assert distinguish(_cat(name), _cat(name)) is None


def test_distinguish_reported_values_recompute():
    checkers = {
        "component_count": lambda d: trace(d).component_count,
        "tricolor_count": lambda d: tricolor_count(d).count,
        "linking_multiset": lambda d: sorted(linking_matrix(d).values()),
        "jones_polynomial": jones_polynomial,
    }
    pairs = [
        ("trefoil", "hopf"),
        ("trefoil", "unknot"),
        ("hopf", "solomon"),
        ("unknot", "figure_eight"),
    ]
    for a_name, b_name in pairs:
        a, b = _cat(a_name), _cat(b_name)
        got = distinguish(a, b)
        check = checkers[got["name"]]
        assert check(a) == got["value_a"]
        assert check(b) == got["value_b"]
        assert got["value_a"] != got["value_b"]


# ── decide_equivalent ────────────────────────────────────────────────


def test_decide_identical_diagrams():
    v = decide_equivalent(_cat("trefoil"), _cat("trefoil"))
    assert v.outcome == "equivalent"
    assert v.path == ()
    assert v.search_stats.nodes_expanded == 0


def test_decide_relabeled_diagram_without_search():
    tref = _cat("trefoil")
    shifted = Diagram.from_quads(
        [tuple((e % 6) + 1 for e in q) for q in tref.quads]
    )
    v = decide_equivalent(tref, shifted)
    assert v.outcome == "equivalent"
    assert v.path == ()


def test_decide_scrambled_unknot_with_path():
    unknot = _cat("unknot")
    scrambled, _ = random_walk(unknot, 5, seed=7)
    v = decide_equivalent(scrambled, unknot, crossing_cap=scrambled.crossing_count + 2)
    assert v.outcome == "equivalent"
    replayed = _replay(scrambled, v.path)
    assert emit_pd(canonical(replayed)) == emit_pd(canonical(unknot))
    assert v.search_stats.nodes_expanded > 0


def test_decide_walked_trefoil_with_path():
    tref = _cat("trefoil")
    walked, _ = random_walk(tref, 3, seed=2)
    v = decide_equivalent(walked, tref, crossing_cap=walked.crossing_count + 2)
    assert v.outcome == "equivalent"
    replayed = _replay(walked, v.path)
    assert emit_pd(canonical(replayed)) == emit_pd(canonical(tref))


def test_decide_walked_hopf_with_path():
    hopf = _cat("hopf")
    walked, _ = random_walk(hopf, 3, seed=4)
    v = decide_equivalent(walked, hopf, crossing_cap=walked.crossing_count + 2)
    assert v.outcome == "equivalent"
    replayed = _replay(walked, v.path)
    assert emit_pd(canonical(replayed)) == emit_pd(canonical(hopf))


def test_decide_trefoil_figure_eight_distinguished():
    v = decide_equivalent(_cat("trefoil"), _cat("figure_eight"))
    assert v.outcome == "distinguished"
    assert v.separating_invariant["name"] == "tricolor_count"
    assert v.path is None


def test_decide_trefoil_mirror_distinguished_by_jones():
    tref = _cat("trefoil")
    v = decide_equivalent(tref, mirror(tref))
    assert v.outcome == "distinguished"
    assert v.separating_invariant["name"] == "jones_polynomial"


def test_decide_trefoil_mirror_unknown_without_jones():
    tref = _cat("trefoil")
    v = decide_equivalent(
        tref, mirror(tref), crossing_cap=4, node_budget=200, bracket_budget=2
    )
    assert v.outcome == "unknown"
    assert v.path is None
    assert v.separating_invariant is None
    assert 0 < v.search_stats.nodes_expanded <= 200


def test_decide_monotone_budget():
    tref = _cat("trefoil")
    walked, _ = random_walk(tref, 3, seed=2)
    small = decide_equivalent(walked, tref, crossing_cap=walked.crossing_count + 2)
    big = decide_equivalent(
        walked, tref, crossing_cap=walked.crossing_count + 3, node_budget=200_000
    )
    assert small.outcome == "equivalent"
    assert big.outcome == "equivalent"
    v = decide_equivalent(_cat("trefoil"), _cat("hopf"), node_budget=10**6)
    assert v.outcome == "distinguished"


def test_decide_deterministic():
    unknot = _cat("unknot")
    scrambled, _ = random_walk(unknot, 4, seed=13)
    first = decide_equivalent(scrambled, unknot, crossing_cap=scrambled.crossing_count + 2)
    second = decide_equivalent(scrambled, unknot, crossing_cap=scrambled.crossing_count + 2)
    assert first.outcome == second.outcome
    assert first.path == second.path
    assert first.search_stats == second.search_stats


def test_decide_split_links_by_components():
    v = decide_equivalent(parse_pd("O"), parse_pd("O O"))
    assert v.outcome == "distinguished"
    assert v.separating_invariant["name"] == "component_count"


# ── wire form ────────────────────────────────────────────────────────


def test_verdict_wire_round_trips_sites():
    unknot = _cat("unknot")
    scrambled, _ = random_walk(unknot, 4, seed=21)
    v = decide_equivalent(scrambled, unknot, crossing_cap=scrambled.crossing_count + 2)
    wire = v.to_wire()
    json.dumps(wire)
    assert wire["outcome"] == "equivalent"
    assert wire["separating_invariant"] is None
    assert wire["search_stats"]["nodes_expanded"] == v.search_stats.nodes_expanded
    sites = [MoveSite.from_wire(s) for s in wire["path"]]
    assert list(v.path) == sites


def test_verdict_wire_serializes_jones_values():
    tref = _cat("trefoil")
    v = decide_equivalent(tref, mirror(tref))
    wire = v.to_wire()
    json.dumps(wire)
    sep = wire["separating_invariant"]
    assert sep["name"] == "jones_polynomial"
    assert sep["value_a"]["text"] == "-t^4 + t^3 + t"
    assert sep["value_b"]["terms"]


def test_verdict_wire_distinguished_counts_are_plain_ints():
    v = decide_equivalent(_cat("trefoil"), _cat("hopf"))
    wire = v.to_wire()
    json.dumps(wire)
    assert wire["separating_invariant"] == {
        "name": "component_count",
        "value_a": 1,
        "value_b": 2,
    }
    assert wire["path"] is None
