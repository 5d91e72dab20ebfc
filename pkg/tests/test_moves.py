"""Move enumeration, application, inverses, and walk plumbing."""

import pytest

from knotlab.catalog import catalog_get, catalog_names
from knotlab.diagram import canonical, emit_pd, parse_pd, trace, validate
from knotlab.errors import InvalidSiteError
from knotlab.invariants import linking_number, tricolor_count
from knotlab.moves import (
    DELTA,
    MoveSite,
    apply_move,
    enumerate_sites,
    inverse_site,
    random_walk,
)

TREFOIL = catalog_get("trefoil").diagram
UNKNOT = catalog_get("unknot").diagram


def _seeded_corpus(count=100, length=3):
    """Deterministic mixed corpus: walks of every catalog entry."""
    names = catalog_names()
    out = []
    for seed in range(count):
        base = catalog_get(names[seed % len(names)]).diagram
        d, _ = random_walk(base, 1 + seed % length, seed=seed)
        out.append(d)
    return out


# ── enumeration ──────────────────────────────────────────────────────


def test_trefoil_has_no_reduce_or_slide_sites():
    assert enumerate_sites(TREFOIL, directions=["reduce", "slide"]) == []


def test_r1_grow_count_formula():
    # one site per (edge, handedness, side)
    sites = enumerate_sites(TREFOIL, kinds=["R1"], directions=["grow"])
    assert len(sites) == 2 * 2 * 6


def test_unknot_free_loop_grow_sites():
    sites = enumerate_sites(UNKNOT)
    assert len(sites) == 4
    assert {s.kind for s in sites} == {"R1"}
    assert all(s.locus == () for s in sites)


def test_kinked_unknot_has_one_reduce_site():
    grown = apply_move(UNKNOT, enumerate_sites(UNKNOT)[0])
    assert grown.crossing_count == 1
    reduces = enumerate_sites(grown, directions=["reduce"])
    assert len(reduces) == 1
    assert reduces[0].kind == "R1"


def test_enumeration_is_sorted_and_stable():
    sites = enumerate_sites(TREFOIL)
    keys = [(s.kind, s.direction, s.locus, s.id) for s in sites]
    assert keys == sorted(keys)
    assert sites == enumerate_sites(TREFOIL)


def test_enumeration_filters():
    r2 = enumerate_sites(TREFOIL, kinds=["R2"])
    assert r2 and all(s.kind == "R2" for s in r2)
    grow = enumerate_sites(TREFOIL, directions=["grow"])
    assert grow and all(s.direction == "grow" for s in grow)


def test_sites_are_unique():
    sites = enumerate_sites(TREFOIL)
    assert len({s.id for s in sites}) == len(sites)


# ── site serialization ───────────────────────────────────────────────


def test_site_wire_round_trip():
    for site in enumerate_sites(TREFOIL)[:6]:
        wire = site.to_wire()
        assert MoveSite.from_wire(wire) == site
        assert wire["kind"] == site.kind
        assert isinstance(wire["locus"], list)


def test_site_id_is_canonical_json():
    site = enumerate_sites(UNKNOT)[0]
    assert site.id.startswith('{"direction":"grow","kind":"R1"')


def test_from_wire_rejects_garbage():
    with pytest.raises(InvalidSiteError):
        MoveSite.from_wire({"kind": "R9", "direction": "grow", "locus": []})
    with pytest.raises(InvalidSiteError):
        MoveSite.from_wire({"kind": "R1", "direction": "sideways", "locus": []})


# ── application ──────────────────────────────────────────────────────


def test_apply_move_checks_membership():
    stale = enumerate_sites(TREFOIL, kinds=["R1"], directions=["grow"])[0]
    with pytest.raises(InvalidSiteError):
        apply_move(UNKNOT, stale)


def test_crossing_delta_matches_kind():
    for site in enumerate_sites(TREFOIL, directions=["grow"])[:10]:
        result = apply_move(TREFOIL, site)
        assert result.crossing_count == 3 + DELTA[(site.kind, site.direction)]


def test_free_loop_grow_consumes_loop():
    site = enumerate_sites(UNKNOT)[0]
    grown = apply_move(UNKNOT, site)
    assert grown.free_loops == 0
    assert grown.crossing_count == 1


def test_apply_results_are_valid():
    for d in _seeded_corpus(20):
        for site in enumerate_sites(d)[:8]:
            assert validate(apply_move(d, site)).ok


def test_component_count_preserved():
    for d in _seeded_corpus(20):
        n = trace(d).component_count
        for site in enumerate_sites(d)[:8]:
            assert trace(apply_move(d, site)).component_count == n


def test_tricolor_count_preserved():
    for d in _seeded_corpus(15):
        count = tricolor_count(d).count
        for site in enumerate_sites(d)[:6]:
            assert tricolor_count(apply_move(d, site)).count == count


def test_r3_preserves_crossings_and_faces():
    checked = 0
    for d in _seeded_corpus(60):
        before = trace(d)
        for site in enumerate_sites(d, kinds=["R3"]):
            after_d = apply_move(d, site)
            after = trace(after_d)
            assert after_d.crossing_count == d.crossing_count
            assert after.faces == before.faces
            checked += 1
    assert checked >= 3


def test_r2_grow_keeps_linking_number():
    hopf = catalog_get("hopf").diagram
    before = linking_number(hopf, 0, 1)
    for site in enumerate_sites(hopf, kinds=["R2"], directions=["grow"]):
        assert linking_number(apply_move(hopf, site), 0, 1) == before


# ── inverse pairs ────────────────────────────────────────────────────


@pytest.mark.parametrize("name", catalog_names())
def test_grow_then_reduce_restores_catalog_entry(name):
    d = catalog_get(name).diagram
    want = emit_pd(canonical(d))
    for site in enumerate_sites(d, directions=["grow"]):
        grown = apply_move(d, site)
        back = inverse_site(d, site, grown)
        assert back is not None, site.id
        assert emit_pd(canonical(apply_move(grown, back))) == want


def test_grow_then_reduce_restores_seeded_corpus():
    for d in _seeded_corpus(100):
        want = emit_pd(canonical(d))
        sites = enumerate_sites(d, directions=["grow"])
        # spread coverage across kinds without walking every site
        picks = [s for s in sites if s.kind == "R1"][:2]
        picks += [s for s in sites if s.kind == "R2"][:2]
        for site in picks:
            grown = apply_move(d, site)
            back = inverse_site(d, site, grown)
            assert back is not None, (emit_pd(d), site.id)
            assert emit_pd(canonical(apply_move(grown, back))) == want


def test_slide_inverse_is_a_slide():
    found = 0
    for d in _seeded_corpus(60):
        for site in enumerate_sites(d, kinds=["R3"]):
            after = apply_move(d, site)
            back = inverse_site(d, site, after)
            assert back is not None and back.kind == "R3"
            assert emit_pd(canonical(apply_move(after, back))) == emit_pd(canonical(d))
            found += 1
    assert found >= 3


# ── random walks ─────────────────────────────────────────────────────


def test_walk_zero_moves_is_identity():
    d, path = random_walk(UNKNOT, 0, seed=9)
    assert d == UNKNOT and path == []


def test_walk_deterministic():
    a = random_walk(TREFOIL, 8, seed=42)
    b = random_walk(TREFOIL, 8, seed=42)
    assert a == b


def test_walk_replays_through_apply_move():
    end, path = random_walk(TREFOIL, 6, seed=7)
    current = TREFOIL
    for site in path:
        current = apply_move(current, site)
    assert current == end


def test_walk_path_length():
    _, path = random_walk(UNKNOT, 6, seed=42)
    assert len(path) == 6


def test_walk_policies_differ_by_seedspace():
    any_end, _ = random_walk(TREFOIL, 5, seed=3, policy="any")
    assert validate(any_end).ok


def test_walk_rejects_unknown_policy():
    with pytest.raises(ValueError):
        random_walk(TREFOIL, 1, seed=0, policy="chaotic")
