"""Invariant values pinned by hand and by independent oracles."""

import pytest

import oracles
from knotlab.catalog import catalog_get, catalog_names
from knotlab.diagram import mirror, parse_pd, trace
from knotlab.errors import BadComponentError, BudgetExceededError
from knotlab.invariants import (
    crossing_signs,
    jones_polynomial,
    kauffman_bracket,
    linking_matrix,
    linking_number,
    signs_and_writhe,
    tricolor_count,
)
from knotlab.laurent import LaurentPoly
from knotlab.moves import random_walk


def _diagrams_for_oracle_checks():
    out = [(name, catalog_get(name).diagram) for name in catalog_names()]
    for name in catalog_names():
        base = catalog_get(name).diagram
        for seed in (3, 17):
            d, _ = random_walk(base, 3, seed=seed)
            out.append((f"{name}+walk{seed}", d))
    return out


CORPUS = _diagrams_for_oracle_checks()


# ── signs and writhe ─────────────────────────────────────────────────


def test_trefoil_writhe():
    d = catalog_get("trefoil").diagram
    data = signs_and_writhe(d)
    assert data.sign_of_crossing == (1, 1, 1)
    assert data.writhe == 3


def test_unknot_writhe():
    assert signs_and_writhe(parse_pd("O")).writhe == 0


def test_figure_eight_writhe():
    assert signs_and_writhe(catalog_get("figure_eight").diagram).writhe == 0


def test_mirror_negates_writhe():
    for name in ("trefoil", "figure_eight", "hopf", "solomon"):
        d = catalog_get(name).diagram
        assert signs_and_writhe(mirror(d)).writhe == -signs_and_writhe(d).writhe


@pytest.mark.parametrize("name,d", CORPUS)
def test_signs_agree_with_exhaustive_orientation(name, d):
    assert signs_and_writhe(d).sign_of_crossing in oracles.orientations_brute(d)


def test_crossing_signs_alias():
    d = catalog_get("trefoil").diagram
    assert crossing_signs(d) == (1, 1, 1)


# ── tricoloring ──────────────────────────────────────────────────────


@pytest.mark.parametrize(
    "name,count,colorable",
    [
        ("unknot", 3, False),
        ("trefoil", 9, True),
        ("figure_eight", 3, False),
        ("hopf", 3, False),
    ],
)
def test_tricolor_catalog_values(name, count, colorable):
    rep = tricolor_count(catalog_get(name).diagram)
    assert rep.count == count
    assert rep.tricolorable is colorable


def test_tricolor_witness_is_valid_and_multicolored():
    d = catalog_get("trefoil").diagram
    rep = tricolor_count(d)
    assert rep.witness is not None
    colors = rep.witness
    arc_of = trace(d).arcs.arc_of_edge
    assert len(set(colors.values())) > 1
    for cr in d.crossings:
        seen = {colors[arc_of[cr.quad[1]]], colors[arc_of[cr.quad[0]]], colors[arc_of[cr.quad[2]]]}
        assert len(seen) != 2


def test_tricolor_no_witness_when_not_colorable():
    assert tricolor_count(catalog_get("figure_eight").diagram).witness is None


@pytest.mark.parametrize("name,d", CORPUS)
def test_tricolor_matches_brute_force(name, d):
    if trace(d).arcs.arc_count > 8:
        pytest.skip("more than 8 arcs")
    count, colorable = oracles.tricolor_brute(d)
    rep = tricolor_count(d)
    assert rep.count == count
    assert rep.tricolorable == colorable


# ── linking ──────────────────────────────────────────────────────────


def test_linking_hopf():
    assert abs(linking_number(catalog_get("hopf").diagram, 0, 1)) == 1


def test_linking_solomon():
    assert abs(linking_number(catalog_get("solomon").diagram, 0, 1)) == 2


def test_linking_split_union():
    assert linking_number(parse_pd("O O"), 0, 1) == 0


def test_linking_agrees_with_brute_force():
    for name in ("hopf", "solomon"):
        d = catalog_get(name).diagram
        assert linking_number(d, 0, 1) == oracles.linking_brute(d, 0, 1)


def test_linking_matrix_lists_unordered_pairs():
    assert linking_matrix(catalog_get("solomon").diagram) == {(0, 1): -2}
    assert linking_matrix(catalog_get("trefoil").diagram) == {}
    assert linking_matrix(parse_pd("O O")) == {(0, 1): 0}


def test_linking_rejects_bad_components():
    d = catalog_get("hopf").diagram
    with pytest.raises(BadComponentError):
        linking_number(d, 0, 0)
    with pytest.raises(BadComponentError):
        linking_number(d, 0, 5)


def test_linking_knot_has_no_pair():
    with pytest.raises(BadComponentError):
        linking_number(catalog_get("trefoil").diagram, 0, 1)


# ── bracket ──────────────────────────────────────────────────────────


def test_bracket_unknot():
    assert kauffman_bracket(parse_pd("O")) == LaurentPoly.one("A")


def test_bracket_positive_kink():
    # single positive kink: A*delta + A^(-1) collapses to -A^3
    d = parse_pd("X(1,2,2,1)")
    assert signs_and_writhe(d).writhe == 1
    assert kauffman_bracket(d).display() == "-A^3"


def test_bracket_negative_kink():
    d = parse_pd("X(1,1,2,2)")
    assert signs_and_writhe(d).writhe == -1
    assert kauffman_bracket(d).display() == "-A^(-3)"


def test_bracket_trefoil():
    d = catalog_get("trefoil").diagram
    assert kauffman_bracket(d).display() == "-A^5 - A^(-3) + A^(-7)"


@pytest.mark.parametrize("name,d", CORPUS)
def test_bracket_matches_skein_oracle(name, d):
    if d.crossing_count > 8:
        pytest.skip("too many crossings for the oracle")
    assert kauffman_bracket(d) == oracles.bracket_by_skein(d)


def test_bracket_budget_guard():
    d, _ = random_walk(catalog_get("trefoil").diagram, 4, seed=5)
    with pytest.raises(BudgetExceededError) as exc:
        kauffman_bracket(d, budget=d.crossing_count - 1)
    assert "simplify" in str(exc.value)


# ── jones ────────────────────────────────────────────────────────────


def test_jones_unknot_is_one():
    assert jones_polynomial(parse_pd("O")) == LaurentPoly.one("t")


def test_jones_trefoil():
    d = catalog_get("trefoil").diagram
    assert jones_polynomial(d).display() == "-t^4 + t^3 + t"


def test_jones_hopf():
    d = catalog_get("hopf").diagram
    assert jones_polynomial(d).display() == "-t^(5/2) - t^(1/2)"


def test_jones_mirror_is_inverted_variable():
    for name in ("trefoil", "figure_eight", "hopf"):
        d = catalog_get(name).diagram
        assert jones_polynomial(mirror(d)) == jones_polynomial(d).inverted()


def test_jones_distinguishes_trefoil_chirality():
    d = catalog_get("trefoil").diagram
    assert jones_polynomial(d) != jones_polynomial(mirror(d))


def test_jones_trefoil_differs_from_unknot():
    assert jones_polynomial(catalog_get("trefoil").diagram) != LaurentPoly.one("t")


@pytest.mark.parametrize("name,d", CORPUS)
def test_jones_matches_skein_oracle(name, d):
    if d.crossing_count > 8:
        pytest.skip("too many crossings for the oracle")
    assert jones_polynomial(d) == oracles.jones_by_skein(d)


def test_jones_kink_independent():
    # both kinked unknots normalize to 1
    for text in ("X(1,2,2,1)", "X(1,1,2,2)"):
        assert jones_polynomial(parse_pd(text)) == LaurentPoly.one("t")
