"""Exact Laurent-polynomial arithmetic, display, and serialization."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotlab.laurent import LaurentPoly

# small exponent/coefficient pools keep printed failures readable
polys = st.builds(
    lambda pairs, var: LaurentPoly.from_terms(var, dict(pairs)),
    st.lists(
        st.tuples(st.integers(-12, 12), st.integers(-9, 9)), max_size=5
    ),
    st.sampled_from(["A", "t"]),
)


def a(k, coef=1):
    return LaurentPoly.a_power(k, coef)


# ── construction and equality ────────────────────────────────────────


def test_zero_terms_dropped():
    p = LaurentPoly.from_terms("A", {3: 0, 1: 2})
    assert p == LaurentPoly.from_terms("A", {1: 2})


def test_zero_is_falsy():
    assert not LaurentPoly.zero("A")
    assert LaurentPoly.one("A")


def test_a_power_round_trip():
    p = a(5, 3) + a(-2, -1)
    assert p.a_powers() == {5: 3, -2: -1}


# ── ring axioms ──────────────────────────────────────────────────────


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_addition_commutes(p, q):
    q = LaurentPoly(p.variable, q.terms)
    assert p + q == q + p


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_multiplication_commutes(p, q):
    q = LaurentPoly(p.variable, q.terms)
    assert p * q == q * p


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_distributive(p, q, r):
    q = LaurentPoly(p.variable, q.terms)
    r = LaurentPoly(p.variable, r.terms)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_multiplication_associates(p, q, r):
    q = LaurentPoly(p.variable, q.terms)
    r = LaurentPoly(p.variable, r.terms)
    assert (p * q) * r == p * (q * r)


@settings(max_examples=40, deadline=None)
@given(polys)
def test_additive_inverse(p):
    assert p + (-p) == LaurentPoly.zero(p.variable)


@settings(max_examples=40, deadline=None)
@given(polys)
def test_one_is_identity(p):
    assert p * LaurentPoly.one(p.variable) == p


def test_integer_scalar_multiplication():
    p = a(2) + a(-2)
    assert 3 * p == p + p + p


# ── substitution ─────────────────────────────────────────────────────


def test_substitute_a_to_t_maps_exponents():
    # A^k becomes t^(-k/4)
    p = a(4)
    q = p.substitute_a_to_t()
    assert q.variable == "t"
    assert q.display() == "t^(-1)"


def test_substitution_preserves_arithmetic():
    p, q = a(3, 2), a(-5, 7)
    lhs = (p * q).substitute_a_to_t()
    rhs = p.substitute_a_to_t() * q.substitute_a_to_t()
    assert lhs == rhs


def test_inverted_flips_variable_power():
    p = LaurentPoly.from_terms("t", {16: -1, 12: 1, 4: 1})  # -t^4+t^3+t
    assert p.inverted() == LaurentPoly.from_terms("t", {-16: -1, -12: 1, -4: 1})


# ── display ──────────────────────────────────────────────────────────


@pytest.mark.parametrize(
    "terms,var,text",
    [
        ({16: -1, 12: 1, 4: 1}, "t", "-t^4 + t^3 + t"),
        ({-5: -1, 3: -1, 7: 1}, "A", "-A^5 - A^(-3) + A^(-7)"),
        ({10: -1, 2: -1}, "t", "-t^(5/2) - t^(1/2)"),
        ({0: 1}, "t", "1"),
        ({0: -3}, "A", "-3"),
        ({}, "t", "0"),
        ({4: 1}, "t", "t"),
        ({-4: 2}, "t", "2t^(-1)"),
        ({-3: 1}, "A", "A^3"),
        ({1: 1}, "t", "t^(1/4)"),
    ],
)
def test_display_strings(terms, var, text):
    assert LaurentPoly.from_terms(var, terms).display() == text


def test_display_orders_by_descending_power():
    p = LaurentPoly.from_terms("t", {4: 1, 16: -1, 12: 1})
    assert p.display() == "-t^4 + t^3 + t"
    q = a(-7) + a(-3, -1) + a(5, -1)
    assert q.display() == "-A^5 - A^(-3) + A^(-7)"


# ── wire format ──────────────────────────────────────────────────────


def test_wire_round_trip():
    p = LaurentPoly.from_terms("t", {16: -1, 12: 1, 4: 1})
    assert LaurentPoly.from_wire(p.to_wire()) == p


def test_wire_terms_sorted_ascending():
    p = a(5, -1) + a(-3, -1) + a(-7, 1)
    wire = p.to_wire()
    exps = [t["exp_quarters"] for t in wire["terms"]]
    assert exps == sorted(exps)
    assert wire["variable"] == "A"
    assert wire["text"] == "-A^5 - A^(-3) + A^(-7)"


@settings(max_examples=40, deadline=None)
@given(polys)
def test_wire_round_trip_property(p):
    assert LaurentPoly.from_wire(p.to_wire()) == p


def test_variable_mismatch_rejected():
    with pytest.raises(ValueError):
        a(1) + LaurentPoly.one("t")
