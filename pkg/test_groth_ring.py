#!/usr/bin/env python3
"""
Tests for the free ring on the generator alphabet
"""

import pytest
from hypothesis import given, settings

from abelian_groups import characters, make_group
from config import PROPERTY_TEST_CONFIG
from errors import InvalidArgumentError
from groth_ring import (
    ONE,
    ZERO,
    AffLine,
    E0Twist,
    RingElement,
    SymBase,
    aff,
    affine_space_class,
    e0_twist,
    e_m_class,
    element_from_json,
    element_to_json,
    gen,
    lefschetz,
    normalize,
    regular_rep_class,
    render,
    ring_eq,
    sym_base,
    symbol_from_json,
)
from strategies import GROUP, ring_elements

RING_SETTINGS = settings(max_examples=PROPERTY_TEST_CONFIG["ring_cases"], derandomize=True, deadline=None)

G2 = make_group([2])
L = lefschetz(G2)
A1 = aff(G2.character([1]))


def test_square_of_sum():
    assert (L + 1) * (L + 1) == L ** 2 + 2 * L + 1


def test_difference_cancels():
    assert (L - A1) + A1 == L


def test_negative_power_rejected():
    with pytest.raises(InvalidArgumentError):
        L ** -1


def test_zero_and_one():
    assert ZERO.is_zero()
    assert ONE.is_one()
    assert L * 0 == ZERO
    assert L * ONE == L
    assert ring_eq(L ** 0, ONE)
    assert L == L + ZERO
    assert 3 == RingElement.from_int(3)


def test_ring_eq_is_syntactic():
    assert ring_eq(L * A1, A1 * L)
    assert not ring_eq(L, A1)


def test_symbol_order_and_rendering():
    elem = e0_twist(1, 2) + sym_base(3) + A1 + L + 1
    assert render(elem) == "1 + L + A(1) + S3 + E[1,2]"
    assert render(-L ** 2 + 2 * L - 3) == "-3 + 2*L - L^2"
    assert render(ZERO) == "0"
    assert str(AffLine(G2.character([0]))) == "L"


def test_sym_base_zero_is_one():
    assert sym_base(0) == ONE
    with pytest.raises(InvalidArgumentError):
        SymBase(0)
    with pytest.raises(InvalidArgumentError):
        E0Twist(0, 1)


def test_regular_rep_class():
    assert regular_rep_class(G2) == L * A1
    assert regular_rep_class(make_group([1])) == lefschetz(make_group([1]))
    g3 = make_group([3])
    chars = characters(g3)
    assert regular_rep_class(g3) == aff(chars[0]) * aff(chars[1]) * aff(chars[2])


def test_affine_space_class_repeats_characters():
    assert affine_space_class([G2.character([1])] * 3) == A1 ** 3
    assert affine_space_class([]) == ONE


def test_e_m_class():
    assert e_m_class(1, 0, G2) == e0_twist(1, 1)
    assert e_m_class(2, 2, G2) == e0_twist(2, 1) * L ** 2 * A1 ** 2
    with pytest.raises(InvalidArgumentError):
        e_m_class(3, 1, G2)
    with pytest.raises(InvalidArgumentError):
        e_m_class(1, -1, G2)


def test_symbols_and_degree():
    elem = L ** 2 * sym_base(2) + e0_twist(1, 1)
    assert elem.symbols() == {AffLine(G2.trivial_character), SymBase(2), E0Twist(1, 1)}
    assert elem.total_degree() == 3


def test_json_round_trip_is_canonical():
    elem = 3 * L ** 2 - A1 * sym_base(4) + e0_twist(2, 1) + 7
    data = element_to_json(elem)
    assert data[0] == {"coef": "7", "mon": []}
    assert element_from_json(data, G2) == elem
    assert element_to_json(element_from_json(data, G2)) == data


def test_symbol_from_json_validates_against_the_group():
    assert symbol_from_json({"kind": "e0", "i": 2, "j": 2}, G2) == E0Twist(2, 2)
    with pytest.raises(InvalidArgumentError, match=r"\[1, 2\]"):
        symbol_from_json({"kind": "e0", "i": 3, "j": 1}, G2)
    with pytest.raises(InvalidArgumentError, match="malformed"):
        symbol_from_json({"kind": "symc"}, G2)
    with pytest.raises(InvalidArgumentError, match="unknown generator kind"):
        symbol_from_json({"kind": "torus"}, G2)


@pytest.mark.parametrize("data", [
    {"coef": "1", "mon": []},
    [{"mon": []}],
    [{"coef": "one", "mon": []}],
    [{"coef": "1", "mon": [{"gen": {"kind": "aff", "chi": [0]}}]}],
    [{"coef": "1", "mon": {"gen": {"kind": "symc", "n": 1}, "exp": 1}}],
])
def test_element_from_json_rejects_malformed_input(data):
    with pytest.raises(InvalidArgumentError):
        element_from_json(data, G2)


@RING_SETTINGS
@given(ring_elements(), ring_elements(), ring_elements())
def test_commutative_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@settings(max_examples=200, derandomize=True, deadline=None)
@given(ring_elements())
def test_canonical_form_idempotent(a):
    assert normalize(normalize(a)) == normalize(a)
    assert normalize(a).terms() == a.terms()
    assert element_from_json(element_to_json(a), GROUP) == a


def test_gen_matches_from_symbol():
    sym = SymBase(5)
    assert gen(sym) == RingElement.from_symbol(sym)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
