#!/usr/bin/env python3
"""
Tests for the zeta functions of affine spaces and curves
"""

import itertools

import pytest

from abelian_groups import characters, make_group
from config import SUITE_DEFAULTS
from errors import InvalidArgumentError
from groth_ring import ONE, aff, e0_twist, lefschetz, sym_base
from motivic_zeta import (
    CurveSpec,
    lefschetz_geometric_sum,
    omega,
    sym_affine_line,
    sym_affine_space,
    sym_curve_class,
    zeta_affine_line,
    zeta_affine_space,
    zeta_curve,
    zeta_curve_pieces,
    uncorrected_affine_line_witness,
)
from power_series import PowerSeries, TPoly, one_minus, ps_expand, witness_check

G1 = make_group([1])
G2 = make_group([2])


def _series(fn, order):
    return PowerSeries.from_list([fn(n) for n in range(order + 1)])


def test_sym_affine_line_examples():
    chi = G2.character([1])
    L = lefschetz(G2)
    assert sym_affine_line(3, chi) == aff(chi) ** 2 * L
    assert sym_affine_line(0, chi) == ONE
    assert sym_affine_line(5, G1.character([0])) == lefschetz(G1) ** 5


GROUPS_UP_TO_ORDER_8 = [[1], [2], [3], [4], [2, 2], [5], [6], [7], [8], [2, 4], [2, 2, 2]]


@pytest.mark.parametrize("divisors", GROUPS_UP_TO_ORDER_8)
def test_sym_affine_line_is_periodic_in_r(divisors):
    group = make_group(divisors)
    r = group.order
    for chi in characters(group):
        period = sym_affine_line(r, chi)
        for n in range(2 * r + 1):
            assert sym_affine_line(n + r, chi) == sym_affine_line(n, chi) * period


def test_sym_affine_line_periodicity_example():
    g4 = make_group([4])
    chi = g4.character([1])
    assert sym_affine_line(2, chi) == aff(chi) * aff(g4.character([2]))
    assert sym_affine_line(6, chi) == sym_affine_line(2, chi) * sym_affine_line(4, chi)


def test_zeta_affine_line_example():
    chi = G2.character([1])
    w = zeta_affine_line(chi, G2)
    assert w.num == TPoly({0: 1, 1: aff(chi)})
    assert w.den == one_minus(aff(chi) * lefschetz(G2), 2)


@pytest.mark.parametrize("divisors", SUITE_DEFAULTS["cross_groups"])
def test_zeta_affine_line_cross_multiplication(divisors):
    group = make_group(divisors)
    for chi in characters(group):
        series = _series(lambda n: sym_affine_line(n, chi), 3 * group.order)
        assert witness_check(zeta_affine_line(chi, group), series)


def test_uncorrected_denominator_fails_for_r_above_one():
    g3 = make_group([3])
    chi = g3.character([1])
    series = _series(lambda n: sym_affine_line(n, chi), 9)
    assert not witness_check(uncorrected_affine_line_witness(chi, g3), series)
    trivial = uncorrected_affine_line_witness(G1.character([0]), G1)
    assert witness_check(trivial, _series(lambda n: sym_affine_line(n, G1.character([0])), 3))


def test_sym_affine_space_factors():
    g3 = make_group([3])
    lam = g3.character([1])
    mu = g3.character([2])
    assert sym_affine_space(2, [lam, mu]) == sym_affine_line(2, lam) * sym_affine_line(2, mu)
    assert sym_affine_space(0, [lam, mu]) == ONE


def test_sym_affine_space_rejects_mixed_groups():
    with pytest.raises(InvalidArgumentError):
        sym_affine_space(2, [G2.character([1]), make_group([3]).character([1])])


@pytest.mark.parametrize("divisors", SUITE_DEFAULTS["affine_space_groups"])
def test_zeta_affine_space_cross_multiplication(divisors):
    group = make_group(divisors)
    order = 2 * group.order + 2
    for k in range(1, 4):
        for chars in itertools.combinations_with_replacement(characters(group), k):
            series = _series(lambda n: sym_affine_space(n, chars), order)
            assert witness_check(zeta_affine_space(chars, group), series)


def test_omega():
    assert omega(1, G1) == ONE
    g4 = make_group([4])
    chars = characters(g4)
    assert omega(4, g4) == ONE
    assert omega(3, g4) == aff(chars[1])
    assert omega(1, g4) == aff(chars[1]) * aff(chars[2]) * aff(chars[3])
    with pytest.raises(InvalidArgumentError):
        omega(5, g4)


def test_lefschetz_geometric_sum():
    L = lefschetz(G2)
    assert lefschetz_geometric_sum(0, G2).is_zero()
    assert lefschetz_geometric_sum(3, G2) == 1 + L + L ** 2


def test_curve_spec_decompose():
    spec = CurveSpec(1, make_group([3]))
    assert spec.decompose(3) == (1, 0)
    assert spec.decompose(5) == (3, 0)
    assert spec.decompose(9) == (1, 2)
    with pytest.raises(InvalidArgumentError):
        spec.decompose(2)


@pytest.mark.parametrize("genus", [0, 1, 2, 3])
@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6])
def test_curve_degrees_above_2g_are_covered_once(genus, r):
    spec = CurveSpec(genus, make_group([r]))
    rounds = 5
    hits = [spec.base_degree(i) + r * m for i in range(1, r + 1) for m in range(rounds)]
    assert sorted(hits) == list(range(2 * genus + 1, 2 * genus + r * rounds + 1))
    for i in range(1, r + 1):
        for m in range(rounds):
            assert spec.decompose(spec.base_degree(i) + r * m) == (i, m)
    for n in range(2 * genus + 1):
        with pytest.raises(InvalidArgumentError):
            spec.decompose(n)


def test_curve_spec_ordering_validated():
    with pytest.raises(InvalidArgumentError):
        CurveSpec(0, G2, (G2.character([1]), G2.character([1])))
    with pytest.raises(InvalidArgumentError):
        CurveSpec(-1, G2)


def test_sym_curve_class_examples():
    spec0 = CurveSpec(0, G1)
    L = lefschetz(G1)
    assert sym_curve_class(0, spec0) == ONE
    assert sym_curve_class(1, spec0) == sym_base(1)
    assert sym_curve_class(3, spec0) == sym_base(1) + e0_twist(1, 1) * (1 + L)

    assert sym_curve_class(2, CurveSpec(1, G2)) == sym_base(2)

    chi = G2.character([1])
    assert sym_curve_class(3, CurveSpec(0, G2)) == sym_base(1) + e0_twist(1, 1) * aff(chi) + e0_twist(1, 2)


def test_zeta_curve_expansion_for_genus_zero_trivial_group():
    spec = CurveSpec(0, G1)
    L = lefschetz(G1)
    f = ps_expand(zeta_curve(spec), 4)
    assert f.coeffs[:3] == (ONE, sym_base(1), sym_base(1) + e0_twist(1, 1))
    assert f[3] == sym_base(1) + e0_twist(1, 1) * (1 + L)


@pytest.mark.parametrize("genus", SUITE_DEFAULTS["curve_genera"])
@pytest.mark.parametrize("divisors", SUITE_DEFAULTS["curve_groups"])
def test_zeta_curve_matches_sym_curve_class(genus, divisors):
    spec = CurveSpec(genus, make_group(divisors))
    order = 2 * genus + 3 * spec.r + 2
    expected = _series(lambda n: sym_curve_class(n, spec), order)
    assert ps_expand(zeta_curve(spec), order) == expected


def test_zeta_curve_with_reordered_characters():
    group = make_group([4])
    spec = CurveSpec(0, group, tuple(reversed(characters(group))))
    order = 3 * spec.r + 2
    expected = _series(lambda n: sym_curve_class(n, spec), order)
    assert ps_expand(zeta_curve(spec), order) == expected


def test_curve_pieces_layout():
    spec = CurveSpec(1, G2)
    pieces = zeta_curve_pieces(spec)
    assert len(pieces) == 1 + spec.r * (1 + spec.r)
    assert [shift for _, shift in pieces] == [0, 3, 3, 3, 4, 4, 4]


def test_zeta_curve_denominator_for_trivial_group():
    spec = CurveSpec(2, G1)
    L = lefschetz(G1)
    assert zeta_curve(spec).den == one_minus(1, 1) * one_minus(1, 1) * one_minus(L, 1)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
