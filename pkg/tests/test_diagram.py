import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bettycone.cone2 import extremal_rays
from bettycone.diagram import (
    BettiDiagram,
    betti_polynomials,
    combine,
    hilbert_function,
    hilbert_numerator,
    hk_check,
    membership_L2,
    pure_type,
    twist,
)
from bettycone.errors import EmptySupportError, InvalidArgument
from bettycone.multipoly import LaurentPoly

T = LaurentPoly.monomial((1, 0))
U = LaurentPoly.monomial((0, 1))


def brute_force_hk(D):
    """Independent HK oracle: enumerate every fiber of every coordinate projection."""
    bad = set()
    degs = {deg for (_, deg), _ in D.entries()}
    for k in range(D.nvars):
        for fiber in {d[:k] + d[k + 1:] for d in degs}:
            s = sum((-1) ** h * v for (h, d), v in D.entries() if d[:k] + d[k + 1:] == fiber)
            if s:
                bad.add((k + 1, fiber))
    return bad


def test_betti_polynomials(e23, bs23):
    assert betti_polynomials(BettiDiagram(2, 2)) == [LaurentPoly.zero(2)] * 3
    B0, B1, B2 = betti_polynomials(e23)
    assert B0 == T ** 2 + T * U + U ** 2
    assert B1 == T ** 4 + T ** 3 * U + T ** 2 * U ** 2 + T * U ** 3 + U ** 4
    assert B2 == T ** 4 * U ** 3 + T ** 3 * U ** 4
    B0, B1, B2 = betti_polynomials(bs23)
    assert B0 == T ** 4 + T ** 2 * U ** 2 + U ** 4
    assert B1 == T ** 6 + T ** 4 * U ** 2 + T ** 3 * U ** 3 + T ** 2 * U ** 4 + U ** 6
    assert B2 == T ** 6 * U ** 3 + T ** 3 * U ** 6
    assert BettiDiagram.from_polynomials(betti_polynomials(e23)) == e23


def test_hk_on_known_diagrams(e23, bs23, e121):
    assert hk_check(e23) == []
    assert hk_check(bs23) == []
    assert hk_check(e121) == []
    assert brute_force_hk(e121) == set()


def test_hk_detects_deleted_entry(e23):
    viol = hk_check(e23.without(0, (2, 0)))
    assert (2, (2,), Fraction(-1)) in viol
    assert {(k, f) for k, f, _ in viol} == brute_force_hk(e23.without(0, (2, 0)))


def test_hk_matches_brute_force_on_random_virtual_diagrams():
    rng = random.Random(5)
    for _ in range(50):
        entries = {(rng.randint(0, 2), (rng.randint(-2, 2), rng.randint(-2, 2))): rng.randint(-2, 2)
                   for _ in range(6)}
        D = BettiDiagram(2, 2, entries)
        assert {(k, f) for k, f, _ in hk_check(D)} == brute_force_hk(D)


def test_pure_type(e23, bs23):
    pt = pure_type(e23)
    assert (pt.d, pt.e, pt.m, pt.q, pt.p) == ((2, 4, 7), (2, 3), 1, 2, 3)
    pt = pure_type(bs23)
    assert (pt.d, pt.e) == ((4, 6, 9), (2, 3))
    mixed = BettiDiagram.from_generators([[(0, 0), (1, 0)], [(2, 0)], [(3, 0)]])
    assert pure_type(mixed) is None
    with pytest.raises(EmptySupportError):
        pure_type(BettiDiagram(2, 2))


def test_twist(e23):
    assert twist(e23, (0, 0)) == e23
    assert twist(e23, (1, 1)).degrees(0) == [(1, 3), (2, 2), (3, 1)]
    assert twist(twist(e23, (3, -2)), (-3, 2)) == e23
    with pytest.raises(InvalidArgument):
        twist(e23, (1, 1, 1))


def test_combine(e121):
    assert combine([(1, (0, 0, 0))], e121) == e121
    shifted = combine([(1, (2, 1, 0)), (1, (0, 2, 1)), (1, (1, 0, 2)), (-1, (1, 1, 1))], e121)
    assert shifted.is_nonnegative()
    virtual = combine([(1, (0, 0, 0)), (-2, (1, 0, 0))], e121)
    assert not virtual.is_nonnegative()
    assert not virtual.is_module_candidate()


@given(st.lists(st.tuples(st.integers(-3, 3), st.tuples(st.integers(-2, 2), st.integers(-2, 2))),
                max_size=4))
def test_hk_is_twist_invariant_and_numerator_is_linear(terms):
    rng = random.Random(len(terms))
    base = BettiDiagram.from_generators([[(0, 0), (1, 1)], [(2, 0)], [(1, 3)]])
    a = (rng.randint(-2, 2), rng.randint(-2, 2))
    shifted = {(k, f[0] + (a[1] if k == 1 else a[0]),): s for k, f, s in hk_check(base)}
    assert {(k, f[0]): s for k, f, s in hk_check(twist(base, a))} == {
        (k, f): s for (k, f), s in shifted.items()}
    expected = LaurentPoly.zero(2)
    for c, shift in terms:
        expected = expected + hilbert_numerator(base).shift(shift).scale(c)
    assert hilbert_numerator(combine(terms, base)) == expected


def test_hilbert_numerator(e23, bs23):
    assert hilbert_numerator(BettiDiagram(2, 2)) == LaurentPoly.zero(2)
    assert hilbert_numerator(e23).evaluate((1, 1)) == 0
    h = hilbert_function(bs23, 9)
    quotient = LaurentPoly(2, h)
    # the numerator is divisible by (1-t)(1-u) with a finitely supported quotient
    assert quotient * (1 - T) * (1 - U) == hilbert_numerator(bs23)


def test_hilbert_function_free_module():
    D = BettiDiagram(2, 2, {(0, (0, 0)): 1})
    h = hilbert_function(D, (3, 4))
    assert len(h) == 20 and set(h.values()) == {1}


def test_hilbert_function_equivariant(e23):
    h = hilbert_function(e23, 7)
    assert all(v == 0 for (i, j), v in h.items() if i + j >= 6)
    # values computed by hand from the alternating sums of generators below each degree
    assert h[(0, 0)] == 0
    assert h[(1, 1)] == 1
    assert [h[(3 - j, j)] for j in range(4)] == [1, 2, 2, 1]
    assert [h[(4 - j, j)] for j in range(5)] == [0, 1, 2, 1, 0]
    assert sum(h.values()) == 15


def test_hilbert_function_box_too_small(e23):
    with pytest.raises(InvalidArgument):
        hilbert_function(e23, 3)


def test_hilbert_vanishing_for_ray_diagrams():
    for e1, e2 in [(2, 3), (3, 4), (2, 5), (4, 6), (3, 5)]:
        for ray in extremal_rays(e1, e2):
            D = ray.diagram
            d2 = pure_type(D).d[2]
            h = hilbert_function(D, d2)
            assert all(v == 0 for deg, v in h.items() if sum(deg) >= d2 - 1)
            assert all(v >= 0 for v in h.values())


def test_membership(e23, bs23):
    assert membership_L2(betti_polynomials(e23), 2, 3)
    assert membership_L2(betti_polynomials(bs23), 2, 3)
    B0, B1, B2 = betti_polynomials(e23)
    assert not membership_L2((B0, B1 + T * U ** 3, B2), 2, 3)
    with pytest.raises(InvalidArgument):
        membership_L2((B0 + 1, B1, B2), 2, 3)
    with pytest.raises(InvalidArgument):
        membership_L2((B0, B1, B2), 3, 2)


def test_membership_invariant_under_twist_and_scaling(e23):
    for a in itertools.product(range(-2, 3), repeat=2):
        polys = betti_polynomials(twist(e23, a).scaled(Fraction(5, 3)))
        assert membership_L2(polys, 2, 3)


def test_json_round_trip(e23):
    D = e23.scaled(Fraction(-1, 2))
    data = D.to_json()
    assert data["entries"][0] == {"h": 0, "deg": [0, 2], "mult": "-1/2"}
    assert BettiDiagram.from_json(data) == D
