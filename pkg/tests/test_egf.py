from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from gencluster.core import EULER_DESCENT, UNIVERSAL, DiagramShape, Pattern, joint
from gencluster.egf import (EgfSeries, coefficient_at, gf_closed, gf_from_provider,
                            series_add, series_geom_inverse, series_mul)
from gencluster.families import GAMMA_TAU, a_k3_gc_poly
from gencluster.oracle import distribution_polynomial
from gencluster.polynomial import MultiPoly

A23 = Pattern.from_word("162534", 2)
A33 = Pattern.from_word("167258349", 3)
ORDER = 8


def P(s, nvars=None):
    return MultiPoly.parse(s, nvars=nvars)


def test_mul_examples():
    t = EgfSeries.from_terms({1: 1}, 4)
    assert coefficient_at(t * t, 2) == MultiPoly.const(2)
    one = EgfSeries.one(4)
    f = EgfSeries([1, 2, 3, 4, 5])
    assert f * one == f
    cosh = EgfSeries.from_terms({0: 1, 2: 1, 4: 1}, 4)
    assert coefficient_at(cosh * cosh, 4) == MultiPoly.const(comb(4, 0) + comb(4, 2) + comb(4, 4))


def test_geom_inverse_examples():
    h = series_geom_inverse(EgfSeries.from_terms({1: 1}, 6))
    assert [c.constant_term() for c in h] == [factorial(n) for n in range(7)]
    assert series_geom_inverse(EgfSeries.zero(5)) == EgfSeries.one(5)
    with pytest.raises(ValueError):
        series_geom_inverse(EgfSeries.one(3))


def test_geom_inverse_of_gc_series():
    terms = {2 * n: a_k3_gc_poly(2, n).shift(-1) for n in range(1, 5)}
    h = series_geom_inverse(EgfSeries.from_terms(terms, 8))
    assert h[8] == P("1337+47x+x^2")


def test_order_mismatch():
    with pytest.raises(ValueError):
        EgfSeries.one(3) * EgfSeries.one(4)
    with pytest.raises(IndexError):
        coefficient_at(EgfSeries.one(3), 4)


def test_series_add():
    f = EgfSeries([1, 2, 3])
    assert series_add(f, EgfSeries.zero(2)) == f


series_st = st.lists(st.dictionaries(st.tuples(st.integers(0, 2)), st.integers(-5, 5),
                                     max_size=3), min_size=ORDER + 1, max_size=ORDER + 1).map(
    lambda cs: EgfSeries([MultiPoly(c, 1) for c in cs], ORDER, 1))


@given(series_st)
def test_geom_inverse_identity(g):
    g = EgfSeries([0] + list(g.coeffs[1:]), ORDER, 1)
    h = series_geom_inverse(g)
    assert (EgfSeries.one(ORDER) - g) * h == EgfSeries.one(ORDER)


@given(series_st, series_st, series_st)
@settings(max_examples=40)
def test_mul_commutative_associative(a, b, c):
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))


def test_gf_examples():
    s = gf_closed(1, 1, 2, [A23], EULER_DESCENT, 8)
    assert s[8] == P("1358+27x")
    s = sum((gf_closed(0, j, 3, [GAMMA_TAU], EULER_DESCENT, 6) for j in (1, 2)),
            gf_closed(0, 0, 3, [GAMMA_TAU], EULER_DESCENT, 6))
    assert s[6] == P("18+x")
    g = joint(Pattern.from_word("12", 1), Pattern.from_word("123", 1))
    assert gf_closed(0, 0, 1, g, UNIVERSAL, 3)[3] == P("1+4x+x^2y", 2)


def test_family_and_engine_sources_agree():
    for i, j in [(0, 0), (0, 1), (1, 0), (1, 1)]:
        assert gf_closed(i, j, 2, [A23], EULER_DESCENT, 10, "family") == \
            gf_closed(i, j, 2, [A23], EULER_DESCENT, 10, "engine")


def test_source_errors():
    with pytest.raises(ValueError):
        gf_closed(0, 0, 2, [Pattern.from_word("1324", 2)], EULER_DESCENT, 4, "family")
    with pytest.raises(ValueError):
        gf_closed(0, 0, 2, [A23], EULER_DESCENT, 4, "magic")


def test_custom_provider():
    # a provider with GC = 1 at n = 1 only gives 1/(1 - t) = sum n! t^n/n!
    prov = lambda kind, n, i=0, j=0: MultiPoly.const(1 if n == 1 else 0)
    s = gf_from_provider(0, 0, 1, prov, 5)
    assert [c.constant_term() for c in s] == [factorial(n) for n in range(6)]


@pytest.mark.parametrize("i,j,k,pat", [(0, 0, 2, A23), (0, 1, 2, A23), (1, 0, 2, A23),
                                       (1, 1, 2, A23), (0, 0, 3, A33), (0, 2, 3, GAMMA_TAU)])
def test_theorem_equals_oracle_small(i, j, k, pat):
    order = 10
    s = gf_closed(i, j, k, [pat], EULER_DESCENT, order)
    for m in range(order + 1):
        if (m - i - j) % k or m < i + j:
            assert not s[m]
            continue
        n = (m - i - j) // k
        if m == 0:
            continue
        assert s[m] == distribution_polynomial(DiagramShape(i, k, n, j), EULER_DESCENT, [pat])
