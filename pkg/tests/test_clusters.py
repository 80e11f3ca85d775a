from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from gencluster.clusters import (cluster_polynomial, decomposition_weight,
                                 enumerate_marked_fillings, generalized_cluster_polynomial,
                                 is_cluster_marking, mark_schemes)
from gencluster.core import (BOTTOM_INCREASING, EULER_DESCENT, ROWS_INCREASING, UNIVERSAL,
                             DiagramShape, Filling, Pattern, PatternSet, joint)
from gencluster.egf import gf_closed
from gencluster.oracle import distribution_polynomial
from gencluster.polynomial import MultiPoly

A23 = Pattern.from_word("162534", 2)
A33 = Pattern.from_word("167258349", 3)
P22 = Pattern.from_word("1234", 2)
Q1324 = Pattern.from_word("1324", 2)


def P(s, nvars=None):
    return MultiPoly.parse(s, nvars=nvars)


def test_permutation_cluster_examples():
    assert cluster_polynomial(1, 5, [Pattern.from_word("132", 1)]) == P("3x^2")
    assert cluster_polynomial(1, 7, [Pattern.from_word("1234", 1)]) == P("x^2+2x^3+x^4")
    assert cluster_polynomial(2, 3, [A23]) == P("x")
    assert cluster_polynomial(2, 2, [A23]) == MultiPoly({}, 1)


def test_generalized_examples():
    assert generalized_cluster_polynomial("GC", 0, 0, 3, 3, [A33], EULER_DESCENT) == P("1+x")
    assert generalized_cluster_polynomial("GEC", 0, 1, 2, 3, [A23], EULER_DESCENT) == \
        P("-1-3x")
    assert generalized_cluster_polynomial("GSEC", 1, 1, 2, 3, [A23], EULER_DESCENT) == P("1+3x")


def test_boundary_conventions():
    for kind, i, j, want in [("GSC", 1, 0, 1), ("GEC", 0, 1, 1), ("GSEC", 1, 1, -1)]:
        assert generalized_cluster_polynomial(kind, i, j, 2, 0, [A23], EULER_DESCENT) == \
            MultiPoly.const(want)


def test_kind_checks():
    with pytest.raises(ValueError):
        generalized_cluster_polynomial("GSC", 0, 0, 2, 2, [A23], EULER_DESCENT)
    with pytest.raises(ValueError):
        generalized_cluster_polynomial("XX", 0, 0, 2, 2, [A23], EULER_DESCENT)
    with pytest.raises(ValueError):
        generalized_cluster_polynomial("GC", 0, 0, 3, 2, [A23], EULER_DESCENT)
    with pytest.raises(ValueError):
        generalized_cluster_polynomial("GC", 0, 0, 2, 2, [A23], ROWS_INCREASING, method="le")


def test_marked_objects_example():
    f = Filling.from_word(DiagramShape(0, 1, 8), [1, 5, 4, 7, 8, 2, 6, 3])
    g = PatternSet.of(Pattern.from_word("132", 1))
    marked = [m for ff, m in enumerate_marked_fillings(DiagramShape(0, 1, 8), [g], UNIVERSAL)
              if ff == f]
    assert len(marked) == 4


def _positions(size, sets):
    return [(s, p.width) for st_ in sets for p in st_.members
            for s in range(1, size - p.width + 2)]


@pytest.mark.parametrize("sets", [
    [PatternSet.of(A23)],
    [PatternSet.of(Pattern.from_word("12", 1), Pattern.from_word("123", 1))],
    list(joint(Pattern.from_word("1423", 2), A23)),
])
@pytest.mark.parametrize("size", range(2, 7))
def test_mark_schemes_match_subset_filter(sets, size):
    pos = [(s, p.width, p, st_.variable_index) for st_ in sets for p in st_.members
           for s in range(1, size - p.width + 2)]
    want = set()
    for r in range(1, len(pos) + 1):
        for sub in combinations(pos, r):
            if is_cluster_marking([(s, w) for s, w, _, _ in sub], 1, size):
                want.add(frozenset((s, p, v) for s, _, p, v in sub))
    got = [frozenset((m.start, m.pattern, m.variable) for m in sc.marks)
           for sc in mark_schemes(size, sets)]
    assert len(got) == len(set(got))
    assert set(got) == want


def test_is_cluster_marking():
    assert is_cluster_marking([(1, 3), (3, 3)], 1, 5)
    assert not is_cluster_marking([(1, 2), (3, 2)], 1, 4)
    assert not is_cluster_marking([(2, 3)], 1, 4)
    assert not is_cluster_marking([], 1, 1)


# engine (linear extensions) against brute force over every filling

CASES = []
for rel in (EULER_DESCENT, BOTTOM_INCREASING):
    for pats in ([A23], [P22], [Q1324], [A23, P22]):
        for kind, i, j in [("GC", 0, 0), ("GSC", 1, 0), ("GEC", 0, 1), ("GSEC", 1, 1)]:
            for n in range(0 if kind != "GC" else 1, 5):
                if i + j + 2 * n <= 9:
                    CASES.append((rel, tuple(pats), kind, i, j, 2, n))
    for kind, i, j in [("GC", 0, 0), ("GEC", 0, 2), ("GSC", 2, 0)]:
        CASES.append((rel, (A33,), kind, i, j, 3, 2))
CASES.append((EULER_DESCENT, (A23,), "GC", 0, 0, 2, 5))
CASES.append((EULER_DESCENT, (A33,), "GC", 0, 0, 3, 3))


@pytest.mark.parametrize("rel,pats,kind,i,j,k,n", CASES)
def test_engine_matches_brute_force(rel, pats, kind, i, j, k, n):
    gs = [PatternSet.of(*pats)]
    le = generalized_cluster_polynomial(kind, i, j, k, n, gs, rel, method="le")
    brute = generalized_cluster_polynomial(kind, i, j, k, n, gs, rel, method="brute")
    assert le == brute


def test_joint_engine_matches_brute_force():
    gs = joint(Pattern.from_word("1423", 2), A23)
    for kind, i, j, n in [("GC", 0, 0, 3), ("GC", 0, 0, 4), ("GEC", 0, 1, 3)]:
        assert generalized_cluster_polynomial(kind, i, j, 2, n, gs, EULER_DESCENT) == \
            generalized_cluster_polynomial(kind, i, j, 2, n, gs, EULER_DESCENT, method="brute")


@pytest.mark.parametrize("k,n", [(k, n) for k in (1, 2, 3) for n in range(1, 6) if k * n <= 9])
def test_universal_gc_is_c(k, n):
    pat = Pattern(tuple(tuple(range(c * k + 1, c * k + k + 1)) for c in range(2)))
    other = Pattern.from_word([1, 3, 2] if k == 1 else
                              list(range(1, k)) + [k + 1, k] + list(range(k + 2, 2 * k + 1)), k)
    for pats in ([pat], [pat, other]):
        c = cluster_polynomial(k, n, pats)
        assert generalized_cluster_polynomial("GC", 0, 0, k, n, pats, UNIVERSAL) == c
        assert generalized_cluster_polynomial("GC", 0, 0, k, n, pats, UNIVERSAL,
                                              method="brute") == c


def test_rows_relation_uses_brute_force():
    gs = [PatternSet.of(P22)]
    got = generalized_cluster_polynomial("GC", 0, 0, 2, 3, gs, ROWS_INCREASING)
    assert got == generalized_cluster_polynomial("GC", 0, 0, 2, 3, gs, ROWS_INCREASING,
                                                 method="brute")


@pytest.mark.parametrize("n", range(1, 6))
def test_downup_sign_identities(n):
    g = [A23]
    gc = generalized_cluster_polynomial("GC", 0, 0, 2, n, g, EULER_DESCENT)
    assert generalized_cluster_polynomial("GSC", 1, 0, 2, n, g, EULER_DESCENT) == -gc
    gec = generalized_cluster_polynomial("GEC", 0, 1, 2, n, g, EULER_DESCENT)
    assert generalized_cluster_polynomial("GSEC", 1, 1, 2, n, g, EULER_DESCENT) == -gec
    assert gc.constant_term() == (-1) ** (n - 1)


@pytest.mark.parametrize("shape", [DiagramShape(0, 2, 4), DiagramShape(1, 2, 3, 1),
                                   DiagramShape(0, 3, 3, 2)])
def test_marked_fillings_shift_identity(shape):
    pat = A23 if shape.height == 2 else A33
    marked = {}
    for _, marks in enumerate_marked_fillings(shape, [pat], EULER_DESCENT):
        e = (len(marks),)
        marked[e] = marked.get(e, 0) + 1
    marked = MultiPoly(marked, 1)
    assert marked == distribution_polynomial(shape, EULER_DESCENT, [pat]).shift(1)
    m = shape.total_cells
    series = gf_closed(shape.prefix, shape.suffix, shape.height, [pat], EULER_DESCENT, m)
    assert series[m].shift(1) == marked


@st.composite
def small_fillings(draw):
    from gencluster.oracle import enumerate_restricted
    shape = draw(st.sampled_from([DiagramShape(0, 2, 3), DiagramShape(1, 2, 3),
                                  DiagramShape(0, 2, 3, 1)]))
    fs = list(enumerate_restricted(shape, UNIVERSAL))
    return draw(st.sampled_from(fs))


@given(small_fillings())
@settings(max_examples=50)
def test_universal_weight_is_single_block(f):
    # with every pair related only the single-block decomposition counts
    w = decomposition_weight(f, [PatternSet.of(A23)], UNIVERSAL)
    if f.shape.prefix or f.shape.suffix:
        assert not w
    else:
        assert w == (MultiPoly.parse("x") if f.columns == ((1, 6), (2, 5), (3, 4))
                     else MultiPoly({}, 1))
