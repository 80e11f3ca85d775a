import pytest

from gencluster.core import (EULER_DESCENT, UNIVERSAL, CapExceeded, DiagramShape, Pattern,
                             PatternSet, count_matches, satisfies)
from gencluster.oracle import (count_restricted, distribution_polynomial, enumerate_fillings,
                               enumerate_restricted)
from gencluster.polynomial import MultiPoly

A23 = PatternSet.of(Pattern.from_word("162534", 2))
A33 = PatternSet.of(Pattern.from_word("167258349", 3))
EULER = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]


def P(s):
    return MultiPoly.parse(s)


def test_enumerate_small():
    assert len(list(enumerate_fillings(DiagramShape(0, 2, 2)))) == 6
    perms = [f.columns for f in enumerate_fillings(DiagramShape(0, 1, 3))]
    assert len(perms) == 6 and perms == sorted(perms)
    (only,) = enumerate_fillings(DiagramShape(1, 0, 0, 0))
    assert only.columns == ((1,),)


def test_restricted_counts():
    assert count_restricted(DiagramShape(0, 2, 2), EULER_DESCENT) == 5
    assert count_restricted(DiagramShape(0, 3, 2), EULER_DESCENT) == 19


def test_restricted_is_filtered_full_enumeration():
    shape = DiagramShape(1, 2, 2, 1)
    pruned = list(enumerate_restricted(shape, EULER_DESCENT))
    filtered = [f for f in enumerate_fillings(shape) if satisfies(f, EULER_DESCENT)]
    assert pruned == filtered
    assert list(enumerate_restricted(shape, UNIVERSAL)) == list(enumerate_fillings(shape))


def test_distribution_examples():
    assert distribution_polynomial(DiagramShape(0, 3, 3), EULER_DESCENT, [A33]) == P("1512+x")
    assert distribution_polynomial(DiagramShape(0, 2, 4), EULER_DESCENT, [A23]) == \
        P("1337+47x+x^2")
    g = PatternSet.of(Pattern.from_word("132", 1))
    assert distribution_polynomial(DiagramShape(0, 1, 3), UNIVERSAL, [g]) == P("5+x")


def test_distribution_matches_direct_count():
    shape = DiagramShape(1, 2, 3, 1)
    direct = {}
    for f in enumerate_restricted(shape, EULER_DESCENT):
        c = count_matches(f, A23)
        direct[(c,)] = direct.get((c,), 0) + 1
    assert distribution_polynomial(shape, EULER_DESCENT, [A23]) == MultiPoly(direct, 1)


@pytest.mark.parametrize("j", [0, 1])
def test_euler_numbers(j):
    for n in range(0, 4):
        shape = DiagramShape(0, 2, n, j)
        if shape.total_cells == 0:
            continue
        poly = distribution_polynomial(shape, EULER_DESCENT, [A23])
        assert poly.at_ones() == EULER[shape.total_cells]


def test_jobs_do_not_change_result():
    shape = DiagramShape(0, 2, 5)
    assert distribution_polynomial(shape, EULER_DESCENT, [A23], jobs=2) == \
        distribution_polynomial(shape, EULER_DESCENT, [A23], jobs=1)


def test_cap():
    with pytest.raises(CapExceeded):
        distribution_polynomial(DiagramShape(0, 3, 6), EULER_DESCENT, [A33], cap=16)
    with pytest.raises(CapExceeded):
        list(enumerate_fillings(DiagramShape(0, 1, 20)))
