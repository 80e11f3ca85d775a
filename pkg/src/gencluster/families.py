"""Recursions and closed forms for the worked pattern families.

Every function here is a fast path; the test suite checks each one against
the generic engine in clusters.py wherever both can run.  Column counts n
always refer to body columns, so for height-2 patterns GC(n) describes
fillings with 2n cells, GEC(n) with 2n+1 cells, and so on.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Tuple

from .core import Pattern, PatternSet, Relation, joint, pattern_sets
from .poset import le_chain_formula, le_end_formula, le_start_end_formula, le_start_formula
from .polynomial import MultiPoly

X = MultiPoly.var(0, 2)
Y = MultiPoly.var(1, 2)


@dataclass(frozen=True)
class FamilyId:
    name: str
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.name not in ("a_k3", "du162534", "gt124356", "pkm", "joint-ud"):
            raise ValueError("unknown family %r" % self.name)
        if self.name == "a_k3" and (len(self.params) != 1 or self.params[0] < 2):
            raise ValueError("a_k3 needs one parameter k >= 2")
        if self.name == "pkm" and (len(self.params) != 2 or self.params[0] < 1
                                   or self.params[1] < 2):
            raise ValueError("pkm needs parameters k >= 1 and m >= 2")

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        name, _, rest = text.partition(":")
        params = tuple(int(t) for t in rest.split(",")) if rest else ()
        return cls(name, params)

    def __str__(self):
        if self.params:
            return "%s:%s" % (self.name, ",".join(map(str, self.params)))
        return self.name


def a_k3_pattern(k: int) -> Pattern:
    """Three columns, k rows; row r holds 3r-2..3r, odd rows left to right."""
    if k < 1:
        raise ValueError("k must be positive")
    rows = []
    for r in range(k):
        vals = [3 * r + 1, 3 * r + 2, 3 * r + 3]
        rows.append(vals if r % 2 == 0 else vals[::-1])
    return Pattern(tuple(tuple(rows[r][c] for r in range(k)) for c in range(3)))


def identity_pattern(k: int, m: int) -> Pattern:
    return Pattern.from_word(range(1, k * m + 1), k)


P1423 = Pattern.from_word("1423", 2)
Q162534 = Pattern.from_word("162534", 2)
GAMMA_TAU = Pattern.from_word("124356", 3)


def make_pattern(fid):
    if isinstance(fid, str):
        fid = FamilyId.parse(fid)
    if fid.name == "a_k3":
        return a_k3_pattern(fid.params[0])
    if fid.name == "du162534":
        return Q162534
    if fid.name == "gt124356":
        return GAMMA_TAU
    if fid.name == "pkm":
        k, m = fid.params
        return identity_pattern(k, m), identity_pattern(k, m + 1)
    return P1423, Q162534


def family_sets(fid) -> Tuple[PatternSet, ...]:
    pats = make_pattern(fid)
    if isinstance(pats, Pattern):
        return (PatternSet.of(pats),)
    return joint(*pats)


def family_relation(fid) -> Relation:
    if isinstance(fid, str):
        fid = FamilyId.parse(fid)
    return Relation.UNIVERSAL if fid.name == "pkm" else Relation.EULER_DESCENT


# -- A_{k,3} ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _ak3_c(n):
    x = MultiPoly.var(0, 1)
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 4:
        return [None, MultiPoly.const(1), MultiPoly({}, 1), x, x * x][n]
    return x * (_ak3_c(n - 1) + _ak3_c(n - 2))


def a_k3_cluster_poly(k: int, n: int) -> MultiPoly:
    """Cluster polynomial on n columns; the same for every k >= 2."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return _ak3_c(n)


@lru_cache(maxsize=None)
def _ak3_gc(k, n):
    if n == 1:
        return MultiPoly.const(1)
    if n == 2:
        return MultiPoly.const(-1)
    c = _ak3_c
    if k % 2:
        out = c(n)
        for r in range(1, n):
            out = out - c(r) * _ak3_gc(k, n - r)
        return out
    j = k // 2
    out = c(n) - _ak3_gc(k, n - 1)
    for s in range(2, n):
        out = out - c(s) * _ak3_gc(k, n - s) * comb(2 * j * n - ((2 * j - 1) * s + 1), s - 1)
    return out


def a_k3_gc_poly(k: int, n: int) -> MultiPoly:
    """Generalized cluster polynomial on n columns under the Euler descent relation."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 1:
        raise ValueError("n must be positive")
    return _ak3_gc(k, n)


# -- block-chain composition sums (down-up and joint up-down) ---------------

def _compositions(n):
    if n == 0:
        yield ()
        return
    for a in range(1, n + 1):
        for rest in _compositions(n - a):
            yield (a,) + rest


def _composition_sum(n, cluster, kind, nvars):
    """Sum over block sizes of sign * LE * prod of cluster polynomials.

    cluster(b) gives the cluster polynomial of a b-column block (1 for b = 1).
    Start and end variants add a lone cell before or after the blocks.
    """
    start = kind in ("GSC", "GSEC")
    end = kind in ("GEC", "GSEC")
    total = MultiPoly({}, nvars)
    for comp in _compositions(n):
        w = MultiPoly.const(1, nvars)
        for b in comp:
            w = w * cluster(b)
            if not w:
                break
        if not w:
            continue
        blocks = ((1,) if start else ()) + comp + ((1,) if end else ())
        if start and end:
            le = le_start_end_formula(blocks)
        elif start:
            le = le_start_formula(blocks)
        elif end:
            le = le_end_formula(blocks)
        else:
            le = le_chain_formula(blocks)
        sign = -1 if (len(blocks) - 1) % 2 else 1
        total = total + w * (sign * le)
    if n == 0:
        if kind in ("GSC", "GEC"):
            return MultiPoly.const(1, nvars)
        if kind == "GSEC":
            return MultiPoly.const(-1, nvars)
    return total


@lru_cache(maxsize=None)
def _du_c(n):
    x = MultiPoly.var(0, 1)
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 4:
        return [None, MultiPoly.const(1), MultiPoly({}, 1), x, x * x][n]
    return x * (_du_c(n - 2) + _du_c(n - 1))


@lru_cache(maxsize=None)
def downup_family_polys(kind: str, n: int) -> MultiPoly:
    """Clusters for 162534 as a 2x3 array; n counts body columns."""
    kind = kind.upper()
    if kind == "C":
        return _du_c(n)
    if kind not in ("GC", "GSC", "GEC", "GSEC"):
        raise ValueError("unknown kind %r" % kind)
    if kind == "GC" and n < 1:
        raise ValueError("GC needs n >= 1")
    return _composition_sum(n, _du_c, kind, 1)


# -- 124356 as a 3x2 array --------------------------------------------------

def gamma_tau_polys(kind: str, n: int) -> MultiPoly:
    """C and GC on n columns; GEC_j1 / GEC_j2 on n columns plus a suffix of height 1 / 2."""
    kind = kind.upper()
    x1 = MultiPoly.var(0, 1) - 1
    if kind == "C":
        if n < 1:
            raise ValueError("n must be positive")
        return MultiPoly.var(0, 1) ** (n - 1)
    if kind == "GC":
        if n < 1:
            raise ValueError("n must be positive")
        return x1 ** (n - 1)
    if kind in ("GEC_J1", "GEC_J2"):
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n == 0:
            return MultiPoly.const(1)
        return -(x1 ** (n - 1))
    raise ValueError("unknown kind %r" % kind)


def unique_cluster_check(p: Pattern) -> bool:
    """Two-column test: each pair of adjacent rows has consecutive values in one column."""
    if not isinstance(p, Pattern):
        p = Pattern(tuple(tuple(c) for c in p))
    if p.width != 2:
        raise ValueError("the test applies to two-column patterns only")
    left, right = p.columns
    for t in range(p.height - 1):
        if left[t + 1] != left[t] + 1 and right[t + 1] != right[t] + 1:
            return False
    return True


# -- joint families -----------------------------------------------------------

@lru_cache(maxsize=None)
def _pkm_c(m, n):
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return MultiPoly.const(1, 2)
    if n < m:
        return MultiPoly({}, 2)
    if n == m:
        return X
    out = (X * Y + Y) * _pkm_c(m, n - m)
    inner = MultiPoly({}, 2)
    for j in range(1, m):
        inner = inner + _pkm_c(m, n - j)
    return out + (X * Y + X + Y) * inner


@lru_cache(maxsize=None)
def _jud_c(n):
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return MultiPoly.const(1, 2)
    if n == 2:
        return X
    return (X + 1) * Y * _jud_c(n - 2) + (X * Y + X + Y) * _jud_c(n - 1)


def joint_family_polys(fid, kind: str, n: int) -> MultiPoly:
    """Bivariate polynomials; x tracks the first pattern, y the second."""
    if isinstance(fid, str):
        fid = FamilyId.parse(fid)
    kind = kind.upper()
    if fid.name == "pkm":
        m = fid.params[1]
        if kind in ("C", "GC"):
            return _pkm_c(m, n)
        # not-R never holds for the universal relation
        if kind == "GSEC":
            return MultiPoly({}, 2)
        if kind in ("GSC", "GEC"):
            return MultiPoly.const(1 if n == 0 else 0, 2)
        raise ValueError("unknown kind %r" % kind)
    if fid.name == "joint-ud":
        if kind == "C":
            return _jud_c(n)
        if kind not in ("GC", "GSC", "GEC", "GSEC"):
            raise ValueError("unknown kind %r" % kind)
        return _joint_ud_sum(kind, n)
    raise ValueError("%s is not a joint family" % fid)


@lru_cache(maxsize=None)
def _joint_ud_sum(kind, n):
    if kind == "GC" and n < 1:
        raise ValueError("GC needs n >= 1")
    return _composition_sum(n, _jud_c, kind, 2)


def family_polys(fid, kind: str, n: int) -> MultiPoly:
    """Dispatch by family for the CLI and the series provider."""
    if isinstance(fid, str):
        fid = FamilyId.parse(fid)
    kind = kind.upper()
    if fid.name == "a_k3":
        k = fid.params[0]
        if kind == "C":
            return a_k3_cluster_poly(k, n)
        if kind == "GC":
            return a_k3_gc_poly(k, n)
        if k == 2:
            return downup_family_polys(kind, n)
        raise ValueError("a_k3 with k > 2 has fast paths for C and GC only")
    if fid.name == "du162534":
        return downup_family_polys(kind, n)
    if fid.name == "gt124356":
        return gamma_tau_polys(kind, n)
    return joint_family_polys(fid, kind, n)


def recognize(gs, r: Relation, k: int):
    """Return a provider(kind, n, i, j) for a known family, or None."""
    sets = pattern_sets(gs)
    members = [frozenset(s.members) for s in sets]
    if len(sets) == 1 and len(members[0]) == 1:
        (p,) = members[0]
        if r is Relation.EULER_DESCENT and p == a_k3_pattern(k) and k >= 2:
            def ak3(kind, n, i=0, j=0):
                if kind == "GC":
                    return a_k3_gc_poly(k, n)
                if k == 2 and i <= 1 and j <= 1:
                    return downup_family_polys(kind, n)
                raise ValueError("no fast path for %s with k = %d" % (kind, k))
            return ak3
        if r is Relation.EULER_DESCENT and p == GAMMA_TAU:
            def gt(kind, n, i=0, j=0):
                if kind == "GC":
                    return gamma_tau_polys("GC", n)
                if kind == "GEC" and j in (1, 2):
                    return gamma_tau_polys("GEC_J%d" % j, n)
                raise ValueError("no fast path for %s with i = %d, j = %d" % (kind, i, j))
            return gt
    if len(sets) == 2 and all(len(m) == 1 for m in members):
        (p,), (q,) = members
        if r is Relation.UNIVERSAL and k >= 1:
            for m in range(2, 12):
                if p == identity_pattern(k, m) and q == identity_pattern(k, m + 1):
                    fid = FamilyId("pkm", (k, m))
                    return lambda kind, n, i=0, j=0: joint_family_polys(fid, kind, n)
        if r is Relation.EULER_DESCENT and p == P1423 and q == Q162534:
            def jud(kind, n, i=0, j=0):
                if i > 1 or j > 1:
                    raise ValueError("no fast path for boundary columns taller than 1")
                return joint_family_polys("joint-ud", kind, n)
            return jud
    return None
