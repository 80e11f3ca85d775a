"""Cluster and generalized cluster polynomials.

The main path enumerates mark schemes, turns each block decomposition into
cell-order constraints and counts the compatible fillings as linear
extensions.  Relations whose negation is not a single inequality go through
a brute-force path that walks every filling and sums over decompositions
with a small dynamic program.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import List, Sequence, Tuple

from .core import (CapExceeded, DiagramShape, Pattern, PatternSet, Relation,
                   match_list, pattern_sets)
from .oracle import DEFAULT_CAP_CELLS, enumerate_fillings, enumerate_restricted
from .polynomial import MultiPoly
from .poset import DEFAULT_CAP_POSET, CellPoset, linear_extension_count

KINDS = ("C", "GC", "GSC", "GEC", "GSEC")


@dataclass(frozen=True)
class Mark:
    start: int
    pattern: Pattern
    variable: int

    @property
    def end(self):
        return self.start + self.pattern.width - 1


@dataclass(frozen=True)
class MarkScheme:
    size: int
    marks: Tuple[Mark, ...]

    @property
    def windows(self):
        return tuple((m.start, m.end) for m in self.marks)

    def exponents(self, nvars):
        e = [0] * nvars
        for m in self.marks:
            e[m.variable] += 1
        return tuple(e)


def is_cluster_marking(marks: Sequence[Tuple[int, int]], first: int, last: int) -> bool:
    """Direct check of the cluster conditions on (start, width) marks over first..last.

    Marks are sorted by (start, width); each must fit, the first starts at
    `first`, and each next mark must share a column with the one before it
    in that order.  The union of windows then has to reach `last`.
    """
    if not marks:
        return False
    ms = sorted(marks)
    if ms[0][0] != first:
        return False
    if any(s < first or s + w - 1 > last for s, w in ms):
        return False
    for (s, w), (t, _) in zip(ms, ms[1:]):
        if t > s + w - 1:
            return False
    return max(s + w - 1 for s, w in ms) == last


def _options(sets):
    return [(p, s.variable_index) for s in sets for p in s.members]


def mark_schemes(size: int, sets) -> List[MarkScheme]:
    """Every valid cluster marking of `size` body columns.

    A scheme is built start by start: at each marked start a nonempty subset
    of patterns is chosen, and the next marked start must fall inside the
    widest window opened at the current one.
    """
    sets = pattern_sets(sets)
    opts = _options(sets)
    out = []

    def rec(s, marks, reach):
        fitting = [o for o in opts if s + o[0].width - 1 <= size]
        for r in range(1, len(fitting) + 1):
            for chosen in combinations(fitting, r):
                new = marks + [Mark(s, p, v) for p, v in chosen]
                cover = s + max(p.width for p, _ in chosen) - 1
                rch = max(reach, cover)
                if rch == size:
                    out.append(MarkScheme(size, tuple(new)))
                for t in range(s + 1, min(cover, size - 1) + 1):
                    rec(t, new, rch)

    if size >= 2:
        rec(1, [], 0)
    return out


def _nvars(sets):
    return max((s.variable_index for s in sets), default=0) + 1


class _Layout:
    """Cell numbering for a diagram: prefix, body columns, suffix."""

    def __init__(self, i, k, n, j):
        self.cols = []
        nxt = 0
        for h in DiagramShape(i, k, n, j).column_heights():
            self.cols.append(tuple(range(nxt, nxt + h)))
            nxt += h
        self.size = nxt
        self.off = 1 if i else 0
        self.n = n

    def body(self, c):
        """Cells of body column c (1-based)."""
        return self.cols[self.off + c - 1]

    def vertical(self):
        return [(c[t], c[t + 1]) for c in self.cols for t in range(len(c) - 1)]


def _scheme_constraints(layout, first, scheme):
    out = []
    for m in scheme.marks:
        order = m.pattern.cell_order()
        cells = [layout.body(first + m.start - 1 + a)[t] for a, t in order]
        out.extend(zip(cells, cells[1:]))
    return out


def _compositions(n):
    if n == 0:
        yield ()
        return
    for a in range(1, n + 1):
        for rest in _compositions(n - a):
            yield (a,) + rest


def _check_sets(k, sets):
    for s in sets:
        if s.height != k:
            raise ValueError("pattern height %d does not match k = %d" % (s.height, k))


def cluster_polynomial(k: int, n: int, gs, cap_poset=DEFAULT_CAP_POSET) -> MultiPoly:
    """Sum over cluster markings of n columns of x^marks times the filling count."""
    sets = pattern_sets(gs)
    _check_sets(k, sets)
    nv = _nvars(sets)
    if n < 1:
        raise ValueError("cluster polynomials need n >= 1")
    if n == 1:
        return MultiPoly.const(1, nv)
    if k * n > cap_poset:
        raise CapExceeded("%d cells exceeds the poset cap of %d" % (k * n, cap_poset))
    layout = _Layout(0, k, n, 0)
    base = layout.vertical()
    terms = {}
    memo = {}
    for sc in mark_schemes(n, sets):
        cons = frozenset(base + _scheme_constraints(layout, 1, sc))
        le = memo.get(cons)
        if le is None:
            le = memo[cons] = linear_extension_count(CellPoset(layout.size, cons), cap_poset)
        if le:
            e = sc.exponents(nv)
            terms[e] = terms.get(e, 0) + le
    return MultiPoly(terms, nv)


def _check_kind(kind, i, j, n):
    kind = kind.upper()
    if kind not in KINDS:
        raise ValueError("unknown kind %r" % kind)
    if kind in ("C", "GC"):
        if i or j:
            raise ValueError("%s needs i = j = 0" % kind)
        if n < 1:
            raise ValueError("%s needs n >= 1" % kind)
    elif kind == "GSC" and (i < 1 or j):
        raise ValueError("GSC needs i >= 1 and j = 0")
    elif kind == "GEC" and (j < 1 or i):
        raise ValueError("GEC needs i = 0 and j >= 1")
    elif kind == "GSEC" and (i < 1 or j < 1):
        raise ValueError("GSEC needs i >= 1 and j >= 1")
    if n < 0:
        raise ValueError("negative column count")
    return kind


def generalized_cluster_polynomial(kind: str, i: int, j: int, k: int, n: int, gs,
                                   r: Relation, cap_poset=DEFAULT_CAP_POSET,
                                   cap_cells=DEFAULT_CAP_CELLS, method="auto") -> MultiPoly:
    """Signed sum over block decompositions of block weights times filling counts.

    method is "auto", "le" (linear extensions; needs an order-atomic
    relation) or "brute" (walk every filling of the shape).
    """
    if method not in ("auto", "le", "brute"):
        raise ValueError("method must be auto, le or brute")
    sets = pattern_sets(gs)
    _check_sets(k, sets)
    kind = _check_kind(kind, i, j, n)
    nv = _nvars(sets)
    if kind == "C":
        return cluster_polynomial(k, n, sets, cap_poset)
    if method == "brute":
        return _brute_force(kind, i, j, k, n, sets, r, cap_cells)
    if method == "le" and not r.order_atomic:
        raise ValueError("relation %s has no single-inequality negation; use the brute-force path"
                         % r.value)
    if r is Relation.UNIVERSAL:
        # not-R never holds, so only one block survives
        if kind == "GC":
            return cluster_polynomial(k, n, sets, cap_poset)
        if kind == "GSEC":
            return MultiPoly({}, nv)
        return MultiPoly.const(1 if n == 0 else 0, nv)
    if not r.order_atomic:
        return _brute_force(kind, i, j, k, n, sets, r, cap_cells)
    return _le_path(kind, i, j, k, n, sets, r, cap_poset)


def _le_path(kind, i, j, k, n, sets, r, cap_poset):
    layout = _Layout(i, k, n, j)
    if layout.size > cap_poset:
        raise CapExceeded("%d cells exceeds the poset cap of %d" % (layout.size, cap_poset))
    nv = _nvars(sets)
    base = layout.vertical()
    schemes = {}
    memo = {}
    terms = {}
    for comp in _compositions(n):
        per_block = []
        ok = True
        for b in comp:
            if b == 1:
                per_block.append([None])
                continue
            if b not in schemes:
                schemes[b] = mark_schemes(b, sets)
            if not schemes[b]:
                ok = False
                break
            per_block.append(schemes[b])
        if not ok:
            continue
        # fixed constraints: R inside cluster blocks, not-R across boundaries
        fixed = list(base)
        firsts = []
        c = 1
        for b in comp:
            firsts.append(c)
            if b > 1:
                for a in range(c, c + b - 1):
                    fixed.extend(r.positive(layout.body(a), layout.body(a + 1)))
            c += b
        # each block as (first column cells, last column cells)
        blocks = []
        if i:
            blocks.append((layout.cols[0], layout.cols[0]))
        for f, b in zip(firsts, comp):
            blocks.append((layout.body(f), layout.body(f + b - 1)))
        if j:
            blocks.append((layout.cols[-1], layout.cols[-1]))
        for left, right in zip(blocks, blocks[1:]):
            fixed.extend(r.negative(left[1], right[0]))
        m = len(blocks)
        sign = -1 if (m - 1) % 2 else 1
        for choice in product(*per_block):
            cons = list(fixed)
            e = [0] * nv
            for f, sc in zip(firsts, choice):
                if sc is None:
                    continue
                cons.extend(_scheme_constraints(layout, f, sc))
                for mk in sc.marks:
                    e[mk.variable] += 1
            key = frozenset(cons)
            le = memo.get(key)
            if le is None:
                le = memo[key] = linear_extension_count(CellPoset(layout.size, key), cap_poset)
            if le:
                e = tuple(e)
                terms[e] = terms.get(e, 0) + sign * le
    return MultiPoly(terms, nv)


# -- brute force ------------------------------------------------------------

def _block_weight(matches, a, c, related, nv):
    """Sum of x^marks over cluster markings of body columns a..c using real matches."""
    if c == a:
        return MultiPoly.const(1, nv)
    if not all(related[t] for t in range(a, c)):
        return MultiPoly({}, nv)
    inside = [(s, p, v) for s, p, v in matches if s >= a and s + p.width - 1 <= c]
    terms = {}
    for size in range(1, len(inside) + 1):
        for sub in combinations(inside, size):
            if is_cluster_marking([(s, p.width) for s, p, _ in sub], a, c):
                e = [0] * nv
                for _, _, v in sub:
                    e[v] += 1
                e = tuple(e)
                terms[e] = terms.get(e, 0) + 1
    return MultiPoly(terms, nv)


def decomposition_weight(f, sets, r):
    """Signed weight of one filling: sum over its block decompositions."""
    nv = _nvars(sets)
    shape = f.shape
    n = shape.count
    cols = f.columns
    off = shape.body_offset()
    matches = [(s, p, st.variable_index) for st in sets for s, p in match_list(f, st)]
    # related[t]: R holds between body columns t and t+1
    related = {t: r.holds(cols[off + t - 1], cols[off + t]) for t in range(1, n)}

    def boundary(left_pos, right_pos):
        # -1 when not-R separates the two columns (a new block), else 0
        return 0 if r.holds(cols[left_pos], cols[right_pos]) else -1

    one = MultiPoly.const(1, nv)
    # F[c]: signed sum over decompositions whose last block ends at body column c
    F = [MultiPoly({}, nv) for _ in range(n + 1)]
    F[0] = one
    for c in range(1, n + 1):
        acc = MultiPoly({}, nv)
        for a in range(1, c + 1):
            if not F[a - 1]:
                continue
            if a == 1 and not shape.prefix:
                factor = 1
            else:
                factor = boundary(off + a - 2, off + a - 1)
            if not factor:
                continue
            w = _block_weight(matches, a, c, related, nv)
            if w:
                acc = acc + F[a - 1] * w * factor
        F[c] = acc
    total = F[n]
    if shape.suffix:
        if n == 0 and not shape.prefix:
            return one
        total = total * boundary(len(cols) - 2, len(cols) - 1)
    return total


def _brute_force(kind, i, j, k, n, sets, r, cap_cells):
    nv = _nvars(sets)
    shape = DiagramShape(i, k, n, j)
    total = MultiPoly({}, nv)
    for f in enumerate_fillings(shape, cap_cells):
        w = decomposition_weight(f, sets, r)
        if w:
            total = total + w
    return total


def enumerate_marked_fillings(shape: DiagramShape, gs, r: Relation, cap=DEFAULT_CAP_CELLS):
    """Yield (filling, marks) for every restricted filling and subset of its matches."""
    sets = pattern_sets(gs)
    for f in enumerate_restricted(shape, r, cap):
        ms = [Mark(s, p, st.variable_index) for st in sets for s, p in match_list(f, st)]
        for size in range(len(ms) + 1):
            for sub in combinations(ms, size):
                yield f, frozenset(sub)
