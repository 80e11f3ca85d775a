"""Brute-force enumeration of fillings and distribution polynomials.

This module is the independent ground truth: it knows nothing about
clusters.  Fillings are produced by choosing the value set of each column
from left to right, each in ascending combination order, which lists them
lexicographically by word.  Relation violations are pruned as soon as a
column is placed.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from .core import CapExceeded, DiagramShape, Filling, Relation, pattern_sets
from .polynomial import MultiPoly

DEFAULT_CAP_CELLS = 16


class OracleTimeout(CapExceeded):
    pass


def _check_cap(shape, cap):
    if shape.total_cells > cap:
        raise CapExceeded("%d cells exceeds the oracle cap of %d" % (shape.total_cells, cap))


def _candidates(remaining, h, prev, relation):
    """Column value sets for the next column, in ascending combination order."""
    if prev is None or relation is Relation.UNIVERSAL:
        yield from combinations(remaining, h)
        return
    if relation is Relation.EULER_DESCENT:
        # bottom of the new column must sit below the top of the previous one
        top = prev[-1]
        for a, first in enumerate(remaining):
            if first > top:
                break
            for rest in combinations(remaining[a + 1:], h - 1):
                yield (first,) + rest
        return
    if relation is Relation.BOTTOM_INCREASING:
        low = prev[0]
        for a, first in enumerate(remaining):
            if first > low:
                for rest in combinations(remaining[a + 1:], h - 1):
                    yield (first,) + rest
        return
    for combo in combinations(remaining, h):
        if relation.holds(prev, combo):
            yield combo


def _walk(heights, relation, remaining, prev):
    if not heights:
        yield ()
        return
    h = heights[0]
    for combo in _candidates(remaining, h, prev, relation):
        taken = set(combo)
        rest = tuple(v for v in remaining if v not in taken)
        for tail in _walk(heights[1:], relation, rest, combo):
            yield (combo,) + tail


def enumerate_restricted(shape: DiagramShape, r: Relation, cap=DEFAULT_CAP_CELLS):
    _check_cap(shape, cap)
    values = tuple(range(1, shape.total_cells + 1))
    for cols in _walk(shape.column_heights(), r, values, None):
        yield Filling(shape, cols)


def enumerate_fillings(shape: DiagramShape, cap=DEFAULT_CAP_CELLS):
    return enumerate_restricted(shape, Relation.UNIVERSAL, cap)


def count_restricted(shape: DiagramShape, r: Relation, cap=DEFAULT_CAP_CELLS) -> int:
    return distribution_polynomial(shape, r, (), cap=cap).at_ones()


class _Search:
    """Counting DFS that tracks match counts as columns are placed."""

    def __init__(self, shape, relation, sets, deadline=None):
        self.heights = shape.column_heights()
        self.relation = relation
        self.deadline = deadline
        self.nvars = max((s.variable_index for s in sets), default=0) + 1
        off = shape.body_offset()
        # checkers[c] lists (window start position, cell order, variable)
        # for every pattern whose window ends at column position c
        self.checkers = [[] for _ in self.heights]
        for s in sets:
            for p in s.members:
                order = p.cell_order()
                for end in range(p.width - 1, shape.count):
                    start = off + end - p.width + 1
                    self.checkers[off + end].append((start, order, s.variable_index))
        self.cols = [None] * len(self.heights)
        self.counts = {}
        self.ticks = 0

    def run(self, remaining, ci=0, prev=None, exps=None):
        if exps is None:
            exps = (0,) * self.nvars
        self._rec(remaining, ci, prev, exps)
        return self.counts

    def _rec(self, remaining, ci, prev, exps):
        heights = self.heights
        if ci == len(heights):
            self.counts[exps] = self.counts.get(exps, 0) + 1
            self.ticks += 1
            if self.deadline is not None and not self.ticks & 0xFFF:
                if time.monotonic() > self.deadline:
                    raise OracleTimeout("oracle wall-clock limit reached")
            return
        h = heights[ci]
        cols = self.cols
        checks = self.checkers[ci]
        last = ci == len(heights) - 1
        if last:
            cands = (remaining,) if prev is None or self.relation.holds(prev, remaining) else ()
        else:
            cands = _candidates(remaining, h, prev, self.relation)
        for combo in cands:
            cols[ci] = combo
            e = exps
            for start, order, var in checks:
                prev_v = 0
                ok = True
                for a, t in order:
                    v = cols[start + a][t]
                    if v < prev_v:
                        ok = False
                        break
                    prev_v = v
                if ok:
                    e = e[:var] + (e[var] + 1,) + e[var + 1:]
            if last:
                self._rec((), ci + 1, combo, e)
            else:
                taken = set(combo)
                self._rec(tuple(v for v in remaining if v not in taken), ci + 1, combo, e)


def _subtree(args):
    shape, relation, sets, first, deadline = args
    s = _Search(shape, relation, sets, deadline)
    values = tuple(range(1, shape.total_cells + 1))
    taken = set(first)
    s.cols[0] = first
    # match checks never end at column 0 unless a pattern has width 1, which is excluded
    rest = tuple(v for v in values if v not in taken)
    if len(s.heights) == 1:
        return {(0,) * s.nvars: 1}
    return s.run(rest, 1, first)


def distribution_polynomial(shape: DiagramShape, r: Relation, gs=(), cap=DEFAULT_CAP_CELLS,
                            jobs=1, time_limit=None) -> MultiPoly:
    """Sum over restricted fillings of prod_i x_i^(number of Gamma_i matches)."""
    _check_cap(shape, cap)
    sets = pattern_sets(gs) if gs else ()
    for s in sets:
        if shape.count and s.height != shape.height:
            raise ValueError("pattern height %d does not match body height %d"
                             % (s.height, shape.height))
    deadline = None if time_limit is None else time.monotonic() + time_limit
    nvars = max((s.variable_index for s in sets), default=0) + 1
    values = tuple(range(1, shape.total_cells + 1))
    heights = shape.column_heights()
    if not heights:
        return MultiPoly.const(1, nvars)
    if jobs <= 1 or len(heights) < 3:
        counts = _Search(shape, r, sets, deadline).run(values)
    else:
        firsts = list(combinations(values, heights[0]))
        tasks = [(shape, r, sets, f, deadline) for f in firsts]
        counts = {}
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(_subtree, tasks, chunksize=max(1, len(tasks) // (4 * jobs))):
                for e, c in part.items():
                    counts[e] = counts.get(e, 0) + c
    return MultiPoly(counts, nvars)
