"""Diagrams, fillings, patterns, column relations and match counting.

A diagram of shape (i, k, n, j) is a prefix column of height i, then n body
columns of height k, then a suffix column of height j.  A filling puts 1..N
into the cells so that every column increases bottom to top.  Body columns
are numbered 1..n for every shape; prefix and suffix columns never take part
in a pattern match.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence, Tuple

Column = Tuple[int, ...]


class CapExceeded(ValueError):
    """Raised when a computation would exceed a configured size cap."""


@dataclass(frozen=True)
class DiagramShape:
    prefix: int
    height: int
    count: int
    suffix: int = 0

    def __post_init__(self):
        if min(self.prefix, self.count, self.suffix) < 0:
            raise ValueError("negative shape parameter")
        if self.height < 1 and self.count > 0:
            raise ValueError("body height must be at least 1")
        if self.height < 0:
            raise ValueError("negative body height")

    @property
    def total_cells(self) -> int:
        return self.prefix + self.height * self.count + self.suffix

    def column_heights(self) -> Tuple[int, ...]:
        hs = []
        if self.prefix:
            hs.append(self.prefix)
        hs.extend([self.height] * self.count)
        if self.suffix:
            hs.append(self.suffix)
        return tuple(hs)

    def body_offset(self) -> int:
        """Position of body column 1 in column_heights()."""
        return 1 if self.prefix else 0


@dataclass(frozen=True)
class Filling:
    shape: DiagramShape
    columns: Tuple[Column, ...]

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if tuple(len(c) for c in cols) != self.shape.column_heights():
            raise ValueError("column heights do not match shape %s" % (self.shape,))
        for c in cols:
            if any(a >= b for a, b in zip(c, c[1:])):
                raise ValueError("column %s is not increasing" % (c,))
        vals = sorted(v for c in cols for v in c)
        if vals != list(range(1, self.shape.total_cells + 1)):
            raise ValueError("entries must be exactly 1..%d" % self.shape.total_cells)

    @classmethod
    def from_word(cls, shape: DiagramShape, word: Sequence[int]) -> "Filling":
        word = list(word)
        cols = []
        pos = 0
        for h in shape.column_heights():
            cols.append(tuple(word[pos:pos + h]))
            pos += h
        if pos != len(word):
            raise ValueError("word length %d does not fit shape" % len(word))
        return cls(shape, tuple(cols))

    @property
    def body(self) -> Tuple[Column, ...]:
        off = self.shape.body_offset()
        return self.columns[off:off + self.shape.count]

    def body_column(self, c: int) -> Column:
        if not 1 <= c <= self.shape.count:
            raise IndexError("body column %d out of range 1..%d" % (c, self.shape.count))
        return self.columns[self.shape.body_offset() + c - 1]

    def cell(self, s: int, t: int) -> int:
        """Entry in column s (1-based, counting every column), row t from the bottom."""
        return self.columns[s - 1][t - 1]


def word(f: Filling) -> Tuple[int, ...]:
    return tuple(v for c in f.columns for v in c)


def reduce(cells: Sequence[Sequence[int]]) -> Tuple[Column, ...]:
    """Rank relabeling of a block of columns onto 1..N."""
    flat = [v for c in cells for v in c]
    if len(set(flat)) != len(flat):
        raise ValueError("duplicate entries")
    rank = {v: i + 1 for i, v in enumerate(sorted(flat))}
    return tuple(tuple(rank[v] for v in c) for c in cells)


@dataclass(frozen=True)
class Pattern:
    columns: Tuple[Column, ...]

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if len(cols) < 2:
            raise ValueError("a pattern needs at least two columns")
        k = len(cols[0])
        if k < 1 or any(len(c) != k for c in cols):
            raise ValueError("pattern columns must share one positive height")
        if any(a >= b for c in cols for a, b in zip(c, c[1:])):
            raise ValueError("pattern columns must increase")
        if sorted(v for c in cols for v in c) != list(range(1, k * len(cols) + 1)):
            raise ValueError("pattern entries must be exactly 1..kr")

    @classmethod
    def from_word(cls, w, k: int) -> "Pattern":
        if isinstance(w, str):
            w = [int(ch) for ch in w] if " " not in w.strip() else [int(t) for t in w.split()]
        w = list(w)
        if len(w) % k:
            raise ValueError("word length %d is not a multiple of %d" % (len(w), k))
        return cls(tuple(tuple(w[a:a + k]) for a in range(0, len(w), k)))

    @property
    def height(self) -> int:
        return len(self.columns[0])

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def word(self) -> Tuple[int, ...]:
        return tuple(v for c in self.columns for v in c)

    def cell_order(self) -> Tuple[Tuple[int, int], ...]:
        """(column offset, row) pairs listed by increasing pattern value."""
        pos = {v: (a, t) for a, c in enumerate(self.columns) for t, v in enumerate(c)}
        return tuple(pos[v] for v in range(1, self.height * self.width + 1))

    def matches_window(self, cols: Sequence[Sequence[int]]) -> bool:
        order = self.cell_order()
        prev = 0
        for a, t in order:
            v = cols[a][t]
            if v < prev:
                return False
            prev = v
        return True

    def to_text(self) -> str:
        lines = ["%d %d" % (self.height, self.width)]
        lines += [" ".join(str(v) for v in c) for c in self.columns]
        return "\n".join(lines) + "\n"

    def __str__(self):
        sep = "" if self.height * self.width < 10 else " "
        return sep.join(str(v) for v in self.word)


def parse_pattern(text: str) -> Pattern:
    """Read the 'k r' header format: one column per line, bottom to top."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty pattern file")
    try:
        head = [int(t) for t in lines[0].split()]
        if len(head) != 2:
            raise ValueError
        k, r = head
        cols = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError:
        raise ValueError("malformed pattern file") from None
    if len(cols) != r:
        raise ValueError("expected %d column lines, found %d" % (r, len(cols)))
    if any(len(c) != k for c in cols):
        raise ValueError("every column line must hold %d entries" % k)
    return Pattern(tuple(cols))


@dataclass(frozen=True)
class PatternSet:
    members: Tuple[Pattern, ...]
    variable_index: int = 0

    def __post_init__(self):
        ms = tuple(self.members)
        object.__setattr__(self, "members", ms)
        if not ms:
            raise ValueError("pattern set must be nonempty")
        if len({p.height for p in ms}) != 1:
            raise ValueError("all patterns in a set must share their height")
        if len(set(ms)) != len(ms):
            raise ValueError("patterns in a set must be distinct")

    @classmethod
    def of(cls, *patterns: Pattern, variable_index: int = 0) -> "PatternSet":
        return cls(tuple(patterns), variable_index)

    @property
    def height(self) -> int:
        return self.members[0].height

    @property
    def min_width(self) -> int:
        return min(p.width for p in self.members)


def joint(*sets) -> Tuple[PatternSet, ...]:
    """Number pattern sets x_1, x_2, ... in the order given."""
    out = []
    for i, s in enumerate(sets):
        if isinstance(s, Pattern):
            s = PatternSet.of(s)
        out.append(PatternSet(s.members, i))
    return tuple(out)


class Relation(Enum):
    UNIVERSAL = "universal"
    EULER_DESCENT = "euler"
    ROWS_INCREASING = "rows"
    BOTTOM_INCREASING = "bottom"

    @property
    def order_atomic(self) -> bool:
        return self in (Relation.EULER_DESCENT, Relation.BOTTOM_INCREASING)

    def holds(self, c: Sequence[int], d: Sequence[int]) -> bool:
        if not c or not d:
            raise ValueError("columns must be nonempty")
        if self is Relation.UNIVERSAL:
            return True
        if self is Relation.EULER_DESCENT:
            return c[-1] > d[0]
        if self is Relation.BOTTOM_INCREASING:
            return c[0] < d[0]
        return all(a < b for a, b in zip(c, d))

    def positive(self, c, d):
        """Cell-order constraints (a, b) meaning a < b that encode R(c, d)."""
        if self is Relation.UNIVERSAL:
            return []
        if self is Relation.EULER_DESCENT:
            return [(d[0], c[-1])]
        if self is Relation.BOTTOM_INCREASING:
            return [(c[0], d[0])]
        return list(zip(c, d))

    def negative(self, c, d):
        """Cell-order constraints encoding not-R(c, d); only for order-atomic kinds."""
        if self is Relation.EULER_DESCENT:
            return [(c[-1], d[0])]
        if self is Relation.BOTTOM_INCREASING:
            return [(d[0], c[0])]
        raise ValueError("the negation of %s is not a single inequality" % self.value)


# the four kinds as module constants, for callers that prefer plain names
UNIVERSAL = Relation.UNIVERSAL
EULER_DESCENT = Relation.EULER_DESCENT
ROWS_INCREASING = Relation.ROWS_INCREASING
BOTTOM_INCREASING = Relation.BOTTOM_INCREASING


def relation_holds(r: Relation, c: Sequence[int], d: Sequence[int]) -> bool:
    return r.holds(c, d)


def parse_relation(name: str) -> Relation:
    try:
        return Relation(name.lower())
    except ValueError:
        raise ValueError("unknown relation %r (use euler, universal, rows or bottom)" % name) from None


def satisfies(f: Filling, r: Relation) -> bool:
    cols = f.columns
    return all(r.holds(cols[a], cols[a + 1]) for a in range(len(cols) - 1))


def select_columns(f: Filling, indices: Sequence[int]) -> Tuple[Column, ...]:
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ValueError("indices must be ascending")
    return tuple(f.body_column(c) for c in indices)


def _check_height(f: Filling, g: PatternSet):
    if f.shape.count and g.height != f.shape.height:
        raise ValueError("pattern height %d does not match body height %d"
                         % (g.height, f.shape.height))


def match_list(f: Filling, g: PatternSet):
    """All (start, pattern) matches among the body columns, by start."""
    _check_height(f, g)
    body = f.body
    n = len(body)
    out = []
    for a in range(n):
        for p in g.members:
            if a + p.width <= n and p.matches_window(body[a:a + p.width]):
                out.append((a + 1, p))
    return out


def count_matches(f: Filling, g: PatternSet) -> int:
    return len(match_list(f, g))


def occurs(f: Filling, g: PatternSet) -> bool:
    _check_height(f, g)
    body = f.body
    for p in g.members:
        for idx in combinations(range(len(body)), p.width):
            if p.matches_window([body[a] for a in idx]):
                return True
    return False


def avoids(f: Filling, g: PatternSet) -> bool:
    return not occurs(f, g)


def _check_perm(p: Sequence[int]):
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError("not a permutation of 1..%d" % len(p))


def descent_set(p: Sequence[int]) -> frozenset:
    _check_perm(p)
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def rise_set(p: Sequence[int]) -> frozenset:
    _check_perm(p)
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] < p[i + 1])


def identity_filling(shape: DiagramShape) -> Filling:
    return Filling.from_word(shape, range(1, shape.total_cells + 1))


def euler_descents(shape: DiagramShape) -> frozenset:
    """Column boundary positions i, i+k, ..., that have a column on both sides."""
    pos, out = 0, []
    hs = shape.column_heights()
    for h in hs[:-1]:
        pos += h
        out.append(pos)
    return frozenset(out)


def pattern_sets(sets: Iterable) -> Tuple[PatternSet, ...]:
    """Accept a PatternSet, a Pattern or a sequence of either; returns a tuple."""
    if isinstance(sets, (PatternSet, Pattern)):
        sets = [sets]
    out = []
    for s in sets:
        out.append(PatternSet.of(s) if isinstance(s, Pattern) else s)
    if len({s.variable_index for s in out}) != len(out):
        out = [PatternSet(s.members, i) for i, s in enumerate(out)]
    return tuple(out)
