"""Linear extension counts.

The generic counter runs a dynamic program over order ideals (bitmasks),
splitting the poset into connected components first.  The product formulas
cover the block-chain diagrams of the down-up family, where every cluster
block is a chain that runs along the bottom row and back along the top row.
"""

from math import comb, factorial
from typing import Iterable, Sequence, Tuple

from .core import CapExceeded

DEFAULT_CAP_POSET = 24


class CellPoset:
    """Elements 0..N-1 with strict constraints (a, b) meaning a < b."""

    __slots__ = ("size", "constraints")

    def __init__(self, size: int, constraints: Iterable[Tuple[int, int]] = ()):
        cs = set()
        for a, b in constraints:
            if not (0 <= a < size and 0 <= b < size):
                raise ValueError("constraint (%d, %d) outside 0..%d" % (a, b, size - 1))
            cs.add((a, b))
        self.size = size
        self.constraints = frozenset(cs)

    def with_constraint(self, a, b) -> "CellPoset":
        return CellPoset(self.size, self.constraints | {(a, b)})

    def __repr__(self):
        return "CellPoset(%d, %s)" % (self.size, sorted(self.constraints))


def _components(size, constraints):
    parent = list(range(size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in constraints:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for a in range(size):
        groups.setdefault(find(a), []).append(a)
    return list(groups.values())


def _count_connected(elems, constraints):
    index = {e: i for i, e in enumerate(elems)}
    preds = [0] * len(elems)
    for a, b in constraints:
        if a in index:
            preds[index[b]] |= 1 << index[a]
    full = (1 << len(elems)) - 1
    layer = {0: 1}
    for _ in range(len(elems)):
        nxt = {}
        for ideal, ways in layer.items():
            for e in range(len(elems)):
                bit = 1 << e
                if not ideal & bit and preds[e] & ideal == preds[e]:
                    key = ideal | bit
                    nxt[key] = nxt.get(key, 0) + ways
        layer = nxt
        if not layer:
            return 0
    return layer.get(full, 0)


def linear_extension_count(p, cap=DEFAULT_CAP_POSET) -> int:
    """Number of bijections onto 1..N respecting every constraint (0 on a cycle)."""
    if not isinstance(p, CellPoset):
        p = CellPoset(*p)
    if p.size > cap:
        raise CapExceeded("poset of %d elements exceeds the cap of %d" % (p.size, cap))
    if any(a == b for a, b in p.constraints):
        return 0
    total = factorial(p.size)
    for comp in _components(p.size, p.constraints):
        if len(comp) == 1:
            continue
        members = set(comp)
        sub = [(a, b) for a, b in p.constraints if a in members]
        n = _count_connected(comp, sub)
        if n == 0:
            return 0
        total = total // factorial(len(comp)) * n
    return total


# -- the down-up block diagrams ---------------------------------------------

def block_chain_poset(blocks: Sequence[int], start=False, end=False) -> CellPoset:
    """Hasse diagram of consecutive blocks of height-2 columns.

    A block of b >= 2 columns is a cluster whose cells form one chain: the
    bottom row left to right, then the top row right to left.  A block of one
    column is just bottom < top.  Between blocks the top of the last column
    lies below the bottom of the next block's first column.  With start or
    end set, the first or last entry of blocks stands for a lone cell.
    """
    blocks = list(blocks)
    if start and (not blocks or blocks[0] != 1):
        raise ValueError("a start diagram begins with a lone cell (block 1)")
    if end and (not blocks or blocks[-1] != 1):
        raise ValueError("an end diagram finishes with a lone cell (block 1)")
    cons = []
    nxt = 0
    prev_top = None
    body = blocks[1 if start else 0:len(blocks) - 1 if end else len(blocks)]
    if start:
        prev_top = nxt
        nxt += 1
    for b in body:
        if b < 1:
            raise ValueError("block sizes must be positive")
        bottoms = list(range(nxt, nxt + b))
        tops = list(range(nxt + b, nxt + 2 * b))
        nxt += 2 * b
        for c in range(b):
            cons.append((bottoms[c], tops[c]))
        for c in range(b - 1):
            cons.append((bottoms[c], bottoms[c + 1]))
            cons.append((tops[c + 1], tops[c]))
        if prev_top is not None:
            cons.append((prev_top, bottoms[0]))
        prev_top = tops[-1]
    if end:
        if prev_top is not None:
            cons.append((prev_top, nxt))
        nxt += 1
    return CellPoset(nxt, cons)


def _check_blocks(blocks):
    if not blocks or any(b < 1 for b in blocks):
        raise ValueError("blocks must be a nonempty sequence of positive sizes")


def le_chain_formula(blocks: Sequence[int]) -> int:
    """Closed form for the block-chain diagram of blocks b_1..b_m."""
    _check_blocks(blocks)
    m = len(blocks)
    total = 1
    later = 0
    for p in range(m - 1, -1, -1):
        b = blocks[p]
        if p < m - 1:
            total *= comb(b - 1 + 2 * later, b - 1)
        later += b
    return total


def le_end_formula(blocks: Sequence[int]) -> int:
    """Closed form for the end diagram; the last entry is the lone end cell."""
    _check_blocks(blocks)
    if blocks[-1] != 1:
        raise ValueError("the end diagram finishes with a lone cell (block 1)")
    body = blocks[:-1]
    total = 1
    later = 0
    for b in reversed(body):
        total *= comb(b + 2 * later, b - 1)
        later += b
    return total


def le_start_formula(blocks: Sequence[int]) -> int:
    """A leading lone cell adds nothing: it is the least element."""
    _check_blocks(blocks)
    if blocks[0] != 1:
        raise ValueError("the start diagram begins with a lone cell (block 1)")
    if len(blocks) == 1:
        return 1
    return le_chain_formula(blocks[1:])


def le_start_end_formula(blocks: Sequence[int]) -> int:
    _check_blocks(blocks)
    if len(blocks) < 2 or blocks[0] != 1:
        raise ValueError("the start-end diagram needs a lone cell at both ends")
    return le_end_formula(blocks[1:])
