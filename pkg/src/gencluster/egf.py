"""Truncated exponential generating functions over integer polynomials.

A series stores a_0..a_N for sum a_m t^m / m!.  Products use the binomial
convolution, so every coefficient stays an integer polynomial.
"""

from math import comb
from typing import Callable

from .polynomial import MultiPoly, poly_shift_minus_one

DEFAULT_ORDER = 12


class EgfSeries:
    __slots__ = ("order", "nvars", "coeffs")

    def __init__(self, coeffs, order=None, nvars=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if nvars is None:
            nvars = max([c.nvars for c in coeffs if isinstance(c, MultiPoly)] + [1])
        out = []
        for m in range(order + 1):
            c = coeffs[m] if m < len(coeffs) else 0
            out.append(MultiPoly.promote(c, nvars).widen(nvars))
        self.order = order
        self.nvars = nvars
        self.coeffs = tuple(out)

    @classmethod
    def zero(cls, order, nvars=1):
        return cls([], order, nvars)

    @classmethod
    def one(cls, order, nvars=1):
        return cls([1], order, nvars)

    @classmethod
    def from_terms(cls, terms, order, nvars=1):
        """Build from a mapping m -> coefficient of t^m/m!."""
        cs = [0] * (order + 1)
        for m, c in terms.items():
            if 0 <= m <= order:
                cs[m] = c
        return cls(cs, order, nvars)

    def _check(self, other):
        if not isinstance(other, EgfSeries):
            raise TypeError("expected an EgfSeries")
        if other.order != self.order:
            raise ValueError("truncation orders differ: %d vs %d" % (self.order, other.order))
        return max(self.nvars, other.nvars)

    def __add__(self, other):
        n = self._check(other)
        return EgfSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order, n)

    def __sub__(self, other):
        n = self._check(other)
        return EgfSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order, n)

    def __neg__(self):
        return EgfSeries([-a for a in self.coeffs], self.order, self.nvars)

    def __mul__(self, other):
        return series_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __getitem__(self, m):
        return self.coeffs[m]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return "EgfSeries(order=%d, %s)" % (
            self.order, ", ".join("%d: %s" % (m, c) for m, c in enumerate(self.coeffs) if c))

    def map(self, fn):
        return EgfSeries([fn(c) for c in self.coeffs], self.order, self.nvars)

    def at_ones(self):
        return [c.at_ones() for c in self.coeffs]


def series_add(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    return f + g


def series_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    n = f._check(g)
    out = []
    for m in range(f.order + 1):
        acc = MultiPoly({}, n)
        for r in range(m + 1):
            a, b = f.coeffs[r], g.coeffs[m - r]
            if a and b:
                acc = acc + (a * b) * comb(m, r)
        out.append(acc)
    return EgfSeries(out, f.order, n)


def series_geom_inverse(g: EgfSeries) -> EgfSeries:
    """h = 1/(1 - g), requiring g_0 = 0."""
    if g.coeffs[0]:
        raise ValueError("geometric inverse needs a zero constant term")
    h = [MultiPoly.const(1, g.nvars)]
    for m in range(1, g.order + 1):
        acc = MultiPoly({}, g.nvars)
        for r in range(1, m + 1):
            if g.coeffs[r] and h[m - r]:
                acc = acc + (g.coeffs[r] * h[m - r]) * comb(m, r)
        h.append(acc)
    return EgfSeries(h, g.order, g.nvars)


def coefficient_at(f: EgfSeries, m: int) -> MultiPoly:
    if not 0 <= m <= f.order:
        raise IndexError("coefficient %d outside truncation order %d" % (m, f.order))
    return f.coeffs[m]


# -- theorem evaluators ----------------------------------------------------

# a provider answers provider(kind, n, i, j) with the cluster polynomial of
# that kind on n body columns, kind in {"GC", "GSC", "GEC", "GSEC"}
Provider = Callable[[str, int, int, int], MultiPoly]


def _cluster_series(provider, kind, k, i, j, order, nvars, first_n):
    """sum over n of t^(i + j + k n)/(i + j + k n)! * poly(n) at x_i - 1."""
    terms = {}
    base = i + j
    n = first_n
    while base + k * n <= order:
        p = provider(kind, n, i, j)
        if p:
            terms[base + k * n] = poly_shift_minus_one(p.widen(max(p.nvars, nvars)))
        n += 1
    return EgfSeries.from_terms(terms, order, nvars)


def gf_from_provider(i: int, j: int, k: int, provider: Provider, order=DEFAULT_ORDER,
                     nvars=1) -> EgfSeries:
    """Assemble the distribution series of shape (i, j, k) from cluster values."""
    gc = _cluster_series(provider, "GC", k, 0, 0, order, nvars, 1)
    h = series_geom_inverse(gc)
    if i == 0 and j == 0:
        return h
    if i == 0:
        return series_mul(_cluster_series(provider, "GEC", k, 0, j, order, nvars, 0), h)
    if j == 0:
        return series_mul(_cluster_series(provider, "GSC", k, i, 0, order, nvars, 0), h)
    gsc = _cluster_series(provider, "GSC", k, i, 0, order, nvars, 0)
    gec = _cluster_series(provider, "GEC", k, 0, j, order, nvars, 0)
    gsec = _cluster_series(provider, "GSEC", k, i, j, order, nvars, 0)
    return series_mul(series_mul(gsc, gec), h) + gsec


def engine_provider(k, gs, r, cap_poset=None, cap_cells=None):
    """Provider backed by the generic cluster engine, memoized per instance."""
    from .clusters import generalized_cluster_polynomial
    from .oracle import DEFAULT_CAP_CELLS
    from .poset import DEFAULT_CAP_POSET
    caps = dict(cap_poset=cap_poset or DEFAULT_CAP_POSET, cap_cells=cap_cells or DEFAULT_CAP_CELLS)
    memo = {}

    def provide(kind, n, i=0, j=0):
        key = (kind, n, i, j)
        if key not in memo:
            memo[key] = generalized_cluster_polynomial(kind, i, j, k, n, gs, r, **caps)
        return memo[key]
    return provide


def gf_closed(i: int, j: int, k: int, gs, r, order=DEFAULT_ORDER, source="engine",
              cap_poset=None, cap_cells=None) -> EgfSeries:
    """Distribution series of shape (i, j, k) from the closed cluster formulas.

    source is "engine", "family" (recursions for a recognized family) or a
    provider callable.
    """
    from .core import pattern_sets
    from .families import recognize
    sets = pattern_sets(gs)
    nvars = max((s.variable_index for s in sets), default=0) + 1
    if callable(source):
        provider = source
    elif source == "engine":
        provider = engine_provider(k, sets, r, cap_poset, cap_cells)
    elif source == "family":
        provider = recognize(sets, r, k)
        if provider is None:
            raise ValueError("no family fast path for these patterns and relation")
    else:
        raise ValueError("source must be engine, family or a provider")
    return gf_from_provider(i, j, k, provider, order, nvars)
