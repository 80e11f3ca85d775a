"""Sparse multivariate polynomials with exact integer coefficients.

A MultiPoly stores a dict from exponent tuples to nonzero ints.  Operations
between polynomials with different variable counts pad the shorter exponent
vectors with zeros, so a univariate value can be mixed freely with a
bivariate one.
"""

import re
from math import comb


def var_names(nvars):
    if nvars <= 1:
        return ("x",)
    if nvars == 2:
        return ("x", "y")
    return tuple("x%d" % (i + 1) for i in range(nvars))


def _pad(exps, nvars):
    if len(exps) == nvars:
        return exps
    return exps + (0,) * (nvars - len(exps))


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, terms=None, nvars=1):
        cs = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) > nvars:
                    raise ValueError("exponent vector longer than variable count")
                exps = _pad(exps, nvars)
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent")
                c = cs.get(exps, 0) + c
                if c:
                    cs[exps] = c
                else:
                    cs.pop(exps, None)
        self.nvars = nvars
        self.terms = cs

    # construction helpers

    @classmethod
    def const(cls, c, nvars=1):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, i, nvars=None):
        if nvars is None:
            nvars = i + 1
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars)

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = tuple(exps)
        return cls({exps: coeff}, max(len(exps), 1))

    @classmethod
    def promote(cls, item, nvars=1):
        if isinstance(item, MultiPoly):
            return item
        if isinstance(item, int):
            return cls.const(item, nvars)
        raise TypeError("cannot promote %r to MultiPoly" % (item,))

    def _raw(self, terms, nvars):
        # skip validation for internally built, already canonical dicts
        p = MultiPoly.__new__(MultiPoly)
        p.nvars = nvars
        p.terms = terms
        return p

    def widen(self, nvars):
        if nvars == self.nvars:
            return self
        if nvars < self.nvars:
            raise ValueError("cannot narrow a polynomial")
        return self._raw({_pad(e, nvars): c for e, c in self.terms.items()}, nvars)

    def _common(self, other):
        other = self.promote(other, self.nvars)
        n = max(self.nvars, other.nvars)
        return self.widen(n), other.widen(n), n

    # arithmetic

    def __add__(self, other):
        if isinstance(other, int) or isinstance(other, MultiPoly):
            a, b, n = self._common(other)
        else:
            return NotImplemented
        cs = dict(a.terms)
        for e, c in b.terms.items():
            v = cs.get(e, 0) + c
            if v:
                cs[e] = v
            else:
                cs.pop(e, None)
        return self._raw(cs, n)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        if not isinstance(other, (int, MultiPoly)):
            return NotImplemented
        return self + (-self.promote(other, self.nvars))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self._raw({}, self.nvars)
            return self._raw({e: c * other for e, c in self.terms.items()}, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b, n = self._common(other)
        cs = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                cs[e] = cs.get(e, 0) + c1 * c2
        return self._raw({e: c for e, c in cs.items() if c}, n)

    __rmul__ = __mul__

    def __pow__(self, m):
        if m < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(1, self.nvars)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        n = max(self.nvars, other.nvars)
        return self.widen(n).terms == other.widen(n).terms

    def __hash__(self):
        # trailing zero exponents are stripped so equal values hash equal
        items = []
        for e, c in self.terms.items():
            e = list(e)
            while e and e[-1] == 0:
                e.pop()
            items.append((tuple(e), c))
        return hash(frozenset(items))

    def __bool__(self):
        return bool(self.terms)

    # queries

    def is_zero(self):
        return not self.terms

    def coefficient(self, exps):
        return self.terms.get(_pad(tuple(exps), self.nvars), 0)

    def degree(self, i=None):
        if not self.terms:
            return -1
        if i is None:
            return max(sum(e) for e in self.terms)
        return max(e[i] for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def evaluate(self, values):
        """Evaluate at integer points; values may be shorter than nvars (rest = 1)."""
        vals = list(values) + [1] * (self.nvars - len(values))
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def at_ones(self):
        return sum(self.terms.values())

    def shift(self, delta, which=None):
        """Substitute x_i -> x_i + delta for each selected variable index."""
        sel = range(self.nvars) if which is None else which
        out = self
        for i in sel:
            cs = {}
            for e, c in out.terms.items():
                d = e[i]
                for a in range(d + 1):
                    f = list(e)
                    f[i] = a
                    f = tuple(f)
                    cs[f] = cs.get(f, 0) + c * comb(d, a) * delta ** (d - a)
            out = self._raw({e: c for e, c in cs.items() if c}, out.nvars)
        return out

    # text form

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_string(self, names=None):
        if names is None:
            names = var_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = []
            for name, k in zip(names, e):
                if k == 1:
                    mono.append(name)
                elif k > 1:
                    mono.append("%s^%d" % (name, k))
            body = "*".join(mono)
            a = abs(c)
            if not body:
                text = str(a)
            elif a == 1:
                text = body
            else:
                text = "%d*%s" % (a, body)
            if not parts:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append(("- " if c < 0 else "+ ") + text)
        return " ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return "MultiPoly(%r)" % self.to_string()

    @classmethod
    def parse(cls, text, names=None, nvars=None):
        """Parse the canonical text form (also accepts implicit products like 3x^2y)."""
        if names is None:
            names = var_names(nvars or 2)
            if nvars is None:
                # infer: bivariate only if y appears
                if re.search(r"x\d", text):
                    width = max(int(m) for m in re.findall(r"x(\d+)", text))
                    names = var_names(max(width, 3))
                elif "y" in text:
                    names = var_names(2)
                else:
                    names = var_names(1)
        idx = {nm: i for i, nm in enumerate(names)}
        nv = len(names) if nvars is None else nvars
        s = text.replace(" ", "").replace("−", "-")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        terms = {}
        name_re = "|".join(sorted((re.escape(n) for n in names), key=len, reverse=True))
        factor_re = re.compile(r"(%s)(?:\^(\d+))?" % name_re)
        if re.fullmatch(r"([+-][^+-]+)+", s) is None:
            raise ValueError("cannot parse polynomial %r" % text)
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            m = re.match(r"(\d+)\*?", body)
            coeff = 1
            rest = body
            if m:
                coeff = int(m.group(1))
                rest = body[m.end():]
            exps = [0] * nv
            pos = 0
            while pos < len(rest):
                if rest[pos] == "*":
                    pos += 1
                    continue
                fm = factor_re.match(rest, pos)
                if fm is None:
                    raise ValueError("cannot parse term %r" % body)
                exps[idx[fm.group(1)]] += int(fm.group(2) or 1)
                pos = fm.end()
            e = tuple(exps)
            terms[e] = terms.get(e, 0) + (coeff if sign == "+" else -coeff)
        return cls(terms, nv)


def poly_shift_minus_one(p, which=None):
    """x_i -> x_i - 1 on the selected variables (all by default)."""
    return p.shift(-1, which)


X = MultiPoly.var(0, 1)
ONE = MultiPoly.const(1, 1)
ZERO = MultiPoly({}, 1)
