"""Sparse multivariate polynomials over Q.

A polynomial is a dict ``{exponent tuple: Fraction}`` with no zero
coefficients.  Exponent tuples are stored in ascending variable order: index 0
is the *smallest* variable of the monomial order.
"""

from __future__ import annotations

import re
from operator import add as _plus, sub as _minus
from fractions import Fraction
from typing import Iterable, Sequence

Mono = tuple[int, ...]
Poly = dict[Mono, Fraction]


def q(c):
    """Exact scalar in its cheapest form: an ``int`` when integral, else a
    ``Fraction``.  Integer coefficients dominate in practice and int
    arithmetic is far faster than Fraction arithmetic."""
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def zero_mono(nvars: int) -> Mono:
    return (0,) * nvars


def normalize(p: Poly) -> Poly:
    """Demote integral Fraction coefficients to int, in place."""
    for m, v in p.items():
        if type(v) is not int and v.denominator == 1:
            p[m] = v.numerator
    return p


def const(c, nvars: int) -> Poly:
    c = q(c)
    return {zero_mono(nvars): c} if c else {}


def var(i: int, nvars: int) -> Poly:
    m = [0] * nvars
    m[i] = 1
    return {tuple(m): 1}


def mmul(a: Mono, b: Mono) -> Mono:
    return tuple(map(_plus, a, b))


def mdiv(a: Mono, b: Mono) -> Mono:
    return tuple(map(_minus, a, b))


def divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mlcm(a: Mono, b: Mono) -> Mono:
    return tuple(map(max, a, b))


def coprime(a: Mono, b: Mono) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class NotDivisible(ArithmeticError):
    pass


def divide_exact(p: Poly, d: Poly, order: "MonomialOrder") -> Poly:
    """Quotient ``p / d``; raises :class:`NotDivisible` on a nonzero remainder."""
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    lm = order.lm(d)
    lc = Fraction(d[lm])
    rem = dict(p)
    quot: Poly = {}
    while rem:
        m = order.lm(rem)
        if not divides(lm, m):
            raise NotDivisible("remainder is nonzero")
        t = tuple(map(_minus, m, lm))
        c = q(Fraction(rem[m]) / lc)
        quot[t] = c
        iadd(rem, mul_term(d, t, c), -1)
    return quot


def divmask(m: Mono) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def iadd(p: Poly, g: Poly, c=1) -> Poly:
    """``p += c*g`` in place."""
    if type(c) is not int:
        c = q(c)
    for m, x in g.items():
        v = p.get(m, 0) + c * x
        if v:
            p[m] = v
        else:
            p.pop(m, None)
    return p


def add(p: Poly, g: Poly, c=1) -> Poly:
    return iadd(dict(p), g, c)


def scale(p: Poly, c) -> Poly:
    if not c:
        return {}
    c = q(c)
    return {m: q(c * x) for m, x in p.items()}


def mul(p: Poly, g: Poly) -> Poly:
    if len(p) > len(g):
        p, g = g, p
    out: Poly = {}
    for a, x in p.items():
        for b, y in g.items():
            m = tuple(map(_plus, a, b))
            v = out.get(m, 0) + x * y
            if v:
                out[m] = v
            else:
                del out[m]
    return normalize(out)


def mul_term(p: Poly, m: Mono, c) -> Poly:
    c = q(c)
    return {tuple(map(_plus, a, m)): c * x for a, x in p.items()}


def power(p: Poly, k: int, nvars: int) -> Poly:
    out = const(1, nvars)
    for _ in range(k):
        out = mul(out, p)
    return out


def degree(p: Poly) -> int:
    return max((sum(m) for m in p), default=-1)


def embed(p: Poly, positions: Sequence[int], nvars: int) -> Poly:
    """Re-index variables: variable ``i`` of ``p`` becomes ``positions[i]``."""
    out: Poly = {}
    for m, c in p.items():
        nm = [0] * nvars
        for i, e in enumerate(m):
            if e:
                nm[positions[i]] += e
        out[tuple(nm)] = c
    return out


def substitute(p: Poly, images: Sequence[Poly], nvars_out: int, reduce=None) -> Poly:
    """Algebra map sending variable ``i`` to ``images[i]``.

    ``reduce`` (optional) is applied to every partial product to keep sizes
    bounded; it must be an algebra normal form in the target.
    """
    cache: dict[tuple[int, int], Poly] = {}

    def pw(i: int, e: int) -> Poly:
        if (i, e) not in cache:
            if e == 1:
                cache[(i, e)] = images[i]
            else:
                r = mul(pw(i, e - 1), images[i])
                cache[(i, e)] = reduce(r) if reduce else r
        return cache[(i, e)]

    out: Poly = {}
    for m, c in p.items():
        term = const(c, nvars_out)
        for i, e in enumerate(m):
            if e:
                term = mul(term, pw(i, e))
                if reduce:
                    term = reduce(term)
        iadd(out, term)
    return out


def evaluate(p: Poly, values: Sequence[Fraction]) -> Fraction:
    s = Fraction(0)
    for m, c in p.items():
        t = c
        for v, e in zip(values, m):
            if e:
                t *= v ** e
        s += t
    return s


class MonomialOrder:
    """Block degree-reverse-lexicographic order.

    ``blocks`` lists index ranges ``(start, stop)`` from most to least
    significant; inside each block the order is degrevlex with index ``start``
    the smallest variable.  A single block is plain degrevlex.
    """

    def __init__(self, nvars: int, blocks: Sequence[tuple[int, int]] | None = None):
        self.nvars = nvars
        self.blocks = tuple(tuple(b) for b in (blocks or [(0, nvars)]))
        self._key: dict[Mono, tuple[int, ...]] = {}
        self._nkey: dict[Mono, tuple[int, ...]] = {}

    @property
    def name(self) -> str:
        if len(self.blocks) == 1:
            return "degrevlex"
        return "block-degrevlex" + "".join(f"[{a}:{b}]" for a, b in self.blocks)

    def key(self, m: Mono) -> tuple[int, ...]:
        k = self._key.get(m)
        if k is None:
            parts: list[int] = []
            for a, b in self.blocks:
                seg = m[a:b]
                parts.append(sum(seg))
                parts.extend(-e for e in seg)
            k = tuple(parts)
            self._key[m] = k
        return k

    def nkey(self, m: Mono) -> tuple[int, ...]:
        """Key whose ascending order is the descending monomial order."""
        k = self._nkey.get(m)
        if k is None:
            k = tuple(-x for x in self.key(m))
            self._nkey[m] = k
        return k

    def lm(self, p: Poly) -> Mono:
        return max(p, key=self.key)

    def sorted_terms(self, p: Poly) -> list[tuple[Mono, Fraction]]:
        return sorted(p.items(), key=lambda t: self.key(t[0]), reverse=True)

    def describe(self) -> dict:
        return {"name": self.name, "blocks": [list(b) for b in self.blocks]}


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------

def fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_text(p: Poly, names: Sequence[str], order: MonomialOrder) -> str:
    """Canonical form like ``3*T_g^2*U_e - 1/2*U_x``; terms in descending
    monomial order, variables inside a term in declaration order."""
    if not p:
        return "0"
    out = []
    for k, (m, c) in enumerate(order.sorted_terms(p)):
        factors = []
        # variables in declaration order (T before U)
        for i in range(len(m)):
            if m[i]:
                factors.append(names[i] if m[i] == 1 else f"{names[i]}^{m[i]}")
        mag = abs(c)
        body = "*".join(factors)
        if not body:
            body = fmt_coeff(mag)
        elif mag != 1:
            body = f"{fmt_coeff(mag)}*{body}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


class ParseError(ValueError):
    pass


def parse(text: str, names: Sequence[str]) -> Poly:
    """Inverse of :func:`to_text` (no parentheses)."""
    nv = len(names)
    index = {n: i for i, n in enumerate(names)}
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    out: Poly = {}
    # split on top-level +/-, keeping signs; a '-' right after '^' is not allowed
    terms = re.findall(r"[+-]?[^+-]+", s.replace(" ", ""))
    if "".join(terms) != s.replace(" ", ""):
        raise ParseError(f"cannot parse {text!r}")
    for t in terms:
        sign = -1 if t.startswith("-") else 1
        t = t.lstrip("+-")
        coef = Fraction(sign)
        mono = [0] * nv
        for f in t.split("*"):
            if not f:
                raise ParseError(f"empty factor in {text!r}")
            if re.fullmatch(r"\d+(/\d+)?", f):
                coef *= Fraction(f)
                continue
            base, _, exp = f.partition("^")
            if base not in index:
                raise ParseError(f"unknown variable {base!r}")
            mono[index[base]] += int(exp) if exp else 1
        iadd(out, {tuple(mono): q(coef)})
    return out


def poly_to_json(p: Poly, order: MonomialOrder) -> list:
    return [[list(m), fmt_coeff(c)] for m, c in order.sorted_terms(p)]


def poly_from_json(data: Iterable) -> Poly:
    return {tuple(m): q(Fraction(c)) for m, c in data}
