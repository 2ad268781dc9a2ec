"""Words in the tensor algebra T(X_H), their coactions, and the elements
p, p', q, q' of the presented ring.

A free word is a dict ``{(i_1, ..., i_d): coeff}`` standing for
``Σ coeff X_{x_{i_1}} ... X_{x_{i_d}}``.  Elements of ``T(X_H) ⊗ H`` (or
``H ⊗ T(X_H)``) are dicts word -> Vec; the H-leg stays of degree one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import poly as P
from . import verdict as V
from .hopf import CayleyTable, HopfAlgebra, Vec, vadd, vscale
from .laurent import GenericCocycle, HopfMaps, PresentedRing, RingElement, hopf_maps

Word = tuple[int, ...]


class MismatchError(AssertionError):
    """The word route and the closed formula disagree."""


# ---------------------------------------------------------------------------
# Free words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FreeWord:
    terms: dict[Word, Fraction]

    @classmethod
    def letter(cls, v: Vec) -> "FreeWord":
        return cls({(i,): Fraction(c) for i, c in v.items() if c})

    @classmethod
    def one(cls) -> "FreeWord":
        return cls({(): Fraction(1)})

    def __add__(self, other: "FreeWord") -> "FreeWord":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FreeWord({w: c for w, c in out.items() if c})

    def __sub__(self, other: "FreeWord") -> "FreeWord":
        return self + other.scale(-1)

    def scale(self, c) -> "FreeWord":
        return FreeWord({w: c * x for w, x in self.terms.items() if c * x})

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        out: dict[Word, Fraction] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return FreeWord({w: c for w, c in out.items() if c})

    def is_zero(self) -> bool:
        return not self.terms

    def fmt(self, basis: list[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            body = "·".join(f"X[{basis[i]}]" for i in w) or "1"
            coef = "" if c == 1 else ("-" if c == -1 else f"{P.fmt_coeff(c)}*")
            parts.append(coef + body)
        return " + ".join(parts).replace("+ -", "- ")


def word_product(factors: list[FreeWord]) -> FreeWord:
    out = FreeWord.one()
    for f in factors:
        out = out * f
    return out


# ---------------------------------------------------------------------------
# Coactions
# ---------------------------------------------------------------------------

CoactedWord = dict  # Word -> Vec


def _coacted_mul(h: HopfAlgebra, a: CoactedWord, b: CoactedWord) -> CoactedWord:
    # both sides multiply the same way: words concatenate, H-legs multiply
    out: CoactedWord = {}
    for w1, v1 in a.items():
        for w2, v2 in b.items():
            hv = h.mul(v1, v2)
            if hv:
                out[w1 + w2] = vadd(out.get(w1 + w2, {}), hv)
    return {w: v for w, v in out.items() if v}


def _coact_letter(h: HopfAlgebra, i: int, right: bool) -> CoactedWord:
    out: CoactedWord = {}
    for (j, k), c in h.comult[i].items():
        w, leg = ((j,), k) if right else ((k,), j)
        out[w] = vadd(out.get(w, {}), {leg: c})
    return {w: v for w, v in out.items() if v}


def _coact(h: HopfAlgebra, w: FreeWord, right: bool) -> CoactedWord:
    total: CoactedWord = {}
    for word, c in w.terms.items():
        acc: CoactedWord = {(): dict(h.unit)}
        for i in word:
            acc = _coacted_mul(h, acc, _coact_letter(h, i, right))
        for ww, v in acc.items():
            total[ww] = vadd(total.get(ww, {}), v, c)
    return {w: v for w, v in total.items() if v}


def coact_right(h: HopfAlgebra, w: FreeWord) -> CoactedWord:
    """Algebra-morphism extension of ``X_x ↦ X_{x_1} ⊗ x_2``."""
    return _coact(h, w, True)


def coact_left(h: HopfAlgebra, w: FreeWord) -> CoactedWord:
    """Algebra-morphism extension of ``X_x ↦ x_1 ⊗ X_{x_2}``; stored as word -> H-leg."""
    return _coact(h, w, False)


def check_coinvariance(h: HopfAlgebra, w: FreeWord, side: str, label: str = "") -> V.Verdict:
    check = f"coinvariance-{side}"
    got = coact_right(h, w) if side == "right" else coact_left(h, w)
    want = {word: vscale(h.unit, c) for word, c in w.terms.items()}
    want = {k: v for k, v in want.items() if v}
    if got != want:
        bad = sorted(set(got) | set(want))
        word = next(k for k in bad if got.get(k) != want.get(k))
        return V.failed(check, {"element": label or w.fmt(h.basis),
                                "word": [h.basis[i] for i in word],
                                "coaction-leg": h.fmt(got.get(word, {})),
                                "expected-leg": h.fmt(want.get(word, {}))})
    return V.passed(check)


# ---------------------------------------------------------------------------
# P, P', Q, Q'
# ---------------------------------------------------------------------------

def _expand(h: HopfAlgebra, v: Vec, d: int):
    """Terms ``(legs, coeff)`` of Δ^{(d-1)}(v) over basis indices."""
    for i, a in v.items():
        for legs, c in h.delta_iter(i, d):
            yield legs, a * c


def build_P_Q(h: HopfAlgebra, x: Vec, y: Vec) -> dict[str, FreeWord]:
    L = lambda v: FreeWord.letter(v)  # noqa: E731
    e = h.e
    Px = FreeWord({})
    Ppx = FreeWord({})
    for (a, b), c in _expand(h, x, 2):
        Px = Px + (L(e(a)) * L(h.S(e(b)))).scale(c)
        Ppx = Ppx + (L(h.S(e(a))) * L(e(b))).scale(c)
    Q = FreeWord({})
    Qp = FreeWord({})
    for (a, b), c in _expand(h, x, 2):
        for (k, l), d in _expand(h, y, 2):
            prod = h.mul(e(b), e(l))
            Q = Q + (L(e(a)) * L(e(k)) * L(h.S(prod))).scale(c * d)
            prod1 = h.mul(e(a), e(k))
            Qp = Qp + (L(h.S(prod1)) * L(e(b)) * L(e(l))).scale(c * d)
    return {"P": Px, "P'": Ppx, "Q": Q, "Q'": Qp}


# ---------------------------------------------------------------------------
# μ and μ'
# ---------------------------------------------------------------------------

RingTensorH = dict  # basis index of H -> Poly in the presented ring


def _st_mul(h: HopfAlgebra, A: RingTensorH, B: RingTensorH) -> RingTensorH:
    out: RingTensorH = {}
    for k1, p1 in A.items():
        for k2, p2 in B.items():
            prod = h.mul(h.e(k1), h.e(k2))
            if not prod:
                continue
            pp = P.mul(p1, p2)
            for k, c in prod.items():
                P.iadd(out.setdefault(k, {}), pp, c)
    return {k: p for k, p in out.items() if p}


def _mu_letter(ring: PresentedRing, i: int) -> RingTensorH:
    out: RingTensorH = {}
    for (j, k), c in ring.base.comult[i].items():
        P.iadd(out.setdefault(k, {}), P.var(j, ring.nvars), c)
    return out


def _mu_prime_letter(ring: PresentedRing, i: int) -> RingTensorH:
    h = ring.base
    out: RingTensorH = {}
    for (j, k), c in h.comult[i].items():
        for s, d in h.S(h.e(j)).items():
            P.iadd(out.setdefault(s, {}), P.var(ring.n + k, ring.nvars), c * d)
    return out


def _apply_word_map(ring: PresentedRing, w: FreeWord, letter: Callable, anti: bool) -> dict[int, RingElement]:
    h = ring.base
    total: RingTensorH = {}
    one = {k: P.const(c, ring.nvars) for k, c in h.unit.items()}
    for word, c in w.terms.items():
        acc = one
        for i in (reversed(word) if anti else word):
            acc = _st_mul(h, acc, letter(ring, i))
        for k, p in acc.items():
            P.iadd(total.setdefault(k, {}), p, c)
    return {k: ring.elem(p) for k, p in total.items() if ring.nf(p)}


def mu(ring: PresentedRing, w: FreeWord) -> dict[int, RingElement]:
    """``μ(X_x) = t_{x_1} ⊗ x_2`` extended multiplicatively."""
    return _apply_word_map(ring, w, _mu_letter, anti=False)


def mu_prime(ring: PresentedRing, w: FreeWord) -> dict[int, RingElement]:
    """``μ'(X_x) = t^{-1}_{x_2} ⊗ S(x_1)`` extended anti-multiplicatively."""
    return _apply_word_map(ring, w, _mu_prime_letter, anti=True)


def tensor_equal(a: dict[int, RingElement], b: dict[int, RingElement]) -> bool:
    keys = set(a) | set(b)
    return all((a.get(k) is None and b[k].is_zero()) or (b.get(k) is None and a[k].is_zero())
               or (k in a and k in b and a[k] == b[k]) for k in keys)


def mu_convolution_check(ring: PresentedRing) -> V.Verdict:
    """``μ(X_{x_1})μ'(X_{x_2}) = μ'(X_{x_1})μ(X_{x_2}) = ε(x) 1⊗1`` on the basis."""
    h = ring.base
    for i in range(h.n):
        target = {k: ring.const(h.counit[i] * c) for k, c in h.unit.items() if h.counit[i] * c}
        for order in ("mu*mu'", "mu'*mu"):
            acc: RingTensorH = {}
            for (j, k), c in h.comult[i].items():
                if order == "mu*mu'":
                    prod = _st_mul(h, _mu_letter(ring, j), _mu_prime_letter(ring, k))
                else:
                    prod = _st_mul(h, _mu_prime_letter(ring, j), _mu_letter(ring, k))
                for kk, p in prod.items():
                    P.iadd(acc.setdefault(kk, {}), p, c)
            got = {k: ring.elem(p) for k, p in acc.items()}
            got = {k: v for k, v in got.items() if not v.is_zero()}
            if not tensor_equal(got, target):
                return V.failed("mu-convolution", {"basis": h.basis[i], "product": order,
                                                   "got": {h.basis[k]: str(v) for k, v in got.items()}})
    return V.passed("mu-convolution", basis=h.n)


def strip_unit_leg(ring: PresentedRing, t: dict[int, RingElement], label: str) -> RingElement:
    """``r`` such that ``t = r ⊗ 1``; raises :class:`MismatchError` otherwise."""
    h = ring.base
    k0 = min(k for k, c in h.unit.items() if c)
    r = t.get(k0, ring.zero()) * (1 / Fraction(h.unit[k0]))
    for k in range(h.n):
        want = r * Fraction(h.unit.get(k, 0))
        if t.get(k, ring.zero()) != want:
            raise MismatchError(f"{label}: H-leg is not a multiple of 1 at {h.basis[k]}")
    return r


# ---------------------------------------------------------------------------
# Closed formulas
# ---------------------------------------------------------------------------

class PQ:
    """Closed formulas of p, p', q, q' as (bi)linear functions, with caches."""

    def __init__(self, ring: PresentedRing):
        self.ring = ring
        self.h = ring.base
        self._p: dict = {}
        self._q: dict = {}

    def _T(self, v: Vec) -> P.Poly:
        return {P.var(i, self.ring.nvars).popitem()[0]: c for i, c in v.items() if c}

    def _U(self, v: Vec) -> P.Poly:
        return {P.var(self.ring.n + i, self.ring.nvars).popitem()[0]: c for i, c in v.items() if c}

    def _basis_p(self, i: int) -> tuple[RingElement, RingElement]:
        if i not in self._p:
            h, e = self.h, self.h.e
            p: P.Poly = {}
            pp: P.Poly = {}
            for (a, b), c in h.comult[i].items():
                P.iadd(p, P.mul(self._T(e(a)), self._T(h.S(e(b)))), c)
                P.iadd(pp, P.mul(self._U(h.S(e(a))), self._U(e(b))), c)
            self._p[i] = (self.ring.elem(p), self.ring.elem(pp))
        return self._p[i]

    def _basis_q(self, i: int, j: int) -> tuple[RingElement, RingElement]:
        if (i, j) not in self._q:
            h, e = self.h, self.h.e
            q: P.Poly = {}
            qp: P.Poly = {}
            for (a, b), c in h.comult[i].items():
                for (k, l), d in h.comult[j].items():
                    tail = h.mul(e(b), e(l))
                    head = h.mul(e(a), e(k))
                    P.iadd(q, P.mul(P.mul(self._T(e(a)), self._T(e(k))), self._T(h.S(tail))), c * d)
                    P.iadd(qp, P.mul(P.mul(self._U(h.S(head)), self._U(e(b))), self._U(e(l))), c * d)
            self._q[(i, j)] = (self.ring.elem(q), self.ring.elem(qp))
        return self._q[(i, j)]

    def _lin(self, v: Vec, which: int) -> RingElement:
        acc: P.Poly = {}
        for i, c in v.items():
            P.iadd(acc, self._basis_p(i)[which].p, c)
        return RingElement(self.ring, acc)

    def p(self, v: Vec) -> RingElement:
        return self._lin(v, 0)

    def p_prime(self, v: Vec) -> RingElement:
        return self._lin(v, 1)

    def _bilin(self, u: Vec, v: Vec, which: int) -> RingElement:
        acc: P.Poly = {}
        for i, a in u.items():
            for j, b in v.items():
                P.iadd(acc, self._basis_q(i, j)[which].p, a * b)
        return RingElement(self.ring, acc)

    def q(self, u: Vec, v: Vec) -> RingElement:
        return self._bilin(u, v, 0)

    def q_prime(self, u: Vec, v: Vec) -> RingElement:
        return self._bilin(u, v, 1)


def pq_elements(ring: PresentedRing, x: Vec, y: Vec, pq: PQ | None = None) -> dict[str, RingElement]:
    """p_x, p'_x, q_{x,y}, q'_{x,y} by the word route (μ, μ') and by the closed
    formulas; the two must agree."""
    pq = pq or PQ(ring)
    h = ring.base
    words = build_P_Q(h, x, y)
    via_words = {
        "p": strip_unit_leg(ring, mu(ring, words["P"]), "p"),
        "p'": strip_unit_leg(ring, mu_prime(ring, words["P'"]), "p'"),
        "q": strip_unit_leg(ring, mu(ring, words["Q"]), "q"),
        "q'": strip_unit_leg(ring, mu_prime(ring, words["Q'"]), "q'"),
    }
    closed = {"p": pq.p(x), "p'": pq.p_prime(x), "q": pq.q(x, y), "q'": pq.q_prime(x, y)}
    for k in via_words:
        if via_words[k] != closed[k]:
            raise MismatchError(f"{k}: word route {via_words[k]} != closed formula {closed[k]}")
    return closed


def check_pq_dual_path(ring: PresentedRing) -> V.Verdict:
    h = ring.base
    pq = PQ(ring)
    for i, j in itertools.product(range(h.n), repeat=2):
        try:
            pq_elements(ring, h.e(i), h.e(j), pq)
        except MismatchError as exc:
            return V.failed("pq-dual-path", {"pair": [h.basis[i], h.basis[j]], "error": str(exc)})
    return V.passed("pq-dual-path", pairs=h.n ** 2)


def check_all_coinvariance(h: HopfAlgebra) -> V.Verdict:
    for i, j in itertools.product(range(h.n), repeat=2):
        w = build_P_Q(h, h.e(i), h.e(j))
        for name, side in (("P", "right"), ("Q", "right"), ("P'", "left"), ("Q'", "left")):
            if name.startswith("P") and j:
                continue
            v = check_coinvariance(h, w[name], side, f"{name}[{h.basis[i]},{h.basis[j]}]")
            if not v.ok:
                return V.failed("pq-coinvariance", v.counterexample)
    return V.passed("pq-coinvariance", pairs=h.n ** 2)


# ---------------------------------------------------------------------------
# Identities linking σ and p, q
# ---------------------------------------------------------------------------

def verify_prop_nice(gc: GenericCocycle, pq: PQ | None = None) -> V.Verdict:
    """``σ(x,y) = q_{x_1,y_1} p'_{x_2y_2}`` and ``σ^{-1}(x,y) = p_{x_1y_1} q'_{x_2,y_2}``."""
    ring, h = gc.ring, gc.base
    if not gc.is_trivial_alpha():
        return V.skipped("prop-nice", "requires the trivial cocycle")
    pq = pq or PQ(ring)
    e = h.e
    for i, j in itertools.product(range(h.n), repeat=2):
        s_terms, si_terms = [], []
        for (a, b), c in h.comult[i].items():
            for (k, l), d in h.comult[j].items():
                s_terms.append((c * d, [pq.q(e(a), e(k)), pq.p_prime(h.mul(e(b), e(l)))]))
                si_terms.append((c * d, [pq.p(h.mul(e(a), e(k))), pq.q_prime(e(b), e(l))]))
        for label, terms, want in (("sigma", s_terms, gc.sigma[i][j]), ("sigma^-1", si_terms, gc.sigma_inv[i][j])):
            got = ring.linear_sum(terms)
            if got != want:
                return V.failed("prop-nice", {"pair": [h.basis[i], h.basis[j]], "identity": label,
                                              "lhs": str(want), "rhs": str(got)})
    return V.passed("prop-nice", pairs=h.n ** 2)


def antipode_pq_cocommutative(ring: PresentedRing, maps: HopfMaps | None = None, pq: PQ | None = None) -> V.Verdict:
    """``S(p'_x) = p_x`` and ``S(q'_{x,y}) = q_{x,y}`` for cocommutative H."""
    h = ring.base
    if not h.is_cocommutative():
        return V.skipped("antipode-pq", f"{h.name} is not cocommutative")
    maps = maps or hopf_maps(ring)
    pq = pq or PQ(ring)
    for i in range(h.n):
        if maps.Antipode(pq.p_prime(h.e(i))) != pq.p(h.e(i)):
            return V.failed("antipode-pq", {"element": h.basis[i], "identity": "S(p') = p"})
    for i, j in itertools.product(range(h.n), repeat=2):
        if maps.Antipode(pq.q_prime(h.e(i), h.e(j))) != pq.q(h.e(i), h.e(j)):
            return V.failed("antipode-pq", {"pair": [h.basis[i], h.basis[j]], "identity": "S(q') = q"})
    return V.passed("antipode-pq", pairs=h.n ** 2)


# ---------------------------------------------------------------------------
# Dedekind group determinant
# ---------------------------------------------------------------------------

@dataclass
class GroupDeterminant:
    names: list[str]
    order: P.MonomialOrder
    poly: P.Poly

    def text(self) -> str:
        return P.to_text(self.poly, self.names, self.order)


def bareiss_determinant(matrix: list[list[P.Poly]], order: P.MonomialOrder) -> P.Poly:
    """Fraction-free elimination; every division is exact (Sylvester's identity)."""
    m = [[dict(x) for x in row] for row in matrix]
    n = len(m)
    nv = order.nvars
    sign = 1
    prev: P.Poly = P.const(1, nv)
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return {}
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = P.add(P.mul(m[i][j], m[k][k]), P.mul(m[i][k], m[k][j]), -1)
                m[i][j] = P.divide_exact(num, prev, order) if num else {}
            m[i][k] = {}
        prev = m[k][k]
    return P.scale(m[n - 1][n - 1], sign) if n else P.const(1, nv)


def group_determinant(cayley: CayleyTable) -> GroupDeterminant:
    """``det(T_{g h^{-1}})_{g,h}`` expanded over Q."""
    cayley.validate()
    n = cayley.order
    names = [f"T_{lab}" for lab in cayley.labels]
    order = P.MonomialOrder(n)
    matrix = [[P.var(cayley.table[g][cayley.inverse(h)], n) for h in range(n)] for g in range(n)]
    return GroupDeterminant(names, order, bareiss_determinant(matrix, order))
