"""Linear and bilinear forms on a Hopf algebra and what they twist."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import verdict as V
from .hopf import HopfAlgebra, Tensor, Vec, _clean, validate_hopf, vadd, vscale
from .linalg import frac, solve


class NotInvertible(ValueError):
    """The form has no convolution inverse."""


class AntipodeMissing(ValueError):
    pass


class ComoduleError(ValueError):
    pass


@dataclass(frozen=True)
class LinearForm:
    values: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Sequence) -> "LinearForm":
        return cls(tuple(frac(v) for v in values))

    @classmethod
    def counit(cls, h: HopfAlgebra) -> "LinearForm":
        return cls(tuple(h.counit))

    def __call__(self, v: Vec) -> Fraction:
        return sum((c * self.values[i] for i, c in v.items()), Fraction(0))

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class BilinearForm:
    matrix: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> "BilinearForm":
        return cls(tuple(tuple(frac(v) for v in r) for r in rows))

    @classmethod
    def trivial(cls, h: HopfAlgebra) -> "BilinearForm":
        return cls(tuple(tuple(a * b for b in h.counit) for a in h.counit))

    @property
    def n(self) -> int:
        return len(self.matrix)

    def __call__(self, u: Vec, v: Vec) -> Fraction:
        s = Fraction(0)
        for i, a in u.items():
            row = self.matrix[i]
            for j, b in v.items():
                s += a * b * row[j]
        return s

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.matrix[ij[0]][ij[1]]

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.matrix]


Form = LinearForm | BilinearForm


# ---------------------------------------------------------------------------
# Convolution
# ---------------------------------------------------------------------------

def convolve(h: HopfAlgebra, f: Form, g: Form) -> Form:
    """``(f*g)(x) = f(x_1)g(x_2)``, or its bilinear analogue."""
    n = h.n
    if isinstance(f, LinearForm):
        return LinearForm(tuple(
            sum((c * f[a] * g[b] for (a, b), c in h.comult[i].items()), Fraction(0))
            for i in range(n)
        ))
    out = [[Fraction(0)] * n for _ in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        s = Fraction(0)
        for (a, b), c in h.comult[i].items():
            for (p, q), d in h.comult[j].items():
                s += c * d * f[a, p] * g[b, q]
        out[i][j] = s
    return BilinearForm(tuple(tuple(r) for r in out))


def _unit_form(h: HopfAlgebra, f: Form) -> Form:
    return LinearForm.counit(h) if isinstance(f, LinearForm) else BilinearForm.trivial(h)


def convolution_inverse(h: HopfAlgebra, f: Form) -> Form:
    """Solve ``f * g = ε`` exactly, then check ``g * f = ε`` as well."""
    n = h.n
    unit = _unit_form(h, f)
    if isinstance(f, LinearForm):
        a = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for (p, q), c in h.comult[i].items():
                a[i][q] += c * f[p]
        x = solve(a, list(unit.values))
        g: Form | None = None if x is None else LinearForm(tuple(x))
    else:
        N = n * n
        a = [[Fraction(0)] * N for _ in range(N)]
        b = []
        for i, j in itertools.product(range(n), repeat=2):
            row = a[i * n + j]
            for (p, q), c in h.comult[i].items():
                for (r, s), d in h.comult[j].items():
                    row[q * n + s] += c * d * f[p, r]
            b.append(unit[i, j])
        x = solve(a, b)
        g = None if x is None else BilinearForm(tuple(tuple(x[i * n:(i + 1) * n]) for i in range(n)))
    if g is None or convolve(h, f, g) != unit or convolve(h, g, f) != unit:
        raise NotInvertible("form is not convolution-invertible")
    return g


# ---------------------------------------------------------------------------
# Cocycle and laziness
# ---------------------------------------------------------------------------

def is_two_cocycle(h: HopfAlgebra, a: BilinearForm) -> V.Verdict:
    """``α(x_1,y_1)α(x_2y_2,z) = α(y_1,z_1)α(x,y_2z_2)`` on all basis triples."""
    n = h.n
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = Fraction(0)
        for (p, q), c in h.comult[i].items():
            for (r, s), d in h.comult[j].items():
                lhs += c * d * a[p, r] * a(h.mul(h.e(q), h.e(s)), h.e(k))
        rhs = Fraction(0)
        for (r, s), d in h.comult[j].items():
            for (t, u), e in h.comult[k].items():
                rhs += d * e * a[r, t] * a(h.e(i), h.mul(h.e(s), h.e(u)))
        if lhs != rhs:
            return V.failed(
                "is-two-cocycle",
                {"triple": [h.basis[i], h.basis[j], h.basis[k]], "lhs": str(lhs), "rhs": str(rhs)},
            )
    return V.passed("is-two-cocycle", triples=n ** 3)


def is_lazy(h: HopfAlgebra, a: BilinearForm) -> V.Verdict:
    """``α(x_1,y_1)x_2y_2 = α(x_2,y_2)x_1y_1`` on all basis pairs."""
    n = h.n
    for i, j in itertools.product(range(n), repeat=2):
        lhs: Vec = {}
        rhs: Vec = {}
        for (p, q), c in h.comult[i].items():
            for (r, s), d in h.comult[j].items():
                lhs = vadd(lhs, h.mul(h.e(q), h.e(s)), c * d * a[p, r])
                rhs = vadd(rhs, h.mul(h.e(p), h.e(r)), c * d * a[q, s])
        if lhs != rhs:
            return V.failed(
                "lazy", {"pair": [h.basis[i], h.basis[j]], "lhs": h.fmt(lhs), "rhs": h.fmt(rhs)}
            )
    return V.passed("lazy", pairs=n * n)


# ---------------------------------------------------------------------------
# Twisted algebras
# ---------------------------------------------------------------------------

@dataclass
class TwistedAlgebra:
    """``H`` with product ``(x, y) ↦ α(x_1, y_1) x_2 y_2``.

    ``verified`` is True only when the form is an invertible cocycle and
    associativity and unitality were re-checked on the basis.
    """

    base: HopfAlgebra
    form: BilinearForm
    mult: dict[tuple[int, int], Vec]
    verified: bool = False
    flags: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.base.n

    def mul(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                out = vadd(out, self.mult.get((i, j), {}), a * b)
        return out

    def table(self) -> dict[tuple[int, int], Vec]:
        return {k: v for k, v in self.mult.items() if v}

    def check_associative(self) -> V.Verdict:
        n, B = self.n, self.base.basis
        e = self.base.e
        for i, j, k in itertools.product(range(n), repeat=3):
            l = self.mul(self.mul(e(i), e(j)), e(k))
            r = self.mul(e(i), self.mul(e(j), e(k)))
            if l != r:
                return V.failed("associativity", {
                    "triple": [B[i], B[j], B[k]],
                    "lhs": self.base.fmt(l), "rhs": self.base.fmt(r)})
        return V.passed("associativity", triples=n ** 3)

    def check_unit(self) -> V.Verdict:
        one = self.base.unit
        for i in range(self.n):
            x = self.base.e(i)
            if self.mul(one, x) != x or self.mul(x, one) != x:
                return V.failed("unit", {"element": self.base.basis[i]})
        return V.passed("unit")


def _twisted_mult(h: HopfAlgebra, a: BilinearForm) -> dict[tuple[int, int], Vec]:
    m = {}
    for i, j in itertools.product(range(h.n), repeat=2):
        v: Vec = {}
        for (p, q), c in h.comult[i].items():
            for (r, s), d in h.comult[j].items():
                w = c * d * a[p, r]
                if w:
                    v = vadd(v, h.mul(h.e(q), h.e(s)), w)
        m[(i, j)] = v
    return m


def twist_algebra(h: HopfAlgebra, a: BilinearForm) -> TwistedAlgebra:
    tw = TwistedAlgebra(h, a, _twisted_mult(h, a))
    cocycle = is_two_cocycle(h, a).ok
    try:
        convolution_inverse(h, a)
        invertible = True
    except NotInvertible:
        invertible = False
    if not cocycle:
        tw.flags.append("form is not a two-cocycle")
    if not invertible:
        tw.flags.append("form is not convolution-invertible")
    if cocycle and invertible:
        assoc, unit = tw.check_associative(), tw.check_unit()
        if not (assoc.ok and unit.ok):
            raise AssertionError(f"twist by a cocycle failed: {assoc.to_json()} {unit.to_json()}")
        tw.verified = True
    return tw


# ---------------------------------------------------------------------------
# Cocycle deformation
# ---------------------------------------------------------------------------

def deformed_product(h: HopfAlgebra, a: BilinearForm, ainv: BilinearForm) -> dict[tuple[int, int], Vec]:
    """``x * y = α(x_1,y_1) x_2 y_2 α^{-1}(x_3,y_3)`` on basis pairs."""
    m = {}
    for i, j in itertools.product(range(h.n), repeat=2):
        v: Vec = {}
        for (p, q, r), c in h.delta_iter(i, 3):
            for (s, t, u), d in h.delta_iter(j, 3):
                w = c * d * a[p, s] * ainv[r, u]
                if w:
                    v = vadd(v, h.mul(h.e(q), h.e(t)), w)
        m[(i, j)] = v
    return m


def _antipode_for(h: HopfAlgebra, mult: dict[tuple[int, int], Vec]) -> list[Vec] | None:
    """Convolution inverse of the identity map for the given product."""
    n = h.n
    # unknown s[a][k]: coefficient of x_k in S(x_a); equations S(x_1) * x_2 = ε(x)1
    rows, rhs = [], []
    for i in range(n):
        eq = [[Fraction(0)] * (n * n) for _ in range(n)]
        for (p, q), c in h.comult[i].items():
            for k in range(n):
                for m_, x in mult.get((k, q), {}).items():
                    eq[m_][p * n + k] += c * x
        for m_ in range(n):
            rows.append(eq[m_])
            rhs.append(h.counit[i] * h.unit.get(m_, Fraction(0)))
    sol = solve(rows, rhs)
    if sol is None:
        return None
    return [_clean({k: sol[p * n + k] for k in range(n)}) for p in range(n)]


def deform_hopf(h: HopfAlgebra, a: BilinearForm) -> HopfAlgebra:
    """The cocycle deformation ``^αH^{α^{-1}}``: same coalgebra, new product,
    antipode recomputed and the result validated in full."""
    ainv = convolution_inverse(h, a)
    mult = deformed_product(h, a, ainv)
    S = _antipode_for(h, mult)
    if S is None:
        raise AntipodeMissing(f"no antipode for the deformation of {h.name}")
    L = h.with_product(f"{h.name}^alpha", mult, antipode=S)
    report = validate_hopf(L)
    if not report.ok:
        raise ValueError(f"deformation failed validation: {report.failures}")
    return L


# ---------------------------------------------------------------------------
# Cohomologous cocycles
# ---------------------------------------------------------------------------

def cohomologous_transform(h: HopfAlgebra, a: BilinearForm, lam: LinearForm) -> BilinearForm:
    """``β(x,y) = λ(x_1)λ(y_1)α(x_2,y_2)λ^{-1}(x_3y_3)``."""
    laminv = convolution_inverse(h, lam)
    n = h.n
    out = [[Fraction(0)] * n for _ in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        s = Fraction(0)
        for (p, q, r), c in h.delta_iter(i, 3):
            for (t, u, v), d in h.delta_iter(j, 3):
                w = c * d * lam[p] * lam[t] * a[q, u]
                if w:
                    s += w * laminv(h.mul(h.e(r), h.e(v)))
        out[i][j] = s
    beta = BilinearForm(tuple(tuple(r) for r in out))
    if is_two_cocycle(h, a).ok and not is_two_cocycle(h, beta).ok:
        raise AssertionError("cohomologous transform of a cocycle is not a cocycle")
    return beta


def comodule_iso_matrix(h: HopfAlgebra, lam: LinearForm) -> list[Vec]:
    """Images of basis elements under ``x ↦ λ^{-1}(x_1) x_2``."""
    laminv = convolution_inverse(h, lam)
    out = []
    for i in range(h.n):
        v: Vec = {}
        for (p, q), c in h.comult[i].items():
            v = vadd(v, {q: Fraction(1)}, c * laminv[p])
        out.append(v)
    return out


def _apply(images: list[Vec], v: Vec) -> Vec:
    out: Vec = {}
    for i, c in v.items():
        out = vadd(out, images[i], c)
    return out


def check_comodule_isomorphism(h: HopfAlgebra, a: BilinearForm, b: BilinearForm,
                               lam: LinearForm) -> V.Verdict:
    """``x ↦ λ^{-1}(x_1)x_2`` is multiplicative from ``^αH`` to ``^βH`` and
    colinear."""
    f = comodule_iso_matrix(h, lam)
    A, B = TwistedAlgebra(h, a, _twisted_mult(h, a)), TwistedAlgebra(h, b, _twisted_mult(h, b))
    for i, j in itertools.product(range(h.n), repeat=2):
        l = _apply(f, A.mul(h.e(i), h.e(j)))
        r = B.mul(f[i], f[j])
        if l != r:
            return V.failed("comodule-isomorphism",
                            {"pair": [h.basis[i], h.basis[j]], "lhs": h.fmt(l), "rhs": h.fmt(r)})
    for i in range(h.n):
        # colinearity: Δ(f(x)) = (f⊗id)Δ(x)
        l = h.coproduct(f[i])
        r: Tensor = {}
        for (p, q), c in h.comult[i].items():
            for k, x in f[p].items():
                r[(k, q)] = r.get((k, q), 0) + c * x
        if l != _clean(r):
            return V.failed("comodule-isomorphism", {"element": h.basis[i], "reason": "not colinear"})
    if _apply(f, h.unit) != h.unit:
        return V.failed("comodule-isomorphism", {"reason": "unit not preserved"})
    return V.passed("comodule-isomorphism")


def deformation_isomorphism(h: HopfAlgebra, a: BilinearForm, lam: LinearForm) -> V.Verdict:
    """``f(x) = λ^{-1}(x_1) x_2 λ(x_3)`` is a Hopf algebra map between the
    deformations by ``α`` and by its cohomologous ``β``."""
    laminv = convolution_inverse(h, lam)
    b = cohomologous_transform(h, a, lam)
    La, Lb = deform_hopf(h, a), deform_hopf(h, b)
    f = []
    for i in range(h.n):
        v: Vec = {}
        for (p, q, r), c in h.delta_iter(i, 3):
            v = vadd(v, {q: Fraction(1)}, c * laminv[p] * lam[r])
        f.append(v)
    for i, j in itertools.product(range(h.n), repeat=2):
        l = _apply(f, La.mul(h.e(i), h.e(j)))
        r = Lb.mul(f[i], f[j])
        if l != r:
            return V.failed("deformation-isomorphism",
                            {"pair": [h.basis[i], h.basis[j]], "lhs": h.fmt(l), "rhs": h.fmt(r)})
    for i in range(h.n):
        l = h.coproduct(f[i])
        r: Tensor = {}
        for (p, q), c in h.comult[i].items():
            for k, x in f[p].items():
                for m, y in f[q].items():
                    r[(k, m)] = r.get((k, m), 0) + c * x * y
        if l != _clean(r):
            return V.failed("deformation-isomorphism", {"element": h.basis[i], "reason": "not a coalgebra map"})
    return V.passed("deformation-isomorphism")


# ---------------------------------------------------------------------------
# Comodule algebras
# ---------------------------------------------------------------------------

@dataclass
class ComoduleAlgebra:
    """Right ``H``-comodule algebra: ``coaction[a]`` maps ``(b, k)`` to the
    coefficient of ``a_b ⊗ h_k`` in ``ρ(a_a)``."""

    hopf: HopfAlgebra
    basis: list[str]
    mult: dict[tuple[int, int], Vec]
    unit: Vec
    coaction: list[Tensor]

    @property
    def n(self) -> int:
        return len(self.basis)

    def e(self, i: int) -> Vec:
        return {i: Fraction(1)}

    def mul(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                out = vadd(out, self.mult.get((i, j), {}), a * b)
        return out

    def rho(self, v: Vec) -> Tensor:
        out: Tensor = {}
        for i, a in v.items():
            for k, c in self.coaction[i].items():
                out[k] = out.get(k, 0) + a * c
        return _clean(out)

    @classmethod
    def regular(cls, h: HopfAlgebra) -> "ComoduleAlgebra":
        return cls(h, list(h.basis), dict(h.mult), dict(h.unit), [dict(t) for t in h.comult])

    @classmethod
    def from_twisted(cls, tw: TwistedAlgebra) -> "ComoduleAlgebra":
        h = tw.base
        return cls(h, list(h.basis), tw.table(), dict(h.unit), [dict(t) for t in h.comult])

    def validate(self) -> None:
        """Raise ComoduleError on the first violated comodule-algebra axiom."""
        h = self.hopf
        for a in range(self.n):
            left: dict = {}
            for (b, k), c in self.coaction[a].items():
                for (b2, k2), c2 in self.coaction[b].items():
                    left[(b2, k2, k)] = left.get((b2, k2, k), 0) + c * c2
            right: dict = {}
            for (b, k), c in self.coaction[a].items():
                for (p, q), c2 in h.comult[k].items():
                    right[(b, p, q)] = right.get((b, p, q), 0) + c * c2
            if _clean(left) != _clean(right):
                raise ComoduleError(f"coaction not coassociative at {self.basis[a]}")
            cu: Vec = {}
            for (b, k), c in self.coaction[a].items():
                cu = vadd(cu, {b: Fraction(1)}, c * h.counit[k])
            if cu != self.e(a):
                raise ComoduleError(f"coaction not counital at {self.basis[a]}")
        unit_img = _clean({(b, k): c * x for b, c in self.unit.items() for k, x in h.unit.items()})
        if self.rho(self.unit) != unit_img:
            raise ComoduleError("ρ(1) != 1⊗1")
        for a, b in itertools.product(range(self.n), repeat=2):
            l = self.rho(self.mul(self.e(a), self.e(b)))
            r: Tensor = {}
            for (p, k), c in self.coaction[a].items():
                for (q, m), d in self.coaction[b].items():
                    for s, x in self.mul(self.e(p), self.e(q)).items():
                        for t, y in h.mul(h.e(k), h.e(m)).items():
                            r[(s, t)] = r.get((s, t), 0) + c * d * x * y
            if l != _clean(r):
                raise ComoduleError(f"coaction not multiplicative at ({self.basis[a]}, {self.basis[b]})")

    def coinvariants(self) -> list[Vec]:
        """Basis of ``{a : ρ(a) = a ⊗ 1}``."""
        from .linalg import nullspace

        h = self.hopf
        keys = sorted({(b, k) for a in range(self.n) for (b, k) in self.coaction[a]}
                      | {(b, k) for b in range(self.n) for k in h.unit})
        pos = {k: i for i, k in enumerate(keys)}
        cols = []
        for a in range(self.n):
            col = [Fraction(0)] * len(keys)
            for k, c in self.coaction[a].items():
                col[pos[k]] += c
            for k, x in h.unit.items():
                col[pos[(a, k)]] -= x
            cols.append(col)
        mat = [[cols[a][r] for a in range(self.n)] for r in range(len(keys))]
        return [_clean(dict(enumerate(v))) for v in nullspace(mat, self.n)]


def twist_comodule_algebra(h: HopfAlgebra, A: ComoduleAlgebra, a: BilinearForm) -> ComoduleAlgebra:
    """``A^α``: same coaction, product ``a_0 b_0 α(a_1, b_1)``."""
    A.validate()
    m = {}
    for i, j in itertools.product(range(A.n), repeat=2):
        v: Vec = {}
        for (p, k), c in A.coaction[i].items():
            for (q, l), d in A.coaction[j].items():
                w = c * d * a[k, l]
                if w:
                    v = vadd(v, A.mul(A.e(p), A.e(q)), w)
        if v:
            m[(i, j)] = v
    return ComoduleAlgebra(h, list(A.basis), m, dict(A.unit), [dict(t) for t in A.coaction])


def same_algebra(A, B, n: int) -> bool:
    return all(
        _clean(A.mul({i: Fraction(1)}, {j: Fraction(1)})) == _clean(B.mul({i: Fraction(1)}, {j: Fraction(1)}))
        for i in range(n) for j in range(n)
    )


def scalar_multiple(u: Vec, v: Vec) -> bool:
    """Whether ``u`` and ``v`` span the same line (both zero counts)."""
    if not u or not v:
        return not u and not v
    k = next(iter(u))
    if k not in v:
        return False
    r = u[k] / v[k]
    return u == vscale(v, r)
