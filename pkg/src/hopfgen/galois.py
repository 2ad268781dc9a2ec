"""The generic Galois extension ``A = B ⊗ ^σH`` through its product rule.

Elements are finite sums ``Σ b_i ⊗ x_i`` with ``b_i`` in the presented ring.
Specialization at a point ``e_λ`` turns the rule into a twisted product on H;
:func:`verify_reduction` relates the extension for ``(H, α)`` to the one for
the deformation ``L`` with the trivial cocycle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import poly as P
from . import verdict as V
from .cocycles import (
    BilinearForm,
    ComoduleAlgebra,
    LinearForm,
    TwistedAlgebra,
    convolution_inverse,
    deform_hopf,
    twist_algebra,
)
from .hopf import HopfAlgebra, Vec
from .laurent import (
    GenericCocycle,
    PresentedRing,
    RingElement,
    build_presented_ring,
    check_evaluation_kills_J,
    evaluation_values,
    generic_sigma,
    specialize,
)


@dataclass(frozen=True, eq=False)
class GenericExtensionElement:
    """``Σ_i b_i ⊗ x_i``; zero legs are pruned."""

    ring: PresentedRing
    legs: dict[int, P.Poly]

    @classmethod
    def make(cls, ring: PresentedRing, legs: dict[int, P.Poly]) -> "GenericExtensionElement":
        clean = {}
        for i, p in legs.items():
            p = ring.nf(p)
            if p:
                clean[i] = p
        return cls(ring, clean)

    @classmethod
    def pure(cls, b: RingElement, x: Vec) -> "GenericExtensionElement":
        """``b ⊗ x`` for a vector ``x`` of the base."""
        return cls.make(b.ring, {i: P.scale(b.p, c) for i, c in x.items()})

    @classmethod
    def unit(cls, gc: GenericCocycle) -> "GenericExtensionElement":
        """``σ^{-1}(1,1) ⊗ 1``.  The generic cocycle is not normalized
        (``σ(1,x) = t_1 ε(x)``), so ``1 ⊗ 1`` is not the unit."""
        one = gc.base.one()
        return cls.pure(gc.siginv(one, one), one)

    def __add__(self, other: "GenericExtensionElement") -> "GenericExtensionElement":
        legs = {i: dict(p) for i, p in self.legs.items()}
        for i, p in other.legs.items():
            P.iadd(legs.setdefault(i, {}), p)
        return GenericExtensionElement.make(self.ring, legs)

    def scale(self, c) -> "GenericExtensionElement":
        return GenericExtensionElement.make(self.ring, {i: P.scale(p, c) for i, p in self.legs.items()})

    def __mul__(self, other: "GenericExtensionElement") -> "GenericExtensionElement":
        raise TypeError("use ext_multiply, which needs the cocycle")

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenericExtensionElement):
            return NotImplemented
        return self.legs == other.legs

    def __hash__(self):
        return hash(frozenset((i, frozenset(p.items())) for i, p in self.legs.items()))

    def __str__(self) -> str:
        if not self.legs:
            return "0"
        B = self.ring.base.basis
        return " + ".join(f"({self.ring.text(p)}) ⊗ {B[i]}" for i, p in sorted(self.legs.items()))

    __repr__ = __str__


def ext_multiply(gc: GenericCocycle, u: GenericExtensionElement,
                 v: GenericExtensionElement) -> GenericExtensionElement:
    """``(b ⊗ x)(c ⊗ y) = b c σ(x_1, y_1) ⊗ x_2 y_2``, extended bilinearly; the
    product ``x_2 y_2`` is the one of ``gc.base``."""
    ring, h = gc.ring, gc.base
    legs: dict[int, P.Poly] = {}
    for x, b in u.legs.items():
        for y, c in v.legs.items():
            bc = P.mul(b, c)
            # group σ-values by target basis element before multiplying by bc
            acc: dict[int, P.Poly] = {}
            for (x1, x2), s in h.comult[x].items():
                for (y1, y2), t in h.comult[y].items():
                    for w, m in h.mul(h.e(x2), h.e(y2)).items():
                        P.iadd(acc.setdefault(w, {}), gc.sigma[x1][y1].p, s * t * m)
            for w, sp in acc.items():
                if sp:
                    P.iadd(legs.setdefault(w, {}), P.mul(bc, sp))
    return GenericExtensionElement.make(ring, legs)


def basis_element(gc: GenericCocycle, i: int) -> GenericExtensionElement:
    return GenericExtensionElement.pure(gc.ring.one(), gc.base.e(i))


def check_ext_associative(gc: GenericCocycle) -> V.Verdict:
    """Associativity on all basis triples ``1⊗x_i`` and the two-sided unit."""
    h = gc.base
    e = [basis_element(gc, i) for i in range(h.n)]
    one = GenericExtensionElement.unit(gc)
    for i in range(h.n):
        if ext_multiply(gc, one, e[i]) != e[i] or ext_multiply(gc, e[i], one) != e[i]:
            return V.failed("ext-associativity", {"unit-law": h.basis[i]})
    pair = {}
    for i, j in itertools.product(range(h.n), repeat=2):
        pair[(i, j)] = ext_multiply(gc, e[i], e[j])
    for i, j, k in itertools.product(range(h.n), repeat=3):
        left = ext_multiply(gc, pair[(i, j)], e[k])
        right = ext_multiply(gc, e[i], pair[(j, k)])
        if left != right:
            B = h.basis
            return V.failed("ext-associativity", {"triple": [B[i], B[j], B[k]],
                                                  "lhs": str(left), "rhs": str(right)})
    return V.passed("ext-associativity", triples=h.n ** 3)


def specialize_extension(gc: GenericCocycle, lam: LinearForm) -> TwistedAlgebra:
    """Apply ``e_λ`` to the ring legs of the product rule on basis pairs.

    The result is the twisted algebra ``^βH`` with ``β = e_λ(σ)``; it is checked
    against :func:`twist_algebra` for ``β`` (for ``λ = ε`` that is ``α``
    itself), and the H-coaction is re-validated on the specialized table."""
    h = gc.base
    vals = evaluation_values(h, lam)
    check_evaluation_kills_J(gc.ring, vals)
    beta = specialize(gc, lam)
    e = [basis_element(gc, i) for i in range(h.n)]
    mult: dict[tuple[int, int], Vec] = {}
    for i, j in itertools.product(range(h.n), repeat=2):
        prod = ext_multiply(gc, e[i], e[j])
        v = {w: P.evaluate(p, vals) for w, p in prod.legs.items()}
        mult[(i, j)] = {w: c for w, c in v.items() if c}
    reference = twist_algebra(h, beta)
    if {k: v for k, v in mult.items() if v} != reference.table():
        raise AssertionError("specialized product differs from the twisted algebra table")
    tw = TwistedAlgebra(h, beta, mult, verified=reference.verified, flags=list(reference.flags))
    # the coaction leg is untouched by e_λ: Δ is still a coaction of the new table
    ComoduleAlgebra.from_twisted(tw).validate()
    return tw


# ---------------------------------------------------------------------------
# Reduction to the trivial cocycle
# ---------------------------------------------------------------------------

def verify_reduction(h: HopfAlgebra, alpha: BilinearForm, ring: PresentedRing | None = None) -> V.Verdict:
    """With ``L`` the deformation of ``H`` by ``α``:

    * ``σ_α(x,y) = σ^L_ε(x_1,y_1) α(x_2,y_2)``,
    * ``σ_α^{-1}(x,y) = α^{-1}(x_1,y_1) σ^{L,-1}_ε(x_2,y_2)``,
    * ``(1⊗x)(1⊗y)`` in the extension for ``(H, α)`` equals the α-twist of the
      product in the extension for ``(L, ε)``.

    ``L`` has the coalgebra of ``H``, so both live in the same presented ring.
    """
    ring = ring or build_presented_ring(h)
    L = deform_hopf(h, alpha)
    ring_L = ring.with_base(L)
    ga = generic_sigma(ring, alpha)
    ge = generic_sigma(ring_L, BilinearForm.trivial(L))
    ainv = convolution_inverse(h, alpha)
    n, B = h.n, h.basis
    for i, j in itertools.product(range(n), repeat=2):
        s: P.Poly = {}
        si: P.Poly = {}
        for (p, q), c in h.comult[i].items():
            for (r, t), d in h.comult[j].items():
                if alpha[q, t]:
                    P.iadd(s, ge.sigma[p][r].p, c * d * alpha[q, t])
                if ainv[p, r]:
                    P.iadd(si, ge.sigma_inv[q][t].p, c * d * ainv[p, r])
        s, si = ring.nf(s), ring.nf(si)
        if not s == ga.sigma[i][j].p:
            return V.failed("reduction", {"pair": [B[i], B[j]], "identity": "sigma",
                                          "lhs": str(ga.sigma[i][j]), "rhs": ring.text(s)})
        if not si == ga.sigma_inv[i][j].p:
            return V.failed("reduction", {"pair": [B[i], B[j]], "identity": "sigma^-1",
                                          "lhs": str(ga.sigma_inv[i][j]), "rhs": ring.text(si)})
    # A-level: products of 1⊗x, 1⊗y
    eH = [basis_element(ga, i) for i in range(n)]
    eL = {i: basis_element(ge, i) for i in range(n)}
    for i, j in itertools.product(range(n), repeat=2):
        lhs = ext_multiply(ga, eH[i], eH[j])
        twisted: dict[int, P.Poly] = {}
        for (p, q), c in h.comult[i].items():
            for (r, t), d in h.comult[j].items():
                w = c * d * alpha[q, t]
                if not w:
                    continue
                prod = ext_multiply(ge, eL[p], eL[r])
                for k, b in prod.legs.items():
                    P.iadd(twisted.setdefault(k, {}), b, w)
        rhs = GenericExtensionElement.make(ring, twisted)
        if lhs.legs != rhs.legs:
            return V.failed("reduction", {"pair": [B[i], B[j]], "identity": "extension product",
                                          "lhs": str(lhs), "rhs": str(rhs)})
    return V.passed("reduction", pairs=n * n, deformation_equals_base=L.mult == h.mult)


def coro_lh_check(gc_alpha: GenericCocycle, gc_eps: GenericCocycle) -> V.Verdict:
    """For cocommutative H: every ``σ_α(x_i,x_j)`` is a nonzero scalar multiple
    of ``σ_ε(x_i,x_j)`` (and likewise for the inverses), so both cocycles
    generate the same subalgebra."""
    h = gc_alpha.base
    if not h.is_cocommutative():
        return V.skipped("coro-lh", f"{h.name} is not cocommutative")
    factors = {}
    for i, j in itertools.product(range(h.n), repeat=2):
        for label, a, b in (("sigma", gc_alpha.sigma[i][j].p, gc_eps.sigma[i][j].p),
                            ("sigma^-1", gc_alpha.sigma_inv[i][j].p, gc_eps.sigma_inv[i][j].p)):
            r = _scalar_ratio(a, b)
            if r is None:
                return V.failed("coro-lh", {"pair": [h.basis[i], h.basis[j]], "generator": label,
                                            "alpha": gc_alpha.ring.text(a), "trivial": gc_eps.ring.text(b)})
            factors[f"{label}({h.basis[i]},{h.basis[j]})"] = P.fmt_coeff(Fraction(r))
    return V.passed("coro-lh", pairs=h.n ** 2, factors=factors)


def _scalar_ratio(a: P.Poly, b: P.Poly):
    """``r ≠ 0`` with ``a = r b``, or None; two zeros give 1."""
    if not a and not b:
        return 1
    if not a or not b or a.keys() != b.keys():
        return None
    m = next(iter(b))
    r = Fraction(a[m]) / b[m]
    if all(Fraction(a[k]) == r * b[k] for k in b):
        return r
    return None
