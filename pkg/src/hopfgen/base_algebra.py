"""The subalgebra B generated by the values of σ and σ^{-1}.

Membership is decided by elimination; module rewriting and the quotient by
``B^+`` are computed with the same Gröbner machinery.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import poly as P
from . import verdict as V
from .groebner import Budget, BudgetExceeded, GroebnerCache, groebner
from .hopf import HopfAlgebra, Vec, abelianization
from .laurent import GenericCocycle, HopfMaps, PresentedRing, RingElement, _sigma_coproduct_rhs, hopf_maps
from .linalg import rank
from .pq import PQ

log = logging.getLogger(__name__)

MEMBER = "member"
NON_MEMBER = "non-member"
INCONCLUSIVE = "inconclusive"


@dataclass
class SubalgebraSpec:
    """Generators ``(label, element)`` of a subalgebra of a presented ring."""

    ring: PresentedRing
    generators: list[tuple[str, RingElement]]

    def __post_init__(self):
        labels = [lab for lab, _ in self.generators]
        if len(set(labels)) != len(labels):
            raise ValueError("generator labels must be unique")

    @classmethod
    def from_cocycle(cls, gc: GenericCocycle) -> "SubalgebraSpec":
        b = gc.base.basis
        gens = []
        for i, j in itertools.product(range(gc.base.n), repeat=2):
            gens.append((f"sigma({b[i]},{b[j]})", gc.sigma[i][j]))
        for i, j in itertools.product(range(gc.base.n), repeat=2):
            gens.append((f"sigmainv({b[i]},{b[j]})", gc.sigma_inv[i][j]))
        return cls(gc.ring, gens)

    @property
    def labels(self) -> list[str]:
        return [lab for lab, _ in self.generators]

    def tag_names(self) -> list[str]:
        return [f"Y[{lab}]" for lab in self.labels]

    def substitute(self, witness: P.Poly) -> RingElement:
        """Image of a tag polynomial under ``Y_ℓ ↦ g_ℓ``."""
        ring = self.ring
        images = [g.p for _, g in self.generators]
        return ring.elem(P.substitute(witness, images, ring.nvars, reduce=ring.nf))


@dataclass
class MembershipCertificate:
    element: RingElement
    verdict: str
    witness: P.Poly | None = None
    witness_text: str | None = None
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        out = {"element": str(self.element), "verdict": self.verdict}
        if self.witness_text is not None:
            out["witness"] = self.witness_text
        out.update(self.detail)
        return out


def _dedupe(spec: SubalgebraSpec) -> list[int]:
    """Indices of generators kept as tags: nonconstant, first of each value."""
    seen: dict[frozenset, int] = {}
    keep = []
    for k, (_, g) in enumerate(spec.generators):
        if all(sum(m) == 0 for m in g.p):
            continue
        key = frozenset(g.p.items())
        if key in seen:
            continue
        seen[key] = k
        keep.append(k)
    return keep


def membership(spec: SubalgebraSpec, e: RingElement, budget: Budget | None = None,
               cache: GroebnerCache | None = None) -> MembershipCertificate:
    """Decide ``e ∈ k[g_1, ..., g_m]`` inside the presented ring.

    Builds ``J + ⟨Y_ℓ - g_ℓ⟩`` in ``(T, U, Y)`` under the block order
    ``(T, U) ≫ Y``.  ``e`` is a member iff its normal form involves only ``Y``;
    that normal form is the witness, re-checked by substitution.
    """
    ring = spec.ring
    nr = ring.nvars
    keep = _dedupe(spec)
    m = len(keep)
    nv = nr + m
    order = P.MonomialOrder(nv, [(0, nr), (nr, nv)])
    names = ring.names + [spec.tag_names()[k] for k in keep]
    known = [P.embed(g, range(nr), nv) for g in ring.gb.polys]
    gens = []
    for t, k in enumerate(keep):
        g = spec.generators[k][1]
        gens.append(P.add(P.var(nr + t, nv), P.embed(g.p, range(nr), nv), -1))
    t0 = time.perf_counter()
    try:
        gb = groebner(gens, order, names, budget=budget, known_basis=known, cache=cache)
    except BudgetExceeded as exc:
        return MembershipCertificate(e, INCONCLUSIVE, detail={"reason": str(exc), "tags": m})
    r = gb.reduce(P.embed(e.p, range(nr), nv))
    detail = {"tags": m, "basis_size": len(gb.polys)}
    seconds = time.perf_counter() - t0
    if any(any(mm[:nr]) for mm in r):
        return MembershipCertificate(e, NON_MEMBER, detail=detail, seconds=seconds)
    # witness in the kept tags, re-expressed over the full generator list
    witness = P.embed({mm[nr:]: c for mm, c in r.items()}, keep, len(spec.generators))
    if spec.substitute(witness) != e:
        raise AssertionError("membership witness does not re-substitute to the element")
    tag_names = spec.tag_names()
    return MembershipCertificate(e, MEMBER, witness,
                                 P.to_text(witness, tag_names, P.MonomialOrder(len(spec.generators))),
                                 detail, seconds)


def grading_oracle(ring: PresentedRing, e: RingElement) -> dict | None:
    """G-grading test for a group algebra ``kG``: ``deg T_g = g``, ``deg U_g = g^{-1}``.

    J is homogeneous and every ``σ^{±1}(g,h)`` has degree ``e``, so an element
    with a nonzero component in another degree is not in B.  Returns None when
    the basis is not a group.  ``"consistent"`` only means the test is silent.
    """
    h = ring.base
    n = h.n
    if len(h.grouplike_basis()) != n:
        return None
    mult = [[h.mul(h.e(a), h.e(b)) for b in range(n)] for a in range(n)]
    if any(len(v) != 1 for row in mult for v in row):
        return None
    table = [[next(iter(v)) for v in row] for row in mult]
    unit = next(iter(h.unit))
    inv = [next(b for b in range(n) if table[a][b] == unit) for a in range(n)]
    degrees = set()
    for m in ring.nf(e.p):
        d = unit
        for i, k in enumerate(m):
            g = i if i < n else inv[i - n]
            for _ in range(k):
                d = table[d][g]
        degrees.add(d)
    off = sorted(h.basis[d] for d in degrees if d != unit)
    return {"degrees": sorted(h.basis[d] for d in degrees),
            "prediction": "non-member" if off else "consistent"}


# ---------------------------------------------------------------------------
# p, p', q, q' in B via explicit σ-expressions
# ---------------------------------------------------------------------------

def verify_pq_in_B(gc: GenericCocycle, pq: PQ | None = None) -> V.Verdict:
    """The four σ-expressions for p, p', q, q' agree with the closed formulas;
    each is a polynomial in generators of B, hence an explicit witness."""
    ring, h = gc.ring, gc.base
    if not gc.is_trivial_alpha():
        return V.skipped("pq-in-B", "requires the trivial cocycle")
    pq = pq or PQ(ring)
    e, S, one = h.e, h.S, h.one()
    s11, si11 = gc.sig(one, one), gc.siginv(one, one)
    for i in range(h.n):
        p_terms, pp_terms = [], []
        for (a, b), c in h.comult[i].items():
            p_terms.append((c, [gc.sig(e(a), S(e(b))), s11]))
            pp_terms.append((c, [gc.siginv(S(e(a)), e(b)), si11]))
        for label, terms, want in (("p", p_terms, pq.p(e(i))), ("p'", pp_terms, pq.p_prime(e(i)))):
            got = ring.linear_sum(terms)
            if got != want:
                return V.failed("pq-in-B", {"element": f"{label}[{h.basis[i]}]", "sigma-expression": str(got),
                                            "closed-formula": str(want)})
    for i, j in itertools.product(range(h.n), repeat=2):
        # q = Σ σ(x1,y1)·σ(x2y2, S(x3y3))·σ(1,1): the second factor is summed
        # linearly per distinct first pair before any ring multiplication
        q_groups: dict[tuple[int, int], P.Poly] = {}
        qp_groups: dict[tuple[int, int], P.Poly] = {}
        for (a1, a2, a3), c in h.delta_iter(i, 3):
            for (b1, b2, b3), d in h.delta_iter(j, 3):
                x2y2 = h.mul(e(a2), e(b2))
                if not x2y2:
                    continue
                x3y3 = h.mul(e(a3), e(b3))
                x1y1 = h.mul(e(a1), e(b1))
                if x3y3:
                    P.iadd(q_groups.setdefault((a1, b1), {}), gc.sig(x2y2, S(x3y3)).p, c * d)
                if x1y1:
                    P.iadd(qp_groups.setdefault((a3, b3), {}), gc.siginv(S(x1y1), x2y2).p, c * d)
        q_terms = [(1, [gc.sigma[a][b], ring.elem(acc)]) for (a, b), acc in q_groups.items() if acc]
        qp_terms = [(1, [ring.elem(acc), gc.sigma_inv[a][b]]) for (a, b), acc in qp_groups.items() if acc]
        for label, terms, unit, want in (("q", q_terms, s11, pq.q(e(i), e(j))),
                                         ("q'", qp_terms, si11, pq.q_prime(e(i), e(j)))):
            got = ring.linear_sum(terms) * unit
            if got != want:
                return V.failed("pq-in-B", {"element": f"{label}[{h.basis[i]},{h.basis[j]}]",
                                            "sigma-expression": str(got), "closed-formula": str(want)})
    return V.passed("pq-in-B", pairs=h.n ** 2)


# ---------------------------------------------------------------------------
# Rewriting e = Σ_z b_z T_z with b_z ∈ B
# ---------------------------------------------------------------------------

# A coefficient b_z is kept factored: a sum of scalar multiples of products of
# linear forms in the tags.  Expanding those products is what makes the naive
# representation explode (millions of tag monomials for U·U over O(S_3)).
LinForm = tuple  # sorted ((tag index, scalar), ...)
BExpr = dict  # {sorted tuple of LinForm: scalar}


def _lin(terms: dict[int, Fraction]) -> LinForm:
    return tuple(sorted((k, P.q(v)) for k, v in terms.items() if v))


def _bexpr_add(acc: BExpr, other: BExpr, c=1) -> None:
    for key, x in other.items():
        v = acc.get(key, 0) + c * x
        if v:
            acc[key] = P.q(v)
        else:
            acc.pop(key, None)


def _bexpr_mul(a: BExpr, b: BExpr) -> BExpr:
    out: BExpr = {}
    for ka, x in a.items():
        for kb, y in b.items():
            key = tuple(sorted(ka + kb))
            v = out.get(key, 0) + x * y
            if v:
                out[key] = P.q(v)
            else:
                out.pop(key, None)
    return out


def _bexpr_times_lin(a: BExpr, lf: LinForm) -> BExpr:
    out: BExpr = {}
    for k, x in a.items():
        key = tuple(sorted(k + (lf,)))
        v = out.get(key, 0) + x
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def bexpr_to_poly(b: BExpr, ntags: int) -> P.Poly:
    """Fully expanded tag polynomial (can be large)."""
    out: P.Poly = {}
    for key, x in b.items():
        term = P.const(x, ntags)
        for lf in key:
            lin: P.Poly = {}
            for t, c in lf:
                P.iadd(lin, P.var(t, ntags), c)
            term = P.mul(term, lin)
        P.iadd(out, term)
    return out


class _FactoredEvaluator:
    """Normal form of a sum of products of linear forms in the generators.

    Greedy factoring: the linear form shared by most products is pulled out
    and the rest is evaluated recursively; products reduced to one linear
    form are merged at the tag level, so they cost no ring multiplication."""

    def __init__(self, ring, images: list[P.Poly]):
        self.ring = ring
        self.images = images
        self._lin: dict[LinForm, P.Poly] = {}

    def lin_value(self, lf: LinForm) -> P.Poly:
        hit = self._lin.get(lf)
        if hit is None:
            acc: P.Poly = {}
            for t, c in lf:
                P.iadd(acc, self.images[t], c)
            hit = self._lin[lf] = self.ring.nf(acc)
        return hit

    def value(self, products: list[tuple[tuple, object]]) -> P.Poly:
        ring = self.ring
        const = 0
        linear: dict[int, object] = {}
        longer = []
        for key, c in products:
            if not key:
                const += c
            elif len(key) == 1:
                for t, x in key[0]:
                    linear[t] = linear.get(t, 0) + c * x
            else:
                longer.append((key, c))
        acc: P.Poly = P.const(const, ring.nvars)
        lf = _lin(linear)
        if lf:
            P.iadd(acc, self.lin_value(lf))
        while longer:
            counts: dict[LinForm, int] = {}
            for key, _ in longer:
                for f in set(key):
                    counts[f] = counts.get(f, 0) + 1
            f = max(counts, key=lambda k: (counts[k], repr(k)))
            inner, rest = [], []
            for key, c in longer:
                if f in key:
                    k = list(key)
                    k.remove(f)
                    inner.append((tuple(k), c))
                else:
                    rest.append((key, c))
            P.iadd(acc, ring.nf(P.mul(self.lin_value(f), self.value(inner))))
            longer = rest
        return ring.nf(acc)


@dataclass
class ModuleForm:
    """``Σ_z b_z T_z`` with each ``b_z`` a polynomial in the tags of ``spec``,
    held as a sum of products of linear forms."""

    spec: SubalgebraSpec
    coefficients: dict[int, BExpr]

    def terms(self) -> list[tuple[BExpr, int]]:
        return [(b, z) for z, b in sorted(self.coefficients.items()) if b]

    def coefficient_text(self, b: BExpr) -> str:
        names = self.spec.tag_names()
        out = []
        for key, x in sorted(b.items(), key=lambda kv: repr(kv[0])):
            factors = []
            for lf in key:
                body = " + ".join(
                    (f"{P.fmt_coeff(c)}*" if c != 1 else "") + names[t] for t, c in lf
                ).replace("+ -", "- ")
                factors.append(f"({body})" if len(lf) > 1 else body)
            mag = "" if x == 1 else f"{P.fmt_coeff(x)}*"
            out.append(mag + ("*".join(factors) or "1"))
        return " + ".join(out)

    def evaluate(self) -> RingElement:
        """Substitute the generators for the tags and add up ``b_z T_z``."""
        ring = self.spec.ring
        ev = _FactoredEvaluator(ring, [g.p for _, g in self.spec.generators])
        acc: P.Poly = {}
        for b, z in self.terms():
            P.iadd(acc, P.mul(ev.value(list(b.items())), P.var(z, ring.nvars)))
        return ring.elem(acc)

    def to_json(self) -> list:
        base = self.spec.ring.base
        return [{"coefficient": self.coefficient_text(b), "T": base.basis[z]} for b, z in self.terms()]


class Rewriter:
    """Rewrites monomials in T, U into B-module form over the ``T_z``.

    Uses ``T_z T_y = σ(z_1,y_1) T_{z_2y_2}``,
    ``U_y = σ^{-1}(S(y_2),y_3) σ^{-1}(1,1) T_{S(y_1)}``,
    ``U_y U_v = σ^{-1}(y_2,v_2) U_{y_1v_1}`` and ``1 = σ^{-1}(1,1) T_1``
    (trivial cocycle).  Tag ``i*n+j`` is σ(x_i,x_j), tag ``n²+i*n+j`` is
    σ^{-1}(x_i,x_j)."""

    def __init__(self, gc: GenericCocycle, spec: SubalgebraSpec | None = None):
        if not gc.is_trivial_alpha():
            raise ValueError("module rewriting needs the trivial cocycle")
        self.gc = gc
        self.h = gc.base
        self.spec = spec or SubalgebraSpec.from_cocycle(gc)
        self.ntags = len(self.spec.generators)
        self._u_cache: dict[int, dict[int, BExpr]] = {}
        self._t_cache: dict[tuple[int, int], dict[int, LinForm]] = {}
        unit = self.h.one()
        self._si11 = self._bilinear(True, unit, unit)

    def _bilinear(self, inverse: bool, u: Vec, v: Vec) -> LinForm:
        n = self.h.n
        off = n * n if inverse else 0
        acc: dict[int, Fraction] = {}
        for i, a in u.items():
            for j, b in v.items():
                k = off + i * n + j
                acc[k] = acc.get(k, 0) + a * b
        return _lin(acc)

    def _step(self, z: int, y: int) -> dict[int, LinForm]:
        """``T_z T_y = Σ_w Λ_w T_w`` with ``Λ_w`` linear in the σ-tags."""
        key = (z, y)
        if key not in self._t_cache:
            h, e, n = self.h, self.h.e, self.h.n
            acc: dict[int, dict[int, Fraction]] = {}
            for (z1, z2), c in h.comult[z].items():
                for (y1, y2), d in h.comult[y].items():
                    for w, x in h.mul(e(z2), e(y2)).items():
                        slot = acc.setdefault(w, {})
                        k = z1 * n + y1
                        slot[k] = slot.get(k, 0) + c * d * x
            out = {w: _lin(t) for w, t in acc.items()}
            self._t_cache[key] = {w: lf for w, lf in out.items() if lf}
        return self._t_cache[key]

    def _times_T(self, form: dict[int, BExpr], y: int) -> dict[int, BExpr]:
        out: dict[int, BExpr] = {}
        for z, b in form.items():
            for w, lf in self._step(z, y).items():
                _bexpr_add(out.setdefault(w, {}), _bexpr_times_lin(b, lf))
        return {z: b for z, b in out.items() if b}

    def _U(self, y: int) -> dict[int, BExpr]:
        if y not in self._u_cache:
            h, e, S = self.h, self.h.e, self.h.S
            n = h.n
            acc: dict[int, dict[int, Fraction]] = {}
            for (y1, y2, y3), c in h.delta_iter(y, 3):
                for w, x in S(e(y1)).items():
                    slot = acc.setdefault(w, {})
                    for (i, j), v in (((i, j), a * b) for i, a in S(e(y2)).items() for j, b in e(y3).items()):
                        k = n * n + i * n + j
                        slot[k] = slot.get(k, 0) + c * x * v
            out = {}
            for w, t in acc.items():
                lf = _lin(t)
                if lf:
                    out[w] = {tuple(sorted((lf, self._si11))): 1}
            self._u_cache[y] = out
        return self._u_cache[y]

    def _times_form(self, form: dict[int, BExpr], other: dict[int, BExpr]) -> dict[int, BExpr]:
        out: dict[int, BExpr] = {}
        for w, cw in other.items():
            scaled = {z: _bexpr_mul(b, cw) for z, b in form.items()}
            for z, b in self._times_T(scaled, w).items():
                _bexpr_add(out.setdefault(z, {}), b)
        return {z: b for z, b in out.items() if b}

    def _ustep(self, w: int, u: int) -> dict[int, LinForm]:
        """``U_w U_u = Σ_k Λ_k U_k`` with ``Λ_k`` linear in the σ^{-1}-tags, from
        ``t^{-1}_y t^{-1}_v = t^{-1}_{y_1v_1} σ^{-1}(y_2,v_2)``."""
        key = (-1 - w, u)
        if key not in self._t_cache:
            h, e, n = self.h, self.h.e, self.h.n
            acc: dict[int, dict[int, Fraction]] = {}
            for (w1, w2), c in h.comult[w].items():
                for (u1, u2), d in h.comult[u].items():
                    for k, x in h.mul(e(w1), e(u1)).items():
                        slot = acc.setdefault(k, {})
                        t = n * n + w2 * n + u2
                        slot[t] = slot.get(t, 0) + c * d * x
            out = {k: _lin(t) for k, t in acc.items()}
            self._t_cache[key] = {k: lf for k, lf in out.items() if lf}
        return self._t_cache[key]

    def rewrite_monomial(self, m: P.Mono) -> dict[int, BExpr]:
        """T-letters are merged with the product rule, U-letters are merged
        into a single ``Σ c_k U_k`` first, and the U rule is applied once."""
        n = self.h.n
        ts = [i for i in range(n) for _ in range(m[i])]
        us = [i for i in range(n) for _ in range(m[n + i])]
        if not ts and not us:
            return {z: {(self._si11,): P.q(c)} for z, c in self.h.one().items()}
        tform = None
        if ts:
            tform = {ts[0]: {(): 1}}
            for v in ts[1:]:
                tform = self._times_T(tform, v)
        if not us:
            return tform
        uvec: dict[int, BExpr] = {us[0]: {(): 1}}
        for u in us[1:]:
            nxt: dict[int, BExpr] = {}
            for w, c in uvec.items():
                for k, lf in self._ustep(w, u).items():
                    _bexpr_add(nxt.setdefault(k, {}), _bexpr_times_lin(c, lf))
            uvec = {k: b for k, b in nxt.items() if b}
        umod: dict[int, BExpr] = {}
        for w, c in uvec.items():
            for z, b in self._U(w).items():
                _bexpr_add(umod.setdefault(z, {}), _bexpr_mul(c, b))
        umod = {z: b for z, b in umod.items() if b}
        return self._times_form(tform, umod) if tform else umod

    def rewrite(self, e: P.Poly) -> ModuleForm:
        out: dict[int, BExpr] = {}
        for m, c in e.items():
            for z, b in self.rewrite_monomial(m).items():
                _bexpr_add(out.setdefault(z, {}), b, c)
        return ModuleForm(self.spec, {z: b for z, b in out.items() if b})


def rewrite_to_module_form(gc: GenericCocycle, e: RingElement | P.Poly,
                           rewriter: Rewriter | None = None) -> ModuleForm:
    """``e = Σ_z b_z T_z`` with ``b_z`` polynomials in σ^{±1}-values; verified
    by substitution and normal-form comparison."""
    rw = rewriter or Rewriter(gc)
    p = e.p if isinstance(e, RingElement) else e
    form = rw.rewrite(p)
    if form.evaluate() != gc.ring.elem(p):
        raise AssertionError("module form does not re-substitute to the element")
    return form


def laurent_check_module_form(gc: GenericCocycle, p: P.Poly, form: ModuleForm) -> bool:
    """Group-algebra oracle: evaluate ``Σ b_z t_z`` with
    ``σ(g,h) = t_g t_h t_{gh}^{-1}`` and ``σ^{-1}(g,h) = t_{gh} t_g^{-1} t_h^{-1}``
    in the Laurent ring, computed from the group law alone."""
    from .laurent import LaurentRing

    h = gc.base
    n = h.n
    if len(h.grouplike_basis()) != n:
        raise ValueError("the Laurent oracle needs a group algebra")
    L = LaurentRing(n)

    def gl(a: int, b: int) -> int:
        (k,) = h.mul(h.e(a), h.e(b))
        return k

    def tag_value(t: int):
        inverse, r = divmod(t, n * n)
        a, b = divmod(r, n)
        m = [0] * n
        s = -1 if inverse else 1
        m[a] += s
        m[b] += s
        m[gl(a, b)] -= s
        return {tuple(m): Fraction(1)}

    acc = {}
    for b, z in form.terms():
        for key, x in b.items():
            prod = L.mono(z)
            for lf in key:
                val = {}
                for t, c in lf:
                    val = L.add(val, tag_value(t), c)
                prod = L.mul(prod, val)
            acc = L.add(acc, prod, x)
    return acc == L.from_TU(p, n)


def monomials_up_to(nvars: int, degree: int) -> list[P.Mono]:
    out = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), d):
            m = [0] * nvars
            for i in combo:
                m[i] += 1
            out.append(tuple(m))
    return out


def check_module_rewriting(gc: GenericCocycle, degree: int = 2) -> V.Verdict:
    rw = Rewriter(gc)
    ring = gc.ring
    count = 0
    for m in monomials_up_to(ring.nvars, degree):
        try:
            rewrite_to_module_form(gc, {m: 1}, rw)
        except AssertionError:
            return V.failed("module-rewrite", {"monomial": ring.text({m: 1})})
        count += 1
    return V.passed("module-rewrite", monomials=count, degree=degree)


# ---------------------------------------------------------------------------
# Quotient by B^+ versus H_ab
# ---------------------------------------------------------------------------

@dataclass
class QuotientRingReport:
    dimension: int | None
    hab_dimension: int
    standard_monomials: list[str] | None
    isomorphic: bool | None
    basis_size: int
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.isomorphic) and self.dimension == self.hab_dimension

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "hab_dimension": self.hab_dimension,
            "isomorphic": self.isomorphic,
            "standard_monomials": self.standard_monomials,
            "basis_size": self.basis_size,
            **self.detail,
        }


def quotient_by_Bplus(gc: GenericCocycle, budget: Budget | None = None,
                      cache: GroebnerCache | None = None) -> QuotientRingReport:
    """``k[T,U]/(J + B^+)`` by its Gröbner staircase, compared with ``H_ab``
    through ``T_i ↦ π(x_i)``, ``U_i ↦ π(S x_i)``."""
    ring, h = gc.ring, gc.base
    if not gc.is_trivial_alpha():
        raise ValueError("quotient_by_Bplus needs the trivial cocycle")
    nv = ring.nvars
    spec = SubalgebraSpec.from_cocycle(gc)
    gens = []
    for k in _dedupe(spec):
        g = spec.generators[k][1]
        # ε(σ(x,y)) = ε(x)ε(y): evaluate instead of trusting the formula
        eps = P.evaluate(g.p, list(h.counit) * 2)
        gens.append(P.add(g.p, P.const(eps, nv), -1))
    gb = groebner(gens, ring.order, ring.names, budget=budget, known_basis=ring.gb.polys, cache=cache)
    quot = abelianization(h)
    hab_dim = quot.dim
    std = gb.standard_monomials()
    if std is None:
        return QuotientRingReport(None, hab_dim, None, None, len(gb.polys), {"note": "infinite staircase"})
    # the comparison map into H_ab (commutative, so an algebra map on k[T,U])
    images = [quot.project(h.e(i)) for i in range(h.n)] + [quot.project(h.S(h.e(i))) for i in range(h.n)]
    hab = quot.induced

    def phi(p: P.Poly) -> Vec:
        acc: Vec = {}
        for m, c in p.items():
            v = hab.one()
            for i, k in enumerate(m):
                for _ in range(k):
                    v = hab.mul(v, images[i])
            for j, x in v.items():
                acc[j] = acc.get(j, 0) + c * x
        return {j: x for j, x in acc.items() if x}

    kills = all(not phi(g) for g in gb.polys)
    rows = [[phi({m: 1}).get(j, Fraction(0)) for j in range(hab_dim)] for m in std]
    bijective = kills and len(std) == hab_dim and rank(rows) == hab_dim
    commutative = all(
        gb.reduce(P.mul({a: 1}, {b: 1})) == gb.reduce(P.mul({b: 1}, {a: 1})) for a in std for b in std
    )
    return QuotientRingReport(
        len(std), hab_dim, [ring.text({m: 1}) for m in std], bijective and commutative and hab.is_commutative(),
        len(gb.polys), {"map_kills_ideal": kills, "generators": len(gens)},
    )


# ---------------------------------------------------------------------------
# Coideal property
# ---------------------------------------------------------------------------

def coideal_check(gc: GenericCocycle, maps: HopfMaps | None = None) -> V.Verdict:
    """``Δ(b)`` has its right legs in B for every generator ``b`` (explicit
    expression), plus ``Δσ(x,y) = σ(x_1,y_1) ⊗ σ(x_2,y_2)`` when H is
    cocommutative."""
    from .laurent import sigma_is_multiplicative_coproduct

    h = gc.base
    if not gc.is_trivial_alpha():
        return V.skipped("coideal", "requires the trivial cocycle")
    maps = maps or hopf_maps(gc.ring)
    for i, j in itertools.product(range(h.n), repeat=2):
        for inverse in (False, True):
            val = (gc.sigma_inv if inverse else gc.sigma)[i][j]
            if maps.Delta(val) != _sigma_coproduct_rhs(gc, i, j, inverse):
                return V.failed("coideal", {"generator": f"{'sigmainv' if inverse else 'sigma'}"
                                                         f"({h.basis[i]},{h.basis[j]})"})
    hopf_sub = "not asserted"
    if h.is_cocommutative():
        v = sigma_is_multiplicative_coproduct(gc, maps)
        if not v.ok:
            return V.failed("coideal", v.counterexample)
        hopf_sub = "pass"
    return V.passed("coideal", generators=2 * h.n ** 2, hopf_subalgebra=hopf_sub)


# ---------------------------------------------------------------------------
# Experiment: is t^{-1}_g in B?
# ---------------------------------------------------------------------------

def tinv_experiment(gc: GenericCocycle, label: str, budget: Budget | None = None,
                    cache: GroebnerCache | None = None) -> MembershipCertificate:
    """Membership of ``U_g`` for a grouplike ``g``; reports whatever elimination
    finds under the budget without claiming an answer to the general question."""
    h = gc.base
    i = h.index(label)
    if h.coproduct(h.e(i)) != {(i, i): 1} or h.counit[i] != 1:
        raise ValueError(f"{label} is not grouplike")
    spec = SubalgebraSpec.from_cocycle(gc)
    return membership(spec, gc.ring.U(i), budget=budget, cache=cache)
