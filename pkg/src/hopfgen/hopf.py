"""Finite-dimensional Hopf algebras given by structure constants over Q.

Vectors are sparse dicts ``{basis index: Fraction}``; elements of ``H^{⊗d}``
are sparse dicts keyed by index tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import frac, rank, reduce_against, rref

Vec = dict[int, Fraction]
Tensor = dict[tuple[int, ...], Fraction]


class StructureError(ValueError):
    """Structure tensors have inconsistent shapes or indices."""


class GroupTableError(ValueError):
    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v != 0}


def vadd(u: Vec, v: Vec, c: Fraction | int = 1) -> Vec:
    out = dict(u)
    for k, x in v.items():
        out[k] = out.get(k, 0) + c * x
    return _clean(out)


def vscale(u: Vec, c) -> Vec:
    if c == 0:
        return {}
    return {k: c * x for k, x in u.items()}


def as_vec(v, n: int | None = None) -> Vec:
    """Accept a sparse dict or a dense sequence."""
    if isinstance(v, dict):
        return _clean({int(k): frac(x) for k, x in v.items()})
    return _clean({i: frac(x) for i, x in enumerate(v)})


def dense(v: Vec, n: int) -> list[Fraction]:
    return [v.get(i, Fraction(0)) for i in range(n)]


@dataclass(eq=False)
class HopfAlgebra:
    """Hopf algebra with basis ``x_0..x_{n-1}``.

    ``mult[(i, j)]`` is the vector ``x_i x_j``; ``comult[i]`` maps ``(j, k)`` to
    the coefficient of ``x_j ⊗ x_k`` in ``Δ(x_i)``; ``antipode[i]`` is ``S(x_i)``.
    Construct through :meth:`from_dense` or the builders; call
    :func:`validate_hopf` before trusting the axioms.
    """

    name: str
    basis: list[str]
    mult: dict[tuple[int, int], Vec]
    unit: Vec
    comult: list[Tensor]
    counit: list[Fraction]
    antipode: list[Vec]
    notes: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return len(self.basis)

    dim = n

    def index(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise KeyError(f"{self.name}: no basis element {label!r}") from None

    def e(self, i: int) -> Vec:
        return {i: Fraction(1)}

    def one(self) -> Vec:
        return dict(self.unit)

    # -- algebra ---------------------------------------------------------
    def mul(self, u: Vec, v: Vec) -> Vec:
        out: dict[int, Fraction] = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.mult.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * c
        return _clean(out)

    def mul_many(self, *vs: Vec) -> Vec:
        out = self.one()
        for v in vs:
            out = self.mul(out, v)
        return out

    # -- coalgebra -------------------------------------------------------
    def coproduct(self, v: Vec) -> Tensor:
        out: Tensor = {}
        for i, a in v.items():
            for jk, c in self.comult[i].items():
                out[jk] = out.get(jk, 0) + a * c
        return _clean(out)

    def eps(self, v: Vec) -> Fraction:
        return sum((a * self.counit[i] for i, a in v.items()), Fraction(0))

    def S(self, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in v.items():
            for j, c in self.antipode[i].items():
                out[j] = out.get(j, 0) + a * c
        return _clean(out)

    def delta_iter(self, i: int, d: int) -> list[tuple[tuple[int, ...], Fraction]]:
        """Cached ``Δ^{(d-1)}(x_i)`` as a term list."""
        key = ("delta", i, d)
        if key not in self._cache:
            self._cache[key] = sorted(sweedler_expand(self, self.e(i), d).items())
        return self._cache[key]

    # -- properties ------------------------------------------------------
    def is_commutative(self) -> bool:
        return all(
            self.mult.get((i, j), {}) == self.mult.get((j, i), {})
            for i in range(self.n) for j in range(self.n)
        )

    def is_cocommutative(self) -> bool:
        return all(
            self.comult[i] == {(k, j): c for (j, k), c in self.comult[i].items()}
            for i in range(self.n)
        )

    def grouplike_basis(self) -> list[int]:
        """Basis elements ``g`` with ``Δg = g⊗g`` and ``ε(g) = 1``."""
        return [
            i for i in range(self.n)
            if self.comult[i] == {(i, i): 1} and self.counit[i] == 1
        ]

    def fmt(self, v: Vec) -> str:
        if not v:
            return "0"
        parts = []
        for i in sorted(v):
            c = v[i]
            parts.append(self.basis[i] if c == 1 else f"{c}*{self.basis[i]}")
        return " + ".join(parts)

    # -- construction ----------------------------------------------------
    @classmethod
    def from_dense(cls, name, basis, mult, unit, comult, counit, antipode, notes=""):
        """Build from dense arrays; ``comult[i]`` is a triplet list ``[[j, k, c], ...]``."""
        n = len(basis)
        if len(mult) != n or any(len(r) != n or any(len(v) != n for v in r) for r in mult):
            raise StructureError(f"mult must be {n}x{n}x{n}")
        if len(unit) != n or len(counit) != n:
            raise StructureError(f"unit and counit must have length {n}")
        if len(antipode) != n or any(len(r) != n for r in antipode):
            raise StructureError(f"antipode must be {n}x{n}")
        if len(comult) != n:
            raise StructureError(f"comult must have {n} entries")
        m = {}
        for i in range(n):
            for j in range(n):
                v = as_vec(mult[i][j])
                if v:
                    m[(i, j)] = v
        cm: list[Tensor] = []
        for i, triplets in enumerate(comult):
            t: Tensor = {}
            for trip in triplets:
                if len(trip) != 3:
                    raise StructureError(f"comult[{i}]: bad triplet {trip!r}")
                j, k, c = int(trip[0]), int(trip[1]), frac(trip[2])
                if not (0 <= j < n and 0 <= k < n):
                    raise StructureError(f"comult[{i}]: index out of range in {trip!r}")
                t[(j, k)] = t.get((j, k), 0) + c
            cm.append(_clean(t))
        return cls(
            name=name,
            basis=list(basis),
            mult=m,
            unit=as_vec(unit),
            comult=cm,
            counit=[frac(c) for c in counit],
            antipode=[as_vec(r) for r in antipode],
            notes=notes,
        )

    def dense_mult(self) -> list[list[list[Fraction]]]:
        n = self.n
        return [[dense(self.mult.get((i, j), {}), n) for j in range(n)] for i in range(n)]

    def with_product(self, name: str, mult: dict[tuple[int, int], Vec], unit: Vec | None = None,
                     antipode: list[Vec] | None = None) -> "HopfAlgebra":
        """Same coalgebra, new product (and optionally antipode)."""
        return HopfAlgebra(
            name=name,
            basis=list(self.basis),
            mult={k: v for k, v in mult.items() if v},
            unit=dict(self.unit if unit is None else unit),
            comult=[dict(t) for t in self.comult],
            counit=list(self.counit),
            antipode=[dict(v) for v in (self.antipode if antipode is None else antipode)],
            notes=self.notes,
        )


# ---------------------------------------------------------------------------
# Tensor calculus
# ---------------------------------------------------------------------------

def sweedler_expand(h: HopfAlgebra, v, d: int, leg: int = -1) -> Tensor:
    """``Δ^{(d-1)}(v)`` in ``H^{⊗d}``.

    The coproduct is applied repeatedly to the last leg (``leg=-1``) or to the
    first leg (``leg=0``); coassociativity makes the two agree.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    v = as_vec(v)
    cur: Tensor = {(i,): c for i, c in v.items()}
    for _ in range(d - 1):
        nxt: Tensor = {}
        for key, c in cur.items():
            pos = len(key) - 1 if leg == -1 else 0
            for (a, b), cc in h.comult[key[pos]].items():
                nk = key[:pos] + (a, b) + key[pos + 1:]
                nxt[nk] = nxt.get(nk, 0) + c * cc
        cur = _clean(nxt)
    return cur


def tensor_mul(h: HopfAlgebra, s: Tensor, t: Tensor) -> Tensor:
    """Legwise product in ``H^{⊗d}``."""
    out: Tensor = {}
    for ks, a in s.items():
        for kt, b in t.items():
            legs = [h.mult.get((i, j), {}) for i, j in zip(ks, kt)]
            for combo in itertools.product(*(lv.items() for lv in legs)):
                key = tuple(k for k, _ in combo)
                c = a * b
                for _, x in combo:
                    c *= x
                out[key] = out.get(key, 0) + c
    return _clean(out)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass
class AxiomResult:
    axiom: str
    ok: bool
    witness: tuple[str, ...] = ()
    detail: str = ""


@dataclass
class ValidationReport:
    algebra: str
    results: list[AxiomResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.ok]

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "ok": self.ok,
            "axioms": [
                {"axiom": r.axiom, "ok": r.ok, "witness": list(r.witness), "detail": r.detail}
                for r in self.results
            ],
        }


AXIOMS = (
    "associativity",
    "unitality",
    "coassociativity",
    "counitality",
    "comult-multiplicative",
    "counit-multiplicative",
    "antipode",
)


def _check_structure(h: HopfAlgebra) -> None:
    n = h.n
    ok = lambda v: all(isinstance(k, int) and 0 <= k < n for k in v)  # noqa: E731
    for (i, j), v in h.mult.items():
        if not (0 <= i < n and 0 <= j < n) or not ok(v):
            raise StructureError(f"mult index out of range at ({i}, {j})")
    if len(h.comult) != n or len(h.counit) != n or len(h.antipode) != n:
        raise StructureError("comult/counit/antipode length differs from dimension")
    if not ok(h.unit) or not all(ok(v) for v in h.antipode):
        raise StructureError("unit or antipode index out of range")
    for i, t in enumerate(h.comult):
        if any(not (0 <= a < n and 0 <= b < n) for a, b in t):
            raise StructureError(f"comult index out of range in Δ({h.basis[i]})")


def validate_hopf(h: HopfAlgebra) -> ValidationReport:
    """Check every Hopf algebra axiom on basis elements; first failure per axiom
    is reported with its basis tuple."""
    _check_structure(h)
    n = h.n
    B = h.basis
    res: list[AxiomResult] = []

    def first(name, it):
        for witness, detail in it:
            res.append(AxiomResult(name, False, witness, detail))
            return
        res.append(AxiomResult(name, True))

    def assoc():
        for i, j, k in itertools.product(range(n), repeat=3):
            l = h.mul(h.mul(h.e(i), h.e(j)), h.e(k))
            r = h.mul(h.e(i), h.mul(h.e(j), h.e(k)))
            if l != r:
                yield (B[i], B[j], B[k]), f"{h.fmt(l)} != {h.fmt(r)}"

    def unital():
        for i in range(n):
            if h.mul(h.unit, h.e(i)) != h.e(i) or h.mul(h.e(i), h.unit) != h.e(i):
                yield (B[i],), "1*x != x or x*1 != x"

    def coassoc():
        for i in range(n):
            if sweedler_expand(h, h.e(i), 3, -1) != sweedler_expand(h, h.e(i), 3, 0):
                yield (B[i],), "(Δ⊗id)Δ != (id⊗Δ)Δ"

    def counital():
        for i in range(n):
            left: Vec = {}
            right: Vec = {}
            for (a, b), c in h.comult[i].items():
                left = vadd(left, {b: c * h.counit[a]})
                right = vadd(right, {a: c * h.counit[b]})
            if left != h.e(i) or right != h.e(i):
                yield (B[i],), "(ε⊗id)Δ or (id⊗ε)Δ differs from id"

    def comult_mult():
        one_one = {}
        for a, ca in h.unit.items():
            for b, cb in h.unit.items():
                one_one[(a, b)] = ca * cb
        if h.coproduct(h.unit) != _clean(one_one):
            yield ("1",), "Δ(1) != 1⊗1"
        for i, j in itertools.product(range(n), repeat=2):
            l = h.coproduct(h.mul(h.e(i), h.e(j)))
            r = tensor_mul(h, h.comult[i], h.comult[j])
            if l != r:
                yield (B[i], B[j]), "Δ(xy) != Δ(x)Δ(y)"

    def counit_mult():
        if h.eps(h.unit) != 1:
            yield ("1",), "ε(1) != 1"
        for i, j in itertools.product(range(n), repeat=2):
            if h.eps(h.mul(h.e(i), h.e(j))) != h.counit[i] * h.counit[j]:
                yield (B[i], B[j]), "ε(xy) != ε(x)ε(y)"

    def antipode():
        for i in range(n):
            left: Vec = {}
            right: Vec = {}
            for (a, b), c in h.comult[i].items():
                left = vadd(left, h.mul(h.S(h.e(a)), h.e(b)), c)
                right = vadd(right, h.mul(h.e(a), h.S(h.e(b))), c)
            target = vscale(h.unit, h.counit[i])
            if left != target:
                yield (B[i],), f"S(x_1)x_2 = {h.fmt(left)} != ε(x)1 = {h.fmt(target)}"
            elif right != target:
                yield (B[i],), f"x_1S(x_2) = {h.fmt(right)} != ε(x)1 = {h.fmt(target)}"

    first("associativity", assoc())
    first("unitality", unital())
    first("coassociativity", coassoc())
    first("counitality", counital())
    first("comult-multiplicative", comult_mult())
    first("counit-multiplicative", counit_mult())
    first("antipode", antipode())
    return ValidationReport(h.name, res)


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------

@dataclass
class CayleyTable:
    """``table[a][b]`` is the index of ``g_a g_b``."""

    labels: list[str]
    table: list[list[int]]

    @property
    def order(self) -> int:
        return len(self.labels)

    def identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.table[e][a] == a and self.table[a][e] == a for a in range(n)):
                return e
        raise GroupTableError("no identity element")

    def inverse(self, a: int) -> int:
        e = self.identity()
        for b in range(self.order):
            if self.table[a][b] == e and self.table[b][a] == e:
                return b
        raise GroupTableError(f"{self.labels[a]} has no inverse", (self.labels[a],))

    def validate(self) -> None:
        n = self.order
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise GroupTableError(f"table must be {n}x{n}")
        if any(not (0 <= v < n) for r in self.table for v in r):
            raise GroupTableError("table entry out of range")
        for a, b, c in itertools.product(range(n), repeat=3):
            t = self.table
            if t[t[a][b]][c] != t[a][t[b][c]]:
                L = self.labels
                raise GroupTableError(
                    f"associativity fails at ({L[a]}, {L[b]}, {L[c]})", (L[a], L[b], L[c])
                )
        self.identity()
        for a in range(n):
            self.inverse(a)

    @classmethod
    def from_elements(cls, elements: Sequence, op, labels: Sequence[str] | None = None) -> "CayleyTable":
        elements = list(elements)
        pos = {g: i for i, g in enumerate(elements)}
        table = [[pos[op(a, b)] for b in elements] for a in elements]
        return cls(list(labels) if labels else [str(g) for g in elements], table)


def build_group_algebra(cayley: CayleyTable, name: str = "kG") -> HopfAlgebra:
    cayley.validate()
    n = cayley.order
    one = Fraction(1)
    return HopfAlgebra(
        name=name,
        basis=list(cayley.labels),
        mult={(a, b): {cayley.table[a][b]: one} for a in range(n) for b in range(n)},
        unit={cayley.identity(): one},
        comult=[{(g, g): one} for g in range(n)],
        counit=[one] * n,
        antipode=[{cayley.inverse(g): one} for g in range(n)],
    )


def build_dual_group_algebra(cayley: CayleyTable, name: str = "O(G)") -> HopfAlgebra:
    """Function algebra on a finite group, basis of point indicators ``δ_g``."""
    cayley.validate()
    n = cayley.order
    one = Fraction(1)
    e = cayley.identity()
    comult: list[Tensor] = [{} for _ in range(n)]
    for u in range(n):
        for v in range(n):
            comult[cayley.table[u][v]][(u, v)] = one
    return HopfAlgebra(
        name=name,
        basis=[f"d_{g}" for g in cayley.labels],
        mult={(g, g): {g: one} for g in range(n)},
        unit={g: one for g in range(n)},
        comult=comult,
        counit=[one if g == e else Fraction(0) for g in range(n)],
        antipode=[{cayley.inverse(g): one} for g in range(n)],
    )


# ---------------------------------------------------------------------------
# Quotients and abelianization
# ---------------------------------------------------------------------------

@dataclass
class QuotientAlgebra:
    """``H/I`` with ``I`` spanned by the rows of ``ideal_rows`` (in rref).

    The quotient basis is the images of the non-pivot basis elements of ``H``;
    ``projection[i]`` expresses the image of ``x_i`` in that basis.
    """

    parent: HopfAlgebra
    ideal_rows: list[list[Fraction]]
    pivots: list[int]
    complement: list[int]
    projection: list[Vec]
    induced: HopfAlgebra | None = None
    hopf_ideal: bool = False

    @property
    def dim(self) -> int:
        return len(self.complement)

    def project(self, v: Vec) -> Vec:
        out: Vec = {}
        for i, c in v.items():
            out = vadd(out, self.projection[i], c)
        return out

    def project_tensor(self, t: Tensor) -> Tensor:
        out: Tensor = {}
        for key, c in t.items():
            legs = [self.projection[i].items() for i in key]
            for combo in itertools.product(*legs):
                k = tuple(a for a, _ in combo)
                x = c
                for _, y in combo:
                    x *= y
                out[k] = out.get(k, 0) + x
        return _clean(out)


def _span_closure(h: HopfAlgebra, seed: Iterable[Vec]) -> tuple[list[list[Fraction]], list[int]]:
    n = h.n
    rows = [dense(v, n) for v in seed if v]
    red, piv = rref(rows, n) if rows else ([], [])
    while True:
        new = list(red)
        for row in red:
            v = as_vec(row)
            for i in range(n):
                new.append(dense(h.mul(h.e(i), v), n))
                new.append(dense(h.mul(v, h.e(i)), n))
        red2, piv2 = rref(new, n) if new else ([], [])
        if len(piv2) == len(piv):
            return red2, piv2
        red, piv = red2, piv2


def quotient_by_ideal(h: HopfAlgebra, generators: Iterable[Vec], name: str | None = None) -> QuotientAlgebra:
    """Quotient by the two-sided ideal generated by ``generators``; the induced
    Hopf structure is attached when the ideal turns out to be a Hopf ideal."""
    n = h.n
    red, piv = _span_closure(h, generators)
    comp = [i for i in range(n) if i not in piv]
    pos = {c: k for k, c in enumerate(comp)}
    proj = []
    for i in range(n):
        r = reduce_against(dense(h.e(i), n), red, piv)
        proj.append(_clean({pos[c]: x for c, x in enumerate(r) if x != 0}))
    q = QuotientAlgebra(h, red, piv, comp, proj)
    ideal = [as_vec(r) for r in red]
    is_hopf = all(h.eps(v) == 0 for v in ideal)
    is_hopf = is_hopf and all(not q.project(h.S(v)) for v in ideal)
    is_hopf = is_hopf and all(not q.project_tensor(h.coproduct(v)) for v in ideal)
    q.hopf_ideal = is_hopf
    if is_hopf:
        m = {}
        for a, ia in enumerate(comp):
            for b, ib in enumerate(comp):
                v = q.project(h.mul(h.e(ia), h.e(ib)))
                if v:
                    m[(a, b)] = v
        q.induced = HopfAlgebra(
            name=name or f"{h.name}/I",
            basis=[h.basis[c] for c in comp],
            mult=m,
            unit=q.project(h.unit),
            comult=[q.project_tensor(h.comult[c]) for c in comp],
            counit=[h.counit[c] for c in comp],
            antipode=[q.project(h.S(h.e(c))) for c in comp],
        )
    return q


def abelianization(h: HopfAlgebra) -> QuotientAlgebra:
    """Largest commutative quotient ``H_ab``: the commutator ideal is closed
    under left and right multiplication until its dimension stabilizes."""
    comms = [
        vadd(h.mul(h.e(i), h.e(j)), h.mul(h.e(j), h.e(i)), -1)
        for i in range(h.n) for j in range(i + 1, h.n)
    ]
    q = quotient_by_ideal(h, comms, name=f"{h.name}_ab")
    if q.induced is None:
        raise AssertionError(f"commutator ideal of {h.name} is not a Hopf ideal")
    if not q.induced.is_commutative():
        raise AssertionError(f"{h.name}_ab is not commutative")
    return q


def ideal_dimension(q: QuotientAlgebra) -> int:
    return rank(q.ideal_rows) if q.ideal_rows else 0
