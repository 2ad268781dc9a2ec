"""Builtin Hopf algebras and cocycles used as fixtures.

Characteristic notes: everything is over Q.  The Sweedler algebra argument
that the commutator ``xg - gx = -2gx`` generates ``gx`` needs ``2 != 0``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .hopf import CayleyTable, HopfAlgebra, build_dual_group_algebra, build_group_algebra


def cyclic_group(n: int, labels: list[str] | None = None) -> CayleyTable:
    return CayleyTable(
        labels or [str(i) for i in range(n)],
        [[(a + b) % n for b in range(n)] for a in range(n)],
    )


def klein_four() -> CayleyTable:
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return CayleyTable.from_elements(
        elems,
        lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2),
        [f"b{i}{j}" for i, j in elems],
    )


S3_ELEMENTS = {
    "e": (0, 1, 2),
    "s1": (1, 0, 2),
    "s2": (0, 2, 1),
    "s1s2": (1, 2, 0),
    "s2s1": (2, 0, 1),
    "s1s2s1": (2, 1, 0),
}


def symmetric_group_3() -> CayleyTable:
    labels = list(S3_ELEMENTS)
    perms = [S3_ELEMENTS[k] for k in labels]
    # (pq)(i) = p(q(i)): apply q first
    return CayleyTable.from_elements(perms, lambda p, q: tuple(p[q[i]] for i in range(3)), labels)


def sweedler_h4() -> HopfAlgebra:
    """Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx, Δx = x⊗1 + g⊗x."""
    F = Fraction
    one, g, x, gx = range(4)
    m = {
        (one, one): {one: F(1)}, (one, g): {g: F(1)}, (one, x): {x: F(1)}, (one, gx): {gx: F(1)},
        (g, one): {g: F(1)}, (g, g): {one: F(1)}, (g, x): {gx: F(1)}, (g, gx): {x: F(1)},
        (x, one): {x: F(1)}, (x, g): {gx: F(-1)},
        (gx, one): {gx: F(1)}, (gx, g): {x: F(-1)},
    }
    comult = [
        {(one, one): F(1)},
        {(g, g): F(1)},
        {(x, one): F(1), (g, x): F(1)},
        {(gx, g): F(1), (one, gx): F(1)},
    ]
    return HopfAlgebra(
        name="H4",
        basis=["1", "g", "x", "gx"],
        mult=m,
        unit={one: F(1)},
        comult=comult,
        counit=[F(1), F(1), F(0), F(0)],
        antipode=[{one: F(1)}, {g: F(1)}, {gx: F(-1)}, {x: F(1)}],
        notes="Sweedler's 4-dimensional Hopf algebra; H_ab = span{1, g} needs char != 2.",
    )


def kz2() -> HopfAlgebra:
    return build_group_algebra(cyclic_group(2, ["e", "g"]), "kZ2")


def kz3() -> HopfAlgebra:
    return build_group_algebra(cyclic_group(3), "kZ3")


def klein4() -> HopfAlgebra:
    return build_group_algebra(klein_four(), "kV4")


def ks3() -> HopfAlgebra:
    return build_group_algebra(symmetric_group_3(), "kS3")


def oz2() -> HopfAlgebra:
    return build_dual_group_algebra(cyclic_group(2, ["e", "g"]), "OZ2")


def os3() -> HopfAlgebra:
    return build_dual_group_algebra(symmetric_group_3(), "OS3")


ALGEBRAS = {
    "kz2": kz2,
    "kz3": kz3,
    "klein4": klein4,
    "s3": ks3,
    "oz2": oz2,
    "os3": os3,
    "sweedler": sweedler_h4,
}


def get(name: str) -> HopfAlgebra:
    try:
        return ALGEBRAS[name]()
    except KeyError:
        raise KeyError(f"unknown catalog algebra {name!r}; known: {sorted(ALGEBRAS)}") from None


# ---------------------------------------------------------------------------
# Cocycles (as n×n Fraction matrices on the basis)
# ---------------------------------------------------------------------------

def trivial_cocycle(h: HopfAlgebra) -> list[list[Fraction]]:
    return [[h.counit[i] * h.counit[j] for j in range(h.n)] for i in range(h.n)]


def klein4_sign_cocycle() -> list[list[Fraction]]:
    """``α((i,j),(k,l)) = (-1)^{jk}`` in the basis order b00, b10, b01, b11."""
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return [[Fraction((-1) ** (a[1] * b[0])) for b in elems] for a in elems]


def group_coboundary(h: HopfAlgebra, values: dict[str, Fraction]) -> list[list[Fraction]]:
    """``α(g,h) = λ(g)λ(h)/λ(gh)`` on a group algebra, λ given on labels."""
    lam = [Fraction(values[b]) for b in h.basis]
    out = [[Fraction(0)] * h.n for _ in range(h.n)]
    for i, j in itertools.product(range(h.n), repeat=2):
        (k,) = h.mult[(i, j)]
        out[i][j] = lam[i] * lam[j] / lam[k]
    return out


S3_COBOUNDARY_VALUES = {"e": 1, "s1": 2, "s2": 3, "s1s2": 5, "s2s1": 7, "s1s2s1": 11}


def s3_coboundary_cocycle() -> list[list[Fraction]]:
    return group_coboundary(ks3(), S3_COBOUNDARY_VALUES)


def kz2_sign_cocycle() -> list[list[Fraction]]:
    """``α(g,g) = -1``, trivial elsewhere; not a coboundary over Q."""
    return [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]


def sweedler_cocycle(t: Fraction | int = 1) -> list[list[Fraction]]:
    """One-parameter family of invertible cocycles on H4.

    ``α(x, x) = α(gx, x) = t/2``, ``α(x, gx) = α(gx, gx) = -t/2``; on grouplike
    pairs ``α = 1``; zero otherwise.
    """
    t = Fraction(t)
    a = [[Fraction(0)] * 4 for _ in range(4)]
    for i in (0, 1):
        for j in (0, 1):
            a[i][j] = Fraction(1)
    a[2][2] = a[3][2] = t / 2
    a[2][3] = a[3][3] = -t / 2
    return a


COCYCLES = {
    "klein4-sign": ("klein4", klein4_sign_cocycle),
    "s3-coboundary": ("s3", s3_coboundary_cocycle),
    "kz2-sign": ("kz2", kz2_sign_cocycle),
    "sweedler-t1": ("sweedler", lambda: sweedler_cocycle(1)),
}
