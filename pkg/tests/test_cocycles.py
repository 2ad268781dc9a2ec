import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from hopfgen import catalog
from hopfgen.cocycles import (
    BilinearForm,
    ComoduleAlgebra,
    LinearForm,
    NotInvertible,
    check_comodule_isomorphism,
    cohomologous_transform,
    convolution_inverse,
    convolve,
    deform_hopf,
    deformation_isomorphism,
    is_lazy,
    is_two_cocycle,
    same_algebra,
    twist_algebra,
    twist_comodule_algebra,
)
from hopfgen.io import load_form

from conftest import ALL_FIXTURES, COCOMMUTATIVE, FIXTURES, algebra

KLEIN = BilinearForm.of(catalog.klein4_sign_cocycle())
nonzero = st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(bool)


def lam_strategy(n):
    return st.lists(nonzero, min_size=n, max_size=n).map(LinearForm.of)


def test_trivial_is_its_own_inverse():
    for name in ALL_FIXTURES:
        h = algebra(name)
        eps = BilinearForm.trivial(h)
        assert convolution_inverse(h, eps) == eps


def test_klein_sign_is_self_inverse():
    assert convolution_inverse(algebra("klein4"), KLEIN) == KLEIN


def test_linear_inverse_on_kz2():
    h = algebra("kz2")
    inv = convolution_inverse(h, LinearForm.of([1, 3]))
    assert inv.values == (1, Fraction(1, 3))


def test_not_invertible():
    with pytest.raises(NotInvertible):
        convolution_inverse(algebra("kz2"), LinearForm.of([1, 0]))


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_trivial_is_a_cocycle(name):
    assert is_two_cocycle(algebra(name), BilinearForm.trivial(algebra(name))).ok


def test_klein_sign_cocycle_and_a_broken_variant():
    h = algebra("klein4")
    assert is_two_cocycle(h, KLEIN).ok
    rows = KLEIN.rows()
    rows[h.index("b01")][h.index("b10")] = Fraction(2)
    v = is_two_cocycle(h, BilinearForm.of(rows))
    assert not v.ok and len(v.counterexample["triple"]) == 3


def test_laziness():
    assert is_lazy(algebra("s3"), BilinearForm.of(catalog.s3_coboundary_cocycle())).ok
    assert is_lazy(algebra("klein4"), KLEIN).ok
    h4 = algebra("sweedler")
    assert is_lazy(h4, BilinearForm.trivial(h4)).ok
    stored = json.loads((FIXTURES / "sweedler-nonlazy.json").read_text())
    v = is_lazy(h4, load_form(FIXTURES / "sweedler-nonlazy.json", 4))
    assert not v.ok and v.counterexample["pair"] == stored["witness"]


def test_klein_twisted_table():
    h = algebra("klein4")
    tw = twist_algebra(h, KLEIN)
    b10, b01, b11 = (h.index(b) for b in ("b10", "b01", "b11"))
    assert tw.mul(h.e(b01), h.e(b10)) == {b11: -1}
    assert tw.mul(h.e(b10), h.e(b01)) == {b11: 1}
    assert tw.verified and tw.check_associative().ok


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_trivial_twist_and_deformation_are_identity(name):
    h = algebra(name)
    eps = BilinearForm.trivial(h)
    assert twist_algebra(h, eps).table() == {k: v for k, v in h.mult.items() if v}
    assert deform_hopf(h, eps).mult == h.mult


@pytest.mark.parametrize("name,alpha", [("klein4", KLEIN),
                                        ("s3", BilinearForm.of(catalog.s3_coboundary_cocycle()))])
def test_cocommutative_deformation_is_trivial(name, alpha):
    h = algebra(name)
    assert deform_hopf(h, alpha).mult == h.mult


def test_sweedler_deformation_validates():
    h = algebra("sweedler")
    L = deform_hopf(h, BilinearForm.of(catalog.sweedler_cocycle(1)))
    assert L.comult == h.comult


def test_cohomologous_kz2_example():
    h = algebra("kz2")
    e, g = h.index("e"), h.index("g")
    c = Fraction(5)
    beta = cohomologous_transform(h, BilinearForm.trivial(h), LinearForm.of([1, c]))
    assert beta[g, g] == c * c
    assert beta[e, e] == beta[e, g] == beta[g, e] == 1


def test_cohomologous_iso_kz2():
    h = algebra("kz2")
    eps = BilinearForm.trivial(h)
    lam = LinearForm.of([1, 2])
    beta = cohomologous_transform(h, eps, lam)
    assert check_comodule_isomorphism(h, eps, beta, lam).ok


@given(st.sampled_from(["kz2", "kz3", "klein4", "sweedler", "oz2"]), st.data())
@settings(max_examples=25, deadline=None)
def test_coboundaries_are_cocycles(name, data):
    h = algebra(name)
    lam = data.draw(lam_strategy(h.n))
    try:
        beta = cohomologous_transform(h, BilinearForm.trivial(h), lam)
    except NotInvertible:
        assume(False)
    assert is_two_cocycle(h, beta).ok
    binv = convolution_inverse(h, beta)
    assert convolve(h, beta, binv) == BilinearForm.trivial(h)


@given(st.sampled_from(["kz2", "klein4", "sweedler"]), st.data())
@settings(max_examples=15, deadline=None)
def test_deformation_isomorphism(name, data):
    h = algebra(name)
    alpha = KLEIN if name == "klein4" else BilinearForm.trivial(h)
    lam = data.draw(lam_strategy(h.n))
    try:
        convolution_inverse(h, lam)
    except NotInvertible:
        assume(False)
    assert deformation_isomorphism(h, alpha, lam).ok


def test_comodule_algebra_twists():
    h = algebra("klein4")
    A = ComoduleAlgebra.regular(h)
    A.validate()
    eps = BilinearForm.trivial(h)
    assert same_algebra(twist_comodule_algebra(h, A, eps), A, h.n)
    twisted = twist_comodule_algebra(h, A, KLEIN)
    assert same_algebra(twisted, ComoduleAlgebra.from_twisted(twist_algebra(h, KLEIN)), h.n)
    back = twist_comodule_algebra(h, twisted, convolution_inverse(h, KLEIN))
    assert same_algebra(back, A, h.n)
