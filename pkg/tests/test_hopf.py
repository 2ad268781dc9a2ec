from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfgen import catalog
from hopfgen.hopf import (
    CayleyTable,
    GroupTableError,
    abelianization,
    build_dual_group_algebra,
    build_group_algebra,
    sweedler_expand,
    validate_hopf,
)

from conftest import ALL_FIXTURES, algebra


def idx(h, *labels):
    return tuple(h.index(b) for b in labels)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_catalog_validates(name):
    report = validate_hopf(algebra(name))
    assert report.ok, report.failures


def test_sweedler_structure():
    h = algebra("sweedler")
    one, g, x, gx = (h.e(i) for i in range(4))
    assert h.mul(g, g) == one
    assert h.mul(x, x) == {}
    assert h.mul(x, g) == {h.index("gx"): -1}
    assert h.S(x) == {h.index("gx"): -1}
    assert not h.is_cocommutative()


def test_sweedler_expand_examples():
    h = algebra("sweedler")
    one, g, x = idx(h, "1", "g", "x")
    assert sweedler_expand(h, h.e(g), 3) == {(g, g, g): 1}
    assert sweedler_expand(h, h.e(x), 2) == {(x, one): 1, (g, x): 1}
    assert sweedler_expand(h, h.e(x), 3) == {(x, one, one): 1, (g, x, one): 1, (g, g, x): 1}


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_sweedler_expand_bracketings_agree(name):
    h = algebra(name)
    for d in range(1, 5):
        for i in range(h.n):
            assert sweedler_expand(h, h.e(i), d, leg=-1) == sweedler_expand(h, h.e(i), d, leg=0)


def test_corrupted_antipode_names_axiom_and_element():
    h = algebra("sweedler")
    S = list(h.antipode)
    S[h.index("x")] = {h.index("gx"): Fraction(1)}
    bad = type(h)(h.name, h.basis, h.mult, h.unit, h.comult, h.counit, S)
    report = validate_hopf(bad)
    (failure,) = report.failures
    assert failure.axiom == "antipode"
    assert failure.witness == ("x",)
    # Σ S(x_1)x_2 = gx + g·x = 2gx with the wrong sign
    assert "2*gx" in failure.detail


def test_group_algebras():
    kz2 = build_group_algebra(catalog.cyclic_group(2))
    assert kz2.n == 2 and kz2.is_cocommutative()
    ks3 = build_group_algebra(catalog.symmetric_group_3())
    assert ks3.n == 6 and ks3.is_cocommutative() and not ks3.is_commutative()


def test_broken_cayley_table_names_triple():
    # a Latin square that is not associative
    table = CayleyTable(["a", "b", "c"], [[0, 1, 2], [1, 0, 2], [2, 2, 0]])
    with pytest.raises(GroupTableError) as err:
        build_group_algebra(table)
    assert err.value.witness == ("b", "c", "c")
    assert "(b, c, c)" in str(err.value)


def test_dual_group_algebras():
    oz2 = build_dual_group_algebra(catalog.cyclic_group(2))
    assert oz2.is_commutative() and oz2.n == 2
    oz3 = build_dual_group_algebra(catalog.cyclic_group(3))
    d = {b: oz3.index(b) for b in oz3.basis}
    labels = oz3.basis
    # Δδ_1 = Σ_{uv=1} δ_u ⊗ δ_v
    expected = {(d[labels[u]], d[labels[(1 - u) % 3]]): 1 for u in range(3)}
    assert oz3.comult[d[labels[1]]] == expected
    assert validate_hopf(build_dual_group_algebra(catalog.symmetric_group_3())).ok


@pytest.mark.parametrize("name,dim", [("s3", 2), ("sweedler", 2), ("kz2", 2), ("klein4", 4),
                                      ("oz2", 2), ("os3", 6)])
def test_abelianization_dimension(name, dim):
    q = abelianization(algebra(name))
    assert q.dim == dim
    assert q.induced.is_commutative()
    assert validate_hopf(q.induced).ok


def test_sweedler_abelianization_is_span_1_g():
    h = algebra("sweedler")
    q = abelianization(h)
    # gx and x lie in the commutator ideal
    assert q.project(h.e(h.index("x"))) == {}
    assert q.project(h.e(h.index("gx"))) == {}
    assert sorted(h.basis[c] for c in q.complement) == ["1", "g"]


@given(st.sampled_from(ALL_FIXTURES), st.data())
@settings(max_examples=40, deadline=None)
def test_antipode_is_anti_multiplicative(name, data):
    h = algebra(name)
    i = data.draw(st.integers(0, h.n - 1))
    j = data.draw(st.integers(0, h.n - 1))
    assert h.S(h.mul(h.e(i), h.e(j))) == h.mul(h.S(h.e(j)), h.S(h.e(i)))
