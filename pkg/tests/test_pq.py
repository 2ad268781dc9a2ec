import itertools
from fractions import Fraction

import pytest

from hopfgen import catalog
from hopfgen import poly as P
from hopfgen.pq import (
    PQ,
    FreeWord,
    antipode_pq_cocommutative,
    bareiss_determinant,
    build_P_Q,
    check_all_coinvariance,
    check_coinvariance,
    check_pq_dual_path,
    coact_right,
    group_determinant,
    mu,
    mu_convolution_check,
    mu_prime,
    pq_elements,
    verify_prop_nice,
)

from conftest import ALL_FIXTURES, COCOMMUTATIVE, SMALL_FIXTURES, algebra, ring, trivial_gc


def X(h, label):
    return FreeWord.letter(h.e(h.index(label)))


def word(h, *labels):
    return tuple(h.index(b) for b in labels)


def test_coaction_examples():
    h = algebra("sweedler")
    one, g, x, gx = (h.index(b) for b in ("1", "g", "x", "gx"))
    assert coact_right(h, X(h, "g")) == {(g,): {g: 1}}
    assert coact_right(h, X(h, "x")) == {(x,): {one: 1}, (g,): {x: 1}}
    # (X_g⊗g)(X_x⊗1 + X_g⊗x) = X_gX_x⊗g + X_gX_g⊗gx
    assert coact_right(h, X(h, "g") * X(h, "x")) == {(g, x): {g: 1}, (g, g): {gx: 1}}


def test_P_Q_words():
    h = algebra("sweedler")
    w = build_P_Q(h, h.e(h.index("x")), h.e(h.index("x")))
    assert w["P"] == X(h, "x") * X(h, "1") - X(h, "g") * X(h, "gx")
    s3 = algebra("s3")
    a, b = s3.index("s1"), s3.index("s1s2")
    (ab,) = s3.mul(s3.e(a), s3.e(b))
    (abinv,) = s3.S(s3.e(ab))
    ws = build_P_Q(s3, s3.e(a), s3.e(b))
    assert ws["Q"] == FreeWord({(a, b, abinv): Fraction(1)})
    (ainv,) = s3.S(s3.e(a))
    assert ws["P"] == FreeWord({(a, ainv): Fraction(1)})


def test_coinvariance_sweedler_and_negative_control():
    h = algebra("sweedler")
    x = h.e(h.index("x"))
    w = build_P_Q(h, x, x)
    assert check_coinvariance(h, w["P"], "right").ok
    assert check_coinvariance(h, w["Q"], "right").ok
    assert check_coinvariance(h, w["P'"], "left").ok
    assert check_coinvariance(h, w["Q'"], "left").ok
    v = check_coinvariance(h, X(h, "x"), "right")
    assert not v.ok and v.counterexample["word"] == ["g"]


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_all_coinvariance(name):
    assert check_all_coinvariance(algebra(name)).ok


def test_mu_on_grouplikes():
    r = ring("s3")
    h = algebra("s3")
    g = h.index("s1s2")
    (ginv,) = h.S(h.e(g))
    assert mu(r, X(h, "s1s2")) == {g: r.T(g)}
    assert mu_prime(r, X(h, "s1s2")) == {ginv: r.U(g)}


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_mu_convolution(name):
    assert mu_convolution_check(ring(name)).ok


def test_p_q_closed_forms():
    r = ring("sweedler")
    h = algebra("sweedler")
    pq = PQ(r)
    assert pq.p(h.e(h.index("x"))) == r.parse("T_x*T_1 - T_g*T_gx")
    s3, rs = algebra("s3"), ring("s3")
    pq3 = PQ(rs)
    a, b = s3.index("s1"), s3.index("s1s2")
    (ab,) = s3.mul(s3.e(a), s3.e(b))
    (abinv,) = s3.S(s3.e(ab))
    (ainv,) = s3.S(s3.e(a))
    assert pq3.p(s3.e(a)) == rs.T(a) * rs.T(ainv)
    assert pq3.p_prime(s3.e(a)) == rs.U(ainv) * rs.U(a)
    assert pq3.q(s3.e(a), s3.e(b)) == rs.T(a) * rs.T(b) * rs.T(abinv)
    assert pq3.q_prime(s3.e(a), s3.e(b)) == rs.U(abinv) * rs.U(a) * rs.U(b)


@pytest.mark.parametrize("name", SMALL_FIXTURES)
def test_dual_path(name):
    assert check_pq_dual_path(ring(name)).ok


def test_pq_elements_returns_closed_forms():
    r = ring("kz2")
    h = algebra("kz2")
    g = h.e(h.index("g"))
    out = pq_elements(r, g, g)
    assert out["q"] == r.parse("T_g^2*T_e")  # T_g T_g T_{(gg)^{-1}}
    # q_{g,g} p'_{gg} = T_g^2 T_e U_e U_e = T_g^2 U_e = σ(g,g)
    assert out["q"] * PQ(r).p_prime(h.e(h.index("e"))) == trivial_gc("kz2").sigma[1][1]


@pytest.mark.parametrize("name", SMALL_FIXTURES)
def test_prop_nice(name):
    assert verify_prop_nice(trivial_gc(name)).ok


@pytest.mark.parametrize("name", COCOMMUTATIVE)
def test_antipode_pq(name):
    assert antipode_pq_cocommutative(ring(name)).ok


def test_antipode_pq_skips_sweedler():
    assert antipode_pq_cocommutative(ring("sweedler")).status == "skipped"


# -- group determinant ---------------------------------------------------------

def leibniz(cayley):
    """Permutation expansion of det(T_{g h^{-1}}), independent of Bareiss."""
    n = cayley.order
    out = {}
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        m = [0] * n
        for g in range(n):
            m[cayley.table[g][cayley.inverse(perm[g])]] += 1
        out[tuple(m)] = out.get(tuple(m), 0) + (-1) ** inversions
    return {k: v for k, v in out.items() if v}


def test_group_determinant_z2():
    d = group_determinant(catalog.cyclic_group(2, ["e", "g"]))
    assert d.text() == "-T_g^2 + T_e^2"  # T_g ranks above T_e in degrevlex
    assert d.poly == P.parse("T_e^2 - T_g^2", d.names)


def test_group_determinant_z3():
    d = group_determinant(catalog.cyclic_group(3))
    assert d.poly == P.parse(f"{d.names[0]}^3 + {d.names[1]}^3 + {d.names[2]}^3 - "
                             f"3*{d.names[0]}*{d.names[1]}*{d.names[2]}", d.names)


@pytest.mark.parametrize("cayley", [catalog.cyclic_group(4), catalog.klein_four(), catalog.symmetric_group_3()],
                         ids=["z4", "v4", "s3"])
def test_group_determinant_matches_leibniz(cayley):
    assert group_determinant(cayley).poly == leibniz(cayley)


def test_bareiss_numeric():
    order = P.MonomialOrder(1)
    c = lambda v: P.const(v, 1)  # noqa: E731
    m = [[c(2), c(1), c(3)], [c(0), c(1), c(4)], [c(5), c(6), c(0)]]
    # 2(0 - 24) - 1(0 - 20) + 3(0 - 5) = -48 + 20 - 15
    assert bareiss_determinant(m, order) == c(-43)
