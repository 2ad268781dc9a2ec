import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, given, settings, strategies as st

from hopfgen import poly as P
from hopfgen.groebner import Budget, BudgetExceeded, GroebnerCache, default_cache_dir, groebner

NAMES = ["a", "b", "c"]
ORDER = P.MonomialOrder(3)
SYMS = sympy.symbols("a b c")


def to_sympy(p):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod(s ** e for s, e in zip(SYMS, m))
               for m, c in ((m, Fraction(c)) for m, c in p.items()))


def from_sympy(expr):
    poly = sympy.Poly(expr, *SYMS)
    return P.normalize({m: P.q(Fraction(int(c.p), int(c.q))) for m, c in poly.terms()})


small = st.dictionaries(st.tuples(*[st.integers(0, 2)] * 3), st.integers(-3, 3).filter(bool), min_size=1, max_size=3)


@given(st.lists(small.map(P.normalize).filter(bool), min_size=1, max_size=3))
@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_reduced_basis_matches_sympy(gens):
    gb = groebner(gens, ORDER, NAMES)
    # our index 0 is the smallest variable; sympy's first generator is the largest
    ref = sympy.groebner([to_sympy(g) for g in gens], *reversed(SYMS), order="grevlex")
    ours = {frozenset(P.normalize({m: Fraction(c) / Fraction(p[ORDER.lm(p)]) for m, c in p.items()}).items())
            for p in gb.polys}
    theirs = set()
    for g in ref.exprs:
        p = from_sympy(g)
        lead = Fraction(p[ORDER.lm(p)])
        theirs.add(frozenset(P.normalize({m: Fraction(c) / lead for m, c in p.items()}).items()))
    assert ours == theirs


def test_normal_form_is_canonical_modulo_ideal():
    gens = [P.parse("a*b - 1", NAMES), P.parse("c^2 - a", NAMES)]
    gb = groebner(gens, ORDER, NAMES)
    f = P.parse("a^2*b + c^4*b", NAMES)
    # f = a(ab-1) + a + b*c^4 ≡ a + b*a^2 ≡ a + a = 2a
    assert gb.reduce(f) == P.parse("2*a", NAMES)


HARD = ["a^2*b - c", "b^2*c - a", "c^2*a - b"]  # 10 S-pairs, lcm degree 4


def test_budget_exhaustion_raises():
    gens = [P.parse(g, NAMES) for g in HARD]
    groebner(gens, ORDER, NAMES)  # finishes without a budget
    with pytest.raises(BudgetExceeded, match="pair budget"):
        groebner(gens, ORDER, NAMES, budget=Budget(max_pairs=1))
    with pytest.raises(BudgetExceeded, match="degree bound"):
        groebner(gens, ORDER, NAMES, budget=Budget(max_degree=3))


def test_zero_coefficients_are_ignored():
    gb = groebner([{(0, 0, 0): 0, (0, 0, 1): 1}], ORDER, NAMES)
    assert gb.polys == [{(0, 0, 1): 1}]


def test_cache_roundtrip_and_stats(tmp_path):
    cache = GroebnerCache(tmp_path / "gb")
    gens = [P.parse("a*b - 1", NAMES), P.parse("c^2 - a", NAMES)]
    first = groebner(gens, ORDER, NAMES, cache=cache)
    second = groebner(gens, ORDER, NAMES, cache=cache)
    assert first.polys == second.polys
    assert second.stats.cache_hit and not first.stats.cache_hit
    assert cache.read_stats() == {"hits": 1, "misses": 1}
    (entry,) = cache.entries()
    data = json.loads((cache.dir / f"{entry['key']}.json").read_text())
    assert data["order"]["name"] == "degrevlex"
    assert cache.clear() == 2  # basis file and stats
    assert cache.entries() == []


def test_corrupt_cache_file_is_a_miss(tmp_path):
    cache = GroebnerCache(tmp_path)
    gens = [P.parse("a - b", NAMES)]
    groebner(gens, ORDER, NAMES, cache=cache)
    (entry,) = cache.entries()
    (tmp_path / f"{entry['key']}.json").write_text("{not json")
    again = groebner(gens, ORDER, NAMES, cache=cache)
    assert not again.stats.cache_hit


def test_env_override(monkeypatch, tmp_path):
    monkeypatch.setenv("HOPFGEN_CACHE", str(tmp_path / "x"))
    assert default_cache_dir() == tmp_path / "x"
