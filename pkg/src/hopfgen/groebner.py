"""Buchberger's algorithm over Q with Gebauer-Möller pair pruning.

Polynomials are kept monic.  A persistent on-disk cache stores reduced bases
keyed by a hash of (variables, order, generators).
"""

from __future__ import annotations

import hashlib
import heapq
import json
import logging
import os
import tempfile
import time
from operator import add as _plus, sub as _minus
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .poly import (
    Mono,
    MonomialOrder,
    Poly,
    coprime,
    divides,
    divmask,
    fmt_coeff,
    mlcm,
    poly_from_json,
    normalize,
    poly_to_json,
    q,
)

log = logging.getLogger(__name__)


class BudgetExceeded(RuntimeError):
    """Raised when the pair budget or degree bound is hit; callers turn it into
    an ``inconclusive`` verdict."""


@dataclass
class Budget:
    max_pairs: int | None = None
    max_degree: int | None = None
    max_seconds: float | None = None


@dataclass
class GBStats:
    pairs_processed: int = 0
    pairs_pruned: int = 0
    zero_reductions: int = 0
    basis_size: int = 0
    max_degree: int = 0
    seconds: float = 0.0
    cache_hit: bool = False

    def to_json(self, timings: bool = True) -> dict:
        out = {
            "pairs_processed": self.pairs_processed,
            "pairs_pruned": self.pairs_pruned,
            "zero_reductions": self.zero_reductions,
            "basis_size": self.basis_size,
            "max_degree": self.max_degree,
            "cache_hit": self.cache_hit,
        }
        if timings:
            out["seconds"] = round(self.seconds, 4)
        return out


class _Elt:
    __slots__ = ("poly", "lm", "mask", "tail")

    def __init__(self, poly: Poly, order: MonomialOrder):
        lm = order.lm(poly)
        c = poly[lm]
        if c != 1:
            poly = {m: q(Fraction(x) / c) for m, x in poly.items()}
        self.poly = poly
        self.lm = lm
        self.mask = divmask(lm)
        self.tail = [(m, x) for m, x in poly.items() if m != lm]


def _find_reducer(m: Mono, mask: int, basis: Sequence[_Elt]):
    for g in basis:
        if g.mask & ~mask == 0 and divides(g.lm, m):
            return g
    return None


def _reduce(f: Poly, basis: Sequence[_Elt], order: MonomialOrder, full: bool = True) -> Poly:
    """Remainder of ``f`` on division by ``basis``.

    Terms are processed in descending order through a heap; with ``full=False``
    the loop stops at the first irreducible term (top reduction).
    """
    p = dict(f)
    nkey = order.nkey
    heap = [(nkey(m), m) for m in p]
    heapq.heapify(heap)
    r: Poly = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        g = _find_reducer(m, divmask(m), basis)
        if g is None:
            r[m] = c
            if not full:
                for mm, cc in p.items():
                    r[mm] = cc
                return r
            continue
        q = tuple(map(_minus, m, g.lm))
        for gm, gc in g.tail:
            mm = tuple(map(_plus, gm, q))
            old = p.get(mm)
            if old is None:
                p[mm] = -c * gc
                heapq.heappush(heap, (nkey(mm), mm))
            else:
                v = old - c * gc
                if v:
                    p[mm] = v
                else:
                    del p[mm]
    return normalize(r)


def normal_form(f: Poly, basis: Sequence[Poly] | "GroebnerBasis", order: MonomialOrder | None = None) -> Poly:
    if isinstance(basis, GroebnerBasis):
        return basis.reduce(f)
    elts = [_Elt(g, order) for g in basis if g]
    return _reduce(f, elts, order)


def _spoly(a: _Elt, b: _Elt) -> Poly:
    l = mlcm(a.lm, b.lm)
    qa = tuple(map(_minus, l, a.lm))
    qb = tuple(map(_minus, l, b.lm))
    out: Poly = {}
    for m, c in a.tail:
        out[tuple(map(_plus, m, qa))] = c
    for m, c in b.tail:
        mm = tuple(map(_plus, m, qb))
        v = out.get(mm, 0) - c
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


@dataclass
class GroebnerBasis:
    """Reduced Gröbner basis with its order and variable names."""

    names: list[str]
    order: MonomialOrder
    polys: list[Poly]
    stats: GBStats = field(default_factory=GBStats)

    def __post_init__(self):
        self._elts = [_Elt(p, self.order) for p in self.polys]
        self._elts.sort(key=lambda e: self.order.key(e.lm))
        self._memo: dict[Mono, Poly] = {}

    def reduce(self, f: Poly) -> Poly:
        """Normal form, assembled from memoized normal forms of monomials.

        Normal form is linear, and the same monomials recur constantly across
        the identity checks, so caching per monomial beats reducing whole
        polynomials afresh."""
        if not f:
            return {}
        out: Poly = {}
        nf = self.reduce_monomial
        for m, c in f.items():
            r = nf(m)
            if len(r) == 1 and m in r:
                v = out.get(m, 0) + c
                if v:
                    out[m] = v
                else:
                    del out[m]
            else:
                for mm, x in r.items():
                    v = out.get(mm, 0) + c * x
                    if v:
                        out[mm] = v
                    else:
                        del out[mm]
        return normalize(out)

    def reduce_monomial(self, m: Mono) -> Poly:
        memo = self._memo
        hit = memo.get(m)
        if hit is not None:
            return hit
        if len(memo) > 500_000:
            memo.clear()
        # iterative post-order walk: a monomial is resolved once every monomial
        # of its reducer's tail (shifted) is resolved
        stack = [m]
        while stack:
            top = stack[-1]
            if top in memo:
                stack.pop()
                continue
            g = _find_reducer(top, divmask(top), self._elts)
            if g is None:
                memo[top] = {top: 1}
                stack.pop()
                continue
            shift = tuple(map(_minus, top, g.lm))
            images = [(tuple(map(_plus, gm, shift)), gc) for gm, gc in g.tail]
            pending = [mm for mm, _ in images if mm not in memo]
            if pending:
                stack.extend(pending)
                continue
            res: Poly = {}
            for mm, gc in images:
                for k, x in memo[mm].items():
                    v = res.get(k, 0) - gc * x
                    if v:
                        res[k] = v
                    else:
                        del res[k]
            memo[top] = normalize(res)
            stack.pop()
        return memo[m]

    def leading_monomials(self) -> list[Mono]:
        return [e.lm for e in self._elts]

    def contains(self, f: Poly) -> bool:
        return not self.reduce(f)

    def is_unit_ideal(self) -> bool:
        return any(sum(e.lm) == 0 for e in self._elts)

    # -- staircase ---------------------------------------------------------
    def is_zero_dimensional(self) -> bool:
        nv = self.order.nvars
        pure = set()
        for lm in self.leading_monomials():
            supp = [i for i, e in enumerate(lm) if e]
            if len(supp) == 1:
                pure.add(supp[0])
        return len(pure) == nv

    def standard_monomials(self, limit: int = 100000) -> list[Mono] | None:
        """Monomials outside the leading-term ideal, or None when infinitely many."""
        if self.is_unit_ideal():
            return []
        if not self.is_zero_dimensional():
            return None
        nv = self.order.nvars
        lms = self.leading_monomials()
        start = (0,) * nv
        seen = {start}
        frontier = [start]
        out = []
        while frontier:
            m = frontier.pop()
            out.append(m)
            if len(out) > limit:
                raise BudgetExceeded("staircase larger than limit")
            for i in range(nv):
                mm = m[:i] + (m[i] + 1,) + m[i + 1:]
                if mm in seen or any(divides(l, mm) for l in lms):
                    continue
                seen.add(mm)
                frontier.append(mm)
        out.sort(key=self.order.key)
        return out

    # -- serialization -----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "names": self.names,
            "order": self.order.describe(),
            "basis": [poly_to_json(p, self.order) for p in self.polys],
            "stats": self.stats.to_json(),
        }


def _update(G: list[_Elt], active: list[bool], pairs: list, h_idx: int, order: MonomialOrder, stats: GBStats):
    """Gebauer-Möller installation of the new element ``G[h_idx]``; returns the
    new pair list (pairs are ``(i, j)`` index tuples)."""
    h = G[h_idx]
    C = [j for j in range(len(G)) if active[j] and j != h_idx]
    D: list[int] = []
    while C:
        j = C.pop()
        lcm_hj = mlcm(h.lm, G[j].lm)
        if coprime(h.lm, G[j].lm):
            D.append(j)
            continue
        redundant = any(divides(mlcm(h.lm, G[k].lm), lcm_hj) for k in C) or any(
            divides(mlcm(h.lm, G[k].lm), lcm_hj) for k in D
        )
        if not redundant:
            D.append(j)
        else:
            stats.pairs_pruned += 1
    E = []
    for j in D:
        if coprime(h.lm, G[j].lm):
            stats.pairs_pruned += 1
        else:
            E.append((j, h_idx))
    kept = []
    for (i, j) in pairs:
        l = mlcm(G[i].lm, G[j].lm)
        if (divides(h.lm, l) and mlcm(G[i].lm, h.lm) != l and mlcm(h.lm, G[j].lm) != l):
            stats.pairs_pruned += 1
            continue
        kept.append((i, j))
    for j in range(len(G)):
        if active[j] and j != h_idx and divides(h.lm, G[j].lm):
            active[j] = False
    return kept + E


def buchberger(
    gens: Sequence[Poly],
    order: MonomialOrder,
    names: Sequence[str],
    budget: Budget | None = None,
    known_basis: Sequence[Poly] = (),
) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``known_basis`` and ``gens``.

    ``known_basis`` must already be a Gröbner basis; pairs among its elements
    are never formed.
    """
    budget = budget or Budget()
    stats = GBStats()
    t0 = time.perf_counter()
    G: list[_Elt] = []
    active: list[bool] = []
    pairs: list[tuple[int, int]] = []

    def install(p: Poly):
        nonlocal pairs
        G.append(_Elt(p, order))
        active.append(True)
        pairs = _update(G, active, pairs, len(G) - 1, order, stats)

    for p in known_basis:
        if p:
            G.append(_Elt(p, order))
            active.append(True)
    # drop known elements made redundant by their own leading terms
    for i, g in enumerate(G):
        for j, o in enumerate(G):
            if i != j and active[j] and divides(o.lm, g.lm) and (o.lm != g.lm or j < i):
                active[i] = False
                break

    todo = sorted((p for p in gens if p), key=lambda p: order.key(order.lm(p)))
    for p in todo:
        basis = [G[i] for i in range(len(G)) if active[i]]
        r = _reduce(p, basis, order)
        if r:
            install(r)

    while pairs:
        if budget.max_pairs is not None and stats.pairs_processed >= budget.max_pairs:
            raise BudgetExceeded(f"pair budget {budget.max_pairs} exhausted")
        if budget.max_seconds is not None and time.perf_counter() - t0 > budget.max_seconds:
            raise BudgetExceeded(f"time budget {budget.max_seconds}s exhausted")
        # normal selection strategy: smallest lcm first
        best = min(range(len(pairs)), key=lambda k: order.key(mlcm(G[pairs[k][0]].lm, G[pairs[k][1]].lm)))
        i, j = pairs.pop(best)
        l = mlcm(G[i].lm, G[j].lm)
        if budget.max_degree is not None and sum(l) > budget.max_degree:
            raise BudgetExceeded(f"degree bound {budget.max_degree} exceeded")
        stats.pairs_processed += 1
        s = _spoly(G[i], G[j])
        basis = [G[k] for k in range(len(G)) if active[k]]
        r = _reduce(s, basis, order)
        if not r:
            stats.zero_reductions += 1
            continue
        install(r)

    # interreduce to the reduced basis
    final = [G[k] for k in range(len(G)) if active[k]]
    final.sort(key=lambda e: order.key(e.lm))
    reduced: list[Poly] = []
    for k, g in enumerate(final):
        others = final[:k] + final[k + 1:]
        r = _reduce(g.poly, others, order)
        lm = order.lm(r)
        c = r[lm]
        reduced.append({m: q(Fraction(x) / c) for m, x in r.items()})
    reduced.sort(key=lambda p: order.key(order.lm(p)))
    stats.basis_size = len(reduced)
    stats.max_degree = max((sum(m) for p in reduced for m in p), default=0)
    stats.seconds = time.perf_counter() - t0
    log.debug("groebner: %d elements, %d pairs, %.2fs", len(reduced), stats.pairs_processed, stats.seconds)
    return GroebnerBasis(list(names), order, reduced, stats)


# ---------------------------------------------------------------------------
# Cache
# ---------------------------------------------------------------------------

def default_cache_dir() -> Path:
    env = os.environ.get("HOPFGEN_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hopfgen"


def content_hash(names: Sequence[str], order: MonomialOrder, gens: Sequence[Poly]) -> str:
    payload = {
        "names": list(names),
        "order": order.describe(),
        "gens": sorted(
            json.dumps(sorted([list(m), fmt_coeff(c)] for m, c in g.items())) for g in gens
        ),
    }
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:32]


def _atomic_write(path: Path, data: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    with os.fdopen(fd, "w") as fh:
        fh.write(data)
    os.replace(tmp, path)


class GroebnerCache:
    """Directory of ``<hash>.json`` files plus a ``stats.json`` hit counter."""

    def __init__(self, directory: str | os.PathLike | None = None):
        self.dir = Path(directory) if directory else default_cache_dir()

    def _path(self, key: str) -> Path:
        return self.dir / f"{key}.json"

    def _bump(self, field_name: str) -> None:
        stats = self.read_stats()
        stats[field_name] = stats.get(field_name, 0) + 1
        try:
            _atomic_write(self.dir / "stats.json", json.dumps(stats, sort_keys=True))
        except OSError as exc:  # cache is best-effort
            log.warning("cannot update cache stats in %s: %s", self.dir, exc)

    def read_stats(self) -> dict:
        try:
            return json.loads((self.dir / "stats.json").read_text())
        except (OSError, ValueError):
            return {}

    def get(self, key: str, order: MonomialOrder) -> GroebnerBasis | None:
        path = self._path(key)
        try:
            data = json.loads(path.read_text())
        except FileNotFoundError:
            self._bump("misses")
            return None
        except (OSError, ValueError) as exc:
            log.warning("ignoring unreadable cache entry %s: %s", path, exc)
            self._bump("misses")
            return None
        self._bump("hits")
        polys = [poly_from_json(p) for p in data["basis"]]
        st = data.get("stats", {})
        stats = GBStats(
            pairs_processed=st.get("pairs_processed", 0),
            pairs_pruned=st.get("pairs_pruned", 0),
            zero_reductions=st.get("zero_reductions", 0),
            basis_size=len(polys),
            max_degree=st.get("max_degree", 0),
            cache_hit=True,
        )
        return GroebnerBasis(data["names"], order, polys, stats)

    def put(self, key: str, gb: GroebnerBasis) -> None:
        _atomic_write(self._path(key), json.dumps(gb.to_json(), sort_keys=True))

    def entries(self) -> list[dict]:
        out = []
        if not self.dir.exists():
            return out
        for p in sorted(self.dir.glob("*.json")):
            if p.name == "stats.json":
                continue
            try:
                data = json.loads(p.read_text())
            except (OSError, ValueError):
                continue
            out.append({
                "key": p.stem,
                "variables": len(data.get("names", [])),
                "basis_size": len(data.get("basis", [])),
                "max_degree": data.get("stats", {}).get("max_degree"),
                "bytes": p.stat().st_size,
            })
        return out

    def clear(self) -> int:
        n = 0
        if not self.dir.exists():
            return 0
        for p in self.dir.glob("*.json"):
            p.unlink()
            n += 1
        return n


def groebner(
    gens: Sequence[Poly],
    order: MonomialOrder,
    names: Sequence[str],
    budget: Budget | None = None,
    known_basis: Sequence[Poly] = (),
    cache: GroebnerCache | None = None,
) -> GroebnerBasis:
    """Cached front end to :func:`buchberger`."""
    # explicit zero coefficients would otherwise become leading terms
    gens = [g for g in ({m: c for m, c in g.items() if c} for g in gens) if g]
    key = None
    if cache is not None:
        key = content_hash(names, order, list(known_basis) + list(gens))
        hit = cache.get(key, order)
        if hit is not None:
            return hit
    gb = buchberger(gens, order, names, budget=budget, known_basis=known_basis)
    if cache is not None:
        try:
            cache.put(key, gb)
        except OSError as exc:
            log.warning("cannot write cache entry in %s: %s", cache.dir, exc)
    return gb
