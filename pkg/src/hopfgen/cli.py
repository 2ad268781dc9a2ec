"""Command-line interface.

    hopfgen validate PATH
    hopfgen verify --algebra PATH [--cocycle PATH] [--lambda PATH] --checks LIST ...
    hopfgen verify --job JOB.json
    hopfgen cache list|clear|stats
    hopfgen catalog [NAME]

Algebra paths may also be ``catalog:NAME`` for a builtin algebra.  Exit codes:
0 pass (or inconclusive without ``--strict``), 1 check failure, 2 input error.
"""

from __future__ import annotations

import argparse
import contextlib
import dataclasses
import hashlib
import json
import logging
import signal
import sys
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import catalog
from . import poly as P
from . import verdict as V
from .cocycles import BilinearForm, LinearForm, NotInvertible, is_lazy, is_two_cocycle
from .groebner import Budget, BudgetExceeded, GroebnerCache, default_cache_dir
from .hopf import CayleyTable, HopfAlgebra, StructureError, validate_hopf
from .io import InputError, algebra_from_json, algebra_to_json, load_algebra, load_form, load_job, load_linear

log = logging.getLogger("hopfgen")

SCHEMA = 1

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class CheckTimeout(Exception):
    pass


# ---------------------------------------------------------------------------
# Context shared by the checks of one job
# ---------------------------------------------------------------------------

@dataclass
class Context:
    h: HopfAlgebra
    alpha: BilinearForm | None
    lam: LinearForm | None
    budget: Budget
    cache: GroebnerCache | None
    _memo: dict = field(default_factory=dict)

    def _get(self, key: str, make: Callable):
        if key not in self._memo:
            self._memo[key] = make()
        return self._memo[key]

    @property
    def ring(self):
        from .laurent import build_presented_ring
        return self._get("ring", lambda: build_presented_ring(self.h, cache=self.cache))

    @property
    def gc(self):
        """Generic cocycle of the supplied α (trivial when none was given)."""
        from .laurent import generic_sigma
        return self._get("gc", lambda: generic_sigma(self.ring, self.alpha or BilinearForm.trivial(self.h)))

    @property
    def gc_trivial(self):
        from .laurent import generic_sigma
        if self.alpha is None or self.alpha == BilinearForm.trivial(self.h):
            return self.gc
        return self._get("gc0", lambda: generic_sigma(self.ring, BilinearForm.trivial(self.h)))

    @property
    def maps(self):
        from .laurent import hopf_maps
        return self._get("maps", lambda: hopf_maps(self.ring))

    @property
    def pq(self):
        from .pq import PQ
        return self._get("pq", lambda: PQ(self.ring))


def _needs_cocycle(ctx: Context, check: str) -> V.Verdict | None:
    if ctx.alpha is None:
        return V.skipped(check, "needs --cocycle")
    return None


# ---------------------------------------------------------------------------
# Check registry
# ---------------------------------------------------------------------------

def _validate(ctx: Context) -> V.Verdict:
    rep = validate_hopf(ctx.h)
    if rep.ok:
        return V.passed("validate", axioms=len(rep.results))
    f = rep.failures[0]
    return V.failed("validate", {"axiom": f.axiom, "witness": list(f.witness), "detail": f.detail})


def _is_two_cocycle(ctx):
    skip = _needs_cocycle(ctx, "is-two-cocycle")
    return skip if skip is not None else is_two_cocycle(ctx.h, ctx.alpha)


def _lazy(ctx):
    skip = _needs_cocycle(ctx, "lazy")
    return skip if skip is not None else is_lazy(ctx.h, ctx.alpha)


def _ring_axioms(ctx):
    return ctx.maps.check_generator_axioms()


def _cocycle_identity(ctx):
    from .laurent import verify_cocycle_identity
    return verify_cocycle_identity(ctx.gc)


def _specialize(ctx):
    from .laurent import specialize
    from .cocycles import is_two_cocycle as cocycle_check
    lams = [("epsilon", LinearForm.counit(ctx.h))]
    if ctx.lam is not None:
        lams.append(("lambda", ctx.lam))
    out = {}
    for label, lam in lams:
        try:
            beta = specialize(ctx.gc, lam)
        except AssertionError as exc:
            return V.failed("specialize", {"at": label, "error": str(exc)})
        if label == "epsilon" and beta != ctx.gc.alpha:
            return V.failed("specialize", {"at": label, "error": "chi_0 does not recover alpha"})
        if not cocycle_check(ctx.h, beta).ok:
            return V.failed("specialize", {"at": label, "error": "specialization is not a two-cocycle"})
        out[label] = [[P.fmt_coeff(c) for c in row] for row in beta.rows()]
    return V.passed("specialize", forms=out)


def _specialize_extension(ctx):
    from .galois import specialize_extension
    lams = [("epsilon", LinearForm.counit(ctx.h))]
    if ctx.lam is not None:
        lams.append(("lambda", ctx.lam))
    for label, lam in lams:
        try:
            specialize_extension(ctx.gc, lam)
        except AssertionError as exc:
            return V.failed("specialize-extension", {"at": label, "error": str(exc)})
    return V.passed("specialize-extension", points=[lab for lab, _ in lams])


def _ext_assoc(ctx):
    from .galois import check_ext_associative
    return check_ext_associative(ctx.gc)


def _reduction(ctx):
    from .galois import coro_lh_check, verify_reduction
    skip = _needs_cocycle(ctx, "reduction")
    if skip is not None:
        return skip
    v = verify_reduction(ctx.h, ctx.alpha, ctx.ring)
    if v.ok and ctx.h.is_cocommutative():
        c = coro_lh_check(ctx.gc, ctx.gc_trivial)
        if not c.ok:
            return V.failed("reduction", c.counterexample or {})
        v.details["coro_lh"] = "pass"
    return v


def _antipode_sigma(ctx):
    from .laurent import antipode_on_sigma
    return antipode_on_sigma(ctx.gc_trivial, ctx.maps)


def _coprod_sigma(ctx):
    from .laurent import coproduct_of_sigma
    return coproduct_of_sigma(ctx.gc_trivial, ctx.maps)


def _coideal(ctx):
    from .base_algebra import coideal_check
    return coideal_check(ctx.gc_trivial, ctx.maps)


def _pq_coinvariance(ctx):
    from .pq import check_all_coinvariance
    return check_all_coinvariance(ctx.h)


def _mu_convolution(ctx):
    from .pq import mu_convolution_check
    return mu_convolution_check(ctx.ring)


def _pq_dual_path(ctx):
    from .pq import check_pq_dual_path
    return check_pq_dual_path(ctx.ring)


def _prop_nice(ctx):
    from .pq import verify_prop_nice
    return verify_prop_nice(ctx.gc_trivial, ctx.pq)


def _pq_in_B(ctx):
    from .base_algebra import verify_pq_in_B
    return verify_pq_in_B(ctx.gc_trivial, ctx.pq)


def _antipode_pq(ctx):
    from .pq import antipode_pq_cocommutative
    return antipode_pq_cocommutative(ctx.ring, ctx.maps, ctx.pq)


def _quotient(ctx):
    from .base_algebra import quotient_by_Bplus
    rep = quotient_by_Bplus(ctx.gc_trivial, budget=ctx.budget, cache=ctx.cache)
    data = rep.to_json()
    if rep.ok:
        return V.passed("quotient-hab", **data)
    return V.failed("quotient-hab", data)


def _module_rewrite(ctx):
    from .base_algebra import check_module_rewriting
    return check_module_rewriting(ctx.gc_trivial)


def _group_determinant(ctx):
    from .pq import group_determinant
    cayley = cayley_of(ctx.h)
    if cayley is None:
        return V.skipped("group-determinant", f"{ctx.h.name} is not a group algebra on its basis")
    d = group_determinant(cayley)
    return V.passed("group-determinant", determinant=d.text(), terms=len(d.poly))


def cayley_of(h: HopfAlgebra) -> CayleyTable | None:
    """Cayley table when the basis consists of grouplikes closed under product."""
    if len(h.grouplike_basis()) != h.n:
        return None
    table = []
    for a in range(h.n):
        row = []
        for b in range(h.n):
            v = h.mul(h.e(a), h.e(b))
            if len(v) != 1 or next(iter(v.values())) != 1:
                return None
            row.append(next(iter(v)))
        table.append(row)
    return CayleyTable(list(h.basis), table)


def _membership(ctx, expr: str):
    from .base_algebra import SubalgebraSpec, grading_oracle, membership
    ring = ctx.ring
    try:
        poly = P.parse(expr, ring.names)
    except P.ParseError as exc:
        raise InputError(f"membership expression: {exc}", f"membership:{expr}") from None
    elem = ring.elem(poly)
    cert = membership(SubalgebraSpec.from_cocycle(ctx.gc), elem, budget=ctx.budget, cache=ctx.cache)
    data = cert.to_json()
    grading = grading_oracle(ring, elem)
    if grading is None:
        data["grading"] = "not applicable: basis is not a group"
    else:
        data["grading"] = grading
        if grading["prediction"] == "non-member" and cert.verdict == "member":
            return V.failed(f"membership:{expr}", {"element": str(elem), "elimination": "member",
                                                  "grading": grading})
    if cert.verdict == "non-member":
        data["note"] = "non-membership holds in the presented ring k[T,U]/J"
    status = {"member": V.PASS, "non-member": V.PASS, "inconclusive": V.INCONCLUSIVE}[cert.verdict]
    return V.Verdict(f"membership:{expr}", status, details=data)


def _tinv(ctx, label: str):
    from .base_algebra import tinv_experiment
    try:
        cert = tinv_experiment(ctx.gc_trivial, label, budget=ctx.budget, cache=ctx.cache)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc), f"tinv-question:{label}") from None
    data = cert.to_json()
    data["note"] = "experiment only; no general answer is claimed"
    status = V.INCONCLUSIVE if cert.verdict == "inconclusive" else V.PASS
    return V.Verdict(f"tinv-question:{label}", status, details=data)


CHECKS: dict[str, Callable[[Context], V.Verdict]] = {
    "validate": _validate,
    "is-two-cocycle": _is_two_cocycle,
    "lazy": _lazy,
    "hopf-ring-axioms": _ring_axioms,
    "cocycle-identity": _cocycle_identity,
    "specialize": _specialize,
    "specialize-extension": _specialize_extension,
    "ext-associativity": _ext_assoc,
    "reduction": _reduction,
    "antipode-sigma": _antipode_sigma,
    "coprod-sigma": _coprod_sigma,
    "coideal": _coideal,
    "pq-coinvariance": _pq_coinvariance,
    "mu-convolution": _mu_convolution,
    "pq-dual-path": _pq_dual_path,
    "prop-nice": _prop_nice,
    "pq-in-B": _pq_in_B,
    "antipode-pq": _antipode_pq,
    "quotient-hab": _quotient,
    "module-rewrite": _module_rewrite,
    "group-determinant": _group_determinant,
}
PARAMETRIC = {"membership": _membership, "tinv-question": _tinv}
# checks that never build the presented ring
RINGLESS = {"validate", "is-two-cocycle", "lazy", "pq-coinvariance", "group-determinant"}
# "all" runs every check that needs no argument
ALL = [c for c in CHECKS if c not in ("is-two-cocycle", "lazy", "reduction")]


def parse_checks(spec: str | list[str]) -> list[str]:
    items = spec if isinstance(spec, list) else [s for s in _split_checks(spec)]
    out: list[str] = []
    for item in items:
        item = item.strip()
        if not item:
            continue
        if item == "all":
            out.extend(ALL)
            continue
        head, sep, arg = item.partition(":")
        if sep and head in PARAMETRIC:
            if not arg:
                raise InputError(f"check {head!r} needs an argument", "--checks")
            out.append(item)
        elif item in CHECKS:
            out.append(item)
        else:
            known = sorted(CHECKS) + [f"{k}:ARG" for k in PARAMETRIC]
            raise InputError(f"unknown check {item!r}; known: {', '.join(known)}", "--checks")
    if not out:
        raise InputError("no checks selected", "--checks")
    return out


def _split_checks(spec: str) -> list[str]:
    """Split on commas, except inside a ``membership:`` expression's parentheses."""
    parts, depth, cur = [], 0, []
    for ch in spec:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


@contextlib.contextmanager
def _deadline(seconds: float | None):
    # SIGALRM only works on POSIX and in the main thread
    if not seconds or not hasattr(signal, "setitimer") or threading.current_thread() is not threading.main_thread():
        yield
        return

    def _raise(signum, frame):
        raise CheckTimeout()

    old = signal.signal(signal.SIGALRM, _raise)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def run_check(ctx: Context, check: str, timeout: float | None = None) -> tuple[V.Verdict, float]:
    t0 = time.perf_counter()
    try:
        with _deadline(timeout):
            head, sep, arg = check.partition(":")
            if sep and head in PARAMETRIC:
                v = PARAMETRIC[head](ctx, arg)
            else:
                v = CHECKS[check](ctx)
    except CheckTimeout:
        v = V.Verdict(check, V.INCONCLUSIVE, details={"reason": f"timeout after {timeout}s"})
    except BudgetExceeded as exc:
        v = V.Verdict(check, V.INCONCLUSIVE, details={"reason": f"budget exceeded: {exc}"})
    except NotInvertible as exc:
        raise InputError(f"{check}: {exc}") from None
    # the library names some verdicts differently; the report uses the CLI id
    return dataclasses.replace(v, check=check), time.perf_counter() - t0


# ---------------------------------------------------------------------------
# Inputs
# ---------------------------------------------------------------------------

def resolve_algebra(path: str) -> tuple[HopfAlgebra, str]:
    """Load an algebra; returns it with a content hash of its JSON form."""
    if path.startswith("catalog:"):
        name = path.split(":", 1)[1]
        try:
            h = catalog.get(name)
        except KeyError as exc:
            raise InputError(str(exc.args[0]), path) from None
    else:
        h = load_algebra(path)
    return h, _hash(algebra_to_json(h))


def _hash(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()[:16]


def _cache_from(arg: str | None, disabled: bool) -> GroebnerCache | None:
    if disabled:
        return None
    return GroebnerCache(arg) if arg else GroebnerCache()


@dataclass
class Job:
    algebra: str
    checks: list[str]
    cocycle: str | None = None
    lam: str | None = None
    budget: int | None = None
    degree_bound: int | None = None
    timeout: float | None = None
    jobs: int = 1
    strict: bool = False
    out: str | None = None
    cache_dir: str | None = None
    no_cache: bool = False
    timings: bool = False

    def inputs(self) -> tuple[HopfAlgebra, BilinearForm | None, LinearForm | None, dict]:
        h, hh = resolve_algebra(self.algebra)
        info = {"algebra": {"name": h.name, "dim": h.n, "sha256": hh}}
        alpha = lam = None
        if self.cocycle:
            alpha = load_form(self.cocycle, h.n)
            info["cocycle"] = {"sha256": _hash([[P.fmt_coeff(c) for c in r] for r in alpha.rows()])}
        if self.lam:
            lam = load_linear(self.lam, h.n)
            info["lambda"] = {"sha256": _hash([P.fmt_coeff(c) for c in lam.values])}
        return h, alpha, lam, info

    def context(self) -> tuple[Context, dict]:
        h, alpha, lam, info = self.inputs()
        budget = Budget(max_pairs=self.budget, max_degree=self.degree_bound, max_seconds=self.timeout)
        return Context(h, alpha, lam, budget, _cache_from(self.cache_dir, self.no_cache)), info


def _worker(job: Job, check: str) -> tuple[dict, float]:
    ctx, _ = job.context()
    v, dt = run_check(ctx, check, job.timeout)
    return v.to_json(), dt


def run_job(job: Job) -> tuple[dict, int]:
    ctx, info = job.context()
    t0 = time.perf_counter()
    results: list[tuple[dict, float]] = []
    if job.jobs > 1 and len(job.checks) > 1:
        with ProcessPoolExecutor(max_workers=job.jobs) as pool:
            futs = [pool.submit(_worker, job, c) for c in job.checks]
            results = [f.result() for f in futs]
    else:
        for c in job.checks:
            v, dt = run_check(ctx, c, job.timeout)
            results.append((v.to_json(), dt))
    checks = []
    for data, dt in results:
        if job.timings:
            data["seconds"] = round(dt, 3)
        checks.append(data)
    counts = {s: 0 for s in (V.PASS, V.FAIL, V.SKIPPED, V.INCONCLUSIVE)}
    for c in checks:
        counts[c["status"]] += 1
    report = {
        "schema": SCHEMA,
        "inputs": info,
        "budgets": {"pairs": job.budget, "degree_bound": job.degree_bound, "timeout": job.timeout},
        "checks": checks,
        "summary": counts,
    }
    if any(c.partition(":")[0] not in RINGLESS for c in job.checks):
        gb = ctx.ring.gb
        report["groebner"] = {"basis_size": len(gb.polys), "max_degree": gb.stats.max_degree}
    if job.timings:
        report["timings"] = {"total_seconds": round(time.perf_counter() - t0, 3)}
    if counts[V.FAIL]:
        code = EXIT_FAIL
    elif counts[V.INCONCLUSIVE] and job.strict:
        code = EXIT_FAIL
    else:
        code = EXIT_OK
    return report, code


def format_report(report: dict) -> str:
    lines = [f"algebra {report['inputs']['algebra']['name']} (dim {report['inputs']['algebra']['dim']})"]
    for c in report["checks"]:
        extra = ""
        if c.get("counterexample"):
            extra = "  " + json.dumps(c["counterexample"], ensure_ascii=False)
        elif c["status"] in (V.SKIPPED, V.INCONCLUSIVE):
            extra = "  " + str(c.get("details", {}).get("reason", ""))
        elif "verdict" in c.get("details", {}):
            d = c["details"]
            extra = f"  {d['verdict']}" + (f"  witness: {d['witness']}" if "witness" in d else "")
        if "seconds" in c:
            extra += f"  ({c['seconds']}s)"
        lines.append(f"{c['status'].upper():13s}{c['check']}{extra}")
    s = report["summary"]
    lines.append(", ".join(f"{v} {k}" for k, v in s.items()))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_validate(args) -> int:
    try:
        h, _ = resolve_algebra(args.path)
        rep = validate_hopf(h)
    except StructureError as exc:
        raise InputError(str(exc), args.path) from None
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **rep.to_json()}, indent=2, ensure_ascii=False))
    else:
        print(f"algebra {h.name} (dim {h.n})")
        for r in rep.results:
            where = f" at ({', '.join(r.witness)})" if r.witness else ""
            detail = f": {r.detail}" if r.detail else ""
            print(f"{'PASS' if r.ok else 'FAIL':6s}{r.axiom}{'' if r.ok else where + detail}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _job_from_args(args) -> Job:
    if args.job:
        data = load_job(args.job)
        unknown = set(data) - {"algebra", "cocycle", "lambda", "checks", "budget", "degree_bound",
                               "timeout", "jobs", "strict", "out"}
        if unknown:
            raise InputError(f"unknown job fields {sorted(unknown)}", args.job)
        if "algebra" not in data or "checks" not in data:
            raise InputError("job needs 'algebra' and 'checks'", args.job)
        job = Job(algebra=data["algebra"], checks=parse_checks(data["checks"]), cocycle=data.get("cocycle"),
                  lam=data.get("lambda"), budget=data.get("budget"), degree_bound=data.get("degree_bound"),
                  timeout=data.get("timeout"), jobs=data.get("jobs", 1), strict=data.get("strict", False),
                  out=data.get("out"))
    else:
        if not args.algebra or not args.checks:
            raise InputError("verify needs --algebra and --checks (or --job)")
        job = Job(algebra=args.algebra, checks=parse_checks(args.checks), cocycle=args.cocycle, lam=args.lam)
    # command-line flags override the job file
    for name in ("budget", "degree_bound", "timeout", "out"):
        v = getattr(args, name)
        if v is not None:
            setattr(job, name, v)
    if args.jobs is not None:
        job.jobs = args.jobs
    job.strict = job.strict or args.strict
    job.cache_dir, job.no_cache, job.timings = args.cache_dir, args.no_cache, args.timings
    return job


def cmd_verify(args) -> int:
    job = _job_from_args(args)
    report, code = run_job(job)
    text = json.dumps(report, indent=2, ensure_ascii=False, sort_keys=False)
    if job.out:
        Path(job.out).write_text(text + "\n")
    if args.format == "json":
        print(text)
    else:
        print(format_report(report))
    return code


def cmd_cache(args) -> int:
    cache = GroebnerCache(args.cache_dir) if args.cache_dir else GroebnerCache()
    if args.action == "list":
        entries = cache.entries()
        for e in entries:
            print(f"{e['key']}  vars={e['variables']}  basis={e['basis_size']}  "
                  f"maxdeg={e['max_degree']}  bytes={e['bytes']}")
        print(f"{len(entries)} entries in {cache.dir}")
    elif args.action == "clear":
        try:
            n = cache.clear()
        except OSError as exc:
            print(f"error: cannot clear {cache.dir}: {exc}", file=sys.stderr)
            return EXIT_INPUT
        print(f"removed {n} files from {cache.dir}")
    else:
        st = cache.read_stats()
        entries = cache.entries()
        hits, misses = st.get("hits", 0), st.get("misses", 0)
        rate = f"{hits / (hits + misses):.1%}" if hits + misses else "n/a"
        print(f"directory: {cache.dir}")
        print(f"entries: {len(entries)}")
        print(f"hits: {hits}  misses: {misses}  hit rate: {rate}")
        for e in entries:
            print(f"  {e['key']}  basis={e['basis_size']}  maxdeg={e['max_degree']}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    if not args.name:
        for name in sorted(catalog.ALGEBRAS):
            h = catalog.get(name)
            print(f"{name:10s} dim {h.n:2d}  {h.name}")
        return EXIT_OK
    try:
        h = catalog.get(args.name)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    print(json.dumps(algebra_to_json(h), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopfgen", description="Exact checks for generic cocycles of Hopf algebras.")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check the Hopf algebra axioms of a JSON file")
    v.add_argument("path")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(func=cmd_validate)

    r = sub.add_parser("verify", help="run verification checks")
    r.add_argument("--job", help="JSON job file (flags override its fields)")
    r.add_argument("--algebra", help="algebra JSON path or catalog:NAME")
    r.add_argument("--cocycle", help="bilinear form JSON")
    r.add_argument("--lambda", dest="lam", help="linear form JSON")
    r.add_argument("--checks", help="comma-separated check identifiers, or 'all'")
    r.add_argument("--budget", type=int, help="Gröbner pair budget")
    r.add_argument("--degree-bound", type=int, help="Gröbner degree bound")
    r.add_argument("--timeout", type=float, help="wall-clock seconds per check")
    r.add_argument("--jobs", type=int, help="run up to N checks in parallel")
    r.add_argument("--strict", action="store_true", help="inconclusive checks fail the run")
    r.add_argument("--out", help="write the JSON report here")
    r.add_argument("--format", choices=["text", "json"], default="text", help="stdout format")
    r.add_argument("--timings", action="store_true", help="include wall-clock times (breaks byte-identity)")
    r.add_argument("--cache-dir", help=f"Gröbner cache (default $HOPFGEN_CACHE or {default_cache_dir()})")
    r.add_argument("--no-cache", action="store_true")
    r.set_defaults(func=cmd_verify)

    c = sub.add_parser("cache", help="manage the Gröbner cache")
    c.add_argument("action", choices=["list", "clear", "stats"])
    c.add_argument("--cache-dir")
    c.set_defaults(func=cmd_cache)

    k = sub.add_parser("catalog", help="list builtin algebras or print one as JSON")
    k.add_argument("name", nargs="?")
    k.set_defaults(func=cmd_catalog)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
