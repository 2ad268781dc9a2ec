import functools
import os
from pathlib import Path

import pytest

from hopfgen import catalog
from hopfgen.cocycles import BilinearForm
from hopfgen.laurent import build_presented_ring, generic_sigma

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
JOBS = ROOT / "jobs"

ALL_FIXTURES = ["kz2", "kz3", "klein4", "s3", "oz2", "os3", "sweedler"]
SMALL_FIXTURES = ["kz2", "kz3", "klein4", "s3", "oz2", "sweedler"]
GROUP_ALGEBRAS = ["kz2", "kz3", "klein4", "s3"]
COCOMMUTATIVE = ["kz2", "kz3", "klein4", "s3", "oz2"]


@functools.lru_cache(maxsize=None)
def algebra(name):
    return catalog.get(name)


@functools.lru_cache(maxsize=None)
def ring(name):
    return build_presented_ring(algebra(name))


@functools.lru_cache(maxsize=None)
def trivial_gc(name):
    return generic_sigma(ring(name), BilinearForm.trivial(algebra(name)))


@functools.lru_cache(maxsize=None)
def klein_sign_gc():
    return generic_sigma(ring("klein4"), BilinearForm.of(catalog.klein4_sign_cocycle()))


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    """Keep every test away from the user's real cache directory."""
    monkeypatch.setenv("HOPFGEN_CACHE", str(tmp_path / "cache"))
    yield


# -- acceptance summary --------------------------------------------------------

_CRITERIA: dict[int, bool] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    n = mark.args[0]
    _CRITERIA[n] = _CRITERIA.get(n, True) and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if _CRITERIA[n] else 'FAIL'}")
