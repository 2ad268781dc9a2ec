"""JSON formats for algebras, bilinear and linear forms, and job specs.

Rationals are always strings (``"3"``, ``"-1/2"``).  An algebra file looks like::

    {"name": "H4", "dim": 4, "basis": ["1", "g", "x", "gx"],
     "mult": [[["1","0","0","0"], ...], ...],    # mult[i][j] = x_i x_j (dense)
     "unit": ["1","0","0","0"],
     "comult": [[[0, 0, "1"]], ...],             # Δ(x_i) as [j, k, c] triplets
     "counit": ["1","1","0","0"],
     "antipode": [["1","0","0","0"], ...]}       # antipode[i] = S(x_i) (dense)
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path
from typing import Any

from .cocycles import BilinearForm, LinearForm
from .hopf import HopfAlgebra, StructureError, dense
from .poly import fmt_coeff


class InputError(ValueError):
    """Malformed input; ``location`` names the file and JSON path."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


def rat(x: Fraction | int) -> str:
    return fmt_coeff(Fraction(x))


def parse_rat(x: Any, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise InputError(f"expected a rational string, got {x!r}", where)
    try:
        return Fraction(x.strip()) if isinstance(x, str) else Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational: {x!r}", where) from None


def _load(path: str | os.PathLike) -> Any:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read: {exc.strerror}", str(p)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}", f"{p}:{exc.lineno}:{exc.colno}") from None


def _list(x: Any, n: int | None, where: str) -> list:
    if not isinstance(x, list):
        raise InputError(f"expected a list, got {type(x).__name__}", where)
    if n is not None and len(x) != n:
        raise InputError(f"expected {n} entries, got {len(x)}", where)
    return x


# ---------------------------------------------------------------------------
# Algebras
# ---------------------------------------------------------------------------

def algebra_to_json(h: HopfAlgebra) -> dict:
    n = h.n
    return {
        "name": h.name,
        "dim": n,
        "basis": list(h.basis),
        "mult": [[[rat(c) for c in dense(h.mult.get((i, j), {}), n)] for j in range(n)] for i in range(n)],
        "unit": [rat(c) for c in dense(h.unit, n)],
        "comult": [[[j, k, rat(c)] for (j, k), c in sorted(t.items())] for t in h.comult],
        "counit": [rat(c) for c in h.counit],
        "antipode": [[rat(c) for c in dense(v, n)] for v in h.antipode],
    }


def algebra_from_json(data: Any, source: str = "<algebra>") -> HopfAlgebra:
    if not isinstance(data, dict):
        raise InputError("top level must be an object", source)
    for key in ("dim", "basis", "mult", "unit", "comult", "counit", "antipode"):
        if key not in data:
            raise InputError(f"missing field {key!r}", source)
    n = data["dim"]
    if not isinstance(n, int) or n < 1:
        raise InputError("dim must be a positive integer", f"{source}:dim")
    basis = _list(data["basis"], n, f"{source}:basis")
    if not all(isinstance(b, str) for b in basis) or len(set(basis)) != n:
        raise InputError("basis labels must be distinct strings", f"{source}:basis")
    mult = []
    for i, row in enumerate(_list(data["mult"], n, f"{source}:mult")):
        out_row = []
        for j, v in enumerate(_list(row, n, f"{source}:mult[{i}]")):
            where = f"{source}:mult[{i}][{j}]"
            out_row.append([parse_rat(c, f"{where}[{k}]") for k, c in enumerate(_list(v, n, where))])
        mult.append(out_row)
    unit = [parse_rat(c, f"{source}:unit[{k}]") for k, c in enumerate(_list(data["unit"], n, f"{source}:unit"))]
    counit = [parse_rat(c, f"{source}:counit[{k}]")
              for k, c in enumerate(_list(data["counit"], n, f"{source}:counit"))]
    comult = []
    for i, trips in enumerate(_list(data["comult"], n, f"{source}:comult")):
        rows = []
        for t, trip in enumerate(_list(trips, None, f"{source}:comult[{i}]")):
            where = f"{source}:comult[{i}][{t}]"
            trip = _list(trip, 3, where)
            j, k = trip[0], trip[1]
            if not (isinstance(j, int) and isinstance(k, int) and 0 <= j < n and 0 <= k < n):
                raise InputError(f"indices must be integers in [0, {n})", where)
            rows.append([j, k, parse_rat(trip[2], f"{where}[2]")])
        comult.append(rows)
    antipode = []
    for i, row in enumerate(_list(data["antipode"], n, f"{source}:antipode")):
        where = f"{source}:antipode[{i}]"
        antipode.append([parse_rat(c, f"{where}[{k}]") for k, c in enumerate(_list(row, n, where))])
    name = data.get("name", Path(source).stem if source else "H")
    try:
        return HopfAlgebra.from_dense(name, basis, mult, unit, comult, counit, antipode,
                                      notes=data.get("notes", ""))
    except StructureError as exc:
        raise InputError(str(exc), source) from None


def load_algebra(path: str | os.PathLike) -> HopfAlgebra:
    return algebra_from_json(_load(path), str(path))


def save_json(obj: Any, path: str | os.PathLike) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


# ---------------------------------------------------------------------------
# Forms
# ---------------------------------------------------------------------------

def form_to_json(a: BilinearForm) -> dict:
    return {"form": [[rat(c) for c in row] for row in a.rows()]}


def form_from_json(data: Any, n: int, source: str = "<cocycle>") -> BilinearForm:
    """Accepts ``{"form": [[...]]}`` or a bare ``n×n`` matrix."""
    rows = data.get("form") if isinstance(data, dict) else data
    if rows is None:
        raise InputError("missing field 'form'", source)
    rows = _list(rows, n, f"{source}:form")
    return BilinearForm.of([
        [parse_rat(c, f"{source}:form[{i}][{j}]") for j, c in enumerate(_list(r, n, f"{source}:form[{i}]"))]
        for i, r in enumerate(rows)
    ])


def load_form(path: str | os.PathLike, n: int) -> BilinearForm:
    return form_from_json(_load(path), n, str(path))


def linear_to_json(lam: LinearForm) -> dict:
    return {"values": [rat(c) for c in lam.values]}


def linear_from_json(data: Any, n: int, source: str = "<lambda>") -> LinearForm:
    """Accepts ``{"values": [...]}`` or a bare list."""
    vals = data.get("values") if isinstance(data, dict) else data
    if vals is None:
        raise InputError("missing field 'values'", source)
    vals = _list(vals, n, f"{source}:values")
    return LinearForm.of([parse_rat(c, f"{source}:values[{i}]") for i, c in enumerate(vals)])


def load_linear(path: str | os.PathLike, n: int) -> LinearForm:
    return linear_from_json(_load(path), n, str(path))


def load_job(path: str | os.PathLike) -> dict:
    """A job file mirrors the ``verify`` flags; relative paths resolve against
    the job file's directory."""
    data = _load(path)
    if not isinstance(data, dict):
        raise InputError("job must be an object", str(path))
    base = Path(path).parent
    out = dict(data)
    for key in ("algebra", "cocycle", "lambda", "out"):
        v = out.get(key)
        if isinstance(v, str) and not v.startswith("catalog:") and not Path(v).is_absolute():
            out[key] = str(base / v)
    return out
