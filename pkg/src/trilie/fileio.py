"""JSON files for algebras, maps and forms. Coefficients are exact strings."""

from __future__ import annotations

import json
from itertools import combinations

import numpy as np

from . import exactnum as xn
from .prelie import ThreePreLie
from .symplectic import SKEW, SYMMETRIC, BilForm
from .tensor import skew_expand
from .threelie import ThreeLieAlgebra

THREELIE = "threelie"
PRELIE = "prelie"


class ParseError(ValueError):
    """Malformed input; the message starts with the location of the problem."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None
    except OSError as exc:
        raise ParseError(str(path), exc.strerror or str(exc)) from None


def _require(obj, key, where, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(where, f"missing field {key!r}")
    value = obj[key]
    bad_type = kind is not None and not isinstance(value, kind)
    if bad_type or (kind is int and isinstance(value, bool)):
        raise ParseError(f"{where}.{key}", f"expected {getattr(kind, '__name__', kind)}")
    return value


def _scalar(text, where, field):
    if not isinstance(text, str):
        raise ParseError(where, f"coefficient must be a string, got {text!r}")
    try:
        v = xn.parse_scalar(text)
    except ValueError:
        raise ParseError(where, f"bad coefficient {text!r}") from None
    if field == xn.RATIONAL and not xn.is_real(v):
        raise ParseError(where, f"imaginary coefficient {text!r} in a rational file")
    return v


def _index(value, n, where):
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < n:
        raise ParseError(where, f"index {value!r} out of range for dimension {n}")
    return value


def parse_algebra(data, where: str = "<algebra>"):
    field = _require(data, "scalar_field", where, str)
    if field not in xn.FIELDS:
        raise ParseError(f"{where}.scalar_field", f"unknown field {field!r}")
    n = _require(data, "dimension", where, int)
    if n < 0:
        raise ParseError(f"{where}.dimension", "must be nonnegative")
    basis = _require(data, "basis", where, list)
    if len(basis) != n or not all(isinstance(b, str) for b in basis):
        raise ParseError(f"{where}.basis", f"expected {n} names")
    if len(set(basis)) != n:
        raise ParseError(f"{where}.basis", "names must be distinct")
    kind = _require(data, "kind", where, str)
    if kind not in (THREELIE, PRELIE):
        raise ParseError(f"{where}.kind", f"unknown kind {kind!r}")
    products = _require(data, "products", where, list)
    t = xn.zeros(n, n, n, n)
    seen = set()
    for p, rec in enumerate(products):
        at = f"{where}.products[{p}]"
        args = _require(rec, "args", at, list)
        if len(args) != 3:
            raise ParseError(f"{at}.args", "expected three indices")
        i, j, k = (_index(a, n, f"{at}.args") for a in args)
        if kind == THREELIE and not i < j < k:
            raise ParseError(f"{at}.args", "3-Lie brackets must use increasing indices i < j < k")
        if kind == PRELIE and not i < j:
            raise ParseError(f"{at}.args", "pre-Lie products must have i < j")
        if (i, j, k) in seen:
            raise ParseError(f"{at}.args", f"duplicate entry {[i, j, k]}")
        seen.add((i, j, k))
        vec = xn.zeros(n)
        for q, term in enumerate(_require(rec, "value", at, list)):
            tw = f"{at}.value[{q}]"
            if not isinstance(term, list) or len(term) != 2:
                raise ParseError(tw, "expected [basis_index, coefficient]")
            vec[_index(term[0], n, tw)] += _scalar(term[1], tw, field)
        t[i, j, k] = vec
    basis = tuple(basis)
    try:
        if kind == THREELIE:
            return ThreeLieAlgebra(skew_expand(t), basis, field)
        t = t - np.swapaxes(t, 0, 1)
        return ThreePreLie(t, basis, field)
    except ValueError as exc:
        raise ParseError(where, str(exc)) from None


def load_algebra(path):
    return parse_algebra(_load_json(path), str(path))


def algebra_to_dict(obj) -> dict:
    if isinstance(obj, ThreeLieAlgebra):
        kind, t = THREELIE, obj.c
        keys = [(i, j, k) for i, j, k in combinations(range(obj.dim), 3)]
    elif isinstance(obj, ThreePreLie):
        kind, t = PRELIE, obj.d
        keys = [(i, j, k) for i, j in combinations(range(obj.dim), 2) for k in range(obj.dim)]
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    products = []
    for key in keys:
        vec = t[key]
        terms = [[int(l), xn.format_scalar(v)] for l, v in enumerate(vec) if v != 0]
        if terms:
            products.append({"args": list(key), "value": terms})
    return {
        "scalar_field": obj.field,
        "dimension": obj.dim,
        "basis": list(obj.basis),
        "kind": kind,
        "products": products,
    }


def parse_matrix(data, where: str = "<matrix>", field: str | None = None):
    rows = _require(data, "matrix", where, list)
    n = len(rows)
    out = xn.zeros(n, n)
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"{where}.matrix[{r}]", f"expected a row of {n} entries (matrix must be square)")
        for s, entry in enumerate(row):
            out[r, s] = _scalar(entry, f"{where}.matrix[{r}][{s}]", field or xn.GAUSSIAN)
    return xn.normalize(out)


def load_map(path):
    return parse_matrix(_load_json(path), str(path))


def parse_form(data, where: str = "<form>") -> BilForm:
    M = parse_matrix(data, where)
    kind = _require(data, "declared_symmetry", where, str)
    if kind not in (SKEW, SYMMETRIC):
        raise ParseError(f"{where}.declared_symmetry", f"expected 'skew' or 'symmetric', got {kind!r}")
    try:
        return BilForm(M, kind)
    except ValueError as exc:
        raise ParseError(where, str(exc)) from None


def load_form(path) -> BilForm:
    return parse_form(_load_json(path), str(path))


def matrix_to_dict(M) -> dict:
    M = xn.matrix(M)
    return {"matrix": [[xn.format_scalar(v) for v in row] for row in M]}


def form_to_dict(form: BilForm) -> dict:
    d = matrix_to_dict(form.matrix)
    d["declared_symmetry"] = form.kind
    return d


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
