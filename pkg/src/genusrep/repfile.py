"""JSON file formats: representation files (schema v1) and graph files.

A representation file stores the parameters, the diagonal of X, the full
hermitian Y, the kind tag, and branch metadata. Z is never stored; it is
recomputed as [X, Y]/(i*hbar) on load, keeping a single source of truth.
Floats serialize through ``repr``, which round-trips bit exactly.
"""

from __future__ import annotations

import json
from typing import Any, TextIO

import numpy as np

from .errors import SchemaError
from .graphs import MatrixGraph
from .linalg import is_hermitian
from .reps import Kind, RepMeta, Representation
from .surface import SurfaceParams

SCHEMA_VERSION = 1

__all__ = [
    "SCHEMA_VERSION",
    "rep_to_dict",
    "rep_from_dict",
    "save_rep",
    "load_rep",
    "graph_to_dict",
    "graph_from_dict",
    "load_graph",
]


def _complex_entry(z: complex) -> dict[str, float]:
    return {"re": float(z.real), "im": float(z.imag)}


def rep_to_dict(rep: Representation) -> dict[str, Any]:
    p = rep.params
    return {
        "schema_version": SCHEMA_VERSION,
        "params": {"g": p.g, "alpha": p.alpha, "c": p.c, "hbar": p.hbar},
        "dim": rep.dim,
        "kind": rep.kind.value,
        "X_diag": [float(v) for v in rep.x_diag],
        "Y": [[_complex_entry(rep.Y[i, j]) for j in range(rep.dim)] for i in range(rep.dim)],
        "meta": {
            "x_hat": rep.meta.x_hat,
            "thetas": list(rep.meta.thetas),
            "y_sign": rep.meta.y_sign,
        },
    }


def _fail(msg: str) -> None:
    raise SchemaError(f"invalid representation file: {msg}")


def _number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(f"{what} must be a number, got {value!r}")
    return float(value)


def rep_from_dict(data: dict[str, Any]) -> Representation:
    if not isinstance(data, dict):
        _fail("top level must be an object")
    if data.get("schema_version") != SCHEMA_VERSION:
        _fail(f"unsupported schema_version {data.get('schema_version')!r}")
    raw_params = data.get("params")
    if not isinstance(raw_params, dict):
        _fail("missing params object")
    try:
        params = SurfaceParams(
            g=int(raw_params["g"]),
            alpha=_number(raw_params.get("alpha"), "alpha"),
            c=_number(raw_params.get("c"), "c"),
            hbar=_number(raw_params.get("hbar"), "hbar"),
        )
    except KeyError as exc:
        _fail(f"params missing field {exc}")
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"invalid representation file: bad params: {exc}") from exc

    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 1:
        _fail(f"dim must be a positive integer, got {dim!r}")
    x_diag = data.get("X_diag")
    if not isinstance(x_diag, list) or len(x_diag) != dim:
        _fail("X_diag must be a list of length dim")
    xs = [_number(v, "X_diag entry") for v in x_diag]

    raw_y = data.get("Y")
    if not isinstance(raw_y, list) or len(raw_y) != dim:
        _fail("Y must be a dim x dim matrix of {re, im} objects")
    y = np.zeros((dim, dim), dtype=complex)
    for i, row in enumerate(raw_y):
        if not isinstance(row, list) or len(row) != dim:
            _fail("Y must be a dim x dim matrix of {re, im} objects")
        for j, cell in enumerate(row):
            if not isinstance(cell, dict) or set(cell) - {"re", "im"}:
                _fail(f"Y[{i}][{j}] must be an object with re and im")
            y[i, j] = complex(_number(cell.get("re", 0.0), "re"),
                              _number(cell.get("im", 0.0), "im"))
    if not is_hermitian(y):
        _fail("Y is not hermitian")

    kind_value = data.get("kind", Kind.CUSTOM.value)
    try:
        kind = Kind(kind_value)
    except ValueError:
        _fail(f"unknown kind {kind_value!r}")

    raw_meta = data.get("meta", {})
    if not isinstance(raw_meta, dict):
        _fail("meta must be an object")
    x_hat = raw_meta.get("x_hat")
    thetas = raw_meta.get("thetas", [])
    y_sign = raw_meta.get("y_sign")
    if x_hat is not None:
        x_hat = _number(x_hat, "meta.x_hat")
    if not isinstance(thetas, list):
        _fail("meta.thetas must be a list")
    if y_sign is not None and y_sign not in (1, -1):
        _fail("meta.y_sign must be 1, -1, or null")
    meta = RepMeta(x_hat=x_hat,
                   thetas=tuple(_number(t, "theta") for t in thetas),
                   y_sign=y_sign)

    x = np.diag(xs).astype(complex)
    from .linalg import derive_z

    z = derive_z(params, x, y)
    try:
        return Representation(params=params, X=x, Y=y, Z=z, kind=kind, meta=meta)
    except ValueError as exc:
        raise SchemaError(f"invalid representation file: {exc}") from exc


def save_rep(rep: Representation, fp: TextIO) -> None:
    json.dump(rep_to_dict(rep), fp, indent=2)
    fp.write("\n")


def load_rep(fp: TextIO) -> Representation:
    try:
        data = json.load(fp)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return rep_from_dict(data)


# ---------------------------------------------------------------------------
# Graph files: {"n": <count>, "edges": [[i, j], ...]} with 0-based vertices.


def graph_to_dict(g: MatrixGraph) -> dict[str, Any]:
    return {"n": g.n, "edges": sorted([i, j] for i, j in g.edges)}


def graph_from_dict(data: dict[str, Any]) -> MatrixGraph:
    if not isinstance(data, dict):
        raise SchemaError("graph file must be an object with n and edges")
    n = data.get("n")
    if not isinstance(n, int) or n < 1:
        raise SchemaError(f"graph n must be a positive integer, got {n!r}")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise SchemaError("graph edges must be a list of [i, j] pairs")
    pairs = []
    for e in edges:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in e)):
            raise SchemaError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return MatrixGraph(n, pairs)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def load_graph(fp: TextIO) -> MatrixGraph:
    try:
        data = json.load(fp)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return graph_from_dict(data)
