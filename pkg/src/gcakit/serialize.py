"""JSON documents for matrices, multiplier tables, and flux triples.

Documents are emitted byte-deterministically: fixed key order, floats
rendered with %.17g (enough digits to round-trip a double), no dependence
on hash order.  Matrix documents come in two kinds:

    {"kind": "monomial", "dim": d, "target": [...],
     "phase": [{"num": a, "den": b}, ...]}

    {"kind": "dense", "dim_rows": r, "dim_cols": c,
     "entries": [{"re": x, "im": y}, ...]}        # row-major

Multiplier tables and flux triples:

    {"orders": [N1, ...],
     "table": [{"g": [...], "h": [...], "num": a, "den": b}, ...]}

    {"f12": [p, q], "f13": [p, q], "f23": [p, q]}

Parsers raise ValueError on malformed documents.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .matrices import MonomialMatrix
from .phase import Phase
from .phasespace import MagneticLattice
from .repbuilder import FactorSet

__all__ = [
    "emit_json",
    "matrix_to_doc",
    "doc_to_matrix",
    "factor_set_to_doc",
    "doc_to_factor_set",
    "flux_to_doc",
    "doc_to_flux",
]


def _emit(obj, out: list, indent: str, level: int, pretty: bool) -> None:
    if obj is None or obj is True or obj is False:
        out.append("null" if obj is None else "true" if obj else "false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj, ensure_ascii=True))
    elif isinstance(obj, (int, np.integer)) and not isinstance(obj, bool):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            raise ValueError(f"cannot serialize non-finite value {x}")
        text = format(x, ".17g")
        out.append(text)
    elif isinstance(obj, dict):
        _emit_items(
            obj.items(), out, indent, level, pretty, "{", "}", key=True
        )
    elif isinstance(obj, (list, tuple)):
        _emit_items(obj, out, indent, level, pretty, "[", "]", key=False)
    else:
        raise ValueError(f"cannot serialize object of type {type(obj).__name__}")


def _emit_items(items, out, indent, level, pretty, opener, closer, key) -> None:
    items = list(items)
    if not items:
        out.append(opener + closer)
        return
    out.append(opener)
    pad = indent * (level + 1)
    for i, item in enumerate(items):
        if pretty:
            out.append("\n" + pad)
        if key:
            k, v = item
            if not isinstance(k, str):
                raise ValueError(f"object keys must be strings, got {k!r}")
            out.append(json.dumps(k, ensure_ascii=True))
            out.append(": " if pretty else ":")
            _emit(v, out, indent, level + 1, pretty)
        else:
            _emit(item, out, indent, level + 1, pretty)
        if i + 1 < len(items):
            out.append(",")
    if pretty:
        out.append("\n" + indent * level)
    out.append(closer)


def emit_json(obj, pretty: bool = False) -> str:
    """Serialize with stable key order and %.17g floats; trailing newline."""
    out: list[str] = []
    _emit(obj, out, "  ", 0, pretty)
    out.append("\n")
    return "".join(out)


def _phase_doc(p: Phase) -> dict:
    return {"num": p.num, "den": p.den}


def matrix_to_doc(m) -> dict:
    if isinstance(m, MonomialMatrix):
        return {
            "kind": "monomial",
            "dim": m.dim,
            "target": list(m.target),
            "phase": [_phase_doc(p) for p in m.phase],
        }
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise ValueError(f"need a 2d matrix, got shape {arr.shape}")
    return {
        "kind": "dense",
        "dim_rows": arr.shape[0],
        "dim_cols": arr.shape[1],
        "entries": [
            {"re": float(z.real), "im": float(z.imag)} for z in arr.ravel()
        ],
    }


def _need(doc: dict, field: str):
    if not isinstance(doc, dict) or field not in doc:
        raise ValueError(f"document is missing field {field!r}")
    return doc[field]


def _as_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError(f"{what} must be an integer, got {x!r}")
    return x


def _parse_phase(d, what: str) -> Phase:
    num = _as_int(_need(d, "num"), f"{what}.num")
    den = _as_int(_need(d, "den"), f"{what}.den")
    if den == 0:
        raise ValueError(f"{what}.den must be nonzero")
    return Phase(num, den)


def doc_to_matrix(doc: dict):
    """Inverse of matrix_to_doc; ValueError on anything malformed."""
    kind = _need(doc, "kind")
    if kind == "monomial":
        dim = _as_int(_need(doc, "dim"), "dim")
        if dim < 1:
            raise ValueError(f"dim must be >= 1, got {dim}")
        target = _need(doc, "target")
        phase = _need(doc, "phase")
        if not isinstance(target, list) or not isinstance(phase, list):
            raise ValueError("target and phase must be lists")
        tgt = tuple(_as_int(x, "target entry") for x in target)
        ph = tuple(_parse_phase(p, "phase entry") for p in phase)
        try:
            return MonomialMatrix(dim, tgt, ph)
        except Exception as exc:
            raise ValueError(f"bad monomial document: {exc}") from exc
    if kind == "dense":
        rows = _as_int(_need(doc, "dim_rows"), "dim_rows")
        cols = _as_int(_need(doc, "dim_cols"), "dim_cols")
        entries = _need(doc, "entries")
        if rows < 1 or cols < 1:
            raise ValueError("dim_rows and dim_cols must be >= 1")
        if not isinstance(entries, list) or len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries")
        flat = []
        for e in entries:
            re = _need(e, "re")
            im = _need(e, "im")
            if isinstance(re, bool) or isinstance(im, bool):
                raise ValueError("entries must be numbers")
            if not isinstance(re, (int, float)) or not isinstance(im, (int, float)):
                raise ValueError("entries must be numbers")
            flat.append(complex(re, im))
        return np.array(flat, dtype=complex).reshape(rows, cols)
    raise ValueError(f"unknown matrix kind {kind!r}")


def factor_set_to_doc(fs: FactorSet) -> dict:
    rows = []
    for g in fs.elements():
        for h in fs.elements():
            p = fs.phi(g, h)
            rows.append({"g": list(g), "h": list(h), "num": p.num, "den": p.den})
    return {"orders": list(fs.orders), "table": rows}


def doc_to_factor_set(doc: dict) -> FactorSet:
    orders = _need(doc, "orders")
    if not isinstance(orders, list) or not orders:
        raise ValueError("orders must be a nonempty list")
    orders = tuple(_as_int(x, "order") for x in orders)
    rows = _need(doc, "table")
    if not isinstance(rows, list):
        raise ValueError("table must be a list")
    table = {}
    for row in rows:
        g = _need(row, "g")
        h = _need(row, "h")
        if not isinstance(g, list) or not isinstance(h, list):
            raise ValueError("g and h must be lists of integers")
        gt = tuple(_as_int(x, "g entry") for x in g)
        ht = tuple(_as_int(x, "h entry") for x in h)
        if len(gt) != len(orders) or len(ht) != len(orders):
            raise ValueError("g and h must match the number of orders")
        table[(gt, ht)] = _parse_phase(row, "table entry")
    try:
        return FactorSet(orders, table)
    except Exception as exc:
        raise ValueError(f"bad factor set: {exc}") from exc


def flux_to_doc(lat: MagneticLattice) -> dict:
    return {
        name: [getattr(lat, name).numerator, getattr(lat, name).denominator]
        for name in ("f12", "f13", "f23")
    }


def doc_to_flux(doc: dict) -> MagneticLattice:
    vals = []
    for name in ("f12", "f13", "f23"):
        pair = _need(doc, name)
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError(f"{name} must be [p, q]")
        p = _as_int(pair[0], f"{name} numerator")
        q = _as_int(pair[1], f"{name} denominator")
        if q == 0:
            raise ValueError(f"{name} denominator must be nonzero")
        vals.append((p, q))
    return MagneticLattice(*vals)
