"""Ring description files: JSON documents with a "kind" discriminator.

Five kinds are accepted (zn, boolean, product, algebra, table); the exact
field names are fixed in docs/ring_format.md. Parsing is strict about the
kind and about index ranges; structural axioms are then enforced by ring
construction itself, so a table document that parses but breaks an axiom
still fails, with the axiom named.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .rings import FiniteRing, make_algebra, make_boolean, make_product, make_table_ring, make_zn

__all__ = ["RING_KINDS", "RingFileError", "document_for", "load_ring_file", "ring_from_document"]

RING_KINDS = ("zn", "boolean", "product", "algebra", "table")

_TERM = re.compile(r"^(\d+)?([A-Za-z_][A-Za-z_0-9]*)?$")


class RingFileError(ValueError):
    """A ring description document is malformed."""


def _require(doc: dict, field: str, kind: str):
    if field not in doc:
        raise RingFileError(f"{kind} document is missing field {field!r}")
    return doc[field]


def _int_field(doc: dict, field: str, kind: str) -> int:
    value = _require(doc, field, kind)
    if not isinstance(value, int) or isinstance(value, bool):
        raise RingFileError(f"{kind} field {field!r} must be an integer")
    return value


def _parse_combo(text: str, basis_names, p: int, where: str) -> list[int]:
    """Parse a Z_p combination like "1+x", "2x" or "0" over the basis."""
    vec = [0] * len(basis_names)
    body = text.replace(" ", "")
    if body == "0":
        return vec
    index = {name: i for i, name in enumerate(basis_names)}
    for term in body.split("+"):
        m = _TERM.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise RingFileError(f"bad combination term {term!r} in {where}")
        coeff = int(m.group(1)) if m.group(1) else 1
        name = m.group(2)
        if name is None:
            pos = 0  # a bare number is a multiple of the unity basis element
        elif name in index:
            pos = index[name]
        else:
            raise RingFileError(f"unknown basis name {name!r} in {where}")
        vec[pos] = (vec[pos] + coeff) % p
    return vec


def _algebra_from_document(doc: dict) -> FiniteRing:
    p = _int_field(doc, "p", "algebra")
    basis_names = _require(doc, "basis_names", "algebra")
    if not isinstance(basis_names, list) or len(basis_names) < 1:
        raise RingFileError("algebra basis_names must be a nonempty list")
    basis_names = [str(s) for s in basis_names]
    dim = len(basis_names)
    mul_map = _require(doc, "mul", "algebra")
    if not isinstance(mul_map, dict):
        raise RingFileError("algebra mul must be a map of \"a*b\" keys")

    parsed: dict[tuple[int, int], list[int]] = {}
    index = {name: i for i, name in enumerate(basis_names)}
    for key, combo in mul_map.items():
        parts = key.replace(" ", "").split("*")
        if len(parts) != 2 or parts[0] not in index or parts[1] not in index:
            raise RingFileError(f"bad mul key {key!r}; expected \"<basis>*<basis>\"")
        i, j = sorted((index[parts[0]], index[parts[1]]))
        if i == 0:
            raise RingFileError(f"mul key {key!r} involves the unity basis element; those products are implied")
        vec = _parse_combo(str(combo), basis_names, p, f"mul[{key!r}]")
        if (i, j) in parsed and parsed[(i, j)] != vec:
            raise RingFileError(f"conflicting products for basis pair in keys including {key!r}")
        parsed[(i, j)] = vec

    sc = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for j in range(dim):
        sc[0][j][j] = 1
        sc[j][0][j] = 1
    for i in range(1, dim):
        for j in range(i, dim):
            if (i, j) not in parsed:
                raise RingFileError(
                    f"algebra mul map is missing the product {basis_names[i]}*{basis_names[j]}"
                )
            sc[i][j] = parsed[(i, j)]
            sc[j][i] = parsed[(i, j)]
    return make_algebra(p, dim, sc, basis_names=basis_names, label=doc.get("label"))


def _table_from_document(doc: dict) -> FiniteRing:
    order = _int_field(doc, "order", "table")
    if order < 2:
        raise RingFileError("table order must be >= 2 (the zero ring is excluded)")
    zero = _int_field(doc, "zero", "table")
    one = _int_field(doc, "one", "table")
    tables = {}
    for field in ("add", "mul"):
        rows = _require(doc, field, "table")
        if not isinstance(rows, list) or len(rows) != order or any(
            not isinstance(row, list) or len(row) != order for row in rows
        ):
            raise RingFileError(f"table {field} must be an {order}x{order} matrix")
        for a, row in enumerate(rows):
            for b, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < order:
                    raise RingFileError(f"table {field}[{a}][{b}] = {v!r} out of range 0..{order - 1}")
        tables[field] = rows
    if not 0 <= zero < order or not 0 <= one < order:
        raise RingFileError("table zero/one index out of range")
    return make_table_ring(
        order, tables["add"], tables["mul"], zero, one,
        label=doc.get("label"), element_names=doc.get("element_names"),
    )


def ring_from_document(doc: dict) -> FiniteRing:
    """Build a validated ring from a parsed document."""
    if not isinstance(doc, dict):
        raise RingFileError("ring document must be a JSON object")
    kind = doc.get("kind")
    if kind == "zn":
        n = _int_field(doc, "n", "zn")
        if n < 2:
            raise RingFileError("zn requires n >= 2 (the zero ring is excluded)")
        return make_zn(n, label=doc.get("label"))
    if kind == "boolean":
        atoms = _int_field(doc, "atoms", "boolean")
        if atoms < 1:
            raise RingFileError("boolean requires atoms >= 1")
        return make_boolean(atoms, label=doc.get("label"))
    if kind == "product":
        factors = _require(doc, "factors", "product")
        if not isinstance(factors, list) or not factors:
            raise RingFileError("product requires a nonempty factors list")
        return make_product([ring_from_document(f) for f in factors], label=doc.get("label"))
    if kind == "algebra":
        return _algebra_from_document(doc)
    if kind == "table":
        return _table_from_document(doc)
    raise RingFileError(f"unknown ring kind {kind!r}; expected one of {', '.join(RING_KINDS)}")


def load_ring_file(path) -> FiniteRing:
    """Read one JSON ring document from disk."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RingFileError(f"{path}: not valid JSON ({exc})") from exc
    return ring_from_document(doc)


def document_for(ring: FiniteRing) -> dict:
    """A document that reconstructs the ring; falls back to raw tables."""
    if ring.source is not None:
        doc = dict(ring.source)
    else:
        doc = {
            "kind": "table",
            "order": ring.order,
            "zero": ring.zero,
            "one": ring.one,
            "add": ring.add_table.tolist(),
            "mul": ring.mul_table.tolist(),
            "element_names": list(ring.element_names),
        }
    doc["label"] = ring.label
    return doc
