"""JSON documents (schema ``vpa-1``) for vector product and composition algebras.

Scalars are always JSON strings in the canonical text form of their field so
that large rationals survive untouched.  :func:`emit_algebra` is canonical:
fixed key order, compact separators and a trailing newline, so documents can
be compared byte for byte.
"""

from __future__ import annotations

import json

from .algebra import VectorProductAlgebra
from .errors import BadScalar, CharTwoRejected, NotPrime, NotSymmetric, SchemaError
from .fields import QQ, FieldSpec, GF
from .forms import GramForm
from .hurwitz import UnitalCompositionAlgebra

SCHEMA = "vpa-1"


def field_to_doc(F: FieldSpec) -> dict:
    return {"kind": "Q"} if F.kind == "Q" else {"kind": "Fp", "p": F.p}


def algebra_to_doc(algebra) -> dict:
    doc = {
        "schema": SCHEMA,
        "field": field_to_doc(algebra.field),
        "dim": algebra.dim,
        "gram": [[str(x) for x in row] for row in algebra.gram.entries],
        "structure": [[[str(x) for x in cell] for cell in row] for row in algebra.structure],
    }
    if isinstance(algebra, UnitalCompositionAlgebra):
        doc["identity_index"] = algebra.identity_index
    return doc


def emit_algebra(algebra) -> str:
    return json.dumps(algebra_to_doc(algebra), separators=(",", ":"), ensure_ascii=False) + "\n"


def _field_from_doc(node) -> FieldSpec:
    if not isinstance(node, dict) or "kind" not in node:
        raise SchemaError("expected an object with a 'kind' key", "$.field")
    kind = node["kind"]
    if kind == "Q":
        if set(node) != {"kind"}:
            raise SchemaError("the rational field takes no further keys", "$.field")
        return QQ
    if kind == "Fp":
        p = node.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise SchemaError("'p' must be an integer", "$.field.p")
        if p == 2:
            raise CharTwoRejected("characteristic 2 is not supported ($.field.p)")
        try:
            return GF(p)
        except NotPrime as exc:
            raise SchemaError(str(exc), "$.field.p") from None
    raise SchemaError(f"unknown field kind {kind!r}", "$.field.kind")


def _scalar(F: FieldSpec, node, path: str):
    if not isinstance(node, str):
        raise SchemaError("scalars must be JSON strings", path)
    try:
        x = F.parse(node)
    except BadScalar as exc:
        raise BadScalar(f"{path}: {exc}") from None
    return x


def _array(node, length: int, path: str) -> list:
    if not isinstance(node, list):
        raise SchemaError("expected an array", path)
    if len(node) != length:
        raise SchemaError(f"expected {length} entries, found {len(node)}", path)
    return node


def doc_to_algebra(doc):
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise SchemaError(f"expected schema {SCHEMA!r}", "$.schema")
    allowed = {"schema", "field", "dim", "gram", "structure", "identity_index"}
    extra = set(doc) - allowed
    if extra:
        raise SchemaError(f"unexpected keys {sorted(extra)}")
    F = _field_from_doc(doc.get("field"))
    n = doc.get("dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise SchemaError("'dim' must be a non-negative integer", "$.dim")
    gram = [
        [_scalar(F, x, f"$.gram[{i}][{j}]") for j, x in enumerate(_array(row, n, f"$.gram[{i}]"))]
        for i, row in enumerate(_array(doc.get("gram"), n, "$.gram"))
    ]
    for i in range(n):
        for j in range(i + 1, n):
            if gram[i][j] != gram[j][i]:
                raise SchemaError(f"gram is not symmetric: {gram[i][j]} != {gram[j][i]}", f"$.gram[{i}][{j}]")
    structure = []
    for i, row in enumerate(_array(doc.get("structure"), n, "$.structure")):
        out_row = []
        for j, cell in enumerate(_array(row, n, f"$.structure[{i}]")):
            out_row.append(
                tuple(_scalar(F, x, f"$.structure[{i}][{j}][{k}]") for k, x in enumerate(_array(cell, n, f"$.structure[{i}][{j}]")))
            )
        structure.append(tuple(out_row))
    try:
        G = GramForm(F, tuple(tuple(r) for r in gram))
    except NotSymmetric as exc:
        raise SchemaError(str(exc), "$.gram") from None

    if "identity_index" in doc:
        idx = doc["identity_index"]
        if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < max(n, 1):
            raise SchemaError("'identity_index' must index a basis vector", "$.identity_index")
        try:
            return UnitalCompositionAlgebra(F, G, tuple(structure), idx)
        except ValueError as exc:
            raise SchemaError(str(exc), "$") from None

    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if structure[i][j][k] != -structure[j][i][k]:
                    raise SchemaError(
                        f"structure is not anti-symmetric: b{i}*b{j} and b{j}*b{i} disagree in coordinate {k}",
                        f"$.structure[{i}][{j}][{k}]",
                    )
    return VectorProductAlgebra(F, G, tuple(structure))


def parse_algebra(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    return doc_to_algebra(doc)


def load_algebra(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())
