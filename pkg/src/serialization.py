"""Canonical JSON documents for homkit structures.

Every document is a JSON object with ``"schema"`` (the schema version),
``"kind"`` and ``"field"``. Scalars are strings (``"3/4"`` over Q, a
residue such as ``"2"`` over GF(p)); vectors are lists, matrices lists of
rows and rank-3 tensors nested lists indexed ``[i][j][k]``.

Documents are self-contained: an action or cocycle embeds the Hopf algebra
and the algebra it is defined on, a YD module embeds its base bicomodule
algebra. ``dumps`` writes sorted keys with no insignificant whitespace, so
identical structures give byte-identical files.

Kinds: algebra, coalgebra, bialgebra, hopf, action, cocycle,
scalar_cocycle, comodule_coalgebra, comodule_algebra,
left_comodule_algebra, bicomodule_algebra, yd_module. See docs/schema.md.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any

from constants import SCHEMA_VERSION
from errors import HomkitError, InvalidField, SchemaError, ShapeMismatch, UnknownName
from exactlin import FieldSpec, Matrix, Tensor3, Vector
from structures.biproduct import ComoduleCoalgebra
from structures.cleft import ComoduleAlgebra, LeftComoduleAlgebra
from structures.crossed import CocycleMap, WeakAction
from structures.homcore import HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra
from structures.lazy import ScalarCocycle
from structures.ydmod import BicomoduleAlgebra, YDModule

logger = logging.getLogger("homkit")

__all__ = [
    "KINDS",
    "dump_file",
    "dumps",
    "from_document",
    "kind_of",
    "load_file",
    "loads",
    "to_document",
]


# =============================================================================
# ENCODING
# =============================================================================


def _vector(fld: FieldSpec, v: Vector) -> list[str]:
    return [fld.format(x) for x in v]


def _matrix(m: Matrix) -> list[list[str]]:
    return [_vector(m.field, row) for row in m.rows_list()]


def _tensor(t: Tensor3) -> list[list[list[str]]]:
    d1, d2, _ = t.dims
    return [[_vector(t.field, t.fiber(i, j)) for j in range(d2)] for i in range(d1)]


def _header(kind: str, fld: FieldSpec) -> dict[str, Any]:
    return {"schema": SCHEMA_VERSION, "kind": kind, "field": fld.name}


def _space(kind: str, X: Any) -> dict[str, Any]:
    doc = _header(kind, X.field)
    doc.update(name=X.name, dim=X.dim, labels=list(X.labels), alpha=_matrix(X.alpha))
    if kind != "coalgebra":
        doc.update(mul=_tensor(X.mul), unit=_vector(X.field, X.unit))
    if kind != "algebra":
        doc.update(comul=_tensor(X.comul), counit=_vector(X.field, X.counit))
    if kind == "hopf":
        doc["antipode"] = _matrix(X.antipode)
    return doc


def kind_of(obj: Any) -> str:
    """Document kind of a homkit object.

    Raises:
        UnknownName: ``obj`` has no document form.
    """
    # Subclasses first.
    for cls, kind in _KIND_BY_TYPE:
        if isinstance(obj, cls):
            return kind
    raise UnknownName(f"no document kind for {type(obj).__name__}")


def to_document(obj: Any) -> dict[str, Any]:
    """JSON-ready document for ``obj``."""
    kind = kind_of(obj)
    if kind in ("algebra", "coalgebra", "bialgebra", "hopf"):
        return _space(kind, obj)
    if kind == "action":
        doc = _header(kind, obj.hopf.field)
        doc.update(hopf=to_document(obj.hopf), algebra=to_document(obj.algebra), act=_tensor(obj.act))
        return doc
    if kind == "cocycle":
        doc = _header(kind, obj.hopf.field)
        doc.update(hopf=to_document(obj.hopf), algebra=to_document(obj.algebra), sigma=_tensor(obj.sigma))
        return doc
    if kind == "scalar_cocycle":
        doc = _header(kind, obj.hopf.field)
        doc.update(hopf=to_document(obj.hopf), name=obj.name, form=_matrix(obj.form))
        return doc
    if kind == "comodule_coalgebra":
        doc = _header(kind, obj.hopf.field)
        doc.update(hopf=to_document(obj.hopf), coalgebra=to_document(obj.coalgebra), lam=_tensor(obj.lam))
        return doc
    if kind == "comodule_algebra":
        doc = _header(kind, obj.hopf.field)
        doc.update(hopf=to_document(obj.hopf), algebra=to_document(obj.algebra), rho=_tensor(obj.rho))
        return doc
    if kind == "left_comodule_algebra":
        doc = _header(kind, obj.hopf.field)
        doc.update(hopf=to_document(obj.hopf), algebra=to_document(obj.algebra), lam=_tensor(obj.lam))
        return doc
    if kind == "bicomodule_algebra":
        doc = _header(kind, obj.hopf.field)
        doc.update(
            hopf=to_document(obj.hopf),
            algebra=to_document(obj.algebra),
            rho=_tensor(obj.rho),
            lam=_tensor(obj.lam),
        )
        return doc
    # yd_module
    doc = _header(kind, obj.mu.field)
    doc.update(
        name=obj.name,
        labels=list(obj.labels),
        base=to_document(obj.base),
        mu=_matrix(obj.mu),
        action=_tensor(obj.action),
        coaction=_tensor(obj.coaction),
    )
    return doc


def dumps(obj: Any) -> str:
    """Canonical JSON text (sorted keys, compact separators, trailing newline)."""
    doc = obj if isinstance(obj, dict) else to_document(obj)
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"


def dump_file(obj: Any, path: str | Path) -> Path:
    out = Path(path)
    out.write_text(dumps(obj), encoding="utf-8")
    logger.debug("wrote %s", out)
    return out


# =============================================================================
# DECODING
# =============================================================================


def _require(doc: dict[str, Any], key: str) -> Any:
    try:
        return doc[key]
    except KeyError:
        raise SchemaError(f"{doc.get('kind', 'document')}: missing key {key!r}") from None


def _scalar(fld: FieldSpec, raw: Any, where: str) -> Any:
    if not isinstance(raw, str):
        raise SchemaError(f"{where}: scalars must be strings, got {raw!r}")
    try:
        return fld.scalar(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def _read_vector(fld: FieldSpec, raw: Any, n: int, where: str) -> Vector:
    if not isinstance(raw, list) or len(raw) != n:
        raise SchemaError(f"{where}: expected a list of {n} scalars")
    return tuple(_scalar(fld, x, where) for x in raw)


def _read_matrix(fld: FieldSpec, raw: Any, rows: int, cols: int, where: str) -> Matrix:
    if not isinstance(raw, list) or len(raw) != rows:
        raise SchemaError(f"{where}: expected {rows} rows")
    return Matrix(fld, rows, cols, tuple(x for row in raw for x in _read_vector(fld, row, cols, where)))


def _read_tensor(fld: FieldSpec, raw: Any, dims: tuple[int, int, int], where: str) -> Tensor3:
    d1, d2, d3 = dims
    if not isinstance(raw, list) or len(raw) != d1 or any(not isinstance(r, list) or len(r) != d2 for r in raw):
        raise SchemaError(f"{where}: expected a tensor of shape {dims}")
    values: list[Any] = []
    for plane in raw:
        for fiber in plane:
            values.extend(_read_vector(fld, fiber, d3, where))
    return Tensor3(fld, dims, tuple(values))


def _read_space(kind: str, doc: dict[str, Any], fld: FieldSpec) -> Any:
    n = _require(doc, "dim")
    if not isinstance(n, int) or n < 1:
        raise SchemaError(f"{kind}: dim must be a positive integer")
    labels = tuple(str(x) for x in _require(doc, "labels"))
    if len(labels) != n:
        raise SchemaError(f"{kind}: {len(labels)} labels for dimension {n}")
    name = str(doc.get("name", kind))
    alpha = _read_matrix(fld, _require(doc, "alpha"), n, n, f"{kind}.alpha")
    dims = (n, n, n)
    if kind == "algebra":
        return HomAlgebra(
            fld, n, labels,
            _read_tensor(fld, _require(doc, "mul"), dims, "algebra.mul"),
            _read_vector(fld, _require(doc, "unit"), n, "algebra.unit"),
            alpha,
            name=name,
        )
    comul = _read_tensor(fld, _require(doc, "comul"), dims, f"{kind}.comul")
    counit = _read_vector(fld, _require(doc, "counit"), n, f"{kind}.counit")
    if kind == "coalgebra":
        return HomCoalgebra(fld, n, labels, comul, counit, alpha, name=name)
    mul = _read_tensor(fld, _require(doc, "mul"), dims, f"{kind}.mul")
    unit = _read_vector(fld, _require(doc, "unit"), n, f"{kind}.unit")
    if kind == "bialgebra":
        return HomBialgebra(fld, n, labels, mul, unit, comul, counit, alpha, name=name)
    antipode = _read_matrix(fld, _require(doc, "antipode"), n, n, "hopf.antipode")
    return HomHopfAlgebra(fld, n, labels, mul, unit, comul, counit, alpha, name=name, antipode=antipode)


def _nested(doc: dict[str, Any], key: str, kinds: tuple[str, ...], fld: FieldSpec) -> Any:
    sub = _require(doc, key)
    obj = from_document(sub)
    if sub.get("kind") not in kinds:
        raise SchemaError(f"{doc['kind']}.{key}: expected kind {' or '.join(kinds)}, got {sub.get('kind')!r}")
    if obj.field != fld:
        raise SchemaError(f"{doc['kind']}.{key}: field {obj.field.name} differs from {fld.name}")
    return obj


_ALGEBRAS = ("algebra", "bialgebra", "hopf")
_COALGEBRAS = ("coalgebra", "bialgebra", "hopf")


def _read_map(kind: str, doc: dict[str, Any], fld: FieldSpec) -> Any:
    H = _nested(doc, "hopf", ("hopf",), fld)
    nH = H.dim
    if kind == "scalar_cocycle":
        form = _read_matrix(fld, _require(doc, "form"), nH, nH, "scalar_cocycle.form")
        return ScalarCocycle(H, form, name=str(doc.get("name", "sigma")))
    if kind == "comodule_coalgebra":
        C = _nested(doc, "coalgebra", _COALGEBRAS, fld)
        return ComoduleCoalgebra(C, H, _read_tensor(fld, _require(doc, "lam"), (C.dim, nH, C.dim), "lam"))
    A = _nested(doc, "algebra", _ALGEBRAS, fld)
    nA = A.dim
    if kind == "action":
        return WeakAction(H, A, _read_tensor(fld, _require(doc, "act"), (nH, nA, nA), "action.act"))
    if kind == "cocycle":
        return CocycleMap(H, A, _read_tensor(fld, _require(doc, "sigma"), (nH, nH, nA), "cocycle.sigma"))
    if kind == "comodule_algebra":
        return ComoduleAlgebra(A, H, _read_tensor(fld, _require(doc, "rho"), (nA, nA, nH), "rho"))
    if kind == "left_comodule_algebra":
        return LeftComoduleAlgebra(A, H, _read_tensor(fld, _require(doc, "lam"), (nA, nH, nA), "lam"))
    return BicomoduleAlgebra(
        A,
        H,
        _read_tensor(fld, _require(doc, "rho"), (nA, nA, nH), "rho"),
        _read_tensor(fld, _require(doc, "lam"), (nA, nH, nA), "lam"),
    )


def _read_yd(doc: dict[str, Any], fld: FieldSpec) -> YDModule:
    base = _nested(doc, "base", ("bicomodule_algebra",), fld)
    labels = tuple(str(x) for x in _require(doc, "labels"))
    n, nA, nH = len(labels), base.algebra.dim, base.hopf.dim
    return YDModule(
        base,
        labels,
        _read_matrix(fld, _require(doc, "mu"), n, n, "yd_module.mu"),
        _read_tensor(fld, _require(doc, "action"), (nA, n, n), "yd_module.action"),
        _read_tensor(fld, _require(doc, "coaction"), (n, n, nH), "yd_module.coaction"),
        name=str(doc.get("name", "M")),
    )


def from_document(doc: Any) -> Any:
    """Rebuild a structure from a parsed document.

    Raises:
        SchemaError: wrong schema version, unknown kind, missing keys,
            malformed scalars or inconsistent dimensions.
    """
    if not isinstance(doc, dict):
        raise SchemaError("a document must be a JSON object")
    if doc.get("schema") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema {doc.get('schema')!r}; expected {SCHEMA_VERSION!r}")
    kind = _require(doc, "kind")
    reader = _READERS.get(kind)
    if reader is None:
        raise SchemaError(f"unknown kind {kind!r}; known: {sorted(_READERS)}")
    try:
        fld = FieldSpec.parse(str(_require(doc, "field")))
        return reader(kind, doc, fld)
    except (InvalidField, ShapeMismatch) as exc:
        raise SchemaError(f"{kind}: {exc}") from exc
    except SchemaError:
        raise
    except HomkitError as exc:
        raise SchemaError(f"{kind}: {exc}") from exc


def loads(text: str) -> Any:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return from_document(doc)


def load_file(path: str | Path) -> Any:
    """Load a structure from a JSON file.

    Raises:
        SchemaError: the file cannot be read or does not match the schema.
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"cannot read {p}: {exc}") from exc
    return loads(text)


_READERS: dict[str, Callable[[str, dict[str, Any], FieldSpec], Any]] = {
    "algebra": _read_space,
    "coalgebra": _read_space,
    "bialgebra": _read_space,
    "hopf": _read_space,
    "action": _read_map,
    "cocycle": _read_map,
    "scalar_cocycle": _read_map,
    "comodule_coalgebra": _read_map,
    "comodule_algebra": _read_map,
    "left_comodule_algebra": _read_map,
    "bicomodule_algebra": _read_map,
    "yd_module": lambda kind, doc, fld: _read_yd(doc, fld),
}

_KIND_BY_TYPE: tuple[tuple[type, str], ...] = (
    (HomHopfAlgebra, "hopf"),
    (HomBialgebra, "bialgebra"),
    (HomAlgebra, "algebra"),
    (HomCoalgebra, "coalgebra"),
    (WeakAction, "action"),
    (CocycleMap, "cocycle"),
    (ScalarCocycle, "scalar_cocycle"),
    (ComoduleCoalgebra, "comodule_coalgebra"),
    (ComoduleAlgebra, "comodule_algebra"),
    (LeftComoduleAlgebra, "left_comodule_algebra"),
    (BicomoduleAlgebra, "bicomodule_algebra"),
    (YDModule, "yd_module"),
)

KINDS = tuple(sorted(_READERS))
