"""The structure-document file format.

A document is canonical JSON describing exactly one structure graph: one
carrier groupoid (sections ``objects``, ``morphisms``, ``compose``,
``identities``, ``inverses``) plus zero or more named structure blocks
(``kind``: sm | ac | mul | functor | transformation | tworing) whose tables
are nested key/value arrays.  Blocks reference one another by name (functors
name their endpoint structures, 2-rings their additive and multiplicative
halves), so one file answers every cross-reference.

Serialization is canonical: sorted keys, sorted table rows, blocks sorted by
name, two-space indent, trailing newline.  ``parse`` then ``serialize`` then
``parse`` reproduces an identical document, and canonical serialization of
equal graphs is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .ac import ACStructure, acomm_family
from .errors import DocumentError
from .functors import MonTransformation, StructuredFunctor, fsum_family, tau_family
from .groupoid import FinGroupoid, GFunctor, NatFamily
from .monoidal import MonStructure, assoc_family, comm_family, lunit_family, runit_family
from .rings import TwoRingData, absorb_l_family, absorb_r_family, dist_l_family, dist_r_family

FORMAT = "twogrp/1"

_STRUCT_KINDS = ("sm", "ac", "mul")
_ALL_KINDS = _STRUCT_KINDS + ("functor", "transformation", "tworing")


@dataclass
class Block:
    kind: str
    name: str
    obj: object
    refs: dict[str, str] = field(default_factory=dict)


@dataclass
class StructureDocument:
    groupoid: FinGroupoid
    blocks: list[Block]

    def block(self, name: str) -> Block:
        for b in self.blocks:
            if b.name == name:
                return b
        raise DocumentError(f"no block named {name!r}")

    def of_kind(self, *kinds: str) -> list[Block]:
        return [b for b in self.blocks if b.kind in kinds]

    def unique(self, *kinds: str) -> Block:
        found = self.of_kind(*kinds)
        if len(found) != 1:
            raise DocumentError(
                f"expected exactly one block of kind {'/'.join(kinds)}, found {len(found)}"
            )
        return found[0]


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _rows(raw, name: str, width: int) -> list[list[str]]:
    if not isinstance(raw, list):
        raise DocumentError(f"section {name!r} must be an array")
    out = []
    for row in raw:
        if not isinstance(row, list) or len(row) != width or not all(isinstance(v, str) for v in row):
            raise DocumentError(f"section {name!r}: expected rows of {width} strings, got {row!r}")
        out.append(row)
    return out


def _family_table(raw, name: str, arity: int) -> dict:
    table = {}
    for row in _rows(raw, name, arity + 1):
        table[tuple(row[:arity])] = row[arity]
    return table


def _pair_table(raw, name: str) -> dict:
    return {(g, f): h for g, f, h in _rows(raw, name, 3)}


def _check_ids(doc_gpd: FinGroupoid, names, kind: str) -> None:
    for n in names:
        if n not in doc_gpd.morphisms:
            raise DocumentError(f"{kind} references undeclared morphism {n!r}")


def _parse_groupoid(data: dict) -> FinGroupoid:
    for section in ("objects", "morphisms", "compose", "identities", "inverses"):
        if section not in data:
            raise DocumentError(f"missing section {section!r}")
    objects = data["objects"]
    if not isinstance(objects, list) or not all(isinstance(o, str) for o in objects):
        raise DocumentError("section 'objects' must be an array of strings")
    if len(set(objects)) != len(objects):
        raise DocumentError("duplicate object ids")
    morrows = data["morphisms"]
    if not isinstance(morrows, list):
        raise DocumentError("section 'morphisms' must be an array")
    mors = []
    for row in morrows:
        if not isinstance(row, dict) or set(row) != {"id", "src", "dst"}:
            raise DocumentError(f"morphism rows are objects with id/src/dst, got {row!r}")
        mors.append((row["id"], row["src"], row["dst"]))
    if len({m[0] for m in mors}) != len(mors):
        raise DocumentError("duplicate morphism ids")
    objset = set(objects)
    for mid, src, dst in mors:
        if src not in objset or dst not in objset:
            raise DocumentError(f"morphism {mid!r} references undeclared object")
    gpd = FinGroupoid.build(
        objects,
        mors,
        _pair_table(data["compose"], "compose"),
        {o: m for o, m in _rows(data["identities"], "identities", 2)},
        {f: i for f, i in _rows(data["inverses"], "inverses", 2)},
    )
    known = set(gpd.morphisms)
    for (g, f), h in gpd.compose.items():
        if not {g, f, h} <= known:
            raise DocumentError("compose table references undeclared morphism")
    for o, m in gpd.identity.items():
        if o not in objset or m not in known:
            raise DocumentError("identities table references undeclared id")
    for f, i in gpd.inverse.items():
        if f not in known or i not in known:
            raise DocumentError("inverses table references undeclared morphism")
    return gpd


def _parse_sum_block(gpd: FinGroupoid, raw: dict, kind: str):
    op_obj = {(x, y): z for x, y, z in _rows(raw["op_obj"], "op_obj", 3)}
    op_mor = {(f, g): h for f, g, h in _rows(raw["op_mor"], "op_mor", 3)}
    unit = raw["unit"]
    if unit not in set(gpd.objects):
        raise DocumentError(f"unit {unit!r} is not a declared object")
    unit_id = gpd.identity.get(unit)
    if unit_id is None:
        raise DocumentError(f"unit {unit!r} has no identity morphism")
    _check_ids(gpd, op_mor.values(), "op_mor")
    l = lunit_family(_family_table(raw["l"], "l", 1), unit, unit_id)
    r = runit_family(_family_table(raw["r"], "r", 1), unit, unit_id)
    _check_ids(gpd, l.components.values(), "l")
    _check_ids(gpd, r.components.values(), "r")
    if kind == "ac":
        b = acomm_family(_family_table(raw["b"], "b", 4))
        _check_ids(gpd, b.components.values(), "b")
        return ACStructure(gpd, op_obj, op_mor, unit, b, l, r)
    a = assoc_family(_family_table(raw["a"], "a", 3))
    _check_ids(gpd, a.components.values(), "a")
    c = None
    if kind == "sm":
        if raw.get("c") is None:
            raise DocumentError("sm blocks carry a commutator; use kind 'mul' without one")
        c = comm_family(_family_table(raw["c"], "c", 2))
        _check_ids(gpd, c.components.values(), "c")
    return MonStructure(gpd, op_obj, op_mor, unit, a, c, l, r)


def _require(raw: dict, keys: tuple[str, ...], kind: str) -> None:
    missing = [k for k in keys if k not in raw]
    if missing:
        raise DocumentError(f"{kind} block is missing fields {missing}")


def parse_document(text: str) -> StructureDocument:
    """Parse a document, verifying every reference; raises
    :class:`DocumentError` with position info on syntax errors."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}") from err
    if not isinstance(data, dict):
        raise DocumentError("document root must be an object")
    if data.get("format") != FORMAT:
        raise DocumentError(f"unknown format {data.get('format')!r}; expected {FORMAT!r}")
    gpd = _parse_groupoid(data)

    raw_blocks = data.get("structures", [])
    if not isinstance(raw_blocks, list):
        raise DocumentError("section 'structures' must be an array")
    for raw in raw_blocks:
        if not isinstance(raw, dict) or not isinstance(raw.get("name"), str):
            raise DocumentError("structure blocks are objects with a 'name'")
        if raw.get("kind") not in _ALL_KINDS:
            raise DocumentError(f"unknown block kind {raw.get('kind')!r}")
    names = [raw["name"] for raw in raw_blocks]
    if len(set(names)) != len(names):
        raise DocumentError("duplicate block names")

    doc = StructureDocument(gpd, [])
    # carrier-level structures first, then functors, then the rest
    order = {"sm": 0, "ac": 0, "mul": 0, "functor": 1, "transformation": 2, "tworing": 2}
    for raw in sorted(raw_blocks, key=lambda r: order[r["kind"]]):
        kind, name = raw["kind"], raw["name"]
        if kind in _STRUCT_KINDS:
            keys = ("op_obj", "op_mor", "unit", "l", "r") + (("b",) if kind == "ac" else ("a",))
            _require(raw, keys, kind)
            doc.blocks.append(Block(kind, name, _parse_sum_block(gpd, raw, kind)))
        elif kind == "functor":
            _require(raw, ("source", "target", "obj_map", "mor_map", "fsum"), kind)
            for ref in (raw["source"], raw["target"]):
                if doc.block(ref).kind not in _STRUCT_KINDS:
                    raise DocumentError(f"functor {name!r} endpoint {ref!r} is not a structure block")
            obj_map = {x: y for x, y in _rows(raw["obj_map"], "obj_map", 2)}
            mor_map = {f: g for f, g in _rows(raw["mor_map"], "mor_map", 2)}
            _check_ids(gpd, mor_map.values(), "mor_map")
            fsum = fsum_family(_family_table(raw["fsum"], "fsum", 2))
            _check_ids(gpd, fsum.components.values(), "fsum")
            fzero = raw.get("fzero")
            if fzero is not None and fzero not in gpd.morphisms:
                raise DocumentError(f"fzero {fzero!r} is not a declared morphism")
            fun = StructuredFunctor(GFunctor(gpd, gpd, obj_map, mor_map), fsum, fzero)
            doc.blocks.append(Block(kind, name, fun, {"source": raw["source"], "target": raw["target"]}))
        elif kind == "transformation":
            _require(raw, ("source", "target", "components"), kind)
            fsrc = doc.block(raw["source"])
            ftgt = doc.block(raw["target"])
            if fsrc.kind != "functor" or ftgt.kind != "functor":
                raise DocumentError(f"transformation {name!r} endpoints must be functor blocks")
            tau = tau_family(_family_table(raw["components"], "components", 1))
            _check_ids(gpd, tau.components.values(), "components")
            tr = MonTransformation(fsrc.obj, ftgt.obj, tau)
            doc.blocks.append(Block(kind, name, tr, {"source": raw["source"], "target": raw["target"]}))
        else:  # tworing
            _require(raw, ("add", "mul", "d", "e"), kind)
            add_blk = doc.block(raw["add"])
            mul_blk = doc.block(raw["mul"])
            if add_blk.kind not in ("sm", "ac") or mul_blk.kind != "mul":
                raise DocumentError(f"tworing {name!r} needs an sm/ac 'add' and a mul 'mul'")
            add = add_blk.obj
            d = dist_l_family(_family_table(raw["d"], "d", 3))
            e = dist_r_family(_family_table(raw["e"], "e", 3))
            _check_ids(gpd, d.components.values(), "d")
            _check_ids(gpd, e.components.values(), "e")
            zero_id = gpd.identity[add.unit]
            m = n = None
            if raw.get("m") is not None:
                m = absorb_l_family(_family_table(raw["m"], "m", 1), add.unit, zero_id)
                _check_ids(gpd, m.components.values(), "m")
            if raw.get("n") is not None:
                n = absorb_r_family(_family_table(raw["n"], "n", 1), add.unit, zero_id)
                _check_ids(gpd, n.components.values(), "n")
            ring = TwoRingData(gpd, add, mul_blk.obj, d, e, m, n)
            doc.blocks.append(Block(kind, name, ring, {"add": raw["add"], "mul": raw["mul"]}))
    doc.blocks.sort(key=lambda b: (order[b.kind], b.name))
    return doc


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _fam_rows(fam: NatFamily) -> list[list[str]]:
    return sorted([*idx, mid] for idx, mid in fam.components.items())


def _table_rows(table: dict) -> list[list[str]]:
    return sorted(
        ([*key, value] if isinstance(key, tuple) else [key, value])
        for key, value in table.items()
    )


def _sum_block_payload(kind: str, name: str, s) -> dict:
    payload = {
        "kind": kind,
        "name": name,
        "op_obj": _table_rows(s.sum_obj),
        "op_mor": _table_rows(s.sum_mor),
        "unit": s.unit,
        "l": _fam_rows(s.lunit),
        "r": _fam_rows(s.runit),
    }
    if kind == "ac":
        payload["b"] = _fam_rows(s.acomm)
    else:
        payload["a"] = _fam_rows(s.assoc)
    if kind == "sm":
        payload["c"] = _fam_rows(s.comm)
    return payload


def _block_payload(doc: StructureDocument, blk: Block) -> dict:
    if blk.kind in _STRUCT_KINDS:
        return _sum_block_payload(blk.kind, blk.name, blk.obj)
    if blk.kind == "functor":
        fun: StructuredFunctor = blk.obj
        return {
            "kind": "functor",
            "name": blk.name,
            "source": blk.refs["source"],
            "target": blk.refs["target"],
            "obj_map": _table_rows(fun.base.obj_map),
            "mor_map": _table_rows(fun.base.mor_map),
            "fsum": _fam_rows(fun.fsum),
            "fzero": fun.fzero,
        }
    if blk.kind == "transformation":
        tr: MonTransformation = blk.obj
        return {
            "kind": "transformation",
            "name": blk.name,
            "source": blk.refs["source"],
            "target": blk.refs["target"],
            "components": _fam_rows(tr.tau),
        }
    ring: TwoRingData = blk.obj
    return {
        "kind": "tworing",
        "name": blk.name,
        "add": blk.refs["add"],
        "mul": blk.refs["mul"],
        "d": _fam_rows(ring.dist_l),
        "e": _fam_rows(ring.dist_r),
        "m": _fam_rows(ring.absorb_l) if ring.absorb_l is not None else None,
        "n": _fam_rows(ring.absorb_r) if ring.absorb_r is not None else None,
    }


def serialize_document(doc: StructureDocument) -> str:
    """Canonical serialization: stable ordering everywhere, sorted keys."""
    gpd = doc.groupoid
    payload = {
        "format": FORMAT,
        "objects": sorted(gpd.objects),
        "morphisms": [
            {"id": mid, "src": gpd.morphisms[mid].src, "dst": gpd.morphisms[mid].dst}
            for mid in sorted(gpd.morphisms)
        ],
        "compose": _table_rows(gpd.compose),
        "identities": _table_rows(gpd.identity),
        "inverses": _table_rows(gpd.inverse),
        "structures": [
            _block_payload(doc, blk) for blk in sorted(doc.blocks, key=lambda b: b.name)
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
