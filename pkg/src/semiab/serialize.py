"""JSON documents for algebras, morphisms, cubes, and reports.

Every document carries a "format" tag and a "version" integer.  Parsing
is strict: a malformed document raises FormatError pointing at the JSON
path of the offending field, never a bare KeyError or crash.
"""

from __future__ import annotations

from typing import Callable

from .algebra import (
    Algebra,
    AlgebraError,
    GROUP,
    Morphism,
    RING_KINDS,
    Variety,
    gpd_algebra,
    group_algebra,
    module_algebra,
    ring_algebra,
)

FORMAT_VERSION = 1

ALGEBRA_FORMAT = "semiab-algebra"
MORPHISM_FORMAT = "semiab-morphism"
CUBE_FORMAT = "semiab-cube"
CORPUS_FORMAT = "semiab-corpus"

Resolver = Callable[[str], "Algebra | None"]


class FormatError(ValueError):
    """A document failed validation; .path points at the bad field."""

    def __init__(self, path: str, message: str) -> None:
        self.path = path
        super().__init__(f"{path}: {message}")


def _need(doc, key: str, path: str, kind=None):
    if not isinstance(doc, dict):
        raise FormatError(path, f"expected an object, got {type(doc).__name__}")
    if key not in doc:
        raise FormatError(f"{path}.{key}", "missing field")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise FormatError(f"{path}.{key}",
                          f"expected {getattr(kind, '__name__', kind)}, got {type(value).__name__}")
    return value


def _int_array(value, path: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise FormatError(path, "expected an array of integers")
    return tuple(value)


def _int_table(value, path: str) -> list[list[int]]:
    if not isinstance(value, list):
        raise FormatError(path, "expected an array of rows")
    out = []
    for r, row in enumerate(value):
        out.append(list(_int_array(row, f"{path}[{r}]")))
    return out


def _check_header(doc, fmt: str, path: str) -> None:
    got = _need(doc, "format", path, str)
    if got != fmt:
        raise FormatError(f"{path}.format", f"expected {fmt!r}, got {got!r}")
    version = _need(doc, "version", path, int)
    if version != FORMAT_VERSION:
        raise FormatError(f"{path}.version", f"unsupported version {version}")


# ---------------------------------------------------------------------------
# varieties


def variety_to_doc(v: Variety):
    if v.kind == "zmod-module":
        return {"kind": v.kind, "modulus": v.modulus}
    return v.kind


def variety_from_doc(doc, path: str) -> Variety:
    if isinstance(doc, str):
        try:
            return Variety(doc)
        except AlgebraError as exc:
            raise FormatError(path, str(exc)) from None
    if isinstance(doc, dict):
        kind = _need(doc, "kind", path, str)
        modulus = _need(doc, "modulus", path, int)
        try:
            return Variety(kind, modulus)
        except AlgebraError as exc:
            raise FormatError(path, str(exc)) from None
    raise FormatError(path, "expected a variety name or {kind, modulus} object")


# ---------------------------------------------------------------------------
# algebras


def algebra_to_doc(A: Algebra) -> dict:
    doc = {
        "format": ALGEBRA_FORMAT,
        "version": FORMAT_VERSION,
        "variety": variety_to_doc(A.variety),
        "order": A.g1.order if A.is_gpd else A.order,
        "tables": _tables_to_doc(A),
    }
    if A.name:
        doc["name"] = A.name
    return doc


def _tables_to_doc(A: Algebra) -> dict:
    if A.kind == GROUP:
        return {"op": [list(r) for r in A.op], "inv": list(A.inv)}
    if A.kind in RING_KINDS:
        return {"add": [list(r) for r in A.add], "mul": [list(r) for r in A.mul]}
    if A.kind == "zmod-module":
        return {"add": [list(r) for r in A.add], "act": [list(r) for r in A.act]}
    return {
        "g1": algebra_to_doc(A.g1),
        "g0": algebra_to_doc(A.g0),
        "d": list(A.d),
        "c": list(A.c),
        "i": list(A.i),
    }


def algebra_from_doc(doc, path: str = "$") -> Algebra:
    _check_header(doc, ALGEBRA_FORMAT, path)
    variety = variety_from_doc(_need(doc, "variety", path), f"{path}.variety")
    order = _need(doc, "order", path, int)
    tables = _need(doc, "tables", path, dict)
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise FormatError(f"{path}.name", "expected a string")
    tpath = f"{path}.tables"
    try:
        A = _algebra_from_tables(variety, tables, tpath, name)
    except AlgebraError as exc:
        raise FormatError(tpath, str(exc)) from None
    got = A.g1.order if A.is_gpd else A.order
    if got != order:
        raise FormatError(f"{path}.order", f"declared {order}, tables give {got}")
    return A


def _algebra_from_tables(variety: Variety, tables: dict, path: str, name: str) -> Algebra:
    if variety.kind == GROUP:
        op = _int_table(_need(tables, "op", path), f"{path}.op")
        inv = _int_array(_need(tables, "inv", path), f"{path}.inv")
        return group_algebra(op, inv, name=name)
    if variety.kind in RING_KINDS:
        add = _int_table(_need(tables, "add", path), f"{path}.add")
        mul = _int_table(_need(tables, "mul", path), f"{path}.mul")
        return ring_algebra(variety.kind, add, mul, name=name)
    if variety.kind == "zmod-module":
        add = _int_table(_need(tables, "add", path), f"{path}.add")
        act = _int_table(_need(tables, "act", path), f"{path}.act")
        return module_algebra(variety.modulus, add, act, name=name)
    g1 = algebra_from_doc(_need(tables, "g1", path), f"{path}.g1")
    g0 = algebra_from_doc(_need(tables, "g0", path), f"{path}.g0")
    d = _int_array(_need(tables, "d", path), f"{path}.d")
    c = _int_array(_need(tables, "c", path), f"{path}.c")
    i = _int_array(_need(tables, "i", path), f"{path}.i")
    return gpd_algebra(g1, g0, d, c, i, name=name)


# ---------------------------------------------------------------------------
# morphisms


def _endpoint_to_doc(A: Algebra, as_name: bool):
    if as_name and A.name:
        return A.name
    return algebra_to_doc(A)


def morphism_to_doc(f: Morphism, named_endpoints: bool = False) -> dict:
    if f.dom.is_gpd:
        mapping = {"g1": list(f.map1), "g0": list(f.map0)}
    else:
        mapping = list(f.mapping)
    return {
        "format": MORPHISM_FORMAT,
        "version": FORMAT_VERSION,
        "dom": _endpoint_to_doc(f.dom, named_endpoints),
        "cod": _endpoint_to_doc(f.cod, named_endpoints),
        "map": mapping,
    }


def _endpoint_from_doc(doc, path: str, resolve: Resolver | None) -> Algebra:
    if isinstance(doc, str):
        found = resolve(doc) if resolve is not None else None
        if found is None:
            raise FormatError(path, f"unknown algebra name {doc!r}")
        return found
    return algebra_from_doc(doc, path)


def morphism_from_doc(doc, path: str = "$", resolve: Resolver | None = None) -> Morphism:
    _check_header(doc, MORPHISM_FORMAT, path)
    dom = _endpoint_from_doc(_need(doc, "dom", path), f"{path}.dom", resolve)
    cod = _endpoint_from_doc(_need(doc, "cod", path), f"{path}.cod", resolve)
    raw = _need(doc, "map", path)
    mpath = f"{path}.map"
    if dom.is_gpd:
        if not isinstance(raw, dict):
            raise FormatError(mpath, "groupoid morphisms need {g1, g0} arrays")
        mapping = (_int_array(_need(raw, "g1", mpath), f"{mpath}.g1"),
                   _int_array(_need(raw, "g0", mpath), f"{mpath}.g0"))
    else:
        mapping = _int_array(raw, mpath)
    try:
        return Morphism(dom, cod, mapping)
    except AlgebraError as exc:
        raise FormatError(mpath, str(exc)) from None


# ---------------------------------------------------------------------------
# cubes


def cube_to_doc(cube) -> dict:
    vertices = {str(mask): algebra_to_doc(V) for mask, V in cube.vertices.items()}
    edges = []
    for (mask, axis), f in sorted(cube.edges.items()):
        if f.dom.is_gpd:
            mapping = {"g1": list(f.map1), "g0": list(f.map0)}
        else:
            mapping = list(f.mapping)
        edges.append({"from": mask, "axis": axis, "map": mapping})
    return {
        "format": CUBE_FORMAT,
        "version": FORMAT_VERSION,
        "dim": cube.dim,
        "vertices": vertices,
        "edges": edges,
    }


def cube_from_doc(doc, path: str = "$", resolve: Resolver | None = None):
    from .cubes import NCube

    _check_header(doc, CUBE_FORMAT, path)
    dim = _need(doc, "dim", path, int)
    if dim < 1 or dim > 3:
        raise FormatError(f"{path}.dim", f"dimension {dim} out of range 1..3")
    raw_vertices = _need(doc, "vertices", path, dict)
    vertices: dict[int, Algebra] = {}
    for mask in range(1 << dim):
        key = str(mask)
        if key not in raw_vertices:
            raise FormatError(f"{path}.vertices.{key}", "missing vertex")
        vertices[mask] = _endpoint_from_doc(raw_vertices[key], f"{path}.vertices.{key}", resolve)
    raw_edges = _need(doc, "edges", path, list)
    edges: dict[tuple[int, int], Morphism] = {}
    for k, entry in enumerate(raw_edges):
        epath = f"{path}.edges[{k}]"
        mask = _need(entry, "from", epath, int)
        axis = _need(entry, "axis", epath, int)
        if not (0 <= axis < dim) or mask & (1 << axis) or not (0 <= mask < (1 << dim)):
            raise FormatError(epath, f"bad edge position ({mask}, {axis})")
        dom, cod = vertices[mask], vertices[mask | (1 << axis)]
        raw_map = _need(entry, "map", epath)
        if dom.is_gpd:
            if not isinstance(raw_map, dict):
                raise FormatError(f"{epath}.map", "groupoid edges need {g1, g0} arrays")
            mapping = (_int_array(_need(raw_map, "g1", f"{epath}.map"), f"{epath}.map.g1"),
                       _int_array(_need(raw_map, "g0", f"{epath}.map"), f"{epath}.map.g0"))
        else:
            mapping = _int_array(raw_map, f"{epath}.map")
        try:
            edges[(mask, axis)] = Morphism(dom, cod, mapping)
        except AlgebraError as exc:
            raise FormatError(f"{epath}.map", str(exc)) from None
    try:
        return NCube(dim, vertices, edges)
    except AlgebraError as exc:
        raise FormatError(path, str(exc)) from None


# ---------------------------------------------------------------------------
# corpora and subobject helpers


def corpus_from_doc(doc, path: str = "$") -> tuple[Algebra, ...]:
    _check_header(doc, CORPUS_FORMAT, path)
    raw = _need(doc, "algebras", path, list)
    return tuple(algebra_from_doc(entry, f"{path}.algebras[{k}]")
                 for k, entry in enumerate(raw))


def corpus_to_doc(algebras) -> dict:
    return {
        "format": CORPUS_FORMAT,
        "version": FORMAT_VERSION,
        "algebras": [algebra_to_doc(A) for A in algebras],
    }


def subobject_to_doc(S):
    if S.parent.is_gpd:
        return {"g1": sorted(S.elements[0]), "g0": sorted(S.elements[1])}
    return sorted(S.elements)
