"""Reading and writing system description files.

The on-disk format is JSON: a ``basic_sets`` array where each set carries a
name, a Morse index and exactly one of ``matrix`` (square integer matrix,
row j / column k oriented so that column k carries the orientation sign of
symbol k) or ``graph`` (0/1 ``adjacency`` plus ``orientation`` signs), and
an optional ``ambient`` object with the manifold dimension, integer
homology maps per degree and a user-asserted ``split_at`` degree.
Validation errors carry a JSON-pointer-style location.
"""

from __future__ import annotations

import json

from .dynamics import (BasicSetSpec, StructureMatrix, SystemSpec,
                       VertexShiftSpec, build_structure_matrix)
from .errors import ValidationError
from .linalg import RationalMatrix


def _require_object(value, path, required, optional=()):
    if not isinstance(value, dict):
        raise ValidationError("expected an object", path)
    for key in required:
        if key not in value:
            raise ValidationError(f"missing required key {key!r}", path)
    allowed = set(required) | set(optional)
    for key in value:
        if key not in allowed:
            raise ValidationError(f"unknown key {key!r}", path)


def _require_int(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError("expected an integer", path)
    return value


def _require_int_matrix(value, path, entries=None):
    if not isinstance(value, list):
        raise ValidationError("expected an array of arrays", path)
    n = len(value)
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise ValidationError("expected an array", f"{path}/{i}")
        if len(row) != n:
            raise ValidationError(
                f"row has {len(row)} entries, expected {n} (matrix must "
                "be square)", f"{path}/{i}")
        out = []
        for j, x in enumerate(row):
            x = _require_int(x, f"{path}/{i}/{j}")
            if entries is not None and x not in entries:
                raise ValidationError(
                    f"entry {x} not in {sorted(entries)}", f"{path}/{i}/{j}")
            out.append(x)
        rows.append(out)
    return rows


def _parse_basic_set(obj, path):
    _require_object(obj, path, required=("name", "index"),
                    optional=("matrix", "graph"))
    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise ValidationError("name must be a nonempty string",
                              f"{path}/name")
    index = _require_int(obj["index"], f"{path}/index")
    if index < 0:
        raise ValidationError("index must be nonnegative", f"{path}/index")
    has_matrix = "matrix" in obj
    has_graph = "graph" in obj
    if has_matrix == has_graph:
        raise ValidationError(
            "exactly one of 'matrix' and 'graph' is required", path)
    if has_matrix:
        rows = _require_int_matrix(obj["matrix"], f"{path}/matrix")
        structure = StructureMatrix(RationalMatrix.from_rows(rows), raw=True)
        shift = None
    else:
        gpath = f"{path}/graph"
        _require_object(obj["graph"], gpath,
                        required=("adjacency", "orientation"))
        adjacency = _require_int_matrix(obj["graph"]["adjacency"],
                                        f"{gpath}/adjacency",
                                        entries={0, 1})
        orientation = obj["graph"]["orientation"]
        if not isinstance(orientation, list):
            raise ValidationError("expected an array",
                                  f"{gpath}/orientation")
        if len(orientation) != len(adjacency):
            raise ValidationError(
                f"orientation has {len(orientation)} entries, expected "
                f"{len(adjacency)}", f"{gpath}/orientation")
        for k, s in enumerate(orientation):
            s = _require_int(s, f"{gpath}/orientation/{k}")
            if s not in (1, -1):
                raise ValidationError("entry must be 1 or -1",
                                      f"{gpath}/orientation/{k}")
        shift = VertexShiftSpec.from_lists(adjacency, orientation)
        structure = build_structure_matrix(shift)
    return BasicSetSpec(name=name, structure=structure, index_u=index,
                        shift=shift)


def _parse_ambient(obj, path):
    _require_object(obj, path, required=("dim",),
                    optional=("homology_maps", "split_at"))
    dim = _require_int(obj["dim"], f"{path}/dim")
    if dim < 0:
        raise ValidationError("dim must be nonnegative", f"{path}/dim")
    maps = {}
    raw_maps = obj.get("homology_maps", {})
    mpath = f"{path}/homology_maps"
    if not isinstance(raw_maps, dict):
        raise ValidationError("expected an object keyed by degree", mpath)
    for key, value in raw_maps.items():
        if not key.isdigit():
            raise ValidationError(f"degree key {key!r} is not a "
                                  "nonnegative integer", f"{mpath}/{key}")
        degree = int(key)
        if degree > dim:
            raise ValidationError(f"degree {degree} exceeds dim {dim}",
                                  f"{mpath}/{key}")
        if degree in maps:
            raise ValidationError(f"degree {degree} given twice",
                                  f"{mpath}/{key}")
        rows = _require_int_matrix(value, f"{mpath}/{key}")
        maps[degree] = RationalMatrix.from_rows(rows)
    split_at = None
    if "split_at" in obj:
        split_at = _require_int(obj["split_at"], f"{path}/split_at")
        if not 0 <= split_at <= dim:
            raise ValidationError(f"split_at {split_at} outside 0..{dim}",
                                  f"{path}/split_at")
    return dim, maps, split_at


def system_from_dict(doc):
    """Validate a decoded system document and build the SystemSpec."""
    _require_object(doc, "", required=("basic_sets",), optional=("ambient",))
    raw_sets = doc["basic_sets"]
    if not isinstance(raw_sets, list):
        raise ValidationError("expected an array", "/basic_sets")
    sets = []
    seen = set()
    for i, obj in enumerate(raw_sets):
        basic = _parse_basic_set(obj, f"/basic_sets/{i}")
        if basic.name in seen:
            raise ValidationError(f"duplicate name {basic.name!r}",
                                  f"/basic_sets/{i}/name")
        seen.add(basic.name)
        sets.append(basic)
    dim, maps, split_at = None, {}, None
    if "ambient" in doc:
        dim, maps, split_at = _parse_ambient(doc["ambient"], "/ambient")
        for i, basic in enumerate(sets):
            if basic.index_u > dim:
                raise ValidationError(
                    f"index {basic.index_u} exceeds ambient dim {dim}",
                    f"/basic_sets/{i}/index")
    return SystemSpec(basic_sets=tuple(sets), ambient_dim=dim,
                      ambient_maps=maps, split_at=split_at)


def parse_system(path):
    """Read and validate a system description file."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"not valid JSON: {exc}") from exc
    return system_from_dict(doc)


def system_to_dict(system):
    """Serialise a SystemSpec back to the document form; parsing the
    result reproduces the SystemSpec exactly."""
    sets = []
    for basic in system.basic_sets:
        entry = {"name": basic.name, "index": basic.index_u}
        if basic.shift is not None:
            entry["graph"] = {
                "adjacency": [list(r) for r in basic.shift.adjacency],
                "orientation": list(basic.shift.orientation),
            }
        else:
            entry["matrix"] = basic.structure.matrix.to_int_rows()
        sets.append(entry)
    doc = {"basic_sets": sets}
    if system.ambient_dim is not None:
        ambient = {"dim": system.ambient_dim}
        if system.ambient_maps:
            ambient["homology_maps"] = {
                str(k): system.ambient_maps[k].to_int_rows()
                for k in sorted(system.ambient_maps)}
        if system.split_at is not None:
            ambient["split_at"] = system.split_at
        doc["ambient"] = ambient
    return doc
