"""JSON file formats for categories, metrics, graphs, matrices and functors.

All parse errors are MalformedInput with positional messages so the CLI can
point at the offending entry.
"""

from __future__ import annotations

import json
import math

from .category import Arrow, DirectedGraph, FinCategory, Functor
from .enriched import MetricSpace
from .errors import MalformedInput
from .matrixrig import RigMatrix
from .rigs import Rig, parse_element


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise MalformedInput(f"{path}: no such file")
    except json.JSONDecodeError as e:
        raise MalformedInput(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}")


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise MalformedInput(f"{where}: missing '{key}'")
    return doc[key]


def load_category(path: str) -> FinCategory:
    """Parse the category file format.

    {"objects": [...], "arrows": [{"name","src","tgt"}...],
     "identities": {obj: arrowName}, "compose": [[g, f, gf], ...]}

    The compose list must mention every composable pair exactly once.
    """
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise MalformedInput(f"{path}: top level must be an object")
    objects = _require(doc, "objects", path)
    if not isinstance(objects, list) or not all(isinstance(o, str) for o in objects):
        raise MalformedInput(f"{path}: 'objects' must be a list of strings")
    arrows_doc = _require(doc, "arrows", path)
    arrows = []
    for i, entry in enumerate(arrows_doc):
        where = f"{path}: arrows[{i}]"
        if not isinstance(entry, dict):
            raise MalformedInput(f"{where}: must be an object")
        name = _require(entry, "name", where)
        src = _require(entry, "src", where)
        tgt = _require(entry, "tgt", where)
        arrows.append(Arrow(name, src, tgt))
    identities = _require(doc, "identities", path)
    if not isinstance(identities, dict):
        raise MalformedInput(f"{path}: 'identities' must map objects to arrow names")
    compose_doc = _require(doc, "compose", path)
    compose = {}
    for i, entry in enumerate(compose_doc):
        where = f"{path}: compose[{i}]"
        if not (isinstance(entry, list) and len(entry) == 3):
            raise MalformedInput(f"{where}: must be a triple [g, f, gf]")
        g, f, gf = entry
        if (g, f) in compose:
            raise MalformedInput(f"{where}: duplicate entry for pair ({g!r}, {f!r})")
        compose[(g, f)] = gf
    try:
        cat = FinCategory(objects, arrows, identities, compose)
    except MalformedInput as e:
        raise MalformedInput(f"{path}: {e}")
    missing = set(cat.composable_pairs()) - set(compose)
    if missing:
        g, f = sorted(missing, key=repr)[0]
        raise MalformedInput(f"{path}: compose: missing entry for composable pair ({g!r}, {f!r})")
    extra = set(compose) - set(cat.composable_pairs())
    if extra:
        g, f = sorted(extra, key=repr)[0]
        raise MalformedInput(f"{path}: compose: pair ({g!r}, {f!r}) is not composable")
    return cat


def load_metric(path: str) -> MetricSpace:
    """Parse {"points": [...], "distances": [[...]]} or {"points", "coords"}.

    The string "inf" encodes an infinite distance.
    """
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise MalformedInput(f"{path}: top level must be an object")
    points = _require(doc, "points", path)
    if "distances" in doc and "coords" in doc:
        raise MalformedInput(f"{path}: give 'distances' or 'coords', not both")
    if "distances" in doc:
        rows = []
        for i, row in enumerate(doc["distances"]):
            out = []
            for j, value in enumerate(row):
                if value == "inf":
                    out.append(math.inf)
                elif isinstance(value, (int, float)) and not isinstance(value, bool):
                    out.append(float(value))
                else:
                    raise MalformedInput(
                        f"{path}: distances[{i}][{j}]: expected a number or \"inf\""
                    )
            rows.append(out)
        try:
            return MetricSpace.from_distances(points, rows, symmetric=doc.get("symmetric", True))
        except MalformedInput as e:
            raise MalformedInput(f"{path}: {e}")
    if "coords" in doc:
        try:
            return MetricSpace.from_coords(points, doc["coords"])
        except MalformedInput as e:
            raise MalformedInput(f"{path}: {e}")
    raise MalformedInput(f"{path}: missing 'distances' or 'coords'")


def load_graph(path: str) -> DirectedGraph:
    """Parse {"vertices": [...], "edges": [{"name","src","tgt"}...]}."""
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise MalformedInput(f"{path}: top level must be an object")
    vertices = _require(doc, "vertices", path)
    edges = []
    for i, entry in enumerate(_require(doc, "edges", path)):
        where = f"{path}: edges[{i}]"
        if not isinstance(entry, dict):
            raise MalformedInput(f"{where}: must be an object")
        edges.append(
            Arrow(
                _require(entry, "name", where),
                _require(entry, "src", where),
                _require(entry, "tgt", where),
            )
        )
    names = [e.name for e in edges]
    if len(set(names)) != len(names):
        raise MalformedInput(f"{path}: duplicate edge names")
    try:
        return DirectedGraph(tuple(vertices), tuple(edges))
    except MalformedInput as e:
        raise MalformedInput(f"{path}: {e}")


def load_matrix(path: str, rig: Rig) -> RigMatrix:
    """Parse a JSON array of arrays; rationals written as 'p/q' strings."""
    doc = _load_json(path)
    if not isinstance(doc, list):
        raise MalformedInput(f"{path}: top level must be an array of rows")
    rows = []
    for i, row in enumerate(doc):
        if not isinstance(row, list):
            raise MalformedInput(f"{path}: row {i} must be an array")
        parsed = []
        for j, value in enumerate(row):
            try:
                parsed.append(parse_element(rig, value))
            except MalformedInput as e:
                raise MalformedInput(f"{path}: entry [{i}][{j}]: {e}")
        rows.append(parsed)
    if any(len(r) != len(rows) for r in rows):
        raise MalformedInput(f"{path}: matrix must be square")
    return RigMatrix.from_rows(rig, rows)


def load_functor(path: str, source: FinCategory, target: FinCategory) -> Functor:
    """Parse a functor file: {"arrows": {f: Ff, ...}, "objects": {...}?}.

    The object map may be omitted; it is then derived from the images of
    the identity arrows.
    """
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise MalformedInput(f"{path}: top level must be an object")
    arrow_map = _require(doc, "arrows", path)
    if not isinstance(arrow_map, dict):
        raise MalformedInput(f"{path}: 'arrows' must map arrow names to arrow names")
    for name, image in arrow_map.items():
        if not source.has_arrow(name):
            raise MalformedInput(f"{path}: arrows: {name!r} is not an arrow of the source")
        if not target.has_arrow(image):
            raise MalformedInput(f"{path}: arrows: image {image!r} is not an arrow of the target")
    for a in source.arrows:
        if a.name not in arrow_map:
            raise MalformedInput(f"{path}: arrows: missing image for {a.name!r}")
    if "objects" in doc:
        object_map = dict(doc["objects"])
    else:
        object_map = {}
        for o in source.objects:
            image_arrow = arrow_map[source.identity[o]]
            object_map[o] = target.src(image_arrow)
    return Functor(source, target, object_map, arrow_map)
