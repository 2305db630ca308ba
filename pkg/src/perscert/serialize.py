"""Lossless JSON wire formats. Rationals travel as strings like "3/2"
(denominator omitted when 1); no floats anywhere on the wire. Every top-level
document carries a "format" field.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .complexes import FilteredComplex, MetricInput
from .errors import SchemaError
from .gf2 import GF2Matrix
from .grades import Grade, rat, rat_to_str
from .invariants import Bar, Barcode
from .persist import DeltaMorphism, Grid, InterleavingCert, PersistentObject

FORMAT_OBJECT = "perscert/persistent-object/1"
FORMAT_CERT = "perscert/interleaving/1"
FORMAT_COMPLEX = "perscert/filtered-complex/1"
FORMAT_METRIC = "perscert/metric/1"
FORMAT_BARCODE = "perscert/barcode/1"
FORMAT_MATCHING = "perscert/matching/1"
FORMAT_ZIGZAG = "perscert/zigzag/1"
FORMAT_REPORT = "perscert/report/1"


def _require(cond, message):
    if not cond:
        raise SchemaError(message)


# -- scalars and grades -------------------------------------------------------


def encode_rational(x) -> str:
    return rat_to_str(rat(x))


_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?$")


def decode_rational(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SchemaError(f"bad rational {s!r}")
    if isinstance(s, str) and not _RATIONAL_RE.match(s):
        raise SchemaError(f"bad rational {s!r}: expected an integer or 'p/q'")
    try:
        return rat(s)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {s!r}") from exc


def encode_grade(g: Grade) -> list[str]:
    return [encode_rational(c) for c in g.coords]


def decode_grade(data) -> Grade:
    _require(isinstance(data, list) and data, f"bad grade {data!r}")
    return Grade(decode_rational(c) for c in data)


# -- category elements, objects, and maps -------------------------------------


def encode_element(x):
    if isinstance(x, (str, int)):
        return x
    if isinstance(x, tuple):
        return [encode_element(v) for v in x]
    if isinstance(x, frozenset):
        return {"frozenset": sorted((encode_element(v) for v in x), key=repr)}
    raise SchemaError(f"cannot serialize element {x!r}")


def decode_element(x):
    if isinstance(x, list):
        return tuple(decode_element(v) for v in x)
    if isinstance(x, dict):
        _require(set(x.keys()) == {"frozenset"}, f"bad element {x!r}")
        return frozenset(decode_element(v) for v in x["frozenset"])
    _require(isinstance(x, (str, int)), f"bad element {x!r}")
    return x


def encode_cat_object(category: str, obj):
    if category == "F2Vec":
        return obj
    return sorted((encode_element(e) for e in obj), key=repr)


def decode_cat_object(category: str, data):
    if category == "F2Vec":
        _require(isinstance(data, int) and data >= 0, f"bad dimension {data!r}")
        return data
    _require(isinstance(data, list), f"bad object {data!r}")
    return frozenset(decode_element(e) for e in data)


def encode_cat_map(category: str, f):
    if category == "F2Vec":
        return {"rows": [list(r) for r in f.rows], "shape": [f.nrows, f.ncols]}
    return sorted(
        ([encode_element(k), encode_element(v)] for k, v in f.items()), key=repr
    )


def decode_cat_map(category: str, data):
    if category == "F2Vec":
        _require(isinstance(data, dict) and "rows" in data and "shape" in data,
                 f"bad matrix {data!r}")
        nr, nc = data["shape"]
        return GF2Matrix(data["rows"], nr, nc)
    _require(isinstance(data, list), f"bad map {data!r}")
    out = {}
    for entry in data:
        _require(isinstance(entry, list) and len(entry) == 2, f"bad map entry {entry!r}")
        out[decode_element(entry[0])] = decode_element(entry[1])
    return out


# -- persistent objects --------------------------------------------------------


def encode_object(x: PersistentObject) -> dict:
    return {
        "format": FORMAT_OBJECT,
        "m": x.m,
        "category": x.category_name,
        "integer_indexed": x.integer_indexed,
        "axes": [[encode_rational(v) for v in axis] for axis in x.grid.axes],
        "objects": {
            ",".join(map(str, idx)): encode_cat_object(x.category_name, obj)
            for idx, obj in x.objects.items()
        },
        "edge_maps": {
            ",".join(map(str, idx)) + "|" + str(a): encode_cat_map(x.category_name, f)
            for (idx, a), f in x.edge_maps.items()
        },
    }


def decode_object(data: dict) -> PersistentObject:
    _require(isinstance(data, dict), "persistent object must be a JSON object")
    _require(data.get("format") == FORMAT_OBJECT,
             f"unexpected format {data.get('format')!r}")
    category = data.get("category")
    _require(category in ("FinSet", "F2Vec", "Complex"), f"bad category {category!r}")
    axes = data.get("axes")
    _require(isinstance(axes, list) and axes, "missing axes")
    grid = Grid([[decode_rational(v) for v in axis] for axis in axes])
    objects = {}
    for key, obj in data.get("objects", {}).items():
        idx = tuple(int(p) for p in key.split(","))
        objects[idx] = decode_cat_object(category, obj)
    edges = {}
    for key, f in data.get("edge_maps", {}).items():
        _require("|" in key, f"bad edge key {key!r}")
        idx_part, axis_part = key.rsplit("|", 1)
        idx = tuple(int(p) for p in idx_part.split(","))
        edges[(idx, int(axis_part))] = decode_cat_map(category, f)
    return PersistentObject(
        grid, category, objects, edges,
        integer_indexed=bool(data.get("integer_indexed", False)),
    )


# -- morphisms and certificates -------------------------------------------------


def encode_components(f: DeltaMorphism) -> list[dict]:
    return [
        {"at": encode_grade(p), "map": encode_cat_map(f.source.category_name, comp)}
        for p, comp in sorted(f.components.items(), key=lambda kv: kv[0].coords)
    ]


def decode_morphism(source: PersistentObject, target: PersistentObject,
                    shift_data, components_data) -> DeltaMorphism:
    shift = decode_grade(shift_data)
    components = {}
    _require(isinstance(components_data, list), "components must be a list")
    for entry in components_data:
        _require(isinstance(entry, dict) and "at" in entry and "map" in entry,
                 f"bad component entry {entry!r}")
        components[decode_grade(entry["at"])] = decode_cat_map(
            source.category_name, entry["map"]
        )
    return DeltaMorphism(source, target, shift, components)


def encode_cert(cert: InterleavingCert, include_objects: bool = True) -> dict:
    out = {
        "format": FORMAT_CERT,
        "epsilon": encode_grade(cert.epsilon),
        "delta": encode_grade(cert.delta),
        "f_components": encode_components(cert.f),
        "g_components": encode_components(cert.g),
    }
    if include_objects:
        out["x"] = encode_object(cert.f.source)
        out["y"] = encode_object(cert.f.target)
    return out


def decode_cert(data: dict, x: PersistentObject | None = None,
                y: PersistentObject | None = None) -> InterleavingCert:
    _require(isinstance(data, dict), "certificate must be a JSON object")
    _require(data.get("format") == FORMAT_CERT,
             f"unexpected format {data.get('format')!r}")
    if x is None:
        _require("x" in data, "certificate lacks embedded objects")
        x = decode_object(data["x"])
    if y is None:
        _require("y" in data, "certificate lacks embedded objects")
        y = decode_object(data["y"])
    f = decode_morphism(x, y, data["epsilon"], data["f_components"])
    g = decode_morphism(y, x, data["delta"], data["g_components"])
    return InterleavingCert(f, g)


# -- filtered complexes and metrics ---------------------------------------------


def encode_filtered_complex(f: FilteredComplex) -> dict:
    return {
        "format": FORMAT_COMPLEX,
        "m": f.m,
        "vertices": [encode_element(v) for v in f.vertices],
        "simplices": [
            {"v": [encode_element(v) for v in s], "grade": encode_grade(f.grade[s])}
            for s in sorted(f.simplices, key=repr)
        ],
    }


def decode_filtered_complex(data: dict) -> FilteredComplex:
    _require(isinstance(data, dict), "filtered complex must be a JSON object")
    _require(data.get("format") == FORMAT_COMPLEX,
             f"unexpected format {data.get('format')!r}")
    vertices = [decode_element(v) for v in data.get("vertices", [])]
    simplices = []
    grade = {}
    for entry in data.get("simplices", []):
        _require(isinstance(entry, dict) and "v" in entry and "grade" in entry,
                 f"bad simplex entry {entry!r}")
        s = tuple(decode_element(v) for v in entry["v"])
        simplices.append(s)
        grade[s] = decode_grade(entry["grade"])
    return FilteredComplex(vertices, simplices, grade)


def encode_metric(mi: MetricInput) -> dict:
    out = {
        "format": FORMAT_METRIC,
        "points": [encode_element(p) for p in mi.points],
        "matrix": [[encode_rational(x) for x in row] for row in mi.dist],
    }
    if mi.values is not None:
        out["values"] = [encode_rational(v) for v in mi.values]
    return out


def decode_metric(data: dict) -> MetricInput:
    _require(isinstance(data, dict), "metric must be a JSON object")
    _require(data.get("format") == FORMAT_METRIC,
             f"unexpected format {data.get('format')!r}")
    _require("points" in data and "matrix" in data, "metric needs points and matrix")
    points = [decode_element(p) for p in data["points"]]
    matrix = [[decode_rational(x) for x in row] for row in data["matrix"]]
    values = data.get("values")
    if values is not None:
        values = [decode_rational(v) for v in values]
    return MetricInput(points, matrix, values)


# -- barcodes and matchings ------------------------------------------------------


def encode_barcode(b: Barcode) -> dict:
    return {
        "format": FORMAT_BARCODE,
        "intervals": [
            {
                "birth": encode_rational(bar.birth),
                "death": "inf" if bar.death is None else encode_rational(bar.death),
            }
            for bar in b.bars
        ],
    }


def decode_barcode(data: dict) -> Barcode:
    _require(isinstance(data, dict), "barcode must be a JSON object")
    _require(data.get("format") == FORMAT_BARCODE,
             f"unexpected format {data.get('format')!r}")
    bars = []
    for entry in data.get("intervals", []):
        _require(isinstance(entry, dict) and "birth" in entry and "death" in entry,
                 f"bad interval {entry!r}")
        death = entry["death"]
        bars.append(Bar(
            decode_rational(entry["birth"]),
            None if death == "inf" else decode_rational(death),
        ))
    return Barcode(bars)


def encode_matching(matching, cost) -> dict:
    return {
        "format": FORMAT_MATCHING,
        "cost": "inf" if cost is None else encode_rational(cost),
        "pairs": [list(p) for p in matching.pairs] if matching else [],
        "deleted_left": list(matching.deleted_left) if matching else [],
        "deleted_right": list(matching.deleted_right) if matching else [],
    }


def encode_zigzag(result) -> dict:
    return {
        "format": FORMAT_ZIGZAG,
        "c": encode_object(result.c),
        "even_restriction_equal": result.even_equal,
        "odd_restriction_equal": result.odd_equal,
        "pieces": {
            "a_to_even": encode_cert(result.piece_a),
            "even_to_odd": encode_cert(result.piece_mid),
            "odd_to_b": encode_cert(result.piece_b),
        },
        "composite": encode_cert(result.composite),
        "total_shifts": [encode_grade(s) for s in result.total_shifts],
    }
