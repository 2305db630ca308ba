"""Filtered simplicial complexes with R^m entrance grades, the filtered /
cofibrant characterization, and the example filtrations: Vietoris-Rips,
function-Rips bifiltrations, degree-Rips, and the two-parameter square gadget.

A total order on the vertices is fixed by each complex, so a complex here
stands in for the simplicial set it generates; degenerate simplices carry no
extra grade data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .categories import COMPLEX, complex_vertices, simplex
from .errors import CategoryError, DimensionError, SchemaError, ValidationError
from .grades import Grade, rat
from .persist import Grid, PersistentObject, _unit


@dataclass
class ValidationReport:
    valid: bool
    reason: str = ""
    offender: Optional[tuple] = None


@dataclass(frozen=True)
class FilteredComplex:
    """Simplices with entrance grades; faces enter no later than cofaces."""

    vertices: tuple
    simplices: frozenset
    grade: dict  # simplex -> Grade

    def __init__(self, vertices, simplices, grade):
        vertices = tuple(vertices)
        simplices = frozenset(simplex(s) for s in simplices)
        grade = {simplex(s): g for s, g in grade.items()}
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "simplices", simplices)
        object.__setattr__(self, "grade", grade)

    @property
    def m(self) -> int:
        some = next(iter(self.grade.values()), None)
        return some.m if some is not None else 1

    def dimension(self) -> int:
        """Max simplex dimension; -1 for the empty complex by convention."""
        if not self.simplices:
            return -1
        return max(len(s) for s in self.simplices) - 1


def validate(f: FilteredComplex) -> ValidationReport:
    """Face closure plus monotonicity of the entrance grades."""
    for sigma in sorted(f.simplices):
        for v in sigma:
            if v not in f.vertices:
                return ValidationReport(False, f"unknown vertex {v!r}", sigma)
        if sigma not in f.grade:
            return ValidationReport(False, "simplex missing a grade", sigma)
        for i in range(len(sigma)):
            face = sigma[:i] + sigma[i + 1:]
            if not face:
                continue
            if face not in f.simplices:
                return ValidationReport(False, f"face {face!r} missing", sigma)
            if not f.grade[face].leq(f.grade[sigma]):
                return ValidationReport(
                    False, f"grade of face {face!r} exceeds grade of {sigma!r}", sigma
                )
    ms = {g.m for g in f.grade.values()}
    if len(ms) > 1:
        return ValidationReport(False, "grades of mixed arity", None)
    return ValidationReport(True, "valid filtered complex")


def to_persistent(f: FilteredComplex) -> PersistentObject:
    """Sublevel filtration: at r, the subcomplex of simplices with grade <= r;
    all structure maps are inclusions."""
    report = validate(f)
    if not report.valid:
        raise ValidationError(report.reason)
    if not f.simplices:
        grid = Grid([[0]] )
        return PersistentObject(grid, "Complex", {(0,): frozenset()}, {})
    m = f.m
    axes = [sorted({g.coords[a] for g in f.grade.values()}) for a in range(m)]
    grid = Grid(axes)
    objects = {}
    for idx in grid.indices():
        r = grid.grade_at(idx)
        objects[idx] = frozenset(s for s in f.simplices if f.grade[s].leq(r))
    edges = {}
    shape = grid.shape()
    for idx in grid.indices():
        for a in range(m):
            if idx[a] + 1 < shape[a]:
                edges[(idx, a)] = {v: v for v in complex_vertices(objects[idx])}
    return PersistentObject(grid, "Complex", objects, edges)


@dataclass
class FilteredCheck:
    filtered: bool
    witness: Optional[dict] = None  # simplex (in the top complex) -> Grade
    condition: Optional[int] = None
    offender: Optional[tuple] = None
    reason: str = ""


def is_filtered(p: PersistentObject) -> FilteredCheck:
    """Decides the two-condition characterization: all structure maps are
    monomorphisms, and every simplex's appearance set has a minimum grade.

    On success the witness entrance grades are returned; they are read off at
    the top corner of the grid."""
    if p.category_name != "Complex":
        raise CategoryError("is_filtered expects a persistent complex")
    cat = COMPLEX
    shape = p.grid.shape()
    # condition 1: injectivity of every edge map on simplices
    for idx in p.grid.indices():
        for a in range(p.m):
            if idx[a] + 1 >= shape[a]:
                continue
            f = p.edge_maps[(idx, a)]
            if not cat.is_injective(f, p.objects[idx]):
                return FilteredCheck(
                    False, condition=1, offender=idx,
                    reason=f"structure map at {idx} along axis {a} is not a monomorphism",
                )
    # condition 2: identify each simplex with its image at the top corner and
    # ask whether its appearance set has a coordinatewise minimum grid point
    top = tuple(s - 1 for s in shape)
    appearance: dict[tuple, set] = {}
    for idx in p.grid.indices():
        to_top = p._map_between_indices(idx, top)
        for sigma in p.objects[idx]:
            appearance.setdefault(cat.apply_simplex(to_top, sigma), set()).add(idx)
    witness = {}
    for tau, idxs in appearance.items():
        mins = tuple(min(i[a] for i in idxs) for a in range(p.m))
        if mins not in idxs:
            return FilteredCheck(
                False, condition=2, offender=tau,
                reason=f"appearance set of {tau!r} has no minimum",
            )
        witness[tau] = p.grid.grade_at(mins)
    return FilteredCheck(True, witness=witness)


# -- dimension / skeleta ----------------------------------------------------


def dimension(f: FilteredComplex) -> int:
    return f.dimension()


def is_n_skeletal(f: FilteredComplex, n: int) -> bool:
    return f.dimension() <= n


def cofibrant_dimension(f: FilteredComplex) -> int:
    """Length of the dimension-ordered cell decomposition: a valid filtered
    complex attaches its cells in order of dimension."""
    report = validate(f)
    if not report.valid:
        raise ValidationError(report.reason)
    return f.dimension()


def skeleton(f: FilteredComplex, n: int) -> FilteredComplex:
    if n < 0:
        raise ValidationError("skeleton truncation needs n >= 0")
    keep = {s for s in f.simplices if len(s) <= n + 1}
    return FilteredComplex(f.vertices, keep, {s: f.grade[s] for s in keep})


# -- metric inputs and the example filtrations -------------------------------


@dataclass(frozen=True)
class MetricInput:
    """A finite symmetric rational dissimilarity matrix; the triangle
    inequality is deliberately not required."""

    points: tuple
    dist: tuple  # tuple of tuples of Fractions
    values: Optional[tuple] = None  # optional vertex function

    def __init__(self, points, dist, values=None):
        points = tuple(points)
        dist = tuple(tuple(rat(x) for x in row) for row in dist)
        n = len(points)
        if len(dist) != n or any(len(row) != n for row in dist):
            raise SchemaError("dissimilarity matrix shape does not match points")
        for i in range(n):
            if dist[i][i] != 0:
                raise SchemaError("dissimilarity matrix must have zero diagonal")
            for j in range(n):
                if dist[i][j] != dist[j][i]:
                    raise SchemaError("dissimilarity matrix must be symmetric")
        if values is not None:
            values = tuple(rat(v) for v in values)
            if len(values) != n:
                raise SchemaError("vertex function length does not match points")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "dist", dist)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.points)

    def diameter(self, subset: tuple) -> Fraction:
        idx = [self.points.index(v) for v in subset]
        if len(idx) == 1:
            return Fraction(0)
        return max(self.dist[i][j] for i, j in itertools.combinations(idx, 2))


def metric_from_coordinates(coords, norm: str = "linf") -> MetricInput:
    """L1 or Linf distances from rational coordinates (Euclidean would be
    irrational, so it is excluded)."""
    coords = [tuple(rat(c) for c in pt) for pt in coords]
    n = len(coords)
    dist = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            diffs = [abs(a - b) for a, b in zip(coords[i], coords[j])]
            d = sum(diffs) if norm == "l1" else max(diffs)
            dist[i][j] = dist[j][i] = d
    return MetricInput(range(n), dist)


def vietoris_rips(metric: MetricInput, d_max: int) -> FilteredComplex:
    """Simplices are the vertex subsets of size <= d_max + 1, graded by
    diameter."""
    if d_max < 0:
        raise ValidationError("d_max must be >= 0")
    simplices = {}
    for k in range(1, min(d_max + 2, metric.n + 1)):
        for subset in itertools.combinations(metric.points, k):
            simplices[simplex(subset)] = Grade([metric.diameter(subset)])
    return FilteredComplex(metric.points, simplices.keys(), simplices)


def function_rips(metric: MetricInput, d_max: int) -> FilteredComplex:
    """Bifiltration graded by (diameter, max vertex value)."""
    if metric.values is None:
        raise SchemaError("function_rips needs vertex function values")
    vals = dict(zip(metric.points, metric.values))
    base = vietoris_rips(metric, d_max)
    grade = {
        s: Grade([base.grade[s].coords[0], max(vals[v] for v in s)])
        for s in base.simplices
    }
    return FilteredComplex(metric.points, base.simplices, grade)


def degree_rips(metric: MetricInput, d_max: int) -> PersistentObject:
    """Two-parameter degree-Rips. At (r, t) with t = -k, take the scale-r
    Rips complex restricted to vertices of r-neighborhood degree >= k. The
    second axis is negated so both axes increase; the output is generally
    monic but not filtered."""
    n = metric.n
    scales = sorted({metric.dist[i][j] for i in range(n) for j in range(n)})
    degrees_axis = [Fraction(-k) for k in range(n - 1, -1, -1)] or [Fraction(0)]
    grid = Grid([scales, degrees_axis])
    base = vietoris_rips(metric, d_max)
    objects = {}
    for idx in grid.indices():
        r, t = grid.grade_at(idx).coords
        k = -t
        keep_vertices = set()
        for i, v in enumerate(metric.points):
            deg = sum(
                1 for j in range(n) if j != i and metric.dist[i][j] <= r
            )
            if deg >= k:
                keep_vertices.add(v)
        objects[idx] = frozenset(
            s for s in base.simplices
            if base.grade[s].coords[0] <= r and all(v in keep_vertices for v in s)
        )
    edges = {}
    shape = grid.shape()
    for idx in grid.indices():
        for a in range(2):
            if idx[a] + 1 < shape[a]:
                edges[(idx, a)] = {v: v for v in complex_vertices(objects[idx])}
    return PersistentObject(grid, "Complex", objects, edges)


# -- the two-parameter square gadget ----------------------------------------


POINT_VERTEX = "*"
POINT_COMPLEX = frozenset({(POINT_VERTEX,)})


@dataclass(frozen=True)
class SquareDiagram:
    """A commuting square of complexes: corners indexed by (0,0), (1,0),
    (0,1), (1,1) with maps along the two edges out of each lower corner."""

    corners: dict   # (i,j) -> complex object
    maps: dict      # ((i,j), axis) -> vertex map

    def check(self) -> None:
        cat = COMPLEX
        for key in ((0, 0), (1, 0), (0, 1), (1, 1)):
            if key not in self.corners:
                raise ValidationError(f"square diagram missing corner {key}")
            cat.check_object(self.corners[key])
        for (src, axis), tgt in (
            (((0, 0), 0), (1, 0)),
            (((0, 0), 1), (0, 1)),
            (((1, 0), 1), (1, 1)),
            (((0, 1), 0), (1, 1)),
        ):
            f = self.maps.get((src, axis))
            if f is None or not cat.is_map(f, self.corners[src], self.corners[tgt]):
                raise ValidationError(f"square diagram missing or invalid map at {(src, axis)}")
        upper = cat.compose(self.maps[((1, 0), 1)], self.maps[((0, 0), 0)])
        lower = cat.compose(self.maps[((0, 1), 0)], self.maps[((0, 0), 1)])
        if not cat.map_equal(upper, lower):
            raise ValidationError("square does not commute")


def sq_gadget(diagram: SquareDiagram) -> PersistentObject:
    """Embed a commuting square into a two-parameter persistent complex:
    empty on negative coordinates, the square on [0,2)^2 via floors, and a
    single point once some coordinate reaches 2."""
    diagram.check()
    cat = COMPLEX
    grid = Grid([[-1, 0, 1, 2, 3], [-1, 0, 1, 2, 3]])

    def value(r, s):
        if r < 0 or s < 0:
            return cat.initial()
        if r < 2 and s < 2:
            return diagram.corners[(int(r), int(s))]
        return POINT_COMPLEX

    objects = {}
    for idx in grid.indices():
        r, s = grid.grade_at(idx).coords
        objects[idx] = value(r, s)

    def edge(r, s, axis):
        r2, s2 = (r + 1, s) if axis == 0 else (r, s + 1)
        src = value(r, s)
        tgt = value(r2, s2)
        if not src:
            return {}
        if tgt == POINT_COMPLEX:
            return {v: POINT_VERTEX for v in complex_vertices(src)}
        return diagram.maps[((int(r), int(s)), axis)]

    edges = {}
    shape = grid.shape()
    for idx in grid.indices():
        r, s = grid.grade_at(idx).coords
        for a in range(2):
            if idx[a] + 1 < shape[a]:
                edges[(idx, a)] = edge(r, s, a)
    return PersistentObject(grid, "Complex", objects, edges)
