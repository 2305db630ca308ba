"""Finite-grid persistent objects, the delta-morphism calculus, interleaving
certificates with a checker, pullback composition, and the discretization /
rescaling reindexings.

Evaluation semantics, fixed once for the whole package: a persistent object is
piecewise constant on its grid, equals the initial object of its category when
some coordinate lies below the axis minimum, and is constant above each axis
maximum.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .categories import get_category
from .errors import (
    BudgetExceededError,
    CategoryError,
    DimensionError,
    OrderError,
    ShiftError,
    ValidationError,
)
from .grades import Grade, floor_int, rat, zero_grade


@dataclass(frozen=True)
class Grid:
    """Product of m finite, strictly increasing rational axes."""

    axes: tuple[tuple[Fraction, ...], ...]

    def __init__(self, axes):
        axes = tuple(tuple(rat(v) for v in axis) for axis in axes)
        if not axes:
            raise DimensionError("a grid needs at least one axis")
        for axis in axes:
            if not axis:
                raise ValidationError("grid axes must be nonempty")
            if any(a >= b for a, b in zip(axis, axis[1:])):
                raise ValidationError("grid axes must be strictly increasing")
        object.__setattr__(self, "axes", axes)

    @property
    def m(self) -> int:
        return len(self.axes)

    def shape(self) -> tuple[int, ...]:
        return tuple(len(axis) for axis in self.axes)

    def indices(self):
        return itertools.product(*[range(len(axis)) for axis in self.axes])

    def grade_at(self, idx: tuple[int, ...]) -> Grade:
        return Grade(axis[i] for axis, i in zip(self.axes, idx))

    def points(self):
        for idx in self.indices():
            yield self.grade_at(idx)

    def eval_index(self, r: Grade) -> Optional[tuple[int, ...]]:
        """Index of the largest grid point <= r (coordinatewise, clamped
        above); None when some coordinate falls below its axis minimum."""
        if r.m != self.m:
            raise DimensionError(f"grade arity {r.m} vs grid arity {self.m}")
        idx = []
        for axis, c in zip(self.axes, r.coords):
            i = bisect.bisect_right(axis, c) - 1
            if i < 0:
                return None
            idx.append(i)
        return tuple(idx)

    def merge(self, other: "Grid") -> "Grid":
        if self.m != other.m:
            raise DimensionError("cannot merge grids of different arity")
        return Grid(
            tuple(sorted(set(a) | set(b))) for a, b in zip(self.axes, other.axes)
        )

    def translate(self, delta: Grade) -> "Grid":
        if delta.m != self.m:
            raise DimensionError("translation arity mismatch")
        return Grid(
            tuple(v + d for v in axis) for axis, d in zip(self.axes, delta.coords)
        )


def _unit(idx: tuple[int, ...], axis: int) -> tuple[int, ...]:
    return idx[:axis] + (idx[axis] + 1,) + idx[axis + 1:]


class PersistentObject:
    """A functor from R^m (or Z, when integer_indexed) to a concrete category,
    presented on a finite grid. Immutable after construction."""

    def __init__(self, grid: Grid, category: str, objects: dict, edge_maps: dict,
                 integer_indexed: bool = False, validate: bool = True):
        self.grid = grid
        self.category_name = category
        self.category = get_category(category)
        self.objects = dict(objects)
        self.edge_maps = dict(edge_maps)
        self.integer_indexed = bool(integer_indexed)
        if integer_indexed:
            if grid.m != 1:
                raise DimensionError("integer-indexed objects must have m = 1")
            if any(v.denominator != 1 for v in grid.axes[0]) or any(
                b - a != 1 for a, b in zip(grid.axes[0], grid.axes[0][1:])
            ):
                raise ValidationError("integer-indexed axis must be consecutive integers")
        if validate:
            self._validate()

    # -- validation -------------------------------------------------------

    def _validate(self) -> None:
        cat = self.category
        for idx in self.grid.indices():
            if idx not in self.objects:
                raise ValidationError(f"missing object at grid index {idx}")
            cat.check_object(self.objects[idx])
        shape = self.grid.shape()
        for idx in self.grid.indices():
            for a in range(self.grid.m):
                if idx[a] + 1 >= shape[a]:
                    continue
                key = (idx, a)
                if key not in self.edge_maps:
                    raise ValidationError(f"missing edge map at {key}")
                f = self.edge_maps[key]
                if not cat.is_map(f, self.objects[idx], self.objects[_unit(idx, a)]):
                    raise ValidationError(f"edge map at {key} is not a valid map")
        if self.grid.m >= 2:
            self._audit_squares()

    def _audit_squares(self) -> None:
        cat = self.category
        shape = self.grid.shape()
        for idx in self.grid.indices():
            for a in range(self.grid.m):
                for b in range(a + 1, self.grid.m):
                    if idx[a] + 1 >= shape[a] or idx[b] + 1 >= shape[b]:
                        continue
                    via_a = cat.compose(
                        self.edge_maps[(_unit(idx, a), b)], self.edge_maps[(idx, a)]
                    )
                    via_b = cat.compose(
                        self.edge_maps[(_unit(idx, b), a)], self.edge_maps[(idx, b)]
                    )
                    if not cat.map_equal(via_a, via_b):
                        raise ValidationError(
                            f"non-commuting square at {idx}, axes ({a},{b})"
                        )

    # -- evaluation -------------------------------------------------------

    @property
    def m(self) -> int:
        return self.grid.m

    def evaluate(self, r: Grade):
        idx = self.grid.eval_index(r)
        if idx is None:
            return self.category.initial()
        return self.objects[idx]

    def _map_between_indices(self, i: tuple[int, ...], j: tuple[int, ...]):
        cat = self.category
        f = cat.identity(self.objects[i])
        cur = list(i)
        for a in range(self.grid.m):
            while cur[a] < j[a]:
                f = cat.compose(self.edge_maps[(tuple(cur), a)], f)
                cur[a] += 1
        return f

    def structure_map(self, r: Grade, s: Grade):
        """Composite of edge maps from X(r) to X(s); requires r <= s."""
        if not r.leq(s):
            raise OrderError(f"structure map needs r <= s, got {r} and {s}")
        i = self.grid.eval_index(r)
        j = self.grid.eval_index(s)
        if i is None:
            return self.category.initial_map(self.evaluate(s))
        return self._map_between_indices(i, j)

    # -- reindexings ------------------------------------------------------

    def shift_left(self, delta: Grade) -> "PersistentObject":
        """X^delta, with X^delta(r) = X(r + delta)."""
        if delta.m != self.m:
            raise DimensionError("shift arity mismatch")
        if not delta.is_nonnegative():
            raise ShiftError(f"shift must be nonnegative, got {delta}")
        return PersistentObject(
            self.grid.translate(Grade(-c for c in delta.coords)),
            self.category_name,
            self.objects,
            self.edge_maps,
            validate=False,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PersistentObject):
            return NotImplemented
        if self.category_name != other.category_name or self.grid != other.grid:
            return False
        cat = self.category
        if any(self.objects[i] != other.objects[i] for i in self.grid.indices()):
            return False
        return all(
            cat.map_equal(self.edge_maps[k], other.edge_maps[k]) for k in self.edge_maps
        )

    def __hash__(self):
        return hash((self.category_name, self.grid))


def constant_object(category: str, value, grid: Grid) -> PersistentObject:
    cat = get_category(category)
    objects = {idx: value for idx in grid.indices()}
    edges = {}
    shape = grid.shape()
    for idx in grid.indices():
        for a in range(grid.m):
            if idx[a] + 1 < shape[a]:
                edges[(idx, a)] = cat.identity(value)
    return PersistentObject(grid, category, objects, edges)


def integer_object(category: str, values: list, maps: list, lo: int) -> PersistentObject:
    """Z-indexed object on the window [lo, lo + len(values) - 1]."""
    grid = Grid([[lo + k for k in range(len(values))]])
    objects = {(k,): v for k, v in enumerate(values)}
    edges = {((k,), 0): f for k, f in enumerate(maps)}
    return PersistentObject(grid, category, objects, edges, integer_indexed=True)


# -- delta-morphisms -------------------------------------------------------


def canonical_grid(source: PersistentObject, target: PersistentObject, shift: Grade) -> Grid:
    neg = Grade(-c for c in shift.coords)
    return source.grid.merge(target.grid.translate(neg))


class DeltaMorphism:
    """A natural transformation X -> Y^shift, stored as one concrete map per
    point of the canonical merged grid of (source, target, shift)."""

    def __init__(self, source: PersistentObject, target: PersistentObject,
                 shift: Grade, components: dict, validate: bool = True):
        if source.category_name != target.category_name:
            raise CategoryError("source and target live in different categories")
        if shift.m != source.m or shift.m != target.m:
            raise DimensionError("shift arity mismatch")
        if not shift.is_nonnegative():
            raise ShiftError(f"morphism shift must be nonnegative, got {shift}")
        self.source = source
        self.target = target
        self.shift = shift
        self.grid = canonical_grid(source, target, shift)
        self.components = dict(components)
        self.category = source.category
        if validate:
            self._validate_components()

    @classmethod
    def from_fn(cls, source, target, shift, fn: Callable[[Grade], object],
                validate: bool = True) -> "DeltaMorphism":
        grid = canonical_grid(source, target, shift)
        components = {p: fn(p) for p in grid.points()}
        return cls(source, target, shift, components, validate=validate)

    def _validate_components(self) -> None:
        cat = self.category
        for p in self.grid.points():
            if p not in self.components:
                raise ValidationError(f"missing component at {p}")
            f = self.components[p]
            src = self.source.evaluate(p)
            tgt = self.target.evaluate(p + self.shift)
            if not cat.is_map(f, src, tgt):
                raise ValidationError(f"component at {p} is not a map {src!r} -> {tgt!r}")

    def component_at(self, r: Grade):
        idx = self.grid.eval_index(r)
        if idx is None:
            # below the merged grid the source is the initial object
            return self.category.initial_map(self.target.evaluate(r + self.shift))
        return self.components[self.grid.grade_at(idx)]

    def check_natural(self) -> Optional[tuple[Grade, int]]:
        """None when natural; otherwise (grade, axis) of the first violation."""
        cat = self.category
        shape = self.grid.shape()
        for idx in self.grid.indices():
            p = self.grid.grade_at(idx)
            for a in range(self.grid.m):
                if idx[a] + 1 >= shape[a]:
                    continue
                q = self.grid.grade_at(_unit(idx, a))
                upper = cat.compose(
                    self.target.structure_map(p + self.shift, q + self.shift),
                    self.components[p],
                )
                lower = cat.compose(self.components[q], self.source.structure_map(p, q))
                if not cat.map_equal(upper, lower):
                    return (p, a)
        return None

    def is_natural(self) -> bool:
        return self.check_natural() is None

    def equals(self, other: "DeltaMorphism") -> bool:
        if self.shift != other.shift:
            return False
        if self.source != other.source or self.target != other.target:
            return False
        cat = self.category
        return all(
            cat.map_equal(self.components[p], other.components[p])
            for p in self.grid.points()
        )

    def first_difference(self, other: "DeltaMorphism") -> Optional[Grade]:
        cat = self.category
        for p in sorted(self.grid.points(), key=lambda g: g.coords):
            if not cat.map_equal(self.components[p], other.components[p]):
                return p
        return None


def identity_shift(x: PersistentObject, delta: Grade) -> DeltaMorphism:
    """S_{0,delta}(id_X): components are the structure maps phi_{r, r+delta}."""
    return DeltaMorphism.from_fn(
        x, x, delta, lambda r: x.structure_map(r, r + delta), validate=False
    )


def shift_morphism(f: DeltaMorphism, delta: Grade) -> DeltaMorphism:
    """S_{eps,delta}(f), post-composing with target structure maps."""
    if not f.shift.leq(delta):
        raise OrderError(f"cannot shift from {f.shift} to smaller {delta}")
    cat = f.category

    def comp(r: Grade):
        return cat.compose(
            f.target.structure_map(r + f.shift, r + delta), f.component_at(r)
        )

    return DeltaMorphism.from_fn(f.source, f.target, delta, comp, validate=False)


def compose(f: DeltaMorphism, g: DeltaMorphism) -> DeltaMorphism:
    """g after f, an (eps + delta)-morphism."""
    if f.target != g.source:
        raise CategoryError("composition mismatch: target of f is not source of g")
    cat = f.category
    shift = f.shift + g.shift

    def comp(r: Grade):
        return cat.compose(g.component_at(r + f.shift), f.component_at(r))

    return DeltaMorphism.from_fn(f.source, g.target, shift, comp, validate=False)


# -- interleaving certificates ---------------------------------------------


@dataclass
class InterleavingCert:
    f: DeltaMorphism  # X ->_eps Y
    g: DeltaMorphism  # Y ->_delta X

    def __post_init__(self):
        if self.f.source != self.g.target or self.f.target != self.g.source:
            raise CategoryError("certificate morphisms do not pair up")

    @property
    def epsilon(self) -> Grade:
        return self.f.shift

    @property
    def delta(self) -> Grade:
        return self.g.shift


@dataclass
class InterleavingReport:
    valid: bool
    reason: str = ""
    grade: Optional[Grade] = None
    identity: Optional[str] = None


def check_interleaving(cert: InterleavingCert) -> InterleavingReport:
    """Checks naturality of both legs and the two triangle identities on the
    merged grids; reports the first violating grade."""
    for name, leg in (("f", cert.f), ("g", cert.g)):
        violation = leg.check_natural()
        if violation is not None:
            p, axis = violation
            return InterleavingReport(
                False, f"{name} is not natural at {p} along axis {axis}", p, f"naturality({name})"
            )
    total = cert.epsilon + cert.delta
    x = cert.f.source
    y = cert.f.target
    left = compose(cert.f, cert.g)
    want = identity_shift(x, total)
    p = left.first_difference(want)
    if p is not None:
        return InterleavingReport(
            False, f"g^eps . f differs from the structure-map shift of X at {p}", p, "triangle(X)"
        )
    right = compose(cert.g, cert.f)
    want = identity_shift(y, total)
    p = right.first_difference(want)
    if p is not None:
        return InterleavingReport(
            False, f"f^delta . g differs from the structure-map shift of Y at {p}", p, "triangle(Y)"
        )
    return InterleavingReport(True, "valid interleaving")


def self_interleaving(x: PersistentObject, delta: Grade) -> InterleavingCert:
    s = identity_shift(x, delta)
    return InterleavingCert(s, s)


def compose_interleavings(c1: InterleavingCert, c2: InterleavingCert) -> InterleavingCert:
    """X ~(e1,e2)~ Y with Y ~(d1,d2)~ Z gives X ~(e1+d1, e2+d2)~ Z."""
    if c1.f.target != c2.f.source:
        raise CategoryError("middle objects of the two certificates differ")
    return InterleavingCert(compose(c1.f, c2.f), compose(c2.g, c1.g))


# -- pullback of an interleaving -------------------------------------------


@dataclass
class PullbackResult:
    pullback: PersistentObject  # A
    cert: InterleavingCert      # A ~(eps,delta)~ B
    projection: DeltaMorphism   # A ->_0 X


def pullback_interleaving(cert: InterleavingCert, h: DeltaMorphism) -> PullbackResult:
    """Pull an (eps,delta)-interleaving (f, g) between X and Y back along a
    plain morphism h: B -> Y, producing an (eps,delta)-interleaving between
    the pointwise fiber product A and B."""
    x, y = cert.f.source, cert.f.target
    eps, delta = cert.epsilon, cert.delta
    if h.shift != zero_grade(h.shift.m):
        raise ShiftError("h must be a plain (0-shift) morphism")
    if h.target != y:
        raise CategoryError("h must land in the target of the interleaving")
    cat = x.category
    if not hasattr(cat, "fiber_product"):
        raise CategoryError(f"{cat.name} does not support pullbacks")
    b = h.source

    neg_eps = Grade(-c for c in eps.coords)
    a_grid = x.grid.merge(b.grid.translate(neg_eps))

    objects = {}
    proj_x_maps = {}
    proj_b_maps = {}
    pairs = {}
    for idx in a_grid.indices():
        p = a_grid.grade_at(idx)
        f_p = cert.f.component_at(p)
        h_pe = h.component_at(p + eps)
        a_obj, px, pb, pair = cat.fiber_product(f_p, h_pe, x.evaluate(p), b.evaluate(p + eps))
        objects[idx] = a_obj
        proj_x_maps[p] = px
        proj_b_maps[p] = pb
        pairs[p] = pair

    shape = a_grid.shape()
    edges = {}
    for idx in a_grid.indices():
        p = a_grid.grade_at(idx)
        for ax in range(a_grid.m):
            if idx[ax] + 1 >= shape[ax]:
                continue
            q = a_grid.grade_at(_unit(idx, ax))
            u = cat.compose(x.structure_map(p, q), proj_x_maps[p])
            v = cat.compose(b.structure_map(p + eps, q + eps), proj_b_maps[p])
            edges[(idx, ax)] = pairs[q](u, v, objects[idx])

    a = PersistentObject(a_grid, x.category_name, objects, edges)

    def pair_at(r: Grade, u, v, w_obj):
        idx = a_grid.eval_index(r)
        if idx is None:
            return cat.initial_map(cat.initial())
        return pairs[a_grid.grade_at(idx)](u, v, w_obj)

    # k : A ->_eps B is the second projection
    k = DeltaMorphism.from_fn(a, b, eps, lambda r: proj_b_maps[r], validate=False)
    # projection A ->_0 X
    def proj_component(r: Grade):
        idx = a_grid.eval_index(r)
        if idx is None:
            return cat.initial_map(x.evaluate(r))
        return proj_x_maps[a_grid.grade_at(idx)]

    proj = DeltaMorphism.from_fn(a, x, zero_grade(x.m), proj_component, validate=False)

    # l : B ->_delta A from the universal property, built out of g . h and
    # the structure-map shift of B
    def l_component(r: Grade):
        b_r = b.evaluate(r)
        u = cat.compose(cert.g.component_at(r), h.component_at(r))
        v = b.structure_map(r, r + eps + delta)
        return pair_at(r + delta, u, v, b_r)

    l = DeltaMorphism.from_fn(b, a, delta, l_component, validate=False)
    return PullbackResult(a, InterleavingCert(k, l), proj)


# -- discretization and rescaling -------------------------------------------


def restrict_to_Z(x: PersistentObject) -> PersistentObject:
    """Sample a 1-parameter object at the integers of a window covering its
    grid."""
    if x.m != 1:
        raise DimensionError("restrict_to_Z needs m = 1")
    axis = x.grid.axes[0]
    lo = floor_int(axis[0])
    hi = floor_int(axis[-1]) + 1
    values = [x.evaluate(Grade([n])) for n in range(lo, hi + 1)]
    maps = [x.structure_map(Grade([n]), Grade([n + 1])) for n in range(lo, hi)]
    return integer_object(x.category_name, values, maps, lo)


def extend_floor(a: PersistentObject) -> PersistentObject:
    """i_*(A): precompose a Z-indexed object with the floor map. With the
    piecewise-constant semantics this is the same grid data, viewed over R."""
    if not a.integer_indexed:
        raise ValidationError("extend_floor expects an integer-indexed object")
    return PersistentObject(
        a.grid, a.category_name, a.objects, a.edge_maps, integer_indexed=False,
        validate=False,
    )


def floor_roundtrip_cert(x: PersistentObject) -> InterleavingCert:
    """The 1-interleaving between X and the floor-extension of its integer
    restriction."""
    a = extend_floor(restrict_to_Z(x))

    def f_comp(r: Grade):
        t = Grade([floor_int(r.coords[0] + 1)])
        return x.structure_map(r, t)

    def g_comp(r: Grade):
        s = Grade([floor_int(r.coords[0])])
        return x.structure_map(s, r + Grade([1])) if x.grid.eval_index(s) is not None \
            else x.category.initial_map(x.evaluate(r + Grade([1])))

    one = Grade([1])
    f = DeltaMorphism.from_fn(x, a, one, f_comp, validate=False)
    g = DeltaMorphism.from_fn(a, x, one, g_comp, validate=False)
    return InterleavingCert(f, g)


def rescale(x: PersistentObject, c) -> PersistentObject:
    """(M_c)^*(X) with M_c(r) = c * r: the grid axis is divided by c."""
    c = rat(c)
    if x.m != 1:
        raise DimensionError("rescale needs m = 1")
    if c <= 0:
        from .errors import InvalidScaleError

        raise InvalidScaleError("rescale factor must be positive")
    grid = Grid([tuple(v / c for v in x.grid.axes[0])])
    return PersistentObject(grid, x.category_name, x.objects, x.edge_maps, validate=False)


def rescale_morphism(f: DeltaMorphism, c) -> DeltaMorphism:
    c = rat(c)
    src = rescale(f.source, c)
    tgt = rescale(f.target, c)
    shift = Grade([f.shift.coords[0] / c])
    components = {Grade([p.coords[0] / c]): m for p, m in f.components.items()}
    return DeltaMorphism(src, tgt, shift, components, validate=False)


def rescale_cert(cert: InterleavingCert, c) -> InterleavingCert:
    return InterleavingCert(rescale_morphism(cert.f, c), rescale_morphism(cert.g, c))


# -- brute-force searches ---------------------------------------------------


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1):
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceededError(f"search budget of {self.limit} exhausted")


def _enumerate_natural(x: PersistentObject, y: PersistentObject, shift: Grade,
                       budget: _Budget):
    """Yield every natural delta-morphism x ->_shift y by backtracking over
    the canonical grid (m = 1), pruning with the edge naturality condition."""
    grid = canonical_grid(x, y, shift)
    points = sorted(grid.points(), key=lambda g: g.coords)
    cat = x.category

    def backtrack(i: int, chosen: dict):
        if i == len(points):
            yield dict(chosen)
            return
        p = points[i]
        src = x.evaluate(p)
        tgt = y.evaluate(p + shift)
        for cand in cat.enumerate_maps(src, tgt):
            budget.spend()
            if i > 0:
                prev = points[i - 1]
                upper = cat.compose(
                    y.structure_map(prev + shift, p + shift), chosen[prev]
                )
                lower = cat.compose(cand, x.structure_map(prev, p))
                if not cat.map_equal(upper, lower):
                    continue
            chosen[p] = cand
            yield from backtrack(i + 1, chosen)
            del chosen[p]

    yield from backtrack(0, {})


def find_partner(f: DeltaMorphism, delta: Grade, budget_limit: int = 200_000
                 ) -> Optional[InterleavingCert]:
    """Exhaustively search a partner g making (f, g) a valid
    (f.shift, delta)-interleaving. m = 1 only."""
    if f.source.m != 1:
        raise DimensionError("partner search supports m = 1 only")
    budget = _Budget(budget_limit)
    for g_components in _enumerate_natural(f.target, f.source, delta, budget):
        g = DeltaMorphism(f.target, f.source, delta, g_components, validate=False)
        cert = InterleavingCert(f, g)
        if check_interleaving(cert).valid:
            return cert
    return None


def _search_at_delta(x: PersistentObject, y: PersistentObject, delta: Grade,
                     budget: _Budget) -> Optional[InterleavingCert]:
    for f_components in _enumerate_natural(x, y, delta, budget):
        f = DeltaMorphism(x, y, delta, f_components, validate=False)
        for g_components in _enumerate_natural(y, x, delta, budget):
            g = DeltaMorphism(y, x, delta, g_components, validate=False)
            cert = InterleavingCert(f, g)
            if check_interleaving(cert).valid:
                return cert
    return None


@dataclass
class SearchResult:
    distance: Optional[Fraction]  # None means +infinity
    certificate: Optional[InterleavingCert]
    candidates: list = field(default_factory=list)
    reason: str = ""


def interleaving_candidates(x: PersistentObject, y: PersistentObject) -> list[Fraction]:
    """D = {0} union {b - a, (b - a)/2 : a <= b critical grades}."""
    crit = sorted(set(x.grid.axes[0]) | set(y.grid.axes[0]))
    deltas = {Fraction(0)}
    for a in crit:
        for b in crit:
            if a <= b:
                deltas.add(b - a)
                deltas.add((b - a) / 2)
    return sorted(deltas)


def interleaving_distance_search(x: PersistentObject, y: PersistentObject,
                                 budget: int = 200_000) -> SearchResult:
    """Least candidate delta admitting a valid delta-interleaving, found by
    exhaustive enumeration of component maps (m = 1, FinSet or F2Vec).

    The answer is a certified upper bound on the interleaving distance; it
    equals the distance whenever the candidate set is complete.
    """
    if x.m != 1 or y.m != 1:
        raise DimensionError("distance search supports m = 1 only")
    if x.category_name not in ("FinSet", "F2Vec"):
        raise CategoryError("distance search supports FinSet and F2Vec only")
    candidates = interleaving_candidates(x, y)
    shared = _Budget(budget)
    incomplete = False
    for delta in candidates:
        try:
            cert = _search_at_delta(x, y, Grade([delta]), shared)
        except BudgetExceededError:
            incomplete = True
            break
        if cert is not None:
            return SearchResult(delta, cert, candidates, "least valid candidate")
    if incomplete:
        raise BudgetExceededError(
            f"search budget of {budget} exhausted before settling all candidates",
            upper_bound=None,
        )
    return SearchResult(None, None, candidates,
                        "no candidate delta admits a certificate")
