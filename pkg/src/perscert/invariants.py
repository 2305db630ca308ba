"""Persistent invariants: connected components via union-find, simplicial
homology over GF(2) with induced maps, barcodes, and the component-level
"induces an interleaving" check.

Homology bases are chosen deterministically from the sorted simplex list, so
recomputing the basis of the same complex always agrees; induced maps between
any two complexes can therefore be produced on demand.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .categories import COMPLEX, FINSET, complex_vertices
from .errors import CategoryError, DimensionError, ValidationError
from .gf2 import GF2Matrix, extend_to_basis
from .grades import Grade
from .persist import (
    DeltaMorphism,
    InterleavingCert,
    PersistentObject,
    find_partner,
)


class UnionFind:
    """Union-find with path compression over hashable items."""

    def __init__(self, items=()):
        self.parent = {x: x for x in items}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def components(self) -> dict:
        """item -> frozenset of its component."""
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), set()).add(x)
        return {x: frozenset(groups[self.find(x)]) for x in self.parent}


def components_of_complex(k: frozenset) -> dict:
    """vertex -> component id (the frozenset of the component's vertices)."""
    uf = UnionFind(complex_vertices(k))
    for sigma in k:
        for a, b in zip(sigma, sigma[1:]):
            uf.union(a, b)
    return uf.components()


def bfs_component_count(k: frozenset) -> int:
    """Independent oracle: count components by breadth-first search over the
    1-skeleton."""
    verts = complex_vertices(k)
    adjacency = {v: set() for v in verts}
    for sigma in k:
        for a in sigma:
            for b in sigma:
                if a != b:
                    adjacency[a].add(b)
    seen = set()
    count = 0
    for v in verts:
        if v in seen:
            continue
        count += 1
        queue = deque([v])
        seen.add(v)
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return count


def pi0(x: PersistentObject) -> PersistentObject:
    """Persistent set of connected components; component ids are the vertex
    sets, and induced maps follow the structure maps."""
    if x.category_name != "Complex":
        raise CategoryError("pi0 expects a persistent complex")
    comp_maps = {idx: components_of_complex(x.objects[idx]) for idx in x.grid.indices()}
    objects = {idx: frozenset(cm.values()) for idx, cm in comp_maps.items()}
    edges = {}
    for (idx, a), f in x.edge_maps.items():
        src_cm = comp_maps[idx]
        tgt_idx = idx[:a] + (idx[a] + 1,) + idx[a + 1:]
        tgt_cm = comp_maps[tgt_idx]
        edge = {}
        for comp in objects[idx]:
            v = next(iter(comp))
            edge[comp] = tgt_cm[f[v]]
        edges[(idx, a)] = edge
    return PersistentObject(
        x.grid, "FinSet", objects, edges, integer_indexed=x.integer_indexed
    )


def pi0_induced(f: DeltaMorphism) -> DeltaMorphism:
    """Component map induced by a delta-morphism of complexes."""
    if f.source.category_name != "Complex":
        raise CategoryError("pi0_induced expects complexes")
    violation = f.check_natural()
    if violation is not None:
        raise ValidationError(f"input morphism is not natural at {violation[0]}")
    px = pi0(f.source)
    py = pi0(f.target)

    def component(r: Grade):
        k_src = f.source.evaluate(r)
        cm_src = components_of_complex(k_src)
        cm_tgt = components_of_complex(f.target.evaluate(r + f.shift))
        vmap = f.component_at(r)
        out = {}
        for comp in {cm_src[v] for v in complex_vertices(k_src)}:
            v = next(iter(comp))
            out[comp] = cm_tgt[vmap[v]]
        return out

    return DeltaMorphism.from_fn(px, py, f.shift, component)


# -- homology over GF(2) ----------------------------------------------------


def _simplices_of_dim(k: frozenset, n: int) -> list[tuple]:
    return sorted(s for s in k if len(s) == n + 1)


def boundary_matrix(k: frozenset, n: int) -> GF2Matrix:
    """Boundary from n-chains to (n-1)-chains, columns indexed by the sorted
    n-simplices."""
    rows_idx = {s: i for i, s in enumerate(_simplices_of_dim(k, n - 1))}
    cols = _simplices_of_dim(k, n)
    mat = [[0] * len(cols) for _ in rows_idx]
    for j, sigma in enumerate(cols):
        for i in range(len(sigma)):
            face = sigma[:i] + sigma[i + 1:]
            if face in rows_idx:
                mat[rows_idx[face]][j] ^= 1
    return GF2Matrix(mat, len(rows_idx), len(cols))


def homology_basis(k: frozenset, n: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """(representative cycles, boundary basis) for H_n(k; GF(2)), as vectors
    over the sorted n-simplices. Deterministic in the complex."""
    n_simplices = _simplices_of_dim(k, n)
    dim_cn = len(n_simplices)
    if n == 0:
        cycles = [tuple(1 if i == j else 0 for i in range(dim_cn)) for j in range(dim_cn)]
    else:
        cycles = boundary_matrix(k, n).kernel_basis()
    bdry = boundary_matrix(k, n + 1)
    boundary_vecs = []
    for col in bdry.columns():
        trial = boundary_vecs + [col]
        if GF2Matrix([list(v) for v in trial]).rank() > len(boundary_vecs):
            boundary_vecs.append(col)
    reps = extend_to_basis(boundary_vecs, cycles)
    return reps, boundary_vecs


def chain_map_matrix(k: frozenset, l: frozenset, vmap: dict, n: int) -> GF2Matrix:
    """Induced map on n-chains: degenerate images (collapsed simplices) map
    to zero."""
    src = _simplices_of_dim(k, n)
    tgt_idx = {s: i for i, s in enumerate(_simplices_of_dim(l, n))}
    cols = []
    for sigma in src:
        image = COMPLEX.apply_simplex(vmap, sigma)
        vec = [0] * len(tgt_idx)
        if len(image) == len(sigma):
            vec[tgt_idx[image]] = 1
        cols.append(vec)
    return GF2Matrix.from_columns(cols, len(tgt_idx))


def induced_h_map(k: frozenset, l: frozenset, vmap: dict, n: int) -> GF2Matrix:
    """H_n(k) -> H_n(l) in the deterministic bases."""
    reps_k, _ = homology_basis(k, n)
    reps_l, bdry_l = homology_basis(l, n)
    chain = chain_map_matrix(k, l, vmap, n)
    solver = GF2Matrix.from_columns(
        list(reps_l) + list(bdry_l), chain.nrows
    )
    cols = []
    for rep in reps_k:
        z = chain.apply(rep)
        sol = solver.solve(z)
        if sol is None:
            raise ValidationError("image of a cycle is not a cycle: not a chain map")
        cols.append(sol[: len(reps_l)])
    return GF2Matrix.from_columns(cols, len(reps_l))


def homology(x: PersistentObject, n: int) -> PersistentObject:
    """Persistent GF(2) homology in degree n of a 1-parameter persistent
    complex."""
    if x.category_name != "Complex":
        raise CategoryError("homology expects a persistent complex")
    if x.m != 1:
        raise DimensionError("homology is restricted to m = 1; slice first")
    objects = {}
    for idx in x.grid.indices():
        reps, _ = homology_basis(x.objects[idx], n)
        objects[idx] = len(reps)
    edges = {}
    for (idx, a), vmap in x.edge_maps.items():
        tgt_idx = idx[:a] + (idx[a] + 1,) + idx[a + 1:]
        edges[(idx, a)] = induced_h_map(x.objects[idx], x.objects[tgt_idx], vmap, n)
    return PersistentObject(
        x.grid, "F2Vec", objects, edges, integer_indexed=x.integer_indexed
    )


def slice_axis(x: PersistentObject, axis: int, value) -> PersistentObject:
    """Restrict a multiparameter object to an axis-parallel line, giving a
    1-parameter object in the remaining axis (m = 2 only)."""
    if x.m != 2:
        raise DimensionError("slice_axis expects m = 2")
    keep = 1 - axis
    fixed = value
    axis_vals = x.grid.axes[keep]
    objects = []
    maps = []
    prev_grade = None
    for v in axis_vals:
        coords = [None, None]
        coords[axis] = fixed
        coords[keep] = v
        g = Grade(coords)
        objects.append(x.evaluate(g))
        if prev_grade is not None:
            maps.append(x.structure_map(prev_grade, g))
        prev_grade = g
    from .persist import Grid as _Grid

    grid = _Grid([axis_vals])
    obj_dict = {(i,): o for i, o in enumerate(objects)}
    edge_dict = {((i,), 0): f for i, f in enumerate(maps)}
    return PersistentObject(grid, x.category_name, obj_dict, edge_dict)


def homology_induced(f: DeltaMorphism, n: int) -> DeltaMorphism:
    """Apply the degree-n homology functor to a delta-morphism of complexes."""
    hx = homology(f.source, n)
    hy = homology(f.target, n)

    def component(r: Grade):
        return induced_h_map(
            f.source.evaluate(r), f.target.evaluate(r + f.shift), f.component_at(r), n
        )

    return DeltaMorphism.from_fn(hx, hy, f.shift, component, validate=False)


def homology_cert(cert: InterleavingCert, n: int) -> InterleavingCert:
    return InterleavingCert(homology_induced(cert.f, n), homology_induced(cert.g, n))


# -- barcodes ---------------------------------------------------------------


@dataclass(frozen=True)
class Bar:
    birth: Fraction
    death: Optional[Fraction]  # None = infinite

    def __post_init__(self):
        from .grades import rat

        object.__setattr__(self, "birth", rat(self.birth))
        if self.death is not None:
            object.__setattr__(self, "death", rat(self.death))
            if not self.birth < self.death:
                raise ValidationError("bars must be nonempty intervals")

    def half_length(self) -> Optional[Fraction]:
        if self.death is None:
            return None
        return (self.death - self.birth) / 2


@dataclass(frozen=True)
class Barcode:
    bars: tuple[Bar, ...]

    def __init__(self, bars):
        object.__setattr__(self, "bars", tuple(sorted(
            bars, key=lambda b: (b.birth, b.death is not None, b.death or 0)
        )))

    def rank_at(self, grade) -> int:
        return sum(
            1 for b in self.bars
            if b.birth <= grade and (b.death is None or grade < b.death)
        )


def barcode(f: PersistentObject) -> Barcode:
    """Interval decomposition of a 1-parameter GF(2) persistence module, by
    the rank inclusion-exclusion over the grid presentation."""
    if f.category_name != "F2Vec":
        raise CategoryError("barcode expects a persistent module")
    if f.m != 1:
        raise DimensionError("barcode expects m = 1")
    axis = f.grid.axes[0]
    n = len(axis)
    dims = [f.objects[(i,)] for i in range(n)]
    maps = [f.edge_maps[((i,), 0)] for i in range(n - 1)]

    # rank of the composite map from grade index i to grade index j
    rank = {}
    for i in range(n):
        composite = GF2Matrix.identity(dims[i])
        rank[(i, i)] = dims[i]
        for j in range(i + 1, n):
            composite = maps[j - 1] @ composite
            rank[(i, j)] = composite.rank()

    def r(i, j):
        if i < 0:
            return 0
        return rank[(i, j)]

    bars = []
    for i in range(n):
        # infinite bars born at axis[i]
        mult = r(i, n - 1) - r(i - 1, n - 1)
        bars.extend(Bar(axis[i], None) for _ in range(mult))
        # finite bars born at axis[i], dying at axis[j + 1]
        for j in range(i, n - 1):
            mult = r(i, j) - r(i, j + 1) - r(i - 1, j) + r(i - 1, j + 1)
            bars.extend(Bar(axis[i], axis[j + 1]) for _ in range(mult))
    return Barcode(bars)


# -- interleavings in components ---------------------------------------------


def induces_interleaving_in_pi0(f: DeltaMorphism, delta: Grade,
                                budget: int = 200_000
                                ) -> tuple[bool, Optional[InterleavingCert]]:
    """Whether pi0(f), with its own shift as epsilon, is one leg of an
    (epsilon, delta)-interleaving of persistent sets; found by exhausting
    partner maps."""
    pf = pi0_induced(f)
    cert = find_partner(pf, delta, budget_limit=budget)
    return (cert is not None), cert
