"""The three concrete categories persistent objects take values in.

Each category exposes the same small surface: objects, maps, identity,
composition, equality, the initial object, optional fiber products, and
(for the brute-force searches) enumeration of all maps between two objects.

Representations:
  FinSet  -- object: frozenset of hashable element ids; map: dict
  F2Vec   -- object: nonnegative int (dimension); map: GF2Matrix (tgt x src)
  Complex -- object: frozenset of simplices (sorted vertex tuples);
             map: dict on vertices inducing a simplicial map
"""

from __future__ import annotations

from itertools import product

from .errors import CategoryError
from .gf2 import GF2Matrix, all_matrices


def _sort_vertices(vs):
    try:
        return tuple(sorted(vs))
    except TypeError:
        return tuple(sorted(vs, key=lambda v: (str(type(v)), repr(v))))


def simplex(vertices) -> tuple:
    s = _sort_vertices(set(vertices))
    if not s:
        raise CategoryError("simplices must be nonempty")
    return s


def complex_vertices(obj: frozenset) -> set:
    return {v for sigma in obj for v in sigma}


class FinSetCategory:
    name = "FinSet"

    def check_object(self, obj):
        if not isinstance(obj, frozenset):
            raise CategoryError(f"FinSet object must be a frozenset, got {type(obj)}")

    def initial(self):
        return frozenset()

    def identity(self, obj):
        return {x: x for x in obj}

    def initial_map(self, tgt):
        return {}

    def is_map(self, f, src, tgt) -> bool:
        return set(f.keys()) == set(src) and all(v in tgt for v in f.values())

    def apply(self, f, x):
        return f[x]

    def compose(self, g, f):
        """g after f."""
        return {x: g[y] for x, y in f.items()}

    def map_equal(self, f, g) -> bool:
        return f == g

    def enumerate_maps(self, src, tgt):
        src = _sort_vertices(src)
        if not src:
            yield {}
            return
        if not tgt:
            return  # no maps into the empty set from a nonempty one
        tgt = _sort_vertices(tgt)
        for values in product(tgt, repeat=len(src)):
            yield dict(zip(src, values))

    def count_maps(self, src, tgt) -> int:
        if not src:
            return 1
        return len(tgt) ** len(src)

    def is_injective(self, f, src) -> bool:
        return len({f[x] for x in src}) == len(src)

    def fiber_product(self, f, h, x_obj, b_obj):
        """Pullback of f: X -> Y along h: B -> Y.

        Returns (A, proj_x, proj_b, pair) where pair(u, v, w_obj) is the map
        induced by u: W -> X and v: W -> B with f.u = h.v.
        """
        a_obj = frozenset((x, b) for x in x_obj for b in b_obj if f[x] == h[b])
        proj_x = {(x, b): x for (x, b) in a_obj}
        proj_b = {(x, b): b for (x, b) in a_obj}

        def pair(u, v, w_obj):
            out = {}
            for w in w_obj:
                cand = (u[w], v[w])
                if cand not in a_obj:
                    raise CategoryError("pairing does not land in the fiber product")
                out[w] = cand
            return out

        return a_obj, proj_x, proj_b, pair


class F2VecCategory:
    name = "F2Vec"

    def check_object(self, obj):
        if not isinstance(obj, int) or obj < 0:
            raise CategoryError(f"F2Vec object must be a nonnegative int, got {obj!r}")

    def initial(self):
        return 0

    def identity(self, obj):
        return GF2Matrix.identity(obj)

    def initial_map(self, tgt):
        return GF2Matrix([[] for _ in range(tgt)], tgt, 0)

    def is_map(self, f, src, tgt) -> bool:
        return isinstance(f, GF2Matrix) and f.ncols == src and f.nrows == tgt

    def apply(self, f, x):
        return f.apply(x)

    def compose(self, g, f):
        return g @ f

    def map_equal(self, f, g) -> bool:
        return f == g

    def enumerate_maps(self, src, tgt):
        yield from all_matrices(tgt, src)

    def count_maps(self, src, tgt) -> int:
        return 2 ** (src * tgt)

    def is_injective(self, f, src) -> bool:
        return f.rank() == src

    def fiber_product(self, f, h, x_obj, b_obj):
        """Pullback of linear maps: kernel of [f | h]: X (+) B -> Y."""
        y_dim = f.nrows
        if h.nrows != y_dim:
            raise CategoryError("pullback legs must share a codomain")
        stacked = GF2Matrix(
            [list(f.rows[i]) + list(h.rows[i]) for i in range(y_dim)], y_dim, x_obj + b_obj
        )
        kernel = stacked.kernel_basis()
        a_obj = len(kernel)
        kmat = GF2Matrix.from_columns(kernel, x_obj + b_obj)
        proj_x = GF2Matrix([kmat.rows[i] for i in range(x_obj)], x_obj, a_obj)
        proj_b = GF2Matrix([kmat.rows[x_obj + i] for i in range(b_obj)], b_obj, a_obj)

        def pair(u, v, w_obj):
            cols = []
            for j in range(w_obj):
                stacked_col = list(u.column(j)) + list(v.column(j))
                sol = kmat.solve(stacked_col)
                if sol is None:
                    raise CategoryError("pairing does not land in the fiber product")
                cols.append(sol)
            return GF2Matrix.from_columns(cols, a_obj)

        return a_obj, proj_x, proj_b, pair


class ComplexCategory:
    name = "Complex"

    def check_object(self, obj):
        if not isinstance(obj, frozenset):
            raise CategoryError("Complex object must be a frozenset of simplices")
        for sigma in obj:
            if not isinstance(sigma, tuple) or not sigma:
                raise CategoryError(f"bad simplex {sigma!r}")
            if sigma != _sort_vertices(set(sigma)):
                raise CategoryError(f"simplex {sigma!r} is not sorted and duplicate-free")
            for i in range(len(sigma)):
                face = sigma[:i] + sigma[i + 1:]
                if face and face not in obj:
                    raise CategoryError(f"face {face!r} of {sigma!r} missing: not closed")

    def initial(self):
        return frozenset()

    def identity(self, obj):
        return {v: v for v in complex_vertices(obj)}

    def initial_map(self, tgt):
        return {}

    def apply_simplex(self, f, sigma):
        return _sort_vertices({f[v] for v in sigma})

    def is_map(self, f, src, tgt) -> bool:
        verts = complex_vertices(src)
        if set(f.keys()) != verts:
            return False
        return all(self.apply_simplex(f, sigma) in tgt for sigma in src)

    def apply(self, f, sigma):
        return self.apply_simplex(f, sigma)

    def compose(self, g, f):
        return {v: g[w] for v, w in f.items()}

    def map_equal(self, f, g) -> bool:
        return f == g

    def enumerate_maps(self, src, tgt):
        src_verts = _sort_vertices(complex_vertices(src))
        if not src_verts:
            yield {}
            return
        tgt_verts = _sort_vertices(complex_vertices(tgt))
        if not tgt_verts:
            return
        for values in product(tgt_verts, repeat=len(src_verts)):
            f = dict(zip(src_verts, values))
            if self.is_map(f, src, tgt):
                yield f

    def count_maps(self, src, tgt) -> int:
        nv = len(complex_vertices(src))
        if nv == 0:
            return 1
        return len(complex_vertices(tgt)) ** nv

    def is_injective(self, f, src) -> bool:
        return len({self.apply_simplex(f, sigma) for sigma in src}) == len(src)

    def fiber_product(self, f, h, x_obj, b_obj):
        raise CategoryError("fiber products are not supported in Complex")


FINSET = FinSetCategory()
F2VEC = F2VecCategory()
COMPLEX = ComplexCategory()

CATEGORIES = {c.name: c for c in (FINSET, F2VEC, COMPLEX)}


def get_category(name: str):
    try:
        return CATEGORIES[name]
    except KeyError:
        raise CategoryError(f"unknown category {name!r}") from None
