"""The three concrete categories: finite sets, GF(2) vector spaces, and
finite simplicial complexes with vertex maps."""

import random

import pytest

from perscert.categories import COMPLEX, F2VEC, FINSET, get_category, simplex
from perscert.errors import CategoryError
from perscert.gf2 import GF2Matrix


def test_get_category_names():
    assert get_category("FinSet") is FINSET
    assert get_category("F2Vec") is F2VEC
    assert get_category("Complex") is COMPLEX
    with pytest.raises(CategoryError):
        get_category("Top")


def test_finset_identity_and_composition_laws():
    rng = random.Random(3)
    a = frozenset({"x", "y"})
    b = frozenset({"u", "v", "w"})
    for f in FINSET.enumerate_maps(a, b):
        assert FINSET.is_map(f, a, b)
        assert FINSET.map_equal(FINSET.compose(f, FINSET.identity(a)), f)
        assert FINSET.map_equal(FINSET.compose(FINSET.identity(b), f), f)
    assert FINSET.count_maps(a, b) == 9
    assert FINSET.count_maps(b, a) == 8
    # initial object: exactly one map out, none in from nonempty
    assert FINSET.count_maps(FINSET.initial(), b) == 1
    assert FINSET.count_maps(b, FINSET.initial()) == 0
    del rng


def test_finset_fiber_product_is_the_equalizing_pair_set():
    x = frozenset({"a", "b", "c"})
    b = frozenset({"p", "q"})
    y = frozenset({"0", "1"})
    f = {"a": "0", "b": "0", "c": "1"}
    h = {"p": "0", "q": "1"}
    w, px, pb, pair = FINSET.fiber_product(f, h, x, b)
    assert len(w) == sum(
        1 for e in x for d in b if f[e] == h[d]
    )
    for e in w:
        assert f[FINSET.apply(px, e)] == h[FINSET.apply(pb, e)]
    # universal property on a one-point test object
    t = frozenset({"*"})
    u = {"*": "a"}
    v = {"*": "p"}
    med = pair(u, v, t)
    assert FINSET.map_equal(FINSET.compose(px, med), u)
    assert FINSET.map_equal(FINSET.compose(pb, med), v)


def test_f2vec_maps_are_matrices_with_composition_as_matmul():
    f = GF2Matrix([[1, 0], [1, 1], [0, 1]], 3, 2)
    g = GF2Matrix([[1, 1, 0]], 1, 3)
    assert F2VEC.is_map(f, 2, 3)
    assert not F2VEC.is_map(f, 3, 2)
    gf = F2VEC.compose(g, f)
    assert gf.rows == (g @ f).rows
    assert F2VEC.map_equal(F2VEC.compose(f, F2VEC.identity(2)), f)
    assert F2VEC.count_maps(2, 3) == 2 ** 6
    assert F2VEC.initial() == 0


def test_f2vec_fiber_product_dimension_counts_solutions():
    # pull back f: X -> Y along h: B -> Y; dim W = dim ker [f | -h]
    f = GF2Matrix([[1, 0]], 1, 2)
    h = GF2Matrix([[1]], 1, 1)
    w, px, pb, pair = F2VEC.fiber_product(f, h, 2, 1)
    assert w == 2  # pairs (x, b) with x1 = b: dimension 2
    assert px.ncols == w and pb.ncols == w
    assert F2VEC.map_equal(F2VEC.compose(f, px), F2VEC.compose(h, pb))
    del pair


def test_simplex_normalizes_vertex_order():
    assert simplex(("b", "a")) == simplex(("a", "b"))
    assert simplex((3, 1, 2)) == (1, 2, 3)


def test_complex_objects_are_face_closed():
    good = frozenset({("a",), ("b",), ("a", "b")})
    COMPLEX.check_object(good)
    with pytest.raises(CategoryError):
        COMPLEX.check_object(frozenset({("a", "b")}))  # missing vertices


def test_complex_maps_act_on_simplices_by_vertex_images():
    k = frozenset({("a",), ("b",), ("a", "b")})
    l = frozenset({("u",)})
    collapse = {"a": "u", "b": "u"}
    assert COMPLEX.is_map(collapse, k, l)
    assert COMPLEX.apply_simplex(collapse, ("a", "b")) == ("u",)
    assert not COMPLEX.is_injective(collapse, k)
    assert COMPLEX.is_injective(COMPLEX.identity(k), k)


def test_complex_enumerate_maps_matches_count():
    k = frozenset({("a",), ("b",)})
    l = frozenset({("u",), ("v",), ("u", "v")})
    maps = list(COMPLEX.enumerate_maps(k, l))
    # two source vertices, two target vertices, every assignment simplicial
    assert len(maps) == COMPLEX.count_maps(k, l) == 4
