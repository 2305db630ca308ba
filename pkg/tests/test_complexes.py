"""Filtered complexes, the filtration builders, the filtered/cofibrant
characterization, and the two-parameter square gadget."""

import random
from fractions import Fraction

import pytest

from perscert import (
    FilteredComplex,
    Grade,
    MetricInput,
    SquareDiagram,
    ValidationError,
    degree_rips,
    dimension,
    function_rips,
    grade,
    is_filtered,
    is_n_skeletal,
    metric_from_coordinates,
    skeleton,
    sq_gadget,
    to_persistent,
    validate,
    vietoris_rips,
)
from perscert.persist import Grid, PersistentObject
from perscert.randgen import rand_filtered_complex, rand_metric

COLLINEAR = MetricInput([0, 1, 3], [[0, 1, 3], [1, 0, 2], [3, 2, 0]])


def test_validate_catches_missing_faces_and_grade_violations():
    bad_faces = FilteredComplex(["a", "b"], {("a", "b")}, {("a", "b"): grade(0)})
    assert not validate(bad_faces).valid
    bad_grades = FilteredComplex(
        ["a", "b"],
        {("a",), ("b",), ("a", "b")},
        {("a",): grade(1), ("b",): grade(0), ("a", "b"): grade(0)},
    )
    assert not validate(bad_grades).valid
    good = vietoris_rips(COLLINEAR, 2)
    assert validate(good).valid


def test_vietoris_rips_of_collinear_points_has_diameter_grades():
    vr = vietoris_rips(COLLINEAR, 2)
    assert vr.grade[(0,)] == grade(0)
    assert vr.grade[(0, 1)] == grade(1)
    assert vr.grade[(1, 3)] == grade(2)
    assert vr.grade[(0, 3)] == grade(3)
    assert vr.grade[(0, 1, 3)] == grade(3)
    assert dimension(vr) == 2


def test_function_rips_grades_by_diameter_and_max_value():
    mi = MetricInput([0, 1], [[0, 2], [2, 0]], values=[5, 7])
    fr = function_rips(mi, 1)
    assert fr.grade[(0,)] == grade(0, 5)
    assert fr.grade[(1,)] == grade(0, 7)
    assert fr.grade[(0, 1)] == grade(2, 7)


def test_metric_from_coordinates_norms():
    mi_linf = metric_from_coordinates([(0, 0), (1, 2)], norm="linf")
    mi_l1 = metric_from_coordinates([(0, 0), (1, 2)], norm="l1")
    assert mi_linf.dist[0][1] == 2
    assert mi_l1.dist[0][1] == 3


def test_skeleton_is_idempotent_and_dimension_correct():
    vr = vietoris_rips(COLLINEAR, 2)
    for n in range(3):
        sk = skeleton(vr, n)
        assert dimension(sk) == min(n, dimension(vr))
        assert skeleton(sk, n) == sk
        assert is_n_skeletal(sk, n)


def test_vr_of_n_plus_1_points_is_at_most_n_dimensional():
    rng = random.Random(1)
    for n in range(1, 5):
        mi = rand_metric(rng, n + 1)
        vr = vietoris_rips(mi, n + 1)
        assert dimension(vr) <= n


def test_to_persistent_round_trip_is_filtered_with_exact_witness():
    rng = random.Random(2)
    for seed in range(5):
        fc = rand_filtered_complex(random.Random(seed))
        chk = is_filtered(to_persistent(fc))
        assert chk.filtered
        assert chk.witness == dict(fc.grade)
    del rng


def test_degree_rips_of_collinear_points_is_not_filtered():
    dr = degree_rips(COLLINEAR, 2)
    chk = is_filtered(dr)
    assert not chk.filtered
    assert chk.condition == 2
    assert "minimum" in chk.reason


def vertex_appearance_gadget():
    """m = 2 persistent complex whose single vertex appears at (1,0) and
    (0,1) but not (0,0): the appearance set has no minimum."""
    v = frozenset({("v",)})
    empty = frozenset()
    grid = Grid([[0, 1], [0, 1]])
    objects = {(0, 0): empty, (1, 0): v, (0, 1): v, (1, 1): v}
    ident = {"v": "v"}
    edges = {
        ((0, 0), 0): {},
        ((0, 0), 1): {},
        ((1, 0), 1): ident,
        ((0, 1), 0): ident,
    }
    return PersistentObject(grid, "Complex", objects, edges)


def test_vertex_appearance_gadget_fails_only_the_minimum_condition():
    chk = is_filtered(vertex_appearance_gadget())
    assert not chk.filtered
    assert chk.condition == 2
    assert "minimum" in chk.reason


def two_corner_square():
    """Commuting square: discrete {a, b} on the left corners, the filled edge
    on the right corners, with identity vertex maps."""
    discrete = frozenset({("a",), ("b",)})
    edge = frozenset({("a",), ("b",), ("a", "b")})
    ident = {"a": "a", "b": "b"}
    corners = {(0, 0): discrete, (1, 0): edge, (0, 1): discrete, (1, 1): edge}
    maps = {
        ((0, 0), 0): ident,
        ((0, 0), 1): ident,
        ((1, 0), 1): ident,
        ((0, 1), 0): ident,
    }
    return SquareDiagram(corners, maps)


def test_sq_gadget_boundary_semantics():
    p = sq_gadget(two_corner_square())
    # empty whenever a coordinate is negative
    assert p.evaluate(Grade([Fraction(-1, 2), Fraction(1)])) == frozenset()
    assert p.evaluate(grade(1, -1)) == frozenset()
    # the square corners on [0, 2)^2, selected by floors
    assert p.evaluate(Grade([Fraction(1, 2), Fraction(3, 2)])) == frozenset(
        {("a",), ("b",)}
    )
    assert p.evaluate(Grade([Fraction(3, 2), Fraction(1, 2)])) == frozenset(
        {("a",), ("b",), ("a", "b")}
    )
    # a single point once some coordinate reaches 2
    assert p.evaluate(grade(2, 0)) == frozenset({("*",)})
    assert p.evaluate(grade(5, 5)) == frozenset({("*",)})


def test_sq_gadget_rejects_non_commuting_squares():
    sq = two_corner_square()
    broken = SquareDiagram(sq.corners, {**sq.maps, ((0, 0), 0): {"a": "b", "b": "a"}})
    with pytest.raises(ValidationError):
        sq_gadget(broken)


def test_metric_input_requires_symmetry_and_zero_diagonal():
    with pytest.raises(Exception):
        MetricInput([0, 1], [[0, 1], [2, 0]])
