"""Exact bottleneck distance, the brute-force oracle, and the stability
cross-checks."""

import random

import pytest

from perscert import (
    Bar,
    Barcode,
    ValidationError,
    bottleneck,
    grade,
    module_distance_crosscheck,
    self_interleaving,
    stability_audit,
)
from perscert.distances import bottleneck_bruteforce
from perscert.gf2 import GF2Matrix
from perscert.persist import Grid, PersistentObject, check_interleaving
from perscert.randgen import rand_barcode, rand_complex_interleaving, rand_persistent_complex


def interval_module(birth, death, axis):
    """GF(2) interval module [birth, death) on the given integer axis."""
    dims = [1 if birth <= v and (death is None or v < death) else 0 for v in axis]
    maps = [
        GF2Matrix([[1]], 1, 1) if a and b else GF2Matrix.zeros(b, a)
        for a, b in zip(dims, dims[1:])
    ]
    return PersistentObject(
        Grid([list(axis)]), "F2Vec",
        {(i,): d for i, d in enumerate(dims)},
        {((i,), 0): f for i, f in enumerate(maps)},
    )


def test_bottleneck_worked_examples():
    assert bottleneck(Barcode([Bar(0, 2)]), Barcode([]))[0] == 1
    assert bottleneck(Barcode([Bar(0, 2)]), Barcode([Bar(0, 3)]))[0] == 1
    assert bottleneck(Barcode([Bar(0, 2)]), Barcode([Bar(0, 2)]))[0] == 0


def test_bottleneck_infinite_bars_match_only_each_other():
    assert bottleneck(Barcode([Bar(0, None)]), Barcode([]))[0] is None
    d, _ = bottleneck(Barcode([Bar(0, None)]), Barcode([Bar(3, None)]))
    assert d == 3


def test_bottleneck_agrees_with_bruteforce():
    for seed in range(40):
        rng = random.Random(seed)
        b1, b2 = rand_barcode(rng), rand_barcode(rng)
        d, matching = bottleneck(b1, b2)
        assert d == bottleneck_bruteforce(b1, b2)
        if matching is not None:
            assert matching.cost(b1, b2) == d


def test_bottleneck_is_a_pseudometric():
    def dist(a, b):
        return bottleneck(a, b)[0]

    for seed in range(15):
        rng = random.Random(seed)
        a, b, c = (rand_barcode(rng) for _ in range(3))
        assert dist(a, a) == 0
        assert dist(a, b) == dist(b, a)
        ab, bc, ac = dist(a, b), dist(b, c), dist(a, c)
        if ab is not None and bc is not None:
            assert ac is not None and ac <= ab + bc


def test_stability_audit_identity_certificate():
    x = rand_persistent_complex(random.Random(0))
    rep = stability_audit(self_interleaving(x, grade(0)), 0)
    assert rep.holds and rep.bound == 0 and rep.distance == 0


def test_stability_audit_on_random_interleavings():
    for seed in range(8):
        x, y, cert = rand_complex_interleaving(random.Random(seed))
        for n in (0, 1):
            rep = stability_audit(cert, n)
            assert rep.module_cert_valid
            assert rep.holds
            assert rep.distance <= rep.bound


def test_stability_audit_rejects_invalid_certificates():
    x = rand_persistent_complex(random.Random(1))
    cert = self_interleaving(x, grade(1))
    cert.g.components[next(iter(cert.g.components))] = {}
    if not check_interleaving(cert).valid:
        with pytest.raises(ValidationError):
            stability_audit(cert, 0)


def test_module_crosscheck_interval_examples():
    axis = list(range(0, 5))
    f = interval_module(0, 2, axis)
    g = interval_module(0, 3, axis)
    rep = module_distance_crosscheck(f, g)
    assert rep.holds
    assert rep.bottleneck_distance == 1
    assert rep.certified_delta == 1
    assert check_interleaving(rep.certificate).valid


def test_module_crosscheck_against_the_zero_module():
    axis = list(range(0, 4))
    f = interval_module(0, 2, axis)
    zero = interval_module(10, 11, axis)  # identically zero on this axis
    rep = module_distance_crosscheck(f, zero)
    assert rep.holds
    assert rep.bottleneck_distance == 1
    assert rep.certified_delta == 1


def test_module_crosscheck_identical_modules():
    f = interval_module(1, 3, list(range(0, 4)))
    rep = module_distance_crosscheck(f, f)
    assert rep.holds and rep.bottleneck_distance == 0 and rep.certified_delta == 0
