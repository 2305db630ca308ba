"""GF(2) linear algebra kernel."""

import random

from perscert.gf2 import GF2Matrix, all_matrices, extend_to_basis, span_rank


def rand_matrix(rng, nrows, ncols):
    return GF2Matrix([[rng.randint(0, 1) for _ in range(ncols)] for _ in range(nrows)],
                     nrows, ncols)


def test_identity_and_zero():
    i3 = GF2Matrix.identity(3)
    z = GF2Matrix.zeros(2, 3)
    assert i3.rank() == 3
    assert z.rank() == 0
    assert (z @ i3).rows == z.rows


def test_matmul_agrees_with_apply():
    rng = random.Random(7)
    for _ in range(25):
        a = rand_matrix(rng, rng.randint(0, 4), rng.randint(0, 4))
        b = rand_matrix(rng, a.ncols, rng.randint(0, 4))
        ab = a @ b
        for j in range(b.ncols):
            assert ab.column(j) == a.apply(b.column(j))


def test_rank_is_subadditive_under_composition():
    rng = random.Random(11)
    for _ in range(40):
        a = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        b = rand_matrix(rng, a.ncols, rng.randint(1, 5))
        assert (a @ b).rank() <= min(a.rank(), b.rank())


def test_kernel_basis_spans_the_kernel():
    rng = random.Random(13)
    for _ in range(30):
        a = rand_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
        ker = a.kernel_basis()
        assert len(ker) == a.ncols - a.rank()
        for v in ker:
            assert all(c == 0 for c in a.apply(v))
        assert span_rank(ker) == len(ker)


def test_solve_finds_preimages_exactly_when_they_exist():
    rng = random.Random(17)
    for _ in range(30):
        a = rand_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        x = [rng.randint(0, 1) for _ in range(a.ncols)]
        y = a.apply(x)
        sol = a.solve(y)
        assert sol is not None and a.apply(sol) == y
    # an unsolvable instance
    a = GF2Matrix([[0, 0]], 1, 2)
    assert a.solve([1]) is None


def test_extend_to_basis_completes_an_independent_family():
    base = [(1, 0, 0)]
    cands = [(1, 0, 0), (1, 1, 0), (0, 1, 0), (1, 1, 1)]
    picked = extend_to_basis(list(base), cands)
    assert len(picked) == 2 and span_rank(list(base) + picked) == 3


def test_all_matrices_enumerates_exactly_2_to_the_rc():
    ms = list(all_matrices(2, 3))
    assert len(ms) == 2 ** 6
    assert len({m.rows for m in ms}) == 2 ** 6
