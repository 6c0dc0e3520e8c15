import random
from fractions import Fraction

from lodayops.fields import QQ, PrimeField
from lodayops.linalg import (clear_row_denominators, extend_independent,
                             kernel_basis, rank_bareiss, rank_rref, rref,
                             solve)


def random_matrix(rng, nrows, ncols, rank):
    """Matrix of known rank: product of random full-rank-ish factors."""
    a = [[Fraction(rng.randint(-3, 3)) for _ in range(rank)] for _ in range(nrows)]
    b = [[Fraction(rng.randint(-3, 3)) for _ in range(ncols)] for _ in range(rank)]
    # force pivots so the factors have full rank
    for i in range(rank):
        a[i][i] += 7
        b[i][i] += 7
    return [[sum(a[r][k] * b[k][c] for k in range(rank)) for c in range(ncols)]
            for r in range(nrows)]


def test_rank_engines_agree_on_random_matrices():
    rng = random.Random(12)
    for _ in range(30):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        rank = rng.randint(0, min(nrows, ncols))
        m = random_matrix(rng, nrows, ncols, rank)
        rb = rank_bareiss(m)
        rr = rank_rref(m, QQ)
        assert rb == rr
        assert rb <= rank


def test_known_ranks():
    assert rank_bareiss([[1, 2], [2, 4]]) == 1
    assert rank_bareiss([[1, 0], [0, 1]]) == 2
    assert rank_bareiss([[0, 0], [0, 0]]) == 0
    assert rank_rref([[Fraction(1, 2), Fraction(1)],
                      [Fraction(1), Fraction(2)]], QQ) == 1


def test_clear_denominators():
    row = [Fraction(1, 2), Fraction(2, 3), Fraction(0)]
    assert clear_row_denominators(row) == [3, 4, 0]


def test_rank_nullity():
    rng = random.Random(5)
    for _ in range(20):
        nrows = rng.randint(1, 7)
        ncols = rng.randint(1, 7)
        m = [[Fraction(rng.randint(-2, 2)) for _ in range(ncols)]
             for _ in range(nrows)]
        r = rank_rref(m, QQ)
        ker = kernel_basis(m, ncols, QQ)
        assert r + len(ker) == ncols
        for vec in ker:
            image = [sum(row[c] * vec[c] for c in range(ncols)) for row in m]
            assert all(v == 0 for v in image)


def test_solve_consistent_and_inconsistent():
    m = [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]]
    x = solve(m, [Fraction(3), Fraction(1)], QQ)
    assert x == [Fraction(2), Fraction(1)]
    m = [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]
    assert solve(m, [Fraction(1), Fraction(3)], QQ) is None
    rng = random.Random(8)
    for _ in range(20):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        m = [[Fraction(rng.randint(-2, 2)) for _ in range(ncols)]
             for _ in range(nrows)]
        target = [Fraction(rng.randint(-2, 2)) for _ in range(ncols)]
        rhs = [sum(row[c] * target[c] for c in range(ncols)) for row in m]
        x = solve(m, rhs, QQ)
        assert x is not None
        assert [sum(row[c] * x[c] for c in range(ncols)) for row in m] == rhs


def test_prime_field_elimination():
    f = PrimeField(101)
    m = [[f.from_fraction(Fraction(1, 2)), 1], [1, 2]]
    assert rank_rref(m, f) == 1
    reduced, pivots = rref([[2, 4], [1, 3]], f)
    assert pivots == [0, 1]


def test_extend_independent():
    ech = []
    assert extend_independent(ech, [Fraction(1), Fraction(1)], QQ)
    assert not extend_independent(ech, [Fraction(2), Fraction(2)], QQ)
    assert extend_independent(ech, [Fraction(0), Fraction(1)], QQ)
    assert not extend_independent(ech, [Fraction(5), Fraction(7)], QQ)
    rng = random.Random(3)
    for _ in range(10):
        dim = rng.randint(2, 6)
        vecs = [[Fraction(rng.randint(-2, 2)) for _ in range(dim)]
                for _ in range(dim + 2)]
        ech = []
        added = sum(1 for v in vecs if extend_independent(ech, v, QQ))
        assert added == rank_rref(vecs, QQ)
