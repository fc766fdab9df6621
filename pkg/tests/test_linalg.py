import random
from fractions import Fraction

from tconnect.linalg import rank_gf2, rank_mod_p, rank_rationals


def fraction_rank(rows):
    """Plain Gaussian elimination over Q with Fractions (test oracle)."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    col = 0
    width = len(rows[0]) if rows else 0
    while rank < len(m) and col < width:
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            col += 1
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                factor = m[r][col] / m[rank][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def test_rank_gf2_basic():
    assert rank_gf2([0b011, 0b101, 0b110]) == 2  # third row is the xor of the others
    assert rank_gf2([0b001, 0b010, 0b100]) == 3
    assert rank_gf2([0, 0]) == 0


def test_rank_mod_p_depends_on_p():
    rows = [[2, 1], [1, 2]]  # determinant 3
    assert rank_mod_p(rows, 3) == 1
    assert rank_mod_p(rows, 2) == 2
    assert rank_rationals(rows) == 2


def test_rank_rationals_dependent_rows():
    assert rank_rationals([[2, 4], [1, 2]]) == 1
    assert rank_rationals([[0, 0, 0]]) == 0
    assert rank_rationals([[3]]) == 1


def test_rank_rationals_against_fraction_oracle():
    rng = random.Random(61)
    for _ in range(60):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        m = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        assert rank_rationals(m) == fraction_rank(m)


def test_rank_mod_p_against_fraction_oracle_when_p_large():
    # over a prime larger than any minor the modular rank equals the
    # rational rank
    rng = random.Random(67)
    for _ in range(30):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = [[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)]
        assert rank_mod_p(m, 1009) == fraction_rank(m)


def test_rank_bounds_between_fields():
    rng = random.Random(71)
    for _ in range(40):
        rows = rng.randint(1, 7)
        cols = rng.randint(1, 7)
        m = [[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)]
        rq = rank_rationals(m)
        for p in (2, 3, 5):
            assert rank_mod_p(m, p) <= rq
