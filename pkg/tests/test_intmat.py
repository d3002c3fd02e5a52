import math
import random
from itertools import permutations

import pytest

from cyclomat import DimensionMismatch, IntMatrix, IntPoly

from reference_data import A_131_L10, A_37_L4, CHARPOLY_A_37_L4, S_73_L8


def cofactor_det(rows):
    """Independent determinant oracle: Leibniz sum over permutations."""
    d = len(rows)
    total = 0
    for perm in permutations(range(d)):
        sign = 1
        seen = list(perm)
        # count inversions for the sign
        inv = sum(1 for i in range(d) for j in range(i + 1, d)
                  if seen[i] > seen[j])
        sign = -1 if inv % 2 else 1
        prod = 1
        for i in range(d):
            prod *= rows[i][perm[i]]
        total += sign * prod
    return total


def test_basic_ops():
    j2 = IntMatrix.ones(2)
    assert j2 * j2 == 2 * j2
    e01 = IntMatrix.elementary(2, 0, 1)
    e10 = IntMatrix.elementary(2, 1, 0)
    assert e01 * e10 == IntMatrix.elementary(2, 0, 0)
    assert IntMatrix.identity(5).trace() == 5
    a = IntMatrix([[1, 2], [3, 4]])
    assert a + a == 2 * a
    assert a - a == IntMatrix.zeros(2)
    assert (-a).rows == [[-1, -2], [-3, -4]]
    assert a.transpose().rows == [[1, 3], [2, 4]]
    assert a ** 2 == a * a
    assert a ** 0 == IntMatrix.identity(2)
    with pytest.raises(DimensionMismatch):
        a * IntMatrix.identity(3)
    with pytest.raises(DimensionMismatch):
        IntMatrix([[1, 2], [3]])


def test_perm_shift_properties():
    assert IntMatrix.perm_shift(3, 0) == IntMatrix.identity(3)
    p2 = IntMatrix.perm_shift(4, 2)
    assert p2 * p2 == IntMatrix.identity(4)
    for d in (2, 3, 5, 10):
        for v in range(d):
            pv = IntMatrix.perm_shift(d, v)
            assert pv * pv.transpose() == IntMatrix.identity(d)
            assert pv.det() in (1, -1)


def test_perm_shift_cycles_rows():
    a = IntMatrix(A_131_L10)
    p5 = IntMatrix.perm_shift(10, 5)
    cycled = p5 * a
    for i in range(10):
        assert cycled.rows[i] == a.rows[(i - 5) % 10]


def test_det_matches_cofactor_expansion():
    rng = random.Random(42)
    for _ in range(200):
        d = rng.randrange(1, 6)
        rows = [[rng.randint(-9, 9) for _ in range(d)] for _ in range(d)]
        assert IntMatrix(rows).det() == cofactor_det(rows)


def test_det_special_cases():
    assert IntMatrix.identity(7).det() == 1
    assert IntMatrix([[]] * 0).det() == 1
    # zero pivot forces a row swap
    assert IntMatrix([[0, 1], [1, 0]]).det() == -1
    # singular
    assert IntMatrix([[1, 2], [2, 4]]).det() == 0
    assert IntMatrix(A_37_L4).det() == -14


def test_charpoly_known_values():
    assert IntMatrix.identity(2).charpoly() == IntPoly([1, -2, 1])
    assert IntMatrix(A_37_L4).charpoly() == IntPoly(CHARPOLY_A_37_L4)
    # product expansion as the independent route
    expected = IntPoly([-8, 1]) * IntPoly([-8, 0, 1]) ** 3
    assert IntMatrix(S_73_L8).charpoly() == expected


def test_charpoly_cayley_hamilton_and_det():
    rng = random.Random(5)
    for _ in range(40):
        d = rng.randrange(1, 6)
        m = IntMatrix([[rng.randint(-9, 9) for _ in range(d)]
                       for _ in range(d)])
        cp = m.charpoly()
        assert cp.coeffs[-1] == 1 and cp.degree == d
        assert cp.at_matrix(m).is_zero()
        assert m.det() == (-1) ** d * cp(0)


def test_exactness_beyond_word_size():
    c = 10 ** 30
    m = c * IntMatrix.identity(5)
    assert m.det() == c ** 5
    # Bareiss intermediates overflow any fixed width long before this
    rows = [[c + i * j for j in range(6)] for i in range(6)]
    rows[0][0] += 1
    m = IntMatrix(rows)
    assert m.det() == cofactor_det(rows)
    cp = m.charpoly()
    assert cp.at_matrix(m).is_zero()


def test_rank():
    assert IntMatrix.ones(4).rank() == 1
    assert IntMatrix.identity(4).rank() == 4
    assert IntMatrix.zeros(3).rank() == 0
    assert IntMatrix([[1, 2, 3], [2, 4, 6], [0, 0, 1]]).rank() == 2


def test_minor():
    a = IntMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert a.minor(1, 0) == IntMatrix([[2, 3], [8, 9]])


def test_poly_arithmetic():
    x = IntPoly.x()
    p = (x - 1) * (x + 1)
    assert p == IntPoly([-1, 0, 1])
    assert p(3) == 8
    assert p.derivative() == IntPoly([0, 2])
    assert (x ** 3).coeffs == (0, 0, 0, 1)
    assert IntPoly([1, 2]) + IntPoly([1, -2]) == IntPoly([2])
    assert IntPoly([0]).degree == -1
    m = IntMatrix([[2, 0], [0, 3]])
    assert x.at_matrix(m) == m
    assert IntPoly([5]).at_matrix(m) == 5 * IntMatrix.identity(2)


def test_squarefree_decomposition():
    x = IntPoly.x()
    p = (x - 1) ** 2 * (x + 2)
    factors = p.squarefree_decomposition()
    assert (IntPoly([2, 1]), 1) in factors
    assert (IntPoly([-1, 1]), 2) in factors
    p = (x - 8) * (x * x - 8) ** 3
    factors = dict((mult, f) for f, mult in p.squarefree_decomposition())
    assert factors[1] == IntPoly([-8, 1])
    assert factors[3] == IntPoly([-8, 0, 1])


def test_real_roots_simple():
    x = IntPoly.x()
    roots = ((x * x - 2) * (x - 3)).real_roots()
    values = [r for r, _ in roots]
    assert len(values) == 3
    assert abs(values[0] + math.sqrt(2)) < 1e-11
    assert abs(values[1] - math.sqrt(2)) < 1e-11
    assert abs(values[2] - 3.0) < 1e-11


def test_real_roots_multiplicities():
    x = IntPoly.x()
    p = (x - 1) ** 2 * (x + 2) ** 3
    roots = p.real_roots()
    assert [m for _, m in roots] == [3, 2]
    assert abs(roots[0][0] + 2.0) < 1e-11
    assert abs(roots[1][0] - 1.0) < 1e-11
    # no real roots
    assert (x * x + 1).real_roots() == []


def test_real_roots_of_reference_charpoly():
    roots = IntMatrix(S_73_L8).charpoly().real_roots()
    expected = [(-2 * math.sqrt(2), 3), (2 * math.sqrt(2), 3), (8.0, 1)]
    assert len(roots) == 3
    for (r, m), (er, em) in zip(roots, expected):
        assert m == em
        assert abs(r - er) < 1e-11
