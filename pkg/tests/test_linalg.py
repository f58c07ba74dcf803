from fractions import Fraction

from hypothesis import given, settings, strategies as st

from loopmod.cyclotomic import CycloNumber
from loopmod.linalg import exact_rank, nullspace, rank, solve
from loopmod.ratfunc import FieldElem


def F(m, x):
    return FieldElem.zero(m) + x


def test_identity_rank():
    m = 3
    one, zero = FieldElem.one(m), FieldElem.zero(m)
    mat = [[one if i == j else zero for j in range(4)] for i in range(4)]
    assert exact_rank(mat) == 4


def test_rank_one_over_q():
    m = 2
    q = FieldElem.q(m)
    row = [F(m, 1), q, q * q]
    mat = [row, [x * (1 + q) / (1 - q) for x in row]]
    assert exact_rank(mat) == 1
    assert rank(mat) == 1


def test_rank_needs_zeta():
    # rank 1 because zeta_4^2 = -1
    m = 4
    z = FieldElem.zeta(m)
    mat = [[F(m, 1), z], [z, F(m, -1)]]
    assert exact_rank(mat) == 1


def test_nullspace_and_solve():
    m = 3
    q = FieldElem.q(m)
    zero, one = FieldElem.zero(m), FieldElem.one(m)
    mat = [[one, q, zero], [zero, one, q]]
    (k,) = nullspace(mat, 3, zero, one)
    for row in mat:
        assert sum((a * b for a, b in zip(row, k)), zero).is_zero()
    cols = [[one, zero], [q, one]]
    x = solve(cols, [q, one], zero)
    assert (x[0] + x[1] * q) == q and x[1] == one


def test_cyclonumber_rank():
    z = CycloNumber.zeta(3)
    one = CycloNumber.rational(3, 1)
    mat = [[one, z], [z, z * z]]
    assert rank(mat) == 1


entries = st.integers(-2, 2)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_bareiss_matches_gauss(r, c, data):
    m = 4
    q, z = FieldElem.q(m), FieldElem.zeta(m)
    mat = [[F(m, data.draw(entries)) + F(m, data.draw(entries)) * q
            + F(m, data.draw(entries)) * z / (1 + q) for _ in range(c)] for _ in range(r)]
    if data.draw(st.booleans()) and r > 1:
        mat[-1] = [a + b * Fraction(1, 2) for a, b in zip(mat[0], mat[1 % r])]
    assert exact_rank(mat) == rank(mat)
