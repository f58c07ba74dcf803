import random

import pytest

from loopmod.natrep import (EvalParams, ModuleVector, act, divided_power, k_exponent,
                            weight_of_word, weight_space_basis)
from loopmod.ratfunc import FieldElem, q_integer


def test_e0_on_single_factor():
    ctx = EvalParams.natural(2, 1)
    out = act("E", 0, ModuleVector.basis(ctx, (0,)))
    assert out == ModuleVector.basis(ctx, (2,))


def test_e0_uses_parameter():
    a = FieldElem.zeta(5, 2)
    ctx = EvalParams(1, (a,), 5)
    assert act("E", 0, ModuleVector.basis(ctx, (0,))) == ModuleVector.basis(ctx, (1,)).scale(a)
    assert act("F", 0, ModuleVector.basis(ctx, (1,))) == \
        ModuleVector.basis(ctx, (0,)).scale(a.inverse())


def test_k_on_constant_word():
    n, N = 2, 3
    ctx = EvalParams.natural(n, N)
    for i in range(n + 1):
        for j in range(n + 1):
            w = (j,) * N
            e = (int((j + 1) % (n + 1) == i) - int(j == i)) * N
            assert act("K", i, ModuleVector.basis(ctx, w)) == \
                ModuleVector.basis(ctx, w).scale(FieldElem.q(ctx.m, e))


def test_f1_on_v0v0():
    ctx = EvalParams.natural(1, 2)
    q = FieldElem.q(2)
    out = act("F", 1, ModuleVector.basis(ctx, (0, 0)))
    # F v0 (x) v0 + K v0 (x) F v0 = v1 (x) v0 + q v0 (x) v1; word (0, 1) is v1 (x) v0
    assert out == ModuleVector(ctx, {(0, 1): 1, (1, 0): q})


def test_divided_powers():
    ctx = EvalParams.natural(1, 2)
    v = ModuleVector.basis(ctx, (0, 0))
    assert divided_power("F", 0, 1, v) == v
    assert divided_power("F", 1, 1, v) == act("F", 1, v)
    twice = act("F", 1, act("F", 1, v))
    assert twice == ModuleVector.basis(ctx, (1, 1)).scale(q_integer(2, 2))
    assert divided_power("F", 2, 1, v) == ModuleVector.basis(ctx, (1, 1))


def test_weights():
    assert weight_of_word((0, 0, 0), 1).composition == (3, 0)
    w = weight_of_word((0, 1), 1)
    assert w.composition == (1, 1) and w.varpi_coords == (0,)
    w = weight_of_word((0, 1, 2), 2)
    assert w.composition == (1, 1, 1) and w.varpi_coords == (0, 0)


def test_weight_space_basis():
    ctx2 = EvalParams.natural(1, 2)
    ctx3 = EvalParams.natural(2, 3)
    assert len(weight_space_basis(ctx2, (2, 0))) == 1
    assert len(weight_space_basis(ctx2, (1, 1))) == 2
    assert len(weight_space_basis(ctx3, (1, 1, 1))) == 6
    with pytest.raises(ValueError):
        weight_space_basis(ctx3, (1, 1))


def _random_vector(ctx, rng, size=4):
    q = FieldElem.q(ctx.m)
    words = [tuple(rng.randrange(ctx.n + 1) for _ in range(ctx.N)) for _ in range(size)]
    return ModuleVector(ctx, {w: q ** rng.randrange(-2, 3) * rng.randrange(1, 5)
                              + FieldElem.zeta(ctx.m, rng.randrange(ctx.m))
                              for w in words})


@pytest.mark.parametrize("n,N", [(1, 2), (1, 3), (2, 3), (3, 2)])
def test_commutator_relation(n, N):
    rng = random.Random(n * 10 + N)
    ctx = EvalParams.natural(n, N)
    q = FieldElem.q(ctx.m)
    for _ in range(5):
        v = _random_vector(ctx, rng)
        for i in range(n + 1):
            for j in range(n + 1):
                lhs = act("E", i, act("F", j, v)) - act("F", j, act("E", i, v))
                if i != j:
                    assert lhs.is_zero()
                else:
                    rhs = (act("K", i, v) - act("Kinv", i, v)).scale((q - 1 / q).inverse())
                    assert lhs == rhs


@pytest.mark.parametrize("n,N", [(1, 3), (2, 3)])
def test_letter_moves_and_nilpotency(n, N):
    ctx = EvalParams.natural(n, N)
    for c in [(N,) + (0,) * n, (1,) * (n + 1) if n + 1 == N else (N - 1, 1) + (0,) * (n - 1)]:
        for w in weight_space_basis(ctx, c):
            v = ModuleVector.basis(ctx, w)
            for i in range(n + 1):
                for w2 in act("E", i, v).terms:
                    c2 = list(c)
                    c2[i] -= 1
                    c2[(i - 1) % (n + 1)] += 1
                    assert weight_of_word(w2, n).composition == tuple(c2)
                x = v
                for _ in range(N + 1):
                    x = act("F", i, x)
                assert x.is_zero()


def test_k_exponent_matches_weight():
    n = 3
    for x in range(n + 1):
        assert sum(k_exponent(i, x, n) for i in range(n + 1)) == 0
