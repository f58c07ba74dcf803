import itertools
import json
import re

import pytest

from loopmod.combinat import compositions, maj
from loopmod.crystal import (build_component_crystal, check_graph, kashiwara_op, oracle_step,
                             signature, string_decompose, tensor_rule_step, verify_axioms)
from loopmod.loop import GradedWeight, component_weight_dim
from loopmod.natrep import EvalParams, ModuleVector, act, divided_power
from loopmod.ratfunc import FieldElem


def basis(ctx, w):
    return ModuleVector.basis(ctx, w)


def test_string_of_kernel_vector():
    ctx = EvalParams.natural(1, 2)
    v = basis(ctx, (0, 0))
    assert act("E", 1, v).is_zero()
    sd = string_decompose(1, v)
    assert [(s, u) for s, u in sd.components] == [(0, v)]


def test_string_of_divided_power():
    ctx = EvalParams.natural(1, 2)
    u = basis(ctx, (0, 0))
    v = divided_power("F", 2, 1, u)
    sd = string_decompose(1, v)
    assert [(s, x) for s, x in sd.components] == [(2, u)]


def test_string_two_terms():
    ctx = EvalParams.natural(1, 2)
    v = basis(ctx, (1, 0))  # v_0 (x) v_1
    sd = string_decompose(1, v)
    assert [s for s, _ in sd.components] == [0, 1]
    assert sd.t_shift == 0
    for _, u in sd.components:
        assert act("E", 1, u).is_zero()
    assert sd.reconstruct() == v


@pytest.mark.parametrize("n,N", [(1, 3), (2, 3)])
def test_string_reconstruction_exact(n, N):
    ctx = EvalParams.natural(n, N)
    q = FieldElem.q(ctx.m)
    for c in compositions(N, n + 1):
        words = [w for w in itertools.product(range(n + 1), repeat=N)
                 if tuple(w.count(x) for x in range(n + 1)) == c]
        v = ModuleVector(ctx, {w: q ** k + 1 for k, w in enumerate(words)})
        for i in range(n + 1):
            sd = string_decompose(i, v)
            assert sd.reconstruct() == v
            for s, u in sd.components:
                assert s >= 0 and s + sd.t_shift >= 0
                assert act("E", i, u).is_zero()


def test_kashiwara_examples():
    ctx = EvalParams.natural(1, 2)
    hw = basis(ctx, (0, 0))
    assert kashiwara_op("E", 1, hw).is_zero()
    red = kashiwara_op("F", 1, hw).reduce_q0()
    # F~_1 acts on the leftmost factor: v_1 (x) v_0, the word (0, 1)
    assert red == {(0, 1): 1}


@pytest.mark.parametrize("n,N", [(1, 2), (2, 2), (1, 3)])
def test_e_after_f_returns(n, N):
    ctx = EvalParams.natural(n, N)
    for w in itertools.product(range(n + 1), repeat=N):
        for i in range(n + 1):
            w2, k = oracle_step("F", i, w, ctx)
            if w2 is None:
                continue
            back = kashiwara_op("E", i, kashiwara_op("F", i, basis(ctx, w))).reduce_q0()
            assert list(back) == [w]


def test_tensor_rule_zero_exponent_off_zero():
    for w in itertools.product(range(3), repeat=3):
        for i in (1, 2):
            for op in "EF":
                assert tensor_rule_step(op, i, w, n=2, m=3)[1] == 0


def test_tensor_rule_constant_word():
    n, i = 2, 1
    w = (i,) * 3
    out, k = tensor_rule_step("E", i, w, n=n, m=3)
    assert out.count(i - 1) == 1 and out.count(i) == 2 and k == 0
    assert oracle_step("E", i, w, EvalParams.natural(n, 3)) == (out, k)


def test_tensor_rule_f0_m2():
    ctx = EvalParams.natural(1, 2)
    assert tensor_rule_step("F", 0, (1, 1), ctx) == oracle_step("F", 0, (1, 1), ctx)
    out, k = tensor_rule_step("F", 0, (1, 1), ctx)
    assert out is not None


def test_signature_cancellation():
    # n = 1, i = 1: letter 0 gives '+', letter 1 gives '-'; slots read left to right
    # word (1, 0) is v_0 (x) v_1: '+-' cancels
    assert signature(1, (1, 0), 1) == ([], [])
    assert signature(1, (0, 1), 1) == ([1], [2])


@pytest.mark.parametrize("n,N", [(1, 2), (2, 2), (1, 3), (2, 3), (1, 4)])
def test_tensor_rule_matches_oracle(n, N):
    ctx = EvalParams.natural(n, N)
    for w in itertools.product(range(n + 1), repeat=N):
        for i in range(n + 1):
            for op in "EF":
                assert tensor_rule_step(op, i, w, ctx) == oracle_step(op, i, w, ctx)


def test_tensor_rule_other_parameters():
    m = 6
    ctx = EvalParams(1, (FieldElem.zeta(m, 5), FieldElem.zeta(m, 2), FieldElem.one(m)), m)
    for w in itertools.product(range(2), repeat=3):
        for i in range(2):
            for op in "EF":
                assert tensor_rule_step(op, i, w, ctx) == oracle_step(op, i, w, ctx)


@pytest.mark.parametrize("n,params,m", [
    (1, (0, 1), 2),
    (2, (0, 1), 3),
    (1, (0, 1, 2), 3),
    (1, (0, 0), 1),
    (2, (0, 0, 0), 1),
])
def test_axioms(n, params, m):
    ctx = EvalParams(n, tuple(FieldElem.zeta(m, e) for e in params), m)
    rep = verify_axioms(ctx, m)
    assert rep.ok, rep.violations[:3]
    assert rep.checked == 2 * (n + 1) ** (len(params) + 1)


def test_axioms_catch_a_bad_lattice():
    # parameters q and q^-1 are not powers of zeta; E~_0 images leave A zeta^Z B
    m = 2
    q = FieldElem.q(m)
    ctx = EvalParams(1, (q ** 3, FieldElem.one(m)), m)
    assert not verify_axioms(ctx, m).ok


def test_component_slices_m2():
    g = build_component_crystal(0, 2, 1, (0, 1))
    assert sorted(g.slice(0)) == [(0, 0), (0, 1), (1, 1)]
    assert g.slice(1) == [(1, 0)]


def test_component_m1_is_everything():
    g = build_component_crystal(0, 1, 2, (0, 1))
    assert len(g.slice(0)) == 3 and len(g.slice(1)) == 3
    assert all(k == 0 for *_, k in g.edges)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_component_slices_match_dims(m):
    n = 1
    for s in range(m):
        g = build_component_crystal(s, m, n, (0, 2 * m - 1))
        assert not check_graph(g)
        for r in range(2 * m):
            for c in compositions(m, n + 1):
                nu = (c[0] - c[1],)
                assert len(g.slice(r, c)) == component_weight_dim(s, GradedWeight(nu, r), m, n)


def test_graph_edges_shift_grades():
    m = 3
    g = build_component_crystal(1, m, 2, (-3, 3))
    for (w, r), (w2, r2), i, k in g.edges:
        if i:
            assert r2 == r and maj(w2) == maj(w)
        else:
            assert r2 == r - 1 and (maj(w2) - maj(w) + 1) % m == 0


def test_graph_exports():
    g = build_component_crystal(0, 2, 1, (0, 1))
    data = json.loads(g.to_json())
    assert {"word", "r"} <= set(data["nodes"][0])
    assert {"from", "to", "i", "zeta_exp"} == set(data["edges"][0])
    dot = g.to_dot()
    assert dot.startswith("digraph crystal {") and dot.rstrip().endswith("}")
    assert re.search(r'label="0/ζ\^1"', dot)
    for line in dot.splitlines()[2:-1]:
        assert re.fullmatch(r'  "[0-9]+@-?[0-9]+"( -> "[0-9]+@-?[0-9]+")? \[.*\];', line)
