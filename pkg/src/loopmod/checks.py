"""Exact verification suites; each returns a list of discrepancies (empty = pass)."""

from __future__ import annotations

import itertools

from .braiding import Projector, build_eta, eigenspace_rank_dims, eigenspace_trace_dims, \
    eta_grading_check, maj_limit_holds, projector_apply
from .characters import CharQuery, classical_dim, closed_dim
from .combinat import closed_count, compositions, count_maj_by_residue, multinomial, \
    words_with_content
from .crystal import oracle_step, tensor_rule_step, verify_axioms
from .loop import GradedWeight, LoopVector, component_weight_dim, hat_projector, loop_act
from .natrep import EvalParams, ModuleVector, PWeight
from .ratfunc import FieldElem

ALL_GENERATORS = ("E", "F", "K", "Kinv")


def eta_order(n: int, m: int) -> list:
    op = build_eta(m, n)
    return [{"composition": c} for c in compositions(m, n + 1) if not op.power_is_identity(c)]


def eta_grading(n: int, m: int, sign: int = 1, gens=("E", "F", "K")) -> list:
    """eta(x.v) = zeta^{sign*k} x.eta(v) on every basis word (k the loop degree of x)."""
    op = build_eta(m, n)
    ctx = op.ctx
    bad = []
    for c in compositions(m, n + 1):
        for w in words_with_content(c):
            v = ModuleVector.basis(ctx, w)
            for gen in gens:
                for i in range(n + 1):
                    if not eta_grading_check(op, gen, i, v, sign=sign):
                        bad.append({"word": w, "gen": gen, "i": i})
    return bad


def maj_limit(n: int, m: int) -> list:
    op = build_eta(m, n)
    return [{"word": w} for c in compositions(m, n + 1) for w in words_with_content(c)
            if not maj_limit_holds(op, w)]


def dimensions(n: int, m: int) -> list:
    """trace dim = rank dim = Maj census = closed formula, every composition and k."""
    op = build_eta(m, n)
    bad = []
    for c in compositions(m, n + 1):
        trace = eigenspace_trace_dims(op, c)
        rank = eigenspace_rank_dims(op, c)
        census = count_maj_by_residue(c, m)
        closed = [closed_count(c, m, k) for k in range(m)]
        if not trace == rank == census == closed:
            bad.append({"composition": c, "trace": trace, "rank": rank,
                        "maj": census, "closed": closed})
    return bad


def projectors(n: int, m: int) -> list:
    """Projector identities on full weight-space bases, and Pi^_s vs loop_act.

    Pi^_s only sees r - s, so grade r = 0 with every s covers every case.
    """
    op = build_eta(m, n)
    ctx = op.ctx
    P = [Projector(s, op) for s in range(m)]
    bad = []
    for c in compositions(m, n + 1):
        for w in words_with_content(c):
            v = ModuleVector.basis(ctx, w)
            imgs = [projector_apply(p, v) for p in P]
            total = imgs[0]
            for x in imgs[1:]:
                total = total + x
            if total != v:
                bad.append({"word": w, "law": "sum"})
            for s, x in enumerate(imgs):
                for t, p in enumerate(P):
                    y = projector_apply(p, x)
                    if (s == t and y != x) or (s != t and not y.is_zero()):
                        bad.append({"word": w, "law": "product", "s": s, "t": t})
            lv = LoopVector(v, 0)
            for s in range(m):
                for gen in ALL_GENERATORS + ("D",):
                    for i in (range(n + 1) if gen != "D" else (0,)):
                        lhs = loop_act(gen, i, hat_projector(op, s, lv))
                        rhs = hat_projector(op, s, loop_act(gen, i, lv))
                        if lhs != rhs:
                            bad.append({"word": w, "law": "commute", "s": s,
                                        "gen": gen, "i": i})
    return bad


def characters(n: int, m: int) -> list:
    """classical = closed, dependence on s - r only, and totals over s."""
    bad = []
    for c in compositions(m, n + 1):
        nu = PWeight(tuple(c), tuple(c[i - 1] - c[i] for i in range(1, n + 1)))
        for r in range(-m, m + 1):
            per_s = []
            for s in range(m):
                qr = CharQuery(n, m, s, GradedWeight(nu, r))
                a, b = closed_dim(qr), classical_dim(qr)
                brute = component_weight_dim(s, GradedWeight(nu, r), m, n)
                shifted = component_weight_dim((s + 1) % m, GradedWeight(nu, r + 1), m, n)
                if not a == b == brute == shifted:
                    bad.append({"composition": c, "r": r, "s": s, "closed": a,
                                "classical": b, "brute": brute, "shifted": shifted})
                per_s.append(brute)
            if sum(per_s) != multinomial(c):
                bad.append({"composition": c, "r": r, "total": sum(per_s)})
    return bad


def crystal_oracle(n: int, N: int, m: int | None = None) -> list:
    """tensor_rule_step vs the string-decomposition oracle on every word."""
    m = N if m is None else m
    ctx = EvalParams(n, tuple(FieldElem.zeta(m, j) for j in range(N)), m)
    bad = []
    for w in itertools.product(range(n + 1), repeat=N):
        for i in range(n + 1):
            for op in "EF":
                a = oracle_step(op, i, w, ctx)
                b = tensor_rule_step(op, i, w, ctx)
                if a != b:
                    bad.append({"word": w, "i": i, "op": op, "oracle": a, "rule": b})
    return bad


def crystal_axioms(n: int, N: int, m: int | None = None) -> list:
    m = N if m is None else m
    ctx = EvalParams(n, tuple(FieldElem.zeta(m, j) for j in range(N)), m)
    return verify_axioms(ctx, m).violations


SUITES = {
    "eta-order": lambda n, m: eta_order(n, m),
    "eta-grading": lambda n, m: eta_grading(n, m),
    "maj": lambda n, m: maj_limit(n, m),
    "dims": lambda n, m: dimensions(n, m),
    "projectors": lambda n, m: projectors(n, m),
    "characters": lambda n, m: characters(n, m),
    "crystal": lambda n, m: crystal_oracle(n, m) + crystal_axioms(n, m) + crystal_axioms(n, m, 1),
}


def run_suites(n: int, m: int, names=None) -> dict:
    names = list(SUITES) if names is None else names
    return {name: SUITES[name](n, m) for name in names}
