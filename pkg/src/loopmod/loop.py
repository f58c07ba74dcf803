"""The loop module L(V;d) = V (x) C[t, t^-1] and its m simple components.

x(v (x) t^r) = (x v) (x) t^{r+k} for x of loop degree k, and D acts on
v (x) t^r by q^{d+r}.  Components are never materialized: a component is a
residue s together with the eta operator of V, and every question about it is
answered one graded weight space at a time.

Grading convention: since eta(x.v) = zeta^k x.eta(v), the component generated
by v_hw (x) t^s is

    L^s = span{ v (x) t^r : eta(v) = zeta^{r-s} v },

and Pi^_s(v (x) t^r) = Pi_{r-s}(v) (x) t^r.  Dimensions only depend on
gcd(r-s, d) for divisors d of m, so they agree with the count for s-r.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .braiding import EtaOperator, Projector, build_eta, eigenspace_dims, generator_degree, \
    projector_apply
from .combinat import compositions
from .drinfeld import DrinfeldTuple, detect_period, extract_base
from .errors import UnsupportedTuple
from .natrep import ModuleVector, PWeight, act, qpow, weight_of_word

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoopVector:
    v: ModuleVector
    r: int
    d: int = 0

    def __add__(self, other: "LoopVector") -> "LoopVector":
        if (self.r, self.d) != (other.r, other.d):
            raise ValueError("can only add loop vectors of the same grade")
        return LoopVector(self.v + other.v, self.r, self.d)

    def scale(self, c) -> "LoopVector":
        return LoopVector(self.v.scale(c), self.r, self.d)

    def is_zero(self) -> bool:
        return self.v.is_zero()

    def __eq__(self, other):
        if not isinstance(other, LoopVector):
            return NotImplemented
        if self.v.is_zero() and other.v.is_zero():
            return True
        return self.v == other.v and self.r == other.r and self.d == other.d

    __hash__ = None


@dataclass(frozen=True)
class GradedWeight:
    nu: PWeight
    r: int


@dataclass(frozen=True)
class ComponentHandle:
    s: int
    eta: EtaOperator = field(repr=False, compare=False)


def loop_degree(gen: str, i: int) -> int:
    return generator_degree(gen, i)


def loop_act(gen: str, i: int, lv: LoopVector) -> LoopVector:
    """Action of E_i, F_i, K_i, K_i^{-1}, or D (``gen='D'``, i ignored)."""
    if gen == "D":
        return LoopVector(lv.v.scale(qpow(lv.v.ctx.m, lv.d + lv.r)), lv.r, lv.d)
    return LoopVector(act(gen, i, lv.v), lv.r + loop_degree(gen, i), lv.d)


def hat_projector(op: EtaOperator, s: int, lv: LoopVector) -> LoopVector:
    """Pi^_s(v (x) t^r) = Pi_{r-s}(v) (x) t^r."""
    return LoopVector(projector_apply(Projector((lv.r - s) % op.m, op), lv.v), lv.r, lv.d)


def composition_of_weight(nu, m: int, n: int):
    """Composition of m with the given varpi-coordinates, or None."""
    if isinstance(nu, PWeight):
        comp = nu.composition
        return comp if sum(comp) == m and len(comp) == n + 1 else None
    coords = tuple(nu)
    if len(coords) != n:
        raise ValueError(f"expected {n} coordinates, got {len(coords)}")
    # k_j = t + sum_{l > j} a_l
    offsets = [sum(coords[j:]) for j in range(n + 1)]
    rest = m - sum(offsets)
    if rest % (n + 1):
        return None
    t = rest // (n + 1)
    comp = tuple(t + o for o in offsets)
    return comp if all(k >= 0 for k in comp) else None


def component_weight_dim(s: int, gw: GradedWeight, m: int, n: int,
                         op: EtaOperator | None = None) -> int:
    """dim L^s_{nu + r delta}, read off the eta eigenspaces of V_nu."""
    comp = composition_of_weight(gw.nu, m, n)
    if comp is None:
        return 0
    op = op or shared_eta(m, n)
    return eigenspace_dims(op, comp, cross_check=False)[(gw.r - s) % m]


@lru_cache(maxsize=None)
def shared_eta(m: int, n: int) -> EtaOperator:
    return build_eta(m, n)


def _dims_job(args):
    m, n, comp, cross_check = args
    return comp, eigenspace_dims(shared_eta(m, n), comp, cross_check=cross_check)


def eigenspace_table(m: int, n: int, comps=None, jobs: int | None = 1,
                     cross_check: bool = True) -> dict:
    """composition -> eigenspace dims, optionally spread over worker processes."""
    comps = [tuple(c) for c in (comps if comps is not None else compositions(m, n + 1))]
    jobs = os.cpu_count() if jobs is None else jobs
    tasks = [(m, n, c, cross_check) for c in comps]
    if jobs and jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            results = list(pool.map(_dims_job, tasks))
    else:
        results = [_dims_job(t) for t in tasks]
    return dict(results)


def check_supported(pi: DrinfeldTuple):
    """Return (m, pi^0) for a natural tensor power tuple, else raise UnsupportedTuple."""
    m = detect_period(pi)
    if pi.roots is None:
        raise UnsupportedTuple("decompose needs the tuple in root form")
    try:
        pi0 = extract_base(pi, m)
    except ValueError as exc:
        raise UnsupportedTuple(f"cannot extract the base tuple: {exc}") from None
    if len(pi0.roots[0]) != 1 or any(pi0.roots[1:]) or pi0.roots[0][0].is_zero():
        raise UnsupportedTuple(
            "only tuples (prod_j (1 - b zeta^j u), 1, ..., 1) are implemented")
    return m, pi0


@dataclass
class DecompositionReport:
    n: int
    m: int
    d: int
    pi0: DrinfeldTuple
    components: list
    table: dict
    r_window: tuple

    def component_dims(self, s: int) -> list:
        out = []
        for comp in sorted(self.table, reverse=True):
            for r in range(self.r_window[0], self.r_window[1] + 1):
                out.append({"composition": list(comp), "r": r,
                            "dim": self.table[comp][(r - s) % self.m]})
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "pi0_roots": [[str(b) for b in roots] for roots in self.pi0.roots],
            "components": [{"s": h.s, "dims": self.component_dims(h.s)}
                           for h in self.components],
        }


def decompose(pi: DrinfeldTuple, d: int = 0, r_window: tuple | None = None,
              comps=None, jobs: int | None = 1) -> DecompositionReport:
    """Split L(V(pi); d) into its m components and tabulate their graded dims.

    d only shifts D-eigenvalues, so the tables are the same for every d.
    """
    m, pi0 = check_supported(pi)
    n = pi.n
    if r_window is None:
        r_window = (-m, m)
    if r_window[0] > r_window[1]:
        raise ValueError(f"empty grade window {r_window}")
    log.info("decomposing n=%d m=%d", n, m)
    op = shared_eta(m, n)
    table = eigenspace_table(m, n, comps, jobs=jobs)
    handles = [ComponentHandle(s, op) for s in range(m)]
    return DecompositionReport(n, m, d, pi0, handles, table, tuple(r_window))


def highest_word(m: int) -> tuple:
    return (0,) * m


def weight_of(lv: LoopVector) -> set:
    return {GradedWeight(weight_of_word(w, lv.v.ctx.n), lv.r) for w in lv.v.terms}
