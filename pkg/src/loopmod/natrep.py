"""Tensor products of evaluation modules V(a) of the natural representation.

V(a) has basis v_0, ..., v_n.  For i in 1..n the action is

    E_i v_j = delta_{ij} v_{j-1},  F_i v_j = delta_{i,j+1} v_{j+1},
    K_i v_j = q^{delta_{j+1,i} - delta_{j,i}} v_j,

and the affine node acts by E_0 v_0 = a v_n, F_0 v_n = a^{-1} v_0 (indices of
K_0 taken mod n+1).  Tensor products use

    Delta(E) = E (x) K^{-1} + 1 (x) E,    Delta(F) = F (x) 1 + K (x) F.

Basis vectors are words ``(i_1, ..., i_N)`` with i_1 in the rightmost factor,
so the factor carrying letter ``word[j]`` is tensor slot N - j (counted from
the left) and has evaluation parameter ``params[N - 1 - j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinat import content_of, multinomial, words_with_content
from .cyclotomic import CycloNumber
from .ratfunc import FieldElem, q_factorial

GENERATORS = ("E", "F", "K", "Kinv")


@lru_cache(maxsize=None)
def qpow(m: int, e: int) -> FieldElem:
    return FieldElem.q(m, e)


def k_exponent(i: int, letter: int, n: int) -> int:
    """Exponent of q in K_i v_letter."""
    return int((letter + 1) % (n + 1) == i) - int(letter == i)


@dataclass(frozen=True)
class EvalParams:
    """Evaluation parameters a_1, ..., a_N of V(a_1) (x) ... (x) V(a_N).

    ``m`` fixes the scalar field Q(zeta_m)(q) the parameters live in.
    """

    n: int
    params: tuple
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank n must be >= 1")
        for a in self.params:
            if a.is_zero():
                raise ValueError("evaluation parameters must be nonzero")

    @classmethod
    def natural(cls, n: int, N: int, m: int | None = None) -> "EvalParams":
        """Parameters (1, zeta, ..., zeta^{N-1}) with zeta of order m (default N)."""
        m = N if m is None else m
        m = max(m, 1)
        return cls(n, tuple(FieldElem.zeta(m, j) for j in range(N)), m)

    @property
    def N(self) -> int:
        return len(self.params)

    def param_of_position(self, j: int) -> FieldElem:
        """Parameter of the factor holding ``word[j]`` (0-based word index)."""
        return self.params[self.N - 1 - j]

    @property
    def inverse_params(self):
        return _inverses(self.params)

    def zeta_exponents(self):
        """log_zeta of each parameter (tensor order), or None where undefined."""
        out = []
        for a in self.params:
            if a.is_constant():
                out.append(a.constant_value().zeta_log())
            else:
                out.append(None)
        return tuple(out)


@lru_cache(maxsize=None)
def _inverses(params):
    return tuple(a.inverse() for a in params)


@dataclass(frozen=True)
class PWeight:
    composition: tuple
    varpi_coords: tuple


def weight_of_word(word, n: int) -> PWeight:
    c = content_of(word, n)
    return PWeight(c, tuple(c[i - 1] - c[i] for i in range(1, n + 1)))


def weight_space_basis(ctx: EvalParams, composition) -> list:
    if sum(composition) != ctx.N or len(composition) != ctx.n + 1:
        raise ValueError(f"composition {tuple(composition)} is not a weight of this module")
    return words_with_content(composition)


def _add(acc: dict, key, coef):
    cur = acc.get(key)
    if cur is None:
        if not coef.is_zero():
            acc[key] = coef
    else:
        s = cur + coef
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


def act_word(ctx: EvalParams, gen: str, i: int, word) -> dict:
    """Image of one basis word as a dict word -> coefficient."""
    n, m = ctx.n, ctx.m
    if not 0 <= i <= n:
        raise ValueError(f"generator index {i} outside 0..{n}")
    N = len(word)
    if gen in ("K", "Kinv"):
        e = sum(k_exponent(i, x, n) for x in word)
        return {word: qpow(m, e if gen == "K" else -e)}
    out = {}
    if gen == "E":
        src = i if i != 0 else 0
        dst = i - 1 if i != 0 else n
        shift = 0  # sum of K^{-1} exponents on factors to the right
        for j in range(N):
            x = word[j]
            if x == src:
                coef = qpow(m, -shift)
                if i == 0:
                    coef = coef * ctx.param_of_position(j)
                _add(out, word[:j] + (dst,) + word[j + 1:], coef)
            shift += k_exponent(i, x, n)
        return out
    if gen == "F":
        src = i - 1 if i != 0 else n
        dst = i if i != 0 else 0
        shift = 0  # sum of K exponents on factors to the left
        for j in range(N - 1, -1, -1):
            x = word[j]
            if x == src:
                coef = qpow(m, shift)
                if i == 0:
                    coef = coef * ctx.inverse_params[N - 1 - j]
                _add(out, word[:j] + (dst,) + word[j + 1:], coef)
            shift += k_exponent(i, x, n)
        return out
    raise ValueError(f"unknown generator {gen!r}")


def act_terms(ctx: EvalParams, gen: str, i: int, terms: dict) -> dict:
    out = {}
    for w, c in terms.items():
        for w2, c2 in act_word(ctx, gen, i, w).items():
            _add(out, w2, c * c2)
    return out


class ModuleVector:
    """Finite linear combination of words with FieldElem coefficients."""

    __slots__ = ("terms", "ctx")

    def __init__(self, ctx: EvalParams, terms=None):
        self.ctx = ctx
        clean = {}
        for w, c in (terms or {}).items():
            if not isinstance(c, FieldElem):
                c = FieldElem.rational(ctx.m, 0) + c
            if not c.is_zero():
                clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def basis(cls, ctx: EvalParams, word) -> "ModuleVector":
        return cls(ctx, {tuple(word): FieldElem.one(ctx.m)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add(out, w, c)
        return ModuleVector._raw(self.ctx, out)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "ModuleVector":
        if not isinstance(c, FieldElem):
            c = FieldElem.rational(self.ctx.m, 0) + c
        if c.is_zero():
            return ModuleVector._raw(self.ctx, {})
        return ModuleVector._raw(self.ctx, {w: x * c for w, x in self.terms.items()})

    @classmethod
    def _raw(cls, ctx, terms):
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        return obj

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.terms == other.terms

    def __getitem__(self, word):
        return self.terms.get(tuple(word), FieldElem.zero(self.ctx.m))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"({c})*{''.join(map(str, w))}" for w, c in sorted(self.terms.items())]
        return " + ".join(parts)

    def valuation(self):
        """Minimum q-valuation over the coordinates."""
        return min((c.valuation() for c in self.terms.values()), default=float("inf"))

    def reduce_q0(self) -> dict:
        """Coordinates modulo qL as a dict word -> CycloNumber (zeros dropped)."""
        out = {}
        for w, c in self.terms.items():
            r = c.reduce_q0()
            if not r.is_zero():
                out[w] = r
        return out

    def compositions(self) -> set:
        return {content_of(w, self.ctx.n) for w in self.terms}


def act(gen: str, i: int, v: ModuleVector) -> ModuleVector:
    """Apply E_i, F_i, K_i or K_i^{-1} (``gen`` in 'E', 'F', 'K', 'Kinv')."""
    return ModuleVector._raw(v.ctx, act_terms(v.ctx, gen, i, v.terms))


def divided_power(gen: str, s: int, i: int, v: ModuleVector) -> ModuleVector:
    """gen_i^s / [s]! applied to v."""
    if s < 0:
        raise ValueError("s must be >= 0")
    terms = v.terms
    for _ in range(s):
        terms = act_terms(v.ctx, gen, i, terms)
    out = ModuleVector._raw(v.ctx, terms)
    if s > 1:
        out = out.scale(q_factorial(v.ctx.m, s).inverse())
    return out


def weight_space_dim(composition) -> int:
    return multinomial(composition)


def zeta_power(m: int, k: int) -> CycloNumber:
    return CycloNumber.zeta(m, k)
