"""The scalar field Q(zeta_m)(q).

Since Phi_m stays irreducible over Q(q), every element can be written as

    (n_0(q) + n_1(q) zeta + ... + n_{phi-1}(q) zeta^{phi-1}) / d(q)

with n_k, d in Q[q].  The canonical form takes d monic and coprime to the
content gcd(n_0, ..., n_{phi-1}); this form is unique, so equality and hashing
are structural.  Polynomial arithmetic over Q is delegated to FLINT.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from flint import fmpq, fmpq_poly

from .cyclotomic import CycloNumber, context
from .errors import DivisionByZero, NegativeValuation

_ZERO = fmpq_poly(0)
_ONE = fmpq_poly(1)


def _fmpq(x) -> fmpq:
    if isinstance(x, int):
        return fmpq(x)
    x = Fraction(x)
    return fmpq(x.numerator, x.denominator)


def _frac(c: fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _order(p: fmpq_poly) -> int:
    # q-adic order of a nonzero polynomial
    for k, c in enumerate(p.coeffs()):
        if c != 0:
            return k
    raise ValueError("order of zero polynomial")


@lru_cache(maxsize=None)
def _galois(m: int):
    """Exponents a != 1 coprime to m (the nontrivial automorphisms zeta -> zeta^a)."""
    return tuple(a for a in range(2, m) if math.gcd(a, m) == 1)


class FieldElem:
    """Element of Q(zeta_m)(q) in canonical form."""

    __slots__ = ("m", "nums", "den", "_hash")

    def __init__(self, m: int, nums, den=None, normalize: bool = True):
        phi = context(m).phi
        nums = list(nums)
        if len(nums) < phi:
            nums += [_ZERO] * (phi - len(nums))
        elif len(nums) > phi:
            # reduce a longer zeta-expansion modulo Phi_m
            nums = _fold(m, nums)
        self.m = m
        self.nums = tuple(nums)
        self.den = _ONE if den is None else den
        self._hash = None
        if normalize:
            self._normalize()

    def _normalize(self):
        den = self.den
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        nums = self.nums
        if all(n.is_zero() for n in nums):
            self.nums = (_ZERO,) * len(nums)
            self.den = _ONE
            return
        if den.degree() > 0:
            g = den
            for n in nums:
                if not n.is_zero():
                    g = g.gcd(n)
                    if g.degree() == 0:
                        break
            if g.degree() > 0:
                den = den / g
                nums = tuple(n / g for n in nums)
        lc = den.leading_coefficient()
        if lc != 1:
            inv = 1 / lc
            den = den * inv
            nums = tuple(n * inv for n in nums)
        self.nums = nums
        self.den = den

    # constructors

    @classmethod
    def _raw(cls, m, nums, den):
        obj = object.__new__(cls)
        obj.m = m
        obj.nums = nums
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, m: int, value) -> "FieldElem":
        phi = context(m).phi
        return cls._raw(m, (fmpq_poly([_fmpq(value)]),) + (_ZERO,) * (phi - 1), _ONE)

    @classmethod
    def zero(cls, m: int) -> "FieldElem":
        return cls.rational(m, 0)

    @classmethod
    def one(cls, m: int) -> "FieldElem":
        return cls.rational(m, 1)

    @classmethod
    def from_cyclo(cls, c: CycloNumber, m: int | None = None) -> "FieldElem":
        if m is not None and m != c.m:
            c = CycloNumber.rational(m, c.as_rational())
        return cls._raw(c.m, tuple(fmpq_poly([_fmpq(x)]) for x in c.coeffs), _ONE)

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "FieldElem":
        return cls.from_cyclo(CycloNumber.zeta(m, k))

    @classmethod
    def q(cls, m: int, k: int = 1) -> "FieldElem":
        """The monomial q^k (k may be negative)."""
        phi = context(m).phi
        mono = fmpq_poly([0] * abs(k) + [1])
        if k >= 0:
            return cls._raw(m, (mono,) + (_ZERO,) * (phi - 1), _ONE)
        return cls._raw(m, (_ONE,) + (_ZERO,) * (phi - 1), mono)

    @classmethod
    def poly(cls, m: int, coeffs) -> "FieldElem":
        """Polynomial in q with the given coefficients (constant term first).

        Coefficients may be ints, Fractions or CycloNumbers.
        """
        phi = context(m).phi
        cols = [[0] * len(coeffs) for _ in range(phi)]
        for j, c in enumerate(coeffs):
            if isinstance(c, CycloNumber):
                if c.m != m:
                    c = CycloNumber.rational(m, c.as_rational())
                vals = c.coeffs
            else:
                vals = (Fraction(c),) + (0,) * (phi - 1)
            for k, v in enumerate(vals):
                cols[k][j] = _fmpq(v)
        return cls(m, [fmpq_poly(col) for col in cols])

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.m == self.m:
                return other
            if other.in_rational_functions():
                return FieldElem._raw(self.m, (other.nums[0],) +
                                      (_ZERO,) * (len(self.nums) - 1), other.den)
            if self.in_rational_functions():
                return None
            raise ValueError(f"cannot mix fields for m={self.m} and m={other.m}")
        if isinstance(other, CycloNumber):
            return FieldElem.from_cyclo(other, self.m if other.m != self.m else None)
        if isinstance(other, (int, Rational)):
            return FieldElem.rational(self.m, other)
        return None

    def _lifted(self, other: "FieldElem") -> "FieldElem":
        return FieldElem._raw(other.m, (self.nums[0],) + (_ZERO,) * (len(other.nums) - 1),
                              self.den)

    # predicates

    def is_zero(self) -> bool:
        return all(n.is_zero() for n in self.nums)

    def is_one(self) -> bool:
        return self.den.is_one() and self.nums[0].is_one() and \
            all(n.is_zero() for n in self.nums[1:])

    def in_rational_functions(self) -> bool:
        """True when the element lies in Q(q) (no zeta component)."""
        return all(n.is_zero() for n in self.nums[1:])

    def is_constant(self) -> bool:
        """True when the element does not depend on q."""
        return self.den.degree() == 0 and all(n.degree() <= 0 for n in self.nums)

    def constant_value(self) -> CycloNumber:
        if not self.is_constant():
            raise ValueError(f"{self} depends on q")
        return CycloNumber(self.m, [_frac(n[0]) for n in self.nums])

    def as_integer(self):
        """Return the value as an int if the element is a rational integer, else None."""
        if not (self.is_constant() and self.in_rational_functions()):
            return None
        v = _frac(self.nums[0][0])
        return int(v) if v.denominator == 1 else None

    # arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, FieldElem):
                return self._lifted(other) + other
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        if self.den == o.den:
            return FieldElem(self.m, [a + b for a, b in zip(self.nums, o.nums)], self.den)
        return FieldElem(self.m, [a * o.den + b * self.den for a, b in zip(self.nums, o.nums)],
                         self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem._raw(self.m, tuple(-n for n in self.nums), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, FieldElem):
                return self._lifted(other) - other
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, FieldElem):
                return self._lifted(other) * other
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return FieldElem.zero(self.m)
        nums = _mul_zeta(self.m, self.nums, o.nums)
        den = self.den * o.den
        if den.is_one():
            return FieldElem._raw(self.m, nums, den)
        return FieldElem(self.m, nums, den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(zeta)(q)")
        m = self.m
        if self.in_rational_functions():
            n0 = self.nums[0]
            return FieldElem(m, [self.den], n0)
        # N^{-1} = (product of the nontrivial Galois conjugates) / norm
        conj = None
        for a in _galois(m):
            c = _apply_galois(m, self.nums, a)
            conj = c if conj is None else _mul_zeta(m, conj, c)
        norm = _mul_zeta(m, self.nums, conj)
        if any(not n.is_zero() for n in norm[1:]):
            raise ArithmeticError("norm computation left a zeta component")
        return FieldElem(m, [n * self.den for n in conj], norm[0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, FieldElem):
                return self._lifted(other) / other
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = FieldElem.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            if other.m == self.m:
                return self.den == other.den and self.nums == other.nums
            if self.in_rational_functions() and other.in_rational_functions():
                return self.den == other.den and self.nums[0] == other.nums[0]
            return False
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self == o

    def __hash__(self):
        if self._hash is None:
            key = tuple(tuple(_frac(c) for c in n.coeffs()) for n in self.nums)
            if self.in_rational_functions():
                key = key[:1]
            self._hash = hash((key, tuple(_frac(c) for c in self.den.coeffs())))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # q-adic structure

    def valuation(self):
        """Order of vanishing at q = 0 (math.inf for zero)."""
        if self.is_zero():
            return math.inf
        return min(_order(n) for n in self.nums if not n.is_zero()) - _order(self.den)

    def reduce_q0(self) -> CycloNumber:
        """Image in A/qA = Q(zeta_m); requires valuation >= 0."""
        v = self.valuation()
        if v < 0:
            raise NegativeValuation(f"{self} has q-valuation {v}")
        if v == math.inf or v > 0:
            return CycloNumber.rational(self.m, 0)
        e = _order(self.den)
        d0 = _frac(self.den[e])
        return CycloNumber(self.m, [_frac(n[e]) / d0 for n in self.nums])

    def specialize(self, q0) -> CycloNumber:
        """Substitute a rational value for q."""
        x = _fmpq(q0)
        d = self.den(x)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at q={q0}")
        return CycloNumber(self.m, [_frac(n(x) / d) for n in self.nums])

    def coefficient(self, j: int) -> CycloNumber:
        """Coefficient of q^j in the numerator."""
        return CycloNumber(self.m, [_frac(n[j]) for n in self.nums])

    def numerator_degree(self) -> int:
        return max(n.degree() for n in self.nums)

    def sort_key(self):
        """Deterministic total order on canonical forms."""
        dkey = tuple(_frac(c) for c in self.den.coeffs())
        top = max(self.numerator_degree(), 0)
        nkey = tuple(self.coefficient(j).sort_key() for j in range(top + 1))
        return (len(dkey), dkey, len(nkey), nkey)

    # printing

    def _num_str(self) -> str:
        top = self.numerator_degree()
        if top < 0:
            return "0"
        terms = []
        for j in range(top + 1):
            c = self.coefficient(j)
            if c.is_zero():
                continue
            cs = str(c)
            compound = "+" in cs or "-" in cs[1:]
            if j == 0:
                terms.append(cs)
                continue
            mono = "q" if j == 1 else f"q^{j}"
            if cs == "1":
                terms.append(mono)
            elif cs == "-1":
                terms.append(f"-{mono}")
            else:
                terms.append(f"({cs})*{mono}" if compound else f"{cs}*{mono}")
        return "+".join(terms).replace("+-", "-")

    def __str__(self):
        num = self._num_str()
        if self.den.is_one():
            return num
        den = str(self.den).replace("x", "q").replace(" ", "").replace("^", "^")
        return f"({num})/({den})"

    def __repr__(self):
        return f"FieldElem({self.m}, {self})"


def _fold(m: int, nums):
    ctx = context(m)
    phi = ctx.phi
    out = list(nums[:phi])
    for j in range(phi, len(nums)):
        n = nums[j]
        if n.is_zero():
            continue
        for t, z in enumerate(ctx.powers[j] if j < len(ctx.powers) else
                              ctx.powers[j % m]):
            if z:
                out[t] = out[t] + n * z
    return out


def _mul_zeta(m: int, a, b):
    """Product of two zeta-expansions with Q[q] coefficients, reduced mod Phi_m."""
    phi = len(a)
    if phi == 1:
        return (a[0] * b[0],)
    prod = [None] * (2 * phi - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if y.is_zero():
                continue
            t = x * y
            prod[i + j] = t if prod[i + j] is None else prod[i + j] + t
    powers = context(m).powers
    out = [p if p is not None else _ZERO for p in prod[:phi]]
    for j in range(phi, 2 * phi - 1):
        p = prod[j]
        if p is None:
            continue
        for t, z in enumerate(powers[j]):
            if z:
                out[t] = out[t] + p * z
    return tuple(out)


def _apply_galois(m: int, nums, a: int):
    """Apply zeta -> zeta^a to a zeta-expansion."""
    ctx = context(m)
    out = [_ZERO] * ctx.phi
    for k, n in enumerate(nums):
        if n.is_zero():
            continue
        for t, z in enumerate(ctx.powers[(a * k) % m]):
            if z:
                out[t] = out[t] + n * z
    return tuple(out)


def field_arith(a: FieldElem, b: FieldElem | None, op: str) -> FieldElem:
    """Dispatch helper: op is one of 'add', 'mul', 'inv' (b ignored for inv)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown op {op!r}")


def q_valuation(a: FieldElem):
    return a.valuation()


def reduce_q0(a: FieldElem) -> CycloNumber:
    return a.reduce_q0()


@lru_cache(maxsize=None)
def q_integer(m: int, k: int) -> FieldElem:
    """The quantum integer [k] = (q^k - q^-k)/(q - q^-1)."""
    if k == 0:
        return FieldElem.zero(m)
    sign = 1 if k > 0 else -1
    k = abs(k)
    # [k] = q^{-(k-1)} (1 + q^2 + ... + q^{2(k-1)})
    coeffs = [0] * (2 * k - 1)
    for j in range(0, 2 * k - 1, 2):
        coeffs[j] = sign
    return FieldElem.poly(m, coeffs) * FieldElem.q(m, -(k - 1))


@lru_cache(maxsize=None)
def q_factorial(m: int, k: int) -> FieldElem:
    """[k]! = [1][2]...[k]."""
    out = FieldElem.one(m)
    for j in range(1, k + 1):
        out = out * q_integer(m, j)
    return out
