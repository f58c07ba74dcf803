"""Exact arithmetic in the cyclotomic field Q(zeta_m).

An element is a tuple of ``phi(m)`` rationals, the coefficients of its
unique representative of degree < phi(m) modulo the cyclotomic polynomial
Phi_m.  zeta is always symbolic; nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import DivisionByZero


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # integer long division by a monic polynomial, coefficients low -> high
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the m-th cyclotomic polynomial.

    Built recursively: x^m - 1 divided by Phi_d for every proper divisor d.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


class _Context:
    """Per-m tables: Phi_m, phi(m) and reduced powers of zeta."""

    def __init__(self, m: int):
        self.m = m
        self.modulus = cyclotomic_poly(m)
        self.phi = len(self.modulus) - 1
        phi = self.phi
        # zeta^j reduced, for 0 <= j < max(m, 2*phi - 1)
        top = max(m, 2 * phi - 1)
        powers = []
        cur = [1] + [0] * (phi - 1)
        for _ in range(top):
            powers.append(tuple(cur))
            # multiply by zeta: shift and fold the overflow with Phi_m
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for j in range(phi):
                    cur[j] -= carry * self.modulus[j]
        self.powers = powers

    def reduce(self, coeffs):
        """Fold a coefficient list of any length into phi(m) slots."""
        phi = self.phi
        out = list(coeffs[:phi]) + [0] * max(0, phi - len(coeffs))
        for j in range(phi, len(coeffs)):
            c = coeffs[j]
            if c:
                for t, z in enumerate(self.powers[j]):
                    if z:
                        out[t] += c * z
        return out


@lru_cache(maxsize=None)
def context(m: int) -> _Context:
    return _Context(m)


class CycloNumber:
    """An element of Q(zeta_m), zeta a primitive m-th root of unity."""

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m: int, coeffs=(0,)):
        ctx = context(m)
        vals = [Fraction(c) for c in coeffs]
        if len(vals) != ctx.phi:
            vals = ctx.reduce(vals)
        self.m = m
        self.coeffs = tuple(vals)
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, m, coeffs):
        obj = object.__new__(cls)
        obj.m = m
        obj.coeffs = tuple(coeffs)
        obj._hash = None
        return obj

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CycloNumber":
        ctx = context(m)
        return cls._raw(m, (Fraction(c) for c in ctx.powers[k % m]))

    @classmethod
    def rational(cls, m: int, value) -> "CycloNumber":
        phi = context(m).phi
        return cls._raw(m, (Fraction(value),) + (Fraction(0),) * (phi - 1))

    # predicates

    @property
    def phi(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def zeta_log(self):
        """Return k with self == zeta^k (0 <= k < m), or None."""
        ctx = context(self.m)
        for k in range(self.m):
            if all(a == b for a, b in zip(self.coeffs, ctx.powers[k])):
                return k
        return None

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.m == self.m:
                return other
            if other.is_rational():
                return CycloNumber.rational(self.m, other.coeffs[0])
            if self.is_rational():
                return None
            raise ValueError(f"cannot mix Q(zeta_{self.m}) and Q(zeta_{other.m})")
        if isinstance(other, (int, Rational)):
            return CycloNumber.rational(self.m, other)
        return None

    def _lift(self, other):
        # self is rational but other lives in a bigger field
        return CycloNumber.rational(other.m, self.coeffs[0])

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CycloNumber):
                return self._lift(other) + other
            return NotImplemented
        return CycloNumber._raw(self.m, (a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber._raw(self.m, (-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CycloNumber):
                return self._lift(other) - other
            return NotImplemented
        return CycloNumber._raw(self.m, (a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CycloNumber):
                return self._lift(other) * other
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloNumber._raw(self.m, (Fraction(c) for c in context(self.m).reduce(prod)))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        """Multiplicative inverse, by solving the multiplication-matrix system."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(zeta)")
        phi = self.phi
        if phi == 1:
            return CycloNumber._raw(self.m, (1 / self.coeffs[0],))
        ctx = context(self.m)
        # column j of the matrix is self * zeta^j
        cols = []
        for j in range(phi):
            shifted = [0] * j + list(self.coeffs)
            cols.append(ctx.reduce(shifted))
        rows = [[Fraction(cols[j][i]) for j in range(phi)] + [Fraction(int(i == 0))]
                for i in range(phi)]
        for c in range(phi):
            p = next(r for r in range(c, phi) if rows[r][c] != 0)
            rows[c], rows[p] = rows[p], rows[c]
            piv = rows[c][c]
            rows[c] = [x / piv for x in rows[c]]
            for r in range(phi):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return CycloNumber._raw(self.m, (rows[i][phi] for i in range(phi)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CycloNumber):
                return self._lift(other) / other
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNumber.rational(self.m, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            if other.m == self.m:
                return self.coeffs == other.coeffs
            return self.is_rational() and other.is_rational() and \
                self.coeffs[0] == other.coeffs[0]
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.m, self.coeffs))
        return self._hash

    def sort_key(self):
        """Total order key: positive rationals first, then lexicographic."""
        positive_rational = self.is_rational() and self.coeffs[0] > 0
        return (0 if positive_rational else 1, self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycloNumber({self.m}, {self})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "z" if k == 1 else f"z^{k}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return "+".join(terms).replace("+-", "-")


def cyclo_arith(a: CycloNumber, b: CycloNumber | None, op: str) -> CycloNumber:
    """Dispatch helper: op is one of 'add', 'mul', 'inv' (b ignored for inv)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown op {op!r}")
