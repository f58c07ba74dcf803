"""Drinfeld polynomial tuples, their period and the base tuple pi^0.

A tuple lives over Q(zeta_M)(q) for a fixed ``zeta_order`` M.  Polynomials in
u are coefficient tuples with the constant term first.  When a tuple is built
from inverse roots b (pi_i = prod (1 - b u)) the roots are kept, because
extracting pi^0 needs them and factoring is out of scope.
"""

from __future__ import annotations

import ast
import math
import re
from dataclasses import dataclass, field

from .errors import (ConfigError, FactoredFormRequired, NotADivisor, NotPeriodic,
                     TrivialTuple)
from .ratfunc import FieldElem


def _trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


def poly_mul(a, b):
    m = a[0].m
    out = [FieldElem.zero(m)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return _trim(out)


def expand_roots(m: int, roots):
    """Coefficients of prod_b (1 - b u)."""
    poly = (FieldElem.one(m),)
    for b in roots:
        poly = poly_mul(poly, (FieldElem.one(m), -b))
    return poly


def _as_elem(m: int, x) -> FieldElem:
    if isinstance(x, FieldElem):
        if x.m != m:
            return FieldElem.zero(m) + x
        return x
    return FieldElem.zero(m) + x


@dataclass(frozen=True)
class DrinfeldTuple:
    n: int
    polys: tuple
    zeta_order: int = 1
    roots: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1 or len(self.polys) != self.n:
            raise ValueError(f"expected {self.n} polynomials, got {len(self.polys)}")
        polys = tuple(_trim(_as_elem(self.zeta_order, c) for c in p) if p
                      else (FieldElem.one(self.zeta_order),) for p in self.polys)
        object.__setattr__(self, "polys", polys)
        for i, p in enumerate(polys, 1):
            if not p[0].is_one():
                raise ValueError(f"pi_{i} must have constant term 1")
        if self.roots is not None:
            roots = tuple(tuple(_as_elem(self.zeta_order, b) for b in r) for r in self.roots)
            object.__setattr__(self, "roots", roots)
            for i, (p, r) in enumerate(zip(polys, roots), 1):
                if expand_roots(self.zeta_order, r) != p:
                    raise ValueError(f"roots of pi_{i} do not reproduce its coefficients")

    @classmethod
    def from_roots(cls, n: int, roots, zeta_order: int = 1) -> "DrinfeldTuple":
        if len(roots) != n:
            raise ValueError(f"expected {n} root lists, got {len(roots)}")
        rs = tuple(tuple(_as_elem(zeta_order, b) for b in r) for r in roots)
        return cls(n, tuple(expand_roots(zeta_order, r) for r in rs), zeta_order, rs)

    @classmethod
    def from_coeffs(cls, n: int, coeffs, zeta_order: int = 1) -> "DrinfeldTuple":
        return cls(n, tuple(tuple(c) for c in coeffs), zeta_order)

    @classmethod
    def natural_power(cls, n: int, m: int) -> "DrinfeldTuple":
        """(prod_j (1 - zeta^j u), 1, ..., 1): the tuple of V(1) (x) ... (x) V(zeta^{m-1})."""
        roots = [[FieldElem.zeta(m, j) for j in range(m)]] + [[] for _ in range(n - 1)]
        return cls.from_roots(n, roots, m)

    @property
    def degrees(self) -> tuple:
        return tuple(len(p) - 1 for p in self.polys)

    def coefficient(self, i: int, r: int) -> FieldElem:
        """pi_{i,r}: coefficient of u^r in pi_i (i is 1-based)."""
        p = self.polys[i - 1]
        return p[r] if 0 <= r < len(p) else FieldElem.zero(self.zeta_order)

    def is_trivial(self) -> bool:
        return all(d == 0 for d in self.degrees)

    def __str__(self):
        parts = []
        for p in self.polys:
            terms = []
            for r, c in enumerate(p):
                if c.is_zero():
                    continue
                mono = "" if r == 0 else ("u" if r == 1 else f"u^{r}")
                cs = str(c)
                if not mono:
                    terms.append(cs)
                elif cs == "1":
                    terms.append(mono)
                elif cs == "-1":
                    terms.append("-" + mono)
                else:
                    terms.append(f"({cs})*{mono}")
            parts.append("+".join(terms).replace("+-", "-"))
        return "(" + ", ".join(parts) + ")"


def detect_period(pi: DrinfeldTuple) -> int:
    """Largest m with every pi_i a polynomial in u^m."""
    if pi.is_trivial():
        raise TrivialTuple("all polynomials are 1; the period is undefined")
    g = 0
    for p in pi.polys:
        for r, c in enumerate(p):
            if r and not c.is_zero():
                g = math.gcd(g, r)
    return g


def _check_root_of_unity(pi: DrinfeldTuple, m: int):
    if pi.zeta_order % m:
        raise ValueError(f"zeta_{m} does not lie in the field of order {pi.zeta_order}")


def extract_base(pi: DrinfeldTuple, m: int) -> DrinfeldTuple:
    """pi^0: one inverse root per zeta_m-orbit, the smallest in a fixed total order."""
    if pi.roots is None:
        raise FactoredFormRequired("extract_base needs the tuple in root form")
    if m < 1:
        raise ValueError("m must be positive")
    if m > 1 and (pi.is_trivial() or detect_period(pi) % m):
        raise NotPeriodic(f"tuple is not a polynomial in u^{m}")
    _check_root_of_unity(pi, m)
    M = pi.zeta_order
    zm = FieldElem.zeta(M, M // m)
    base = []
    for i, roots in enumerate(pi.roots, 1):
        pool = sorted(roots, key=FieldElem.sort_key)
        reps = []
        while pool:
            b = pool[0]
            orbit = [b]
            for _ in range(m - 1):
                orbit.append(orbit[-1] * zm)
            for x in orbit:
                if x not in pool:
                    raise NotPeriodic(f"roots of pi_{i} are not stable under zeta_{m}")
                pool.remove(x)
            reps.append(b)
        base.append(reps)
    return DrinfeldTuple.from_roots(pi.n, base, M)


def power_quotient(pi0: DrinfeldTuple, m: int, d: int) -> DrinfeldTuple:
    """pi^{1/d}_i(u) = prod_{j=0}^{m/d-1} pi^0_i(zeta^{jd} u)."""
    if d < 1 or m % d:
        raise NotADivisor(f"{d} does not divide {m}")
    _check_root_of_unity(pi0, m)
    M = pi0.zeta_order
    twists = [FieldElem.zeta(M, (M // m) * j * d) for j in range(m // d)]
    if pi0.roots is not None:
        roots = [[b * t for t in twists for b in r] for r in pi0.roots]
        return DrinfeldTuple.from_roots(pi0.n, roots, M)
    polys = []
    for p in pi0.polys:
        acc = (FieldElem.one(M),)
        for t in twists:
            acc = poly_mul(acc, tuple(c * t ** r for r, c in enumerate(p)))
        polys.append(acc)
    return DrinfeldTuple(pi0.n, tuple(polys), M)


def minus_tuple(pi: DrinfeldTuple) -> DrinfeldTuple:
    """u^{deg} pi_i(1/u), rescaled to constant term 1."""
    polys = []
    for p in pi.polys:
        rev = tuple(reversed(p))
        lead = rev[0]
        polys.append(tuple(c / lead for c in rev))
    roots = None
    if pi.roots is not None:
        roots = tuple(tuple(b.inverse() for b in r if not b.is_zero()) for r in pi.roots)
    return DrinfeldTuple(pi.n, tuple(polys), pi.zeta_order, roots)


@dataclass(frozen=True)
class HighestWeightChar:
    """chi_{pi,d}: P_{i,r} -> pi_{i,r} t^r, P_{i,-r} -> pi^-_{i,r} t^{-r}, K_i -> q^{deg pi_i}, D -> q^d."""

    base: DrinfeldTuple
    d: int
    assignment: dict

    def value(self, label):
        """Image of a label: ("P", i, r), ("K", i) or ("D",); returns (coefficient, t-power)."""
        if label in self.assignment:
            return self.assignment[label]
        m = self.base.zeta_order
        if label[0] == "P":
            return (FieldElem.zero(m), label[2])
        raise KeyError(label)

    def support(self) -> list:
        """Indices (i, r) with nonzero chi(P_{i,r})."""
        return sorted((k[1], k[2]) for k, (c, _) in self.assignment.items()
                      if k[0] == "P" and not c.is_zero())


def chi_of(pi: DrinfeldTuple, d: int) -> HighestWeightChar:
    m = pi.zeta_order
    minus = minus_tuple(pi)
    table = {}
    for i in range(1, pi.n + 1):
        table[("P", i, 0)] = (FieldElem.one(m), 0)
        for r in range(1, pi.degrees[i - 1] + 1):
            table[("P", i, r)] = (pi.coefficient(i, r), r)
            table[("P", i, -r)] = (minus.coefficient(i, r), -r)
        table[("K", i)] = (FieldElem.q(m, pi.degrees[i - 1]), 0)
    table[("D",)] = (FieldElem.q(m, d), 0)
    return HighestWeightChar(pi, d, table)


# text input ---------------------------------------------------------------

_BINOPS = {ast.Add: "__add__", ast.Sub: "__sub__", ast.Mult: "__mul__", ast.Div: "__truediv__"}


def _eval(node, m: int):
    if isinstance(node, ast.Expression):
        return _eval(node.body, m)
    if isinstance(node, (ast.List, ast.Tuple)):
        return [_eval(x, m) for x in node.elts]
    if isinstance(node, ast.Constant) and isinstance(node.value, int) \
            and not isinstance(node.value, bool):
        return FieldElem.rational(m, node.value)
    if isinstance(node, ast.Name):
        if node.id == "z":
            return FieldElem.zeta(m, 1)
        if node.id == "q":
            return FieldElem.q(m, 1)
        raise ConfigError(f"unknown symbol {node.id!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, m)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = _eval(node.left, m)
            e = node.right
            neg = isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.USub)
            if neg:
                e = e.operand
            if not (isinstance(e, ast.Constant) and isinstance(e.value, int)):
                raise ConfigError("exponents must be integer literals")
            return base ** (-e.value if neg else e.value)
        if type(node.op) in _BINOPS:
            a, b = _eval(node.left, m), _eval(node.right, m)
            if isinstance(a, list) or isinstance(b, list):
                raise ConfigError("arithmetic on lists is not allowed")
            return getattr(a, _BINOPS[type(node.op)])(b)
    raise ConfigError(f"unsupported expression: {ast.dump(node)[:60]}")


def parse_tuple(text: str, n: int, m: int) -> DrinfeldTuple:
    """Parse "roots: [[...], ...]" or "coeffs: [[...], ...]" over Q(zeta_m)(q).

    Entries are rational expressions in the symbols z (= zeta_m) and q, e.g.
    ``z^2``, ``-1/2``, ``(1+z)*q``.
    """
    text = text.strip()
    match = re.fullmatch(r"(roots|coeffs)\s*:\s*(.*)", text, re.S)
    if not match:
        raise ConfigError("tuple must start with 'roots:' or 'coeffs:'")
    kind, body = match.groups()
    try:
        tree = ast.parse(body.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ConfigError(f"cannot parse tuple body: {exc.msg}") from None
    try:
        data = _eval(tree, m)
    except ZeroDivisionError:
        raise ConfigError("division by zero in tuple") from None
    if not isinstance(data, list) or not all(isinstance(x, list) for x in data):
        raise ConfigError("tuple body must be a list of lists")
    if len(data) != n:
        raise ConfigError(f"expected {n} polynomials for n={n}, got {len(data)}")
    try:
        if kind == "roots":
            return DrinfeldTuple.from_roots(n, data, m)
        return DrinfeldTuple.from_coeffs(n, data, m)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
