"""Closed character formulas for the components and the comparison harness.

For a composition c of m (the weight nu), a grade r and a component s:

    dim L^s_{nu + r delta} = (1/m) sum_{d | m} phi_{r-s}(d) dim V^{1/d}_{nu/d}

where V^{1/d} is the (m/d)-th tensor power of the natural representation, so
dim V^{1/d}_{nu/d} = multinomial(c/d) when d divides every part of c.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .combinat import (closed_count, compositions, count_maj_by_residue, divisors,
                       multinomial, phi_twisted)
from .errors import NonIntegerResult
from .loop import GradedWeight, composition_of_weight, eigenspace_table


@dataclass(frozen=True)
class CharQuery:
    n: int
    m: int
    s: int
    gw: GradedWeight

    def __post_init__(self):
        if not 0 <= self.s < self.m:
            raise ValueError(f"s={self.s} outside 0..{self.m - 1}")

    @property
    def divisors(self) -> list[int]:
        return divisors(self.m)

    @property
    def k(self) -> int:
        return (self.gw.r - self.s) % self.m

    @property
    def composition(self):
        return composition_of_weight(self.gw.nu, self.m, self.n)


def closed_dim(qr: CharQuery) -> int:
    comp = qr.composition
    if comp is None:
        return 0
    return closed_count(comp, qr.m, qr.gw.r - qr.s)


def divides_all_parts(d: int, comp) -> bool:
    """Default term-inclusion rule: nu/d exists when d divides every part."""
    return all(k % d == 0 for k in comp)


def natural_power_multiplicity(d: int, comp) -> int:
    """dim of the comp-weight space of the natural representation to the power sum(comp)."""
    return multinomial(comp)


def classical_dim(qr: CharQuery,
                  multiplicity: Callable | Mapping = natural_power_multiplicity,
                  include: Callable = divides_all_parts) -> int:
    """Evaluate the classical formula with a supplied weight-multiplicity table.

    ``multiplicity`` is either ``f(d, comp/d)`` or a mapping d -> {comp/d: dim}.
    ``include(d, comp)`` decides which divisors contribute.
    """
    comp = qr.composition
    if comp is None:
        return 0
    if isinstance(multiplicity, Mapping):
        table = multiplicity
        multiplicity = lambda d, c: table.get(d, {}).get(tuple(c), 0)  # noqa: E731
    total = Fraction(0)
    for d in qr.divisors:
        if include(d, comp):
            total += phi_twisted(qr.gw.r - qr.s, d) * multiplicity(d, tuple(k // d for k in comp))
    total /= qr.m
    if total.denominator != 1 or total < 0:
        raise NonIntegerResult(f"classical formula gives {total} for {qr}")
    return int(total)


@dataclass
class CharacterTable:
    n: int
    m: int
    rows: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def compare_all(n: int, m: int, comps=None, jobs: int | None = 1) -> CharacterTable:
    """closed formula vs eta eigenspaces vs Maj census, every composition and k.

    Rows are indexed by k = r - s mod m.
    """
    comps = list(comps) if comps is not None else list(compositions(m, n + 1))
    brute = eigenspace_table(m, n, comps, jobs=jobs)
    table = CharacterTable(n, m)
    for comp in comps:
        comp = tuple(comp)
        census = count_maj_by_residue(comp, m)
        nu = tuple(comp[i - 1] - comp[i] for i in range(1, n + 1))
        for k in range(m):
            closed = closed_count(comp, m, k)
            row = {"composition": comp, "nu": nu, "k": k, "closed": closed,
                   "brute": brute[comp][k], "maj": census[k]}
            table.rows.append(row)
            if not closed == row["brute"] == row["maj"]:
                table.discrepancies.append(row)
    return table
