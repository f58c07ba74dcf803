"""Arithmetic functions and major-index combinatorics of words.

A word is a tuple ``(i_1, ..., i_N)`` of letters in {0, ..., n}.  Position 1
is the rightmost tensor factor: the word encodes v_{i_N} (x) ... (x) v_{i_1}.
A composition ``(k_0, ..., k_n)`` records how often each letter occurs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import NonIntegerResult


@lru_cache(maxsize=None)
def factorize(d: int) -> tuple[tuple[int, int], ...]:
    if d < 1:
        raise ValueError("d must be positive")
    out = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            out.append((p, e))
        p += 1
    if d > 1:
        out.append((d, 1))
    return tuple(out)


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def euler_phi(d: int) -> int:
    result = d
    for p, _ in factorize(d):
        result = result // p * (p - 1)
    return result


def moebius(d: int) -> int:
    fac = factorize(d)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def phi_twisted(k: int, d: int) -> Fraction:
    """phi(d) mu(d/g) / phi(d/g) with g = gcd(|k|, d) (so gcd(0, d) = d)."""
    if d < 1:
        raise ValueError("d must be positive")
    g = math.gcd(abs(k), d)
    e = d // g
    return Fraction(euler_phi(d) * moebius(e), euler_phi(e))


def multinomial(parts) -> int:
    total = 0
    result = 1
    for k in parts:
        total += k
        result *= math.comb(total, k)
    return result


def compositions(total: int, nparts: int):
    """All tuples of ``nparts`` non-negative integers summing to ``total``.

    Ordered reverse-lexicographically, so (total, 0, ..., 0) comes first.
    """
    if nparts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, nparts - 1):
            yield (first,) + rest


def words_with_content(content) -> list[tuple[int, ...]]:
    """Words whose letter multiplicities are ``content``, in lexicographic order."""
    word = [letter for letter, k in enumerate(content) for _ in range(k)]
    out = [tuple(word)]
    n = len(word)
    while True:
        # next lexicographic multiset permutation
        i = n - 2
        while i >= 0 and word[i] >= word[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = n - 1
        while word[j] <= word[i]:
            j -= 1
        word[i], word[j] = word[j], word[i]
        word[i + 1:] = reversed(word[i + 1:])
        out.append(tuple(word))


def content_of(word, n: int) -> tuple[int, ...]:
    counts = [0] * (n + 1)
    for letter in word:
        counts[letter] += 1
    return tuple(counts)


def descents(word) -> list[int]:
    """Positions r (1-based) with i_{r+1} < i_r."""
    return [r for r in range(1, len(word)) if word[r] < word[r - 1]]


def maj(word) -> int:
    """Major index: sum of the descent positions."""
    return sum(descents(word))


def count_maj_by_residue(content, m: int) -> list[int]:
    """Census of words with the given content, bucketed by Maj mod m."""
    out = [0] * m
    for w in words_with_content(content):
        out[maj(w) % m] += 1
    return out


def closed_count(content, m: int, k: int) -> int:
    """(1/m) sum_{d | m} phi_k(d) multinomial(m/d; k_0/d, ..., k_n/d).

    A divisor d contributes only when it divides every part.
    """
    if sum(content) != m:
        raise ValueError(f"composition {tuple(content)} does not sum to {m}")
    total = Fraction(0)
    for d in divisors(m):
        if all(part % d == 0 for part in content):
            total += phi_twisted(k, d) * multinomial([part // d for part in content])
    total /= m
    if total.denominator != 1 or total < 0:
        raise NonIntegerResult(f"closed count {total} for {tuple(content)}, k={k}")
    return int(total)
