"""Exact p-adic order arithmetic and the order-residue coloring rule."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

# Order of 0 is infinite; math.inf keeps comparisons with finite orders total.
INFINITE_ORDER = math.inf


class NotPrime(ValueError):
    """An argument that must be prime is not."""


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division.

    Intended for machine-scale moduli and coefficients, not cryptographic sizes.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def padic_order(p: int, x: int) -> int | float:
    """Exponent of the prime p in x, or INFINITE_ORDER for x = 0.

    The order only depends on |x|, so negating x never changes it.
    """
    if not is_prime(p):
        raise NotPrime(f"p must be prime, got {p}")
    if x == 0:
        return INFINITE_ORDER
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True)
class PAdicColoring:
    """Colors a positive integer by its p-adic order modulo num_colors.

    Total on all positive integers, so the domain bound is None.
    """

    p: int
    num_colors: int

    bound = None  # rule colorings are unbounded

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"p must be prime, got {self.p}")
        if self.num_colors < 1:
            raise ValueError(f"num_colors must be >= 1, got {self.num_colors}")

    def color_of(self, x: int) -> int:
        if x < 1:
            raise ValueError(f"colorings are defined on positive integers, got {x}")
        v = 0
        p = self.p
        while x % p == 0:
            x //= p
            v += 1
        return v % self.num_colors


def candidate_primes(coeffs: Iterable[int]) -> list[int]:
    """Ascending list of all primes dividing at least one of the given integers.

    For any prime dividing none of them every order is 0, so these are the only
    primes that can make the orders of the coefficients pairwise distinct.
    """
    found: set[int] = set()
    for a in coeffs:
        a = abs(a)
        d = 2
        while d * d <= a:
            if a % d == 0:
                found.add(d)
                while a % d == 0:
                    a //= d
            d += 1
        if a > 1:
            found.add(a)
    return sorted(found)
