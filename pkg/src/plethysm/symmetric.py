"""Symmetric polynomials stored by their dominant monomials.

A homogeneous symmetric polynomial of degree ``d`` is determined by the
coefficients of ``x^alpha`` for partitions ``alpha`` of ``d``; every other
monomial's coefficient is that of its sorted exponent.  Products are formed
directly in this representation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, Mapping

from .partitions import Composition, Partition, PartitionError, partitions_max_length


@dataclass
class MonomialExpansion:
    """Coefficients of dominant monomials ``x^alpha`` in ``num_vars`` variables."""

    degree: int
    num_vars: int
    terms: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        terms = {}
        for alpha, c in self.terms.items():
            alpha = Partition(alpha)
            if alpha.size != self.degree:
                raise PartitionError(f"monomial {tuple(alpha)} has wrong degree for {self.degree}")
            if len(alpha) > self.num_vars:
                raise PartitionError(f"monomial {tuple(alpha)} needs more than {self.num_vars} variables")
            if c:
                terms[alpha] = int(c)
        self.terms = terms

    def coefficient(self, exponent: Iterable[int]) -> int:
        """Coefficient of ``x^exponent`` for any exponent vector."""
        exponent = Composition(exponent)
        if len(exponent) > self.num_vars or exponent.size != self.degree:
            return 0
        return self.terms.get(exponent.sorted(), 0)

    def __mul__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        n = min(self.num_vars, other.num_vars)
        return MonomialExpansion(self.degree + other.degree, n, multiply(self.terms, other.terms, self.degree, other.degree, n))

    def evaluate_ones(self, num_vars: int | None = None) -> int:
        """Value at ``x_1 = ... = x_N = 1`` (``N`` defaults to ``num_vars``)."""
        N = self.num_vars if num_vars is None else num_vars
        return sum(c * orbit_size(alpha, N) for alpha, c in self.terms.items() if len(alpha) <= N)


def orbit_size(alpha: Partition, num_vars: int) -> int:
    """Number of distinct rearrangements of ``alpha`` padded to ``num_vars`` slots."""
    from math import factorial

    counts = Counter(alpha)
    counts[0] = num_vars - len(alpha)
    out = factorial(num_vars)
    for k in counts.values():
        out //= factorial(k)
    return out


@cache
def _splittings(lam: Partition, a: int) -> tuple[tuple[Partition, Partition, int], ...]:
    """Group the ways to write ``x^lam = x^beta x^gamma`` with ``|beta| = a``.

    Returns ``(sort(beta), sort(gamma), count)`` triples.
    """
    tally: Counter = Counter()
    k = len(lam)
    beta = [0] * k

    def rec(i: int, left: int, room: int):
        if i == k:
            if left == 0:
                tally[(Partition.from_parts(beta), Partition.from_parts(l - b for l, b in zip(lam, beta)))] += 1
            return
        room -= lam[i]
        for b in range(max(0, left - room), min(lam[i], left) + 1):
            beta[i] = b
            rec(i + 1, left - b, room)
        beta[i] = 0

    rec(0, a, sum(lam))
    return tuple((b, g, c) for (b, g), c in tally.items())


def multiply(f: Mapping[Partition, int], g: Mapping[Partition, int], deg_f: int, deg_g: int, num_vars: int) -> dict[Partition, int]:
    """Product of two homogeneous symmetric polynomials in dominant-monomial form."""
    if not f or not g:
        return {}
    out = {}
    for lam in partitions_max_length(deg_f + deg_g, num_vars):
        total = 0
        for beta, gamma, count in _splittings(lam, deg_f):
            fb = f.get(beta)
            if fb:
                gc = g.get(gamma)
                if gc:
                    total += count * fb * gc
        if total:
            out[lam] = total
    return out


def power_map(f: Mapping[Partition, int], k: int) -> dict[Partition, int]:
    """``f(x_1^k, x_2^k, ...)``."""
    return {Partition(k * p for p in alpha): c for alpha, c in f.items()}


def add_into(acc: dict[Partition, int], f: Mapping[Partition, int], scale: int = 1) -> dict[Partition, int]:
    for alpha, c in f.items():
        v = acc.get(alpha, 0) + scale * c
        if v:
            acc[alpha] = v
        else:
            acc.pop(alpha, None)
    return acc


