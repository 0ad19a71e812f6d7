"""Plethysm through the power-sum basis.

Independent of the monomial engine: both Schur functions are expanded as
``s_lam = sum_rho chi^lam(rho) / z_rho p_rho`` with characters from the
Murnaghan-Nakayama rule, ``p_k o p_l = p_{kl}`` is applied, and the result is
paired back against characters.  Arithmetic is in exact rationals.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Iterable

from .engine import SchurExpansion
from .partitions import Partition, PartitionError, enumerate_partitions

DEFAULT_BOUND = 14


@cache
def z(rho: Partition) -> int:
    """Size of the centralizer of a permutation of cycle type ``rho``."""
    out = 1
    for part, mult in Counter(rho).items():
        out *= part**mult * factorial(mult)
    return out


@cache
def character(lam: Partition, rho: Partition) -> int:
    """``chi^lam`` on the class ``rho`` by removing border strips of size ``rho_1``."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise PartitionError(f"|{tuple(lam)}| != |{tuple(rho)}|")
    if not rho:
        return 1
    k, rest = rho[0], Partition(rho[1:])
    # first-column hook lengths encode the rim: a k-strip moves one bead down k places
    ell = len(lam)
    beads = [lam[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beads)
    total = 0
    for i, b in enumerate(beads):
        target = b - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beads if target < x < b)
        new = sorted((target if x == b else x for x in beads), reverse=True)
        smaller = Partition.from_parts(new[j] - (ell - 1 - j) for j in range(ell))
        total += (-1) ** height * character(smaller, rest)
    return total


def schur_to_power(lam: Partition) -> dict[Partition, Fraction]:
    return {rho: Fraction(character(lam, rho), z(rho)) for rho in enumerate_partitions(lam.size)
            if character(lam, rho)}


def _times(f: dict[Partition, Fraction], g: dict[Partition, Fraction]) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for a, x in f.items():
        for b, y in g.items():
            key = Partition.from_parts((*a, *b))
            out[key] = out.get(key, 0) + x * y
    return out


def plethysm_powersum(nu: Iterable[int], mu: Iterable[int], bound: int = DEFAULT_BOUND) -> SchurExpansion:
    """Schur expansion of ``s_nu o s_mu`` via power sums."""
    nu, mu = Partition(nu), Partition(mu)
    if not nu or not mu:
        raise PartitionError("plethysm factors must be nonempty")
    n, m = nu.size, mu.size
    if n * m > bound:
        raise ValueError(f"degree {n * m} exceeds the oracle bound {bound}")
    inner = schur_to_power(mu)
    # p_k o s_mu
    scaled = {k: {Partition(k * p for p in sigma): c for sigma, c in inner.items()} for k in set(range(1, n + 1))}
    total: dict[Partition, Fraction] = {}
    for rho, c in schur_to_power(nu).items():
        prod: dict[Partition, Fraction] = {Partition(): Fraction(1)}
        for part in rho:
            prod = _times(prod, scaled[part])
        for tau, v in prod.items():
            total[tau] = total.get(tau, 0) + c * v
    out = {}
    for lam in enumerate_partitions(n * m):
        coeff = sum((v * character(lam, tau) for tau, v in total.items()), Fraction(0))
        if coeff.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {coeff} at {tuple(lam)}")
        if coeff:
            out[lam] = int(coeff)
    return SchurExpansion(n * m, out)
