"""Extreme constituents of ``s_nu o s_mu`` in the lexicographic-type orders."""

from __future__ import annotations

from typing import Iterable

from .engine import SchurExpansion
from .partitions import Partition, PartitionError, conjugate, dominates, lex_key, m_twist, translex_key

ORDERS = ("lex", "translex")


def _check(lam: list[int], size: int, what: str) -> Partition:
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(p <= 0 for p in lam) or sum(lam) != size:
        raise AssertionError(f"{what} produced {lam}, not a partition of {size}")
    return Partition(lam)


def max_lex(nu: Iterable[int], mu: Iterable[int]) -> Partition:
    """Lexicographically greatest constituent.

    ``(n mu_1, ..., n mu_{l-1}, n mu_l - n + nu_1, nu_2, ..., nu_k)`` for
    ``l = len(mu)``, ``n = |nu|``.
    """
    nu, mu = Partition(nu), Partition(mu)
    if not nu or not mu:
        raise PartitionError("plethysm factors must be nonempty")
    n = nu.size
    rows = [n * p for p in mu[:-1]]
    rows.append(n * mu[-1] - n + nu[0])
    rows.extend(nu[1:])
    return _check(rows, n * mu.size, "max_lex")


def max_translex(nu: Iterable[int], mu: Iterable[int]) -> Partition:
    """Greatest constituent in the transpose-lexicographic order."""
    nu, mu = Partition(nu), Partition(mu)
    if not nu or not mu:
        raise PartitionError("plethysm factors must be nonempty")
    return conjugate(max_lex(m_twist(nu, mu.size), conjugate(mu)))


def signature(nu: Iterable[int], mu: Iterable[int]) -> tuple[Partition, Partition]:
    return max_lex(nu, mu), max_translex(nu, mu)


def leading_term(expansion: SchurExpansion, order: str = "lex") -> tuple[Partition, int]:
    if not expansion.terms:
        raise ValueError("empty expansion has no leading term")
    if order == "lex":
        key = lex_key
    elif order == "translex":
        key = translex_key
    else:
        raise ValueError(f"unknown order {order!r}")
    lam = max(expansion.terms, key=key)
    return lam, expansion.terms[lam]


def dominance_maximal(expansion: SchurExpansion) -> dict[Partition, int]:
    """Constituents not strictly dominated by another constituent."""
    keys = list(expansion.terms)
    out = {}
    for a in keys:
        if not any(b != a and dominates(b, a) for b in keys):
            out[a] = expansion.terms[a]
    return out
