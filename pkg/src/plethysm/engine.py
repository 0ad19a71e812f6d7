"""Exact Schur expansions of plethysm products ``s_nu o s_mu``.

The product is computed by evaluating ``s_nu`` at the monomials of ``s_mu``:
complete and elementary symmetric functions of those monomials come from
Newton's identities, ``s_nu`` from the Jacobi-Trudi determinant, and the
result is brought to the Schur basis by unitriangular elimination against
Kostka numbers.  All arithmetic is on Python integers.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from functools import cache
from pathlib import Path
from typing import Iterable, Mapping

from .partitions import (
    Composition,
    Partition,
    PartitionError,
    conjugate,
    format_partition,
    m_twist,
    parse_partition,
    partitions_max_length,
)
from .symmetric import MonomialExpansion, multiply, power_map
from .tableaux import _kostka


class NotSymmetricError(ValueError):
    pass


class PositivityError(ArithmeticError):
    """A Schur coefficient that must be nonnegative came out negative."""


@dataclass
class SchurExpansion:
    """``sum c_alpha s_alpha`` of a single degree; zero terms are dropped."""

    degree: int
    terms: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        terms = {}
        for alpha, c in self.terms.items():
            alpha = Partition(alpha)
            if alpha.size != self.degree:
                raise PartitionError(f"{tuple(alpha)} is not a partition of {self.degree}")
            if c:
                terms[alpha] = int(c)
        self.terms = dict(sorted(terms.items(), reverse=True))

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, alpha: Iterable[int]) -> int:
        return self.terms.get(Partition(alpha), 0)

    def items(self):
        return self.terms.items()

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"partition": list(a), "coefficient": str(c)} for a, c in self.terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SchurExpansion":
        terms = {Partition(t["partition"]): int(t["coefficient"]) for t in data["terms"]}
        return cls(int(data["degree"]), terms)

    def canonical(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def format(self) -> str:
        return "\n".join(f"{format_partition(a)}: {c}" for a, c in self.terms.items())


# ---------------------------------------------------------------------------
# monomial side


def schur_monomials(lam: Iterable[int], num_vars: int) -> MonomialExpansion:
    """``s_lam(x_1..x_N)``: the coefficient of ``x^alpha`` is a Kostka number."""
    lam = Partition(lam)
    d = lam.size
    if len(lam) > num_vars:
        return MonomialExpansion(d, num_vars, {})
    return MonomialExpansion(d, num_vars, _schur_terms(lam, num_vars))


@cache
def _schur_terms(lam: Partition, num_vars: int) -> dict[Partition, int]:
    out = {}
    for alpha in partitions_max_length(lam.size, num_vars):
        k = _kostka(tuple(lam), tuple(alpha))
        if k:
            out[alpha] = k
    return out


def _newton(f: Mapping[Partition, int], deg: int, upto: int, num_vars: int, elementary: bool) -> list[dict[Partition, int]]:
    """``h_k`` (or ``e_k``) evaluated at the monomials of ``f``, for ``k = 0..upto``.

    ``k h_k = sum_i p_i h_{k-i}`` and ``k e_k = sum_i (-1)^(i-1) p_i e_{k-i}``,
    where ``p_i`` at the monomials of ``f`` is ``f(x^i)``.
    """
    seq: list[dict[Partition, int]] = [{Partition(): 1}]
    powers = [power_map(f, i) for i in range(upto + 1)]
    for k in range(1, upto + 1):
        acc: dict[Partition, int] = {}
        for i in range(1, k + 1):
            prod = multiply(powers[i], seq[k - i], i * deg, (k - i) * deg, num_vars)
            sign = -1 if elementary and i % 2 == 0 else 1
            for alpha, c in prod.items():
                acc[alpha] = acc.get(alpha, 0) + sign * c
        term = {}
        for alpha, c in acc.items():
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"Newton step {k} left remainder {r} at {tuple(alpha)}")
            if q:
                term[alpha] = q
        seq.append(term)
    return seq


def _jacobi_trudi(shape: Partition, seq: list[dict[Partition, int]], deg: int, num_vars: int) -> dict[Partition, int]:
    """``det(seq[shape_i - i + j])`` expanded along rows, memoized over column sets."""
    ell = len(shape)
    if ell == 0:
        return {Partition(): 1}

    def entry(i: int, j: int) -> tuple[dict[Partition, int], int]:
        k = shape[i] - i + j
        if k < 0 or k >= len(seq):
            return {}, 0
        return seq[k], k * deg

    memo: dict[tuple[int, int], tuple[dict[Partition, int], int]] = {}

    def minor(i: int, mask: int) -> tuple[dict[Partition, int], int]:
        # rows i.. against the columns in mask
        if i == ell:
            return {Partition(): 1}, 0
        key = (i, mask)
        if key in memo:
            return memo[key]
        acc: dict[Partition, int] = {}
        degree = None
        sign = 1
        for j in range(ell):
            if not mask >> j & 1:
                continue
            a, da = entry(i, j)
            if a:
                rest, dr = minor(i + 1, mask & ~(1 << j))
                if rest:
                    for alpha, c in multiply(a, rest, da, dr, num_vars).items():
                        acc[alpha] = acc.get(alpha, 0) + sign * c
                    degree = da + dr
            sign = -sign
        acc = {a: c for a, c in acc.items() if c}
        memo[key] = (acc, degree or 0)
        return memo[key]

    return minor(0, (1 << ell) - 1)[0]


def plethysm_monomial(nu: Iterable[int], mu: Iterable[int]) -> MonomialExpansion:
    """Monomial expansion of ``s_nu o s_mu`` in ``mn`` variables.

    The coefficient of ``x^alpha`` counts plethystic semistandard tableaux of
    shape ``mu^nu`` and weight ``alpha``.
    """
    nu, mu = Partition(nu), Partition(mu)
    if not nu or not mu:
        raise PartitionError("plethysm factors must be nonempty")
    return MonomialExpansion(nu.size * mu.size, nu.size * mu.size, dict(_plethysm_monomial(nu, mu)))


@cache
def _plethysm_monomial(nu: Partition, mu: Partition) -> dict[Partition, int]:
    n, m = nu.size, mu.size
    N = n * m
    inner = _schur_terms(mu, N)
    if len(nu) <= nu[0]:
        seq = _newton(inner, m, nu[0] + len(nu) - 1, N, elementary=False)
        return _jacobi_trudi(nu, seq, m, N)
    nut = conjugate(nu)
    seq = _newton(inner, m, nut[0] + len(nut) - 1, N, elementary=True)
    return _jacobi_trudi(nut, seq, m, N)


def to_schur(f: MonomialExpansion | Mapping[Iterable[int], int], positive: bool = False, degree: int | None = None) -> SchurExpansion:
    """Rewrite a symmetric polynomial in the Schur basis.

    The lex-greatest surviving exponent ``lam`` is cancelled by subtracting
    ``c * s_lam``; Kostka matrices are unitriangular, so no division occurs.
    ``f`` may also be a raw mapping from exponent vectors to coefficients,
    which is checked for symmetry.
    """
    if isinstance(f, MonomialExpansion):
        terms = dict(f.terms)
        d, N = f.degree, f.num_vars
    else:
        terms = {}
        for exp, c in f.items():
            if not c:
                continue
            alpha = Composition(exp).sorted()
            if alpha in terms and terms[alpha] != c:
                raise NotSymmetricError(f"x^{tuple(exp)} and x^{tuple(alpha)} have different coefficients")
            terms[alpha] = c
        sizes = {a.size for a in terms}
        if len(sizes) > 1:
            raise NotSymmetricError("input is not homogeneous")
        d = sizes.pop() if sizes else (degree or 0)
        N = max((len(a) for a in terms), default=0)
        N = max(N, d)
    out: dict[Partition, int] = {}
    order = partitions_max_length(d, N)  # lex-decreasing
    for lam in order:
        c = terms.get(lam, 0)
        if not c:
            continue
        if positive and c < 0:
            raise PositivityError(f"negative Schur coefficient {c} at {tuple(lam)}")
        out[lam] = c
        for beta, k in _schur_terms(lam, N).items():
            v = terms.get(beta, 0) - c * k
            if v:
                terms[beta] = v
            else:
                terms.pop(beta, None)
    return SchurExpansion(d, out)


# ---------------------------------------------------------------------------
# memoized products


class PlethysmCache:
    """In-memory memo of expansions, optionally backed by an append-only file.

    Each file line is ``nu|mu|{json}`` with partitions in literal form.
    Duplicate keys are tolerated; the payloads are identical.
    """

    def __init__(self, path: str | Path | None = None):
        self._data: dict[tuple[Partition, Partition], SchurExpansion] = {}
        self._lock = threading.Lock()
        self.path = Path(path) if path else None
        if self.path and self.path.exists():
            self._load()

    def _load(self) -> None:
        with open(self.path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                nu_s, mu_s, payload = line.split("|", 2)
                key = (parse_partition(nu_s), parse_partition(mu_s))
                self._data.setdefault(key, SchurExpansion.from_json(json.loads(payload)))

    def get(self, nu: Partition, mu: Partition) -> SchurExpansion | None:
        return self._data.get((nu, mu))

    def put(self, nu: Partition, mu: Partition, value: SchurExpansion) -> SchurExpansion:
        with self._lock:
            if (nu, mu) in self._data:
                return self._data[(nu, mu)]
            self._data[(nu, mu)] = value
            if self.path:
                with open(self.path, "a") as fh:
                    fh.write(f"{format_partition(nu)}|{format_partition(mu)}|{value.canonical()}\n")
        return value

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key) -> bool:
        return key in self._data


_default_cache = PlethysmCache()


def set_cache(cache_: PlethysmCache) -> None:
    global _default_cache
    _default_cache = cache_


def get_cache() -> PlethysmCache:
    return _default_cache


def plethysm(nu: Iterable[int], mu: Iterable[int]) -> SchurExpansion:
    """Schur expansion of ``s_nu o s_mu``."""
    nu, mu = Partition(nu), Partition(mu)
    if not nu or not mu:
        raise PartitionError("plethysm factors must be nonempty")
    hit = _default_cache.get(nu, mu)
    if hit is not None:
        return hit
    value = to_schur(plethysm_monomial(nu, mu), positive=True)
    return _default_cache.put(nu, mu, value)


def coefficient(nu: Iterable[int], mu: Iterable[int], alpha: Iterable[int]) -> int:
    """Multiplicity of ``s_alpha`` in ``s_nu o s_mu``."""
    nu, mu, alpha = Partition(nu), Partition(mu), Partition(alpha)
    if alpha.size != nu.size * mu.size:
        raise PartitionError(f"|{tuple(alpha)}| != {nu.size} * {mu.size}")
    return plethysm(nu, mu)[alpha]


def omega_twist(nu: Iterable[int], mu: Iterable[int], alpha: Iterable[int]) -> tuple[Partition, Partition, Partition]:
    """Image of a coefficient index under conjugation; the coefficient is unchanged."""
    nu, mu, alpha = Partition(nu), Partition(mu), Partition(alpha)
    if alpha.size != nu.size * mu.size:
        raise PartitionError(f"|{tuple(alpha)}| != {nu.size} * {mu.size}")
    return m_twist(nu, mu.size), conjugate(mu), conjugate(alpha)
