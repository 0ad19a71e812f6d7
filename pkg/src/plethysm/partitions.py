"""Integer partitions and compositions.

Partitions are stored as normalized tuples (weakly decreasing, no zeros), so
structural equality and hashing are canonical.  All operations are pure.
"""

from __future__ import annotations

import re
from functools import cache
from itertools import groupby
from typing import Iterable, Iterator

# parts and sizes must fit a signed 64-bit word
_PART_LIMIT = 2**63 - 1


class PartitionError(ValueError):
    """Raised for malformed partitions or incompatible partition arguments."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are trimmed on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  Any other violation raises
    :class:`PartitionError`.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0 or p > _PART_LIMIT:
                raise PartitionError(f"invalid part {p} in {tuple(parts)}")
            if i and parts[i - 1] < p:
                raise PartitionError(f"parts not weakly decreasing: {tuple(parts)}")
        if sum(parts) > _PART_LIMIT:
            raise PartitionError("partition size overflows 64 bits")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary nonnegative parts into a partition."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def width(self) -> int:
        return self[0] if self else 0

    def part(self, i: int) -> int:
        """The ``i``-th part, 0-indexed, with zero padding."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


class Composition(tuple):
    """A finite sequence of nonnegative integers (trailing zeros dropped)."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise PartitionError(f"negative entry in composition {tuple(parts)}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def sorted(self) -> Partition:
        return Partition.from_parts(self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"


def _same_size(lam: Partition, mu: Partition) -> None:
    if sum(lam) != sum(mu):
        raise PartitionError(f"size mismatch: |{tuple(lam)}| != |{tuple(mu)}|")


@cache
def _conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > c) for c in range(parts[0]))


def conjugate(lam: Iterable[int]) -> Partition:
    """Transpose the Young diagram: column lengths of ``lam``."""
    return tuple.__new__(Partition, _conjugate(tuple(Partition(lam))))


def add(lam: Iterable[int], mu: Iterable[int]) -> Partition:
    """Row-wise sum ``(lam_1 + mu_1, lam_2 + mu_2, ...)``."""
    lam, mu = Partition(lam), Partition(mu)
    n = max(len(lam), len(mu))
    return Partition(lam.part(i) + mu.part(i) for i in range(n))


def union(lam: Iterable[int], mu: Iterable[int]) -> Partition:
    """Multiset union of parts."""
    return Partition.from_parts((*Partition(lam), *Partition(mu)))


def dominates(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff every prefix sum of ``lam`` is at least that of ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    _same_size(lam, mu)
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam.part(i)
        b += mu.part(i)
        if a < b:
            return False
    return True


def _cmp(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    # equal sizes force equal lengths once a common prefix matches
    return (len(a) > len(b)) - (len(a) < len(b))


def lex_compare(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Three-way lexicographic comparison: 1, 0 or -1."""
    lam, mu = Partition(lam), Partition(mu)
    _same_size(lam, mu)
    return _cmp(lam, mu)


def translex_compare(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Lexicographic comparison of the conjugates."""
    lam, mu = Partition(lam), Partition(mu)
    _same_size(lam, mu)
    return _cmp(conjugate(lam), conjugate(mu))


def lex_key(lam: Partition) -> tuple[int, ...]:
    """Sort key realising the lexicographic order within a fixed size."""
    return tuple(lam)


def translex_key(lam: Partition) -> tuple[int, ...]:
    return tuple(conjugate(lam))


def m_twist(nu: Iterable[int], m: int) -> Partition:
    """``nu`` if ``m`` is even, its conjugate if ``m`` is odd."""
    if m <= 0:
        raise PartitionError(f"inner degree must be positive, got {m}")
    nu = Partition(nu)
    return nu if m % 2 == 0 else conjugate(nu)


def hook_length(lam: Partition, r: int, c: int) -> int:
    """Hook length of cell ``(r, c)`` (0-indexed)."""
    return lam[r] - c + conjugate(lam)[c] - r - 1


def double_bracket(alpha: Iterable[int]) -> Partition:
    """The partition ``2[alpha]`` of ``2|alpha|`` for ``alpha`` with distinct parts.

    Row ``i`` has length ``alpha_i + i`` and the diagonal hook at ``(i, i)``
    has length ``2 alpha_i``; in Frobenius coordinates this is
    ``(alpha_1, alpha_2, ... | alpha_1 - 1, alpha_2 - 1, ...)``.
    """
    alpha = Partition(alpha)
    if len(set(alpha)) != len(alpha):
        raise PartitionError(f"parts of {tuple(alpha)} are not distinct")
    d = len(alpha)
    rows = [alpha[i] + i + 1 for i in range(d)]
    legs = [alpha[i] - 1 for i in range(d)]
    r = d + 1
    while True:
        below = sum(1 for j in range(d) if legs[j] + j + 1 >= r)
        if not below:
            break
        rows.append(below)
        r += 1
    lam = Partition(rows)
    if lam.size != 2 * alpha.size:
        raise PartitionError(f"2[{tuple(alpha)}] construction lost cells")
    for i in range(d):
        if lam[i] != alpha[i] + i + 1 or hook_length(lam, i, i) != 2 * alpha[i]:
            raise PartitionError(f"2[{tuple(alpha)}] violates the diagonal hook condition")
    return lam


def _partitions(n: int, largest: int, distinct: bool) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        cap = first - 1 if distinct else first
        for rest in _partitions(n - first, cap, distinct):
            yield (first, *rest)


@cache
def _partition_list(n: int, distinct: bool) -> tuple[Partition, ...]:
    return tuple(tuple.__new__(Partition, p) for p in _partitions(n, n, distinct))


def enumerate_partitions(n: int, distinct_only: bool = False) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise PartitionError(f"cannot partition {n}")
    return list(_partition_list(n, distinct_only))


def partitions_max_length(n: int, max_length: int) -> list[Partition]:
    """Partitions of ``n`` with at most ``max_length`` parts, lex-decreasing."""
    return [p for p in _partition_list(n, False) if len(p) <= max_length]


# ---------------------------------------------------------------------------
# literal grammar: "3^3,2,1" == (3, 3, 3, 2, 1); "" == ()

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "()", "0"):
        return Partition()
    text = text.strip("()")
    parts: list[int] = []
    for token in text.split(","):
        match = _TOKEN.match(token)
        if not match:
            raise PartitionError(f"bad partition literal {text!r}")
        part, exp = int(match.group(1)), int(match.group(2) or 1)
        parts.extend([part] * exp)
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    """Exponent-compressed literal.

    Runs of three or more equal parts, and runs of two or more 1s, are
    written ``p^k``: ``(6,1,1,1,1)`` -> ``6,1^4``, ``(4,4,2)`` -> ``4,4,2``.
    """
    out = []
    for part, run in groupby(Partition(lam)):
        k = len(list(run))
        if k >= 3 or (part == 1 and k >= 2):
            out.append(f"{part}^{k}")
        else:
            out.extend([str(part)] * k)
    return ",".join(out)
