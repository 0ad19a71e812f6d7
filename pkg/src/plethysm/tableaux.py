"""Semistandard and plethystic tableaux.

A plethystic tableau of shape ``mu^nu`` fills the cells of ``[nu]`` with
semistandard ``mu``-tableaux so that rows weakly increase and columns strictly
increase under the tableau order :func:`tableau_compare`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cmp_to_key
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

from .partitions import Composition, Partition, PartitionError, conjugate, dominates


@dataclass(frozen=True)
class SemistandardTableau:
    """Rows of positive integers, weakly increasing along rows and strictly down columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(len(r) for r in rows)
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if x < 1:
                    raise ValueError(f"entry {x} is not positive")
                if c and row[c - 1] > x:
                    raise ValueError(f"row {r} is not weakly increasing: {row}")
                if r and rows[r - 1][c] >= x:
                    raise ValueError(f"column {c} is not strictly increasing at row {r}")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def column(self, c: int) -> tuple[int, ...]:
        return tuple(row[c] for row in self.rows if len(row) > c)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def weight(self) -> Composition:
        return tableau_weight(self)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def tableau_weight(t: SemistandardTableau) -> Composition:
    """Number of entries equal to 1, 2, 3, ..."""
    word = t.reading_word()
    counts = [0] * (max(word, default=0))
    for x in word:
        counts[x - 1] += 1
    return Composition(counts)


def tableau_compare(s: SemistandardTableau, t: SemistandardTableau) -> int:
    """The total order on tableaux of one shape: -1 if ``s`` precedes ``t``.

    At the leftmost column where the two differ, the tableau holding the
    largest entry of the symmetric difference of the columns is the greater.
    """
    if s.shape != t.shape:
        raise PartitionError(f"shape mismatch: {tuple(s.shape)} vs {tuple(t.shape)}")
    if s.rows == t.rows:
        return 0
    for c in range(s.shape.width):
        a, b = set(s.column(c)), set(t.column(c))
        if a != b:
            return -1 if max(a ^ b) in b else 1
    raise AssertionError("distinct tableaux with identical columns")


def _fillings(shape: Sequence[int], max_entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard fillings with entries in ``1..max_entry``, reading-word lex order."""
    shape = tuple(shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    col_len = conjugate(shape)
    grid = [[0] * length for length in shape]

    def fill(i: int):
        if i == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[i]
        low = max(grid[r][c - 1] if c else 1, grid[r - 1][c] + 1 if r else 1)
        high = max_entry - (col_len[c] - r - 1)
        for x in range(low, high + 1):
            grid[r][c] = x
            yield from fill(i + 1)

    yield from fill(0)


def enumerate_ssyt(lam: Iterable[int], max_entry: int) -> list[SemistandardTableau]:
    """All SSYT of shape ``lam`` with entries at most ``max_entry``, in increasing order."""
    return list(_ssyt_sorted(Partition(lam), max_entry))


@cache
def _ssyt_sorted(lam: Partition, max_entry: int) -> tuple[SemistandardTableau, ...]:
    tabs = [SemistandardTableau(rows) for rows in _fillings(lam, max_entry)]
    return tuple(sorted(tabs, key=cmp_to_key(tableau_compare)))


@cache
def _kostka(lam: tuple[int, ...], weight: tuple[int, ...]) -> int:
    if not weight:
        return 1 if not lam else 0
    *rest, last = weight
    if last > sum(lam) or len(lam) > len(weight):
        return 0
    total = 0
    # strip the largest letter: a horizontal strip of size `last`
    for inner in _horizontal_strips(lam, last):
        total += _kostka(inner, tuple(rest))
    return total


def _horizontal_strips(lam: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    n = len(lam)

    def rec(i: int, left: int, acc: list[int]):
        if i == n:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        floor = lam[i + 1] if i + 1 < n else 0
        for take in range(min(left, lam[i] - floor), -1, -1):
            acc.append(lam[i] - take)
            yield from rec(i + 1, left - take, acc)
            acc.pop()

    yield from rec(0, size, [])


def ssyt_count(lam: Iterable[int], max_entry: int) -> int:
    """Number of SSYT of shape ``lam`` with entries at most ``max_entry`` (hook-content formula)."""
    lam = Partition(lam)
    conj = conjugate(lam)
    num = den = 1
    for r, length in enumerate(lam):
        for c in range(length):
            num *= max_entry + c - r
            den *= length - c + conj[c] - r - 1
    return num // den if num > 0 else 0


def kostka(lam: Iterable[int], weight: Iterable[int]) -> int:
    """Number of SSYT of shape ``lam`` and weight ``weight`` (any composition)."""
    lam, weight = Partition(lam), Composition(weight)
    if lam.size != weight.size:
        raise PartitionError(f"size mismatch: |{tuple(lam)}| != |{tuple(weight)}|")
    return _kostka(tuple(lam), tuple(weight))


# ---------------------------------------------------------------------------
# plethystic tableaux


@dataclass(frozen=True)
class PlethysticTableau:
    outer_shape: Partition
    inner_shape: Partition
    entries: tuple[tuple[SemistandardTableau, ...], ...]

    def weight(self) -> Composition:
        counts: list[int] = []
        for row in self.entries:
            for t in row:
                for k, c in enumerate(tableau_weight(t)):
                    if k >= len(counts):
                        counts.extend([0] * (k + 1 - len(counts)))
                    counts[k] += c
        return Composition(counts)

    def is_semistandard(self) -> bool:
        ent = self.entries
        for r, row in enumerate(ent):
            for c, t in enumerate(row):
                if t.shape != self.inner_shape:
                    return False
                if c and tableau_compare(row[c - 1], t) > 0:
                    return False
                if r and tableau_compare(ent[r - 1][c], t) >= 0:
                    return False
        return True

    def to_json(self) -> list[list[list[list[int]]]]:
        return [[t.to_json() for t in row] for row in self.entries]


def enumerate_plethystic(mu: Iterable[int], nu: Iterable[int], max_entry: int) -> list[PlethysticTableau]:
    """All semistandard plethystic tableaux of shape ``mu^nu`` with entries <= ``max_entry``.

    Inner tableaux are indexed by their position in the tableau order; the
    outer fillings are listed in reading-word lexicographic order of those
    indices.
    """
    mu, nu = Partition(mu), Partition(nu)
    alphabet = _ssyt_sorted(mu, max_entry)
    out = []
    for rows in _fillings(nu, len(alphabet)):
        entries = tuple(tuple(alphabet[i - 1] for i in row) for row in rows)
        out.append(PlethysticTableau(nu, mu, entries))
    return out


# ---------------------------------------------------------------------------
# dominance-maximal weights


def _prefix(parts: Sequence[int], length: int) -> list[int]:
    acc = list(accumulate(parts))
    total = acc[-1] if acc else 0
    return acc[:length] + [total] * (length - len(acc))


def maximal_pleth_weights(mu: Iterable[int], nu: Iterable[int], max_entry: int | None = None) -> dict[Partition, int]:
    """Dominance-maximal weights of plethystic tableaux of shape ``mu^nu`` with their counts.

    The tableaux are searched through their contents: the multiset of inner
    tableaux used, built as a nondecreasing sequence (reading-word order),
    one entry at a time.  A content with multiplicities ``c`` is realised by
    exactly ``kostka(nu, sorted(c))`` plethystic tableaux, so counts come out
    without enumerating outer fillings.  Because the weight generating
    function is symmetric, only contents whose weight is already a partition
    are kept.

    A branch is cut when an upper bound on the prefix sums of every completion
    is strictly dominated by a weight already found.
    """
    mu, nu = Partition(mu), Partition(nu)
    m, n = mu.size, nu.size
    if m == 0 or n == 0:
        raise PartitionError("plethysm factors must be nonempty")
    total = m * n
    N = max_entry or total

    cells = [(r, c) for r, length in enumerate(mu) for c in range(length)]
    col_len = conjugate(mu)
    mu_prefix = _prefix(mu, N)
    nu_prefix = _prefix(nu, n)

    weight = [0] * (N + 1)  # 1-indexed
    grids = [[[0] * length for length in mu] for _ in range(n)]
    found: dict[Partition, list[int]] = {}  # weight -> prefix sums
    counts: dict[Partition, int] = {}

    # full_cap[k][r]: most entries <= k that r further inner tableaux can hold.
    # Only ssyt_count(mu, k) tableaux have every entry <= k, and a multiset of
    # inner tableaux may repeat its i-th most frequent member at most nu_i times.
    full_cap = [[0] * (n + 1)]
    for k in range(1, N + 1):
        cap = mu_prefix[k - 1]
        if len(mu) <= k:
            allowed = nu_prefix[min(ssyt_count(mu, k), n) - 1]
            row = [m * min(r, allowed) + (m - 1) * max(0, r - allowed) for r in range(n + 1)]
        else:
            row = [r * cap for r in range(n + 1)]
        full_cap.append(row)
    # cur_cap[e][k]: unfilled cells (from reading position e on) in rows < k
    cur_cap = [[sum(1 for r, _ in cells[e:] if r < k) for k in range(N + 1)] for e in range(m + 1)]

    def bound(filled_cells: int, full_left: int, floor: int) -> list[int] | None:
        """Upper bounds on prefix sums 1..N of any completion, or None if infeasible.

        ``floor`` is a lower bound for every entry still to be placed.
        """
        w = weight[1:]
        # the final weight is a partition dominating w entrywise
        tail = list(accumulate(accumulate(reversed(w), max)))
        if tail[-1] > total:
            return None
        tail.reverse()
        tail.append(0)
        cur = cur_cap[filled_cells]
        shift = floor - 1
        caps = [0] * shift + [cur[j] + full_cap[j][full_left] for j in range(1, N - shift + 1)]
        return [min(p + c, total - t) for p, c, t in zip(accumulate(w), caps, tail[1:])]

    def dominated(ub: list[int]) -> bool:
        for pref in found.values():
            strict = False
            for u, p in zip(ub, pref):
                if u > p:
                    break
                if u < p:
                    strict = True
            else:
                if strict:
                    return True
        return False

    def runs_ok(runs: list[int]) -> bool:
        acc = 0
        for k, r in enumerate(sorted(runs, reverse=True)):
            acc += r
            if k >= len(nu_prefix) or acc > nu_prefix[k]:
                return False
        return True

    def leaf(runs: list[int]) -> None:
        w = weight[1:]
        if any(w[i] < w[i + 1] for i in range(N - 1)):
            return
        alpha = Partition(w)
        mult = _kostka(tuple(nu), tuple(sorted(runs, reverse=True)))
        if alpha in counts:
            counts[alpha] += mult
            return
        pref = _prefix(alpha, N)
        for beta, bp in found.items():
            if all(a <= b for a, b in zip(pref, bp)):
                return  # dominated (equality already handled)
        for beta in [b for b, bp in found.items() if all(a >= b2 for a, b2 in zip(pref, bp))]:
            del found[beta], counts[beta]
        found[alpha] = pref
        counts[alpha] = mult

    def place(t: int, e: int, prev: tuple[int, ...] | None, tight: bool, runs: list[int]) -> None:
        grid = grids[t]
        if e:
            floor = grid[0][0]
        else:
            floor = prev[0] if prev else 1
        ub = bound(e, n - t - 1, floor)
        if ub is None or dominated(ub):
            return
        if e == m:
            word = tuple(x for row in grid for x in row)
            if prev is not None and word == prev:
                new_runs = runs[:-1] + [runs[-1] + 1]
            else:
                new_runs = runs + [1]
            if not runs_ok(new_runs):
                return
            if t + 1 == n:
                leaf(new_runs)
            else:
                place(t + 1, 0, word, True, new_runs)
            return
        r, c = cells[e]
        low = max(grid[r][c - 1] if c else 1, grid[r - 1][c] + 1 if r else 1)
        if tight and prev is not None:
            low = max(low, prev[e])
        high = N - (col_len[c] - r - 1)
        for x in range(low, high + 1):
            grid[r][c] = x
            weight[x] += 1
            place(t, e + 1, prev, tight and prev is not None and x == prev[e], runs)
            weight[x] -= 1
        grid[r][c] = 0

    place(0, 0, None, False, [])

    for alpha in counts:
        # maximal weights of a symmetric generating function are partitions
        assert list(alpha) == sorted(alpha, reverse=True)
    keys = sorted(counts, reverse=True)
    for i, a in enumerate(keys):
        for b in keys[i + 1:]:
            if dominates(a, b) or dominates(b, a):
                raise AssertionError(f"comparable maximal weights {a} and {b}")
    return {a: counts[a] for a in keys}
