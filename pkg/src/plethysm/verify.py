"""Exhaustive checks of the factorisation and homogeneity classifications.

Every product ``s_nu o s_mu`` up to a degree bound is expanded, and the
observed coincidences / homogeneous products are compared against the
expected exceptional families.  Reports are deterministic and serialize to
JSON.
"""

from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .engine import SchurExpansion, plethysm
from .maxterms import signature
from .partitions import Partition, PartitionError, conjugate, double_bracket, enumerate_partitions
from .tableaux import maximal_pleth_weights


@dataclass(frozen=True, order=True)
class ProductKey:
    """The product ``s_nu o s_mu``."""

    nu: Partition
    mu: Partition

    def __post_init__(self):
        object.__setattr__(self, "nu", Partition(self.nu))
        object.__setattr__(self, "mu", Partition(self.mu))
        if not self.nu or not self.mu:
            raise PartitionError("plethysm factors must be nonempty")

    @property
    def degree(self) -> int:
        return self.nu.size * self.mu.size

    def expansion(self) -> SchurExpansion:
        return plethysm(self.nu, self.mu)

    def to_json(self) -> dict:
        return {"nu": list(self.nu), "mu": list(self.mu)}

    def __str__(self) -> str:
        from .partitions import format_partition

        return f"s_({format_partition(self.nu)}) o s_({format_partition(self.mu)})"


def product_keys(degree: int) -> list[ProductKey]:
    """All products of the given degree, sorted by inner size, then ``mu``, then ``nu``."""
    keys = []
    for m in range(1, degree + 1):
        if degree % m:
            continue
        for mu in enumerate_partitions(m):
            for nu in enumerate_partitions(degree // m):
                keys.append(ProductKey(nu, mu))
    return sorted(keys, key=lambda k: (k.mu.size, tuple(k.mu), tuple(k.nu)))


def _key(x) -> ProductKey:
    if isinstance(x, ProductKey):
        return x
    nu, mu = x
    return ProductKey(Partition(nu), Partition(mu))


# ---------------------------------------------------------------------------
# homogeneity


def is_homogeneous(nu: Iterable[int], mu: Iterable[int]) -> bool:
    return len(plethysm(nu, mu)) == 1


def is_indecomposable(nu: Iterable[int], mu: Iterable[int]) -> bool:
    e = plethysm(nu, mu)
    return len(e) == 1 and next(iter(e.terms.values())) == 1


HOMOGENEOUS_EXCEPTIONS = frozenset({
    ProductKey(Partition((1, 1)), Partition((1, 1))),
    ProductKey(Partition((1, 1)), Partition((2,))),
})


def expected_homogeneous(key: ProductKey) -> bool:
    return key.nu.size == 1 or key.mu.size == 1 or key in HOMOGENEOUS_EXCEPTIONS


@dataclass
class HomogeneityReport:
    max_degree: int
    table: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def homogeneous(self, min_factor: int = 1) -> list[ProductKey]:
        return [_key((r["nu"], r["mu"])) for r in self.table
                if r["homogeneous"] and min(len_sum(r["nu"]), len_sum(r["mu"])) >= min_factor]

    def to_json(self) -> dict:
        return {"max_degree": self.max_degree, "passed": self.passed, "violations": self.violations,
                "table": self.table, "elapsed_ms": self.elapsed_ms}

    def format(self) -> str:
        lines = [f"homogeneity sweep up to degree {self.max_degree}: {len(self.table)} products"]
        for r in self.table:
            if r["homogeneous"] and len_sum(r["nu"]) > 1 and len_sum(r["mu"]) > 1:
                lines.append(f"  homogeneous: {_key((r['nu'], r['mu']))} (indecomposable={r['indecomposable']})")
        for v in self.violations:
            lines.append(f"  VIOLATION: {_key((v['nu'], v['mu']))}: {v['reason']}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def len_sum(parts: Iterable[int]) -> int:
    return sum(parts)


def verify_theorem_B(max_degree: int) -> HomogeneityReport:
    """Classify every product of degree <= ``max_degree`` as homogeneous or not.

    Homogeneity (and indecomposability) must hold exactly for the products
    with a factor of size 1 and for ``s_(1^2) o s_(1^2)``, ``s_(1^2) o s_(2)``.
    """
    if max_degree < 4:
        raise ValueError("max_degree must be at least 4")
    start = time.perf_counter()
    report = HomogeneityReport(max_degree)
    for d in range(1, max_degree + 1):
        for key in product_keys(d):
            e = key.expansion()
            homog = len(e) == 1
            indec = homog and next(iter(e.terms.values())) == 1
            row = {"nu": list(key.nu), "mu": list(key.mu), "degree": d, "terms": len(e),
                   "homogeneous": homog, "indecomposable": indec}
            report.table.append(row)
            want = expected_homogeneous(key)
            if homog != want:
                report.violations.append({**row, "reason": f"homogeneous={homog}, expected {want}"})
            elif indec != want:
                report.violations.append({**row, "reason": f"indecomposable={indec}, expected {want}"})
    report.elapsed_ms = int(1000 * (time.perf_counter() - start))
    return report


# ---------------------------------------------------------------------------
# equality of products


@dataclass
class EqualityStats:
    signature_rejections: int = 0
    dominance_rejections: int = 0
    full_comparisons: int = 0


def products_equal(a, b, stats: EqualityStats | None = None) -> bool:
    """Whether two products coincide.

    Differing extreme constituents decide first.  Next the dominance-maximal
    monomials of the two expansions (with their coefficients) are compared by
    tableau search; equal symmetric functions have equal monomial expansions,
    so a difference there is conclusive.  Only then are the full Schur
    expansions compared.
    """
    a, b = _key(a), _key(b)
    if a.degree != b.degree:
        raise PartitionError(f"degree mismatch: {a.degree} vs {b.degree}")
    if a == b:
        return True
    if signature(a.nu, a.mu) != signature(b.nu, b.mu):
        if stats:
            stats.signature_rejections += 1
        return False
    if maximal_pleth_weights(a.mu, a.nu) != maximal_pleth_weights(b.mu, b.nu):
        if stats:
            stats.dominance_rejections += 1
        return False
    if stats:
        stats.full_comparisons += 1
    return a.expansion() == b.expansion()


EXCEPTIONAL_IDENTITIES = (
    (ProductKey(Partition((2, 1, 1)), Partition((1,))), ProductKey(Partition((1, 1)), Partition((1, 1)))),
    (ProductKey(Partition((3, 1)), Partition((1,))), ProductKey(Partition((1, 1)), Partition((2,)))),
    (ProductKey(Partition((2, 1, 1)), Partition((2,))), ProductKey(Partition((1, 1)), Partition((3, 1)))),
    (ProductKey(Partition((2, 1, 1)), Partition((1, 1))), ProductKey(Partition((1, 1)), Partition((2, 1, 1)))),
)


def expected_classes(degree: int) -> list[list[ProductKey]]:
    """Coincidence classes predicted by the five exceptional families."""
    parent: dict[ProductKey, ProductKey] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def join(x, y):
        parent[find(x)] = find(y)

    one = Partition((1,))
    for nu in enumerate_partitions(degree):
        if nu != one:
            join(ProductKey(nu, one), ProductKey(one, nu))
    for a, b in EXCEPTIONAL_IDENTITIES:
        if a.degree == degree:
            join(a, b)
    groups = defaultdict(list)
    for x in list(parent):
        groups[find(x)].append(x)
    return sorted(sorted(g) for g in groups.values() if len(g) > 1)


@dataclass
class CoincidenceReport:
    degree: int
    classes: list[list[ProductKey]]
    elapsed_ms: int = 0
    keys: int = 0
    full_comparisons: int = 0

    def to_json(self) -> dict:
        return {"degree": self.degree, "classes": [[k.to_json() for k in c] for c in self.classes],
                "elapsed_ms": self.elapsed_ms}


@dataclass
class FactorisationReport:
    max_degree: int
    reports: list[CoincidenceReport]
    unexpected: list[dict]

    @property
    def passed(self) -> bool:
        return not self.unexpected

    def to_json(self) -> dict:
        return {"max_degree": self.max_degree, "passed": self.passed,
                "reports": [r.to_json() for r in self.reports], "unexpected": self.unexpected}

    def format(self) -> str:
        lines = []
        for r in self.reports:
            lines.append(f"degree {r.degree}: {r.keys} products, {len(r.classes)} coincidence classes")
            for c in r.classes:
                if all(k.nu.size == 1 or k.mu.size == 1 for k in c) and len(c) == 2:
                    continue
                lines.append("  " + " = ".join(str(k) for k in c))
        trivial = sum(1 for r in self.reports for c in r.classes
                      if len(c) == 2 and all(k.nu.size == 1 or k.mu.size == 1 for k in c))
        lines.append(f"{trivial} classes of the form s_nu o s_(1) = s_(1) o s_nu")
        for u in self.unexpected:
            lines.append(f"UNEXPECTED at degree {u['degree']}: {u['reason']}: {u['class']}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def coincidence_classes(degree: int) -> CoincidenceReport:
    """Group the products of one degree by equality of their expansions."""
    start = time.perf_counter()
    keys = product_keys(degree)
    buckets: dict[tuple, list[ProductKey]] = defaultdict(list)
    for k in keys:
        buckets[signature(k.nu, k.mu)].append(k)
    classes = []
    compared = 0
    for bucket in buckets.values():
        if len(bucket) < 2:
            continue
        by_value: dict[str, list[ProductKey]] = defaultdict(list)
        for k in bucket:
            compared += 1
            by_value[k.expansion().canonical()].append(k)
        classes.extend(sorted(g) for g in by_value.values() if len(g) > 1)
    return CoincidenceReport(degree, sorted(classes), int(1000 * (time.perf_counter() - start)),
                             len(keys), compared)


def verify_theorem_A(max_degree: int, progress: Callable[[CoincidenceReport], None] | None = None) -> FactorisationReport:
    """Every coincidence ``s_nu o s_mu = s_rho o s_pi`` up to ``max_degree`` must be expected."""
    if max_degree < 4:
        raise ValueError("max_degree must be at least 4")
    reports, unexpected = [], []
    for d in range(1, max_degree + 1):
        rep = coincidence_classes(d)
        reports.append(rep)
        if progress:
            progress(rep)
        want = expected_classes(d)
        for c in rep.classes:
            if c not in want:
                unexpected.append({"degree": d, "reason": "unexpected coincidence",
                                   "class": [k.to_json() for k in c]})
        for c in want:
            if c not in rep.classes:
                unexpected.append({"degree": d, "reason": "expected coincidence missing",
                                   "class": [k.to_json() for k in c]})
    return FactorisationReport(max_degree, reports, unexpected)


# ---------------------------------------------------------------------------
# s_(1^n) o s_(2)


@dataclass
class SquareReport:
    max_n: int
    rows: list[dict]

    @property
    def passed(self) -> bool:
        return all(r["ok"] for r in self.rows)

    def to_json(self) -> dict:
        return {"max_n": self.max_n, "passed": self.passed, "rows": self.rows}

    def format(self) -> str:
        lines = []
        for r in self.rows:
            status = "ok" if r["ok"] else "MISMATCH"
            lines.append(f"n={r['n']}: {r['terms']} terms {status}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def verify_square_formula(max_n: int) -> SquareReport:
    """``s_(1^n) o s_(2)`` is the sum of ``s_2[alpha]`` over distinct-part ``alpha``; conjugate for ``(1^2)``."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    rows = []
    for n in range(1, max_n + 1):
        column = Partition((1,) * n)
        want = {double_bracket(a): 1 for a in enumerate_partitions(n, distinct_only=True)}
        got = plethysm(column, (2,))
        got_t = plethysm(column, (1, 1))
        want_t = {conjugate(a): 1 for a in want}
        ok_rows = got.terms == dict(sorted(want.items(), reverse=True))
        ok_cols = got_t.terms == dict(sorted(want_t.items(), reverse=True))
        rows.append({"n": n, "terms": len(got), "ok": ok_rows and ok_cols,
                     "row_identity": ok_rows, "conjugate_identity": ok_cols})
    return SquareReport(max_n, rows)


# ---------------------------------------------------------------------------
# beyond full expansion


def signature_collisions(degree: int) -> list[list[ProductKey]]:
    """Groups of products sharing both extreme constituents, other than the size-1 family."""
    buckets: dict[tuple, list[ProductKey]] = defaultdict(list)
    for k in product_keys(degree):
        if k.nu.size == 1 or k.mu.size == 1:
            continue
        buckets[signature(k.nu, k.mu)].append(k)
    return sorted(sorted(g) for g in buckets.values() if len(g) > 1)


def dominance_discriminators(a, b) -> tuple[dict[Partition, int], dict[Partition, int]]:
    """Dominance-maximal constituents present in one product but not the other."""
    a, b = _key(a), _key(b)
    wa = maximal_pleth_weights(a.mu, a.nu)
    wb = maximal_pleth_weights(b.mu, b.nu)
    only_a = {k: v for k, v in wa.items() if wb.get(k) != v}
    only_b = {k: v for k, v in wb.items() if wa.get(k) != v}
    return only_a, only_b


def iter_products(max_degree: int) -> Iterator[ProductKey]:
    for d in range(1, max_degree + 1):
        yield from product_keys(d)
