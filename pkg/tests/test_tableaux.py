from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from plethysm.partitions import Partition, PartitionError, dominates, enumerate_partitions
from plethysm.tableaux import (
    PlethysticTableau,
    SemistandardTableau,
    enumerate_plethystic,
    enumerate_ssyt,
    kostka,
    maximal_pleth_weights,
    ssyt_count,
    tableau_compare,
    tableau_weight,
)

from oracles import brute_kostka, brute_maximal_weights, brute_plethystic, brute_ssyt, brute_weight_counts

T = SemistandardTableau


def test_rejects_non_semistandard():
    with pytest.raises(ValueError):
        T(((2, 1),))
    with pytest.raises(ValueError):
        T(((1, 2), (1,)))
    with pytest.raises(ValueError):
        T(((0,),))
    with pytest.raises(PartitionError):
        T(((1,), (2, 3)))


def test_weights():
    assert tableau_weight(T(((1, 1),))) == (2,)
    assert tableau_weight(T(((1, 2), (2,)))) == (1, 2)
    assert T(((1, 3), (4,))).weight() == (1, 0, 1, 1)


def weight_9231_example():
    row1 = [T(((1, 1), (2,))), T(((1, 1), (3,))), T(((1, 1), (3,)))]
    row2 = [T(((1, 2), (3,))), T(((1, 1), (4,)))]
    return PlethysticTableau(Partition((3, 2)), Partition((2, 1)), (tuple(row1), tuple(row2)))


def weight_951_example():
    row1 = [T(((1, 1), (2,)))] * 3
    row2 = [T(((1, 2), (2,))), T(((1, 1), (3,)))]
    return PlethysticTableau(Partition((3, 2)), Partition((2, 1)), (tuple(row1), tuple(row2)))


def test_plethystic_examples_of_shape_21_in_32():
    left, right = weight_9231_example(), weight_951_example()
    assert left.is_semistandard() and right.is_semistandard()
    assert left.weight() == (9, 2, 3, 1)
    assert right.weight() == (9, 5, 1)
    found = [t for t in enumerate_plethystic((2, 1), (3, 2), 3) if t.weight() == (9, 5, 1)]
    assert right in found


def test_compare_examples():
    a = T(((1, 1), (2,)))
    assert tableau_compare(a, a) == 0
    assert tableau_compare(T(((1,),)), T(((2,),))) == -1
    assert tableau_compare(a, T(((1, 1), (3,)))) == -1
    assert tableau_compare(T(((1, 1), (3,))), a) == 1
    with pytest.raises(PartitionError):
        tableau_compare(a, T(((1, 1, 2),)))


def test_compare_against_definition_21():
    # the leftmost differing column decides; its largest unshared entry marks the greater tableau
    tabs = [T(t) for t in brute_ssyt((2, 1), 3)]
    for s in tabs:
        for t in tabs:
            if s == t:
                assert tableau_compare(s, t) == 0
                continue
            for c in range(2):
                a, b = set(s.column(c)), set(t.column(c))
                if a != b:
                    want = 1 if max(a ^ b) in a else -1
                    break
            assert tableau_compare(s, t) == want


def test_compare_is_total_order():
    for n in range(1, 6):
        for lam in enumerate_partitions(n):
            for N in range(1, 6):
                tabs = enumerate_ssyt(lam, N)
                for i, s in enumerate(tabs):
                    for j, t in enumerate(tabs):
                        c = tableau_compare(s, t)
                        assert c == -tableau_compare(t, s)
                        assert (c == 0) == (i == j)
                        # sortedness plus antisymmetry gives transitivity
                        assert (c < 0) == (i < j)


@pytest.mark.parametrize("lam, N, count", [((1, 1), 2, 1), ((2,), 2, 3), ((2, 1), 3, 8)])
def test_enumerate_ssyt_examples(lam, N, count):
    assert len(enumerate_ssyt(lam, N)) == count


def test_enumerate_ssyt_matches_brute_force():
    for n in range(0, 6):
        for lam in enumerate_partitions(n):
            for N in range(1, 5):
                got = sorted(t.rows for t in enumerate_ssyt(lam, N))
                assert got == sorted(brute_ssyt(lam, N))
                assert len(got) == ssyt_count(lam, N)


def test_kostka_examples():
    assert kostka((3, 2, 1), (3, 2, 1)) == 1
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert brute_kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((2, 2), (3, 1)) == 0
    with pytest.raises(PartitionError):
        kostka((2,), (1,))


def test_kostka_matches_brute_force():
    for n in range(1, 6):
        for lam in enumerate_partitions(n):
            for alpha in enumerate_partitions(n):
                assert kostka(lam, alpha) == brute_kostka(lam, alpha)


def test_kostka_symmetric_in_weight():
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            for alpha in enumerate_partitions(n):
                k = kostka(lam, alpha)
                for perm in set(permutations(alpha)):
                    assert kostka(lam, perm) == k
                assert kostka(lam, (0, *alpha)) == k


def test_kostka_triangular():
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            assert kostka(lam, lam) == 1
            for alpha in enumerate_partitions(n):
                if not dominates(lam, alpha):
                    assert kostka(lam, alpha) == 0


def test_plethystic_two_rows_of_two():
    # pairs S < T over the six one-row tableaux of length 2 with entries <= 3
    tabs = enumerate_plethystic((2,), (1, 1), 3)
    assert len(tabs) == len(brute_plethystic((2,), (1, 1), 3)) == 15
    assert all(t.is_semistandard() for t in tabs)


def test_plethystic_matches_brute_force():
    cases = [((2,), (2,), 3), ((1, 1), (2,), 3), ((2,), (1, 1), 4), ((2,), (2, 1), 3), ((2, 1), (2,), 3), ((1, 1), (1, 1, 1), 3)]
    for mu, nu, N in cases:
        got = Counter(t.weight() for t in enumerate_plethystic(mu, nu, N))
        want = brute_weight_counts(mu, nu, N)
        assert {tuple(w) + (0,) * (N - len(w)): c for w, c in got.items()} == dict(want)
        assert len({t.entries for t in enumerate_plethystic(mu, nu, N)}) == sum(want.values())


def test_plethystic_inner_single_cell():
    for n in range(1, 7):
        for nu in enumerate_partitions(n):
            for N in range(1, 7):
                if N ** n > 50000:
                    continue
                pleth = Counter(t.weight() for t in enumerate_plethystic((1,), nu, N))
                plain = Counter(t.weight() for t in enumerate_ssyt(nu, N))
                assert pleth == plain


def test_plethystic_deterministic_order():
    a = [t.to_json() for t in enumerate_plethystic((2,), (2, 1), 3)]
    b = [t.to_json() for t in enumerate_plethystic((2,), (2, 1), 3)]
    assert a == b


@pytest.mark.parametrize("mu, nu, want", [
    ((2,), (1, 1, 1, 1, 1), {(4, 4, 2): 1, (5, 3, 1, 1): 1, (6, 1, 1, 1, 1): 1}),
    ((1,), (3, 1), {(3, 1): 1}),
])
def test_maximal_weights_examples(mu, nu, want):
    assert maximal_pleth_weights(mu, nu) == {Partition(a): c for a, c in want.items()}


def test_maximal_weights_shape_21_in_32():
    assert (9, 5, 1) in maximal_pleth_weights((2, 1), (3, 2))


def test_maximal_weights_match_brute_force():
    cases = [((2,), (2,)), ((1, 1), (2,)), ((2,), (1, 1)), ((1, 1), (1, 1)), ((2,), (1, 1, 1)), ((2,), (2, 1)),
             ((1, 1), (2, 1)), ((3,), (1, 1)), ((2, 1), (1, 1)), ((2, 1), (2,))]
    for mu, nu in cases:
        N = sum(mu) * sum(nu)
        want = brute_maximal_weights(mu, nu, min(N, 4))
        # both sides search the same alphabet {1..4}
        assert maximal_pleth_weights(mu, nu, max_entry=min(N, 4)) == want


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.sampled_from(enumerate_partitions(m))),
       st.integers(1, 3).flatmap(lambda n: st.sampled_from(enumerate_partitions(n))))
def test_maximal_weights_are_incomparable_partitions(mu, nu):
    weights = maximal_pleth_weights(mu, nu)
    assert weights
    keys = list(weights)
    for a in keys:
        assert list(a) == sorted(a, reverse=True) and a.size == mu.size * nu.size
        assert weights[a] >= 1
        for b in keys:
            if a != b:
                assert not dominates(a, b)
