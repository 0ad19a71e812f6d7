import pytest

from plethysm.engine import SchurExpansion, plethysm
from plethysm.maxterms import dominance_maximal, leading_term, max_lex, max_translex, signature
from plethysm.partitions import Partition, PartitionError, add, conjugate, dominates, enumerate_partitions, m_twist, union
from plethysm.verify import iter_products

P = Partition
TWIN_A = (P((3, 3, 3, 2, 1)), P((1, 1)))
TWIN_B = (P((2, 1)), P((4, 1, 1, 1, 1)))


def test_max_lex_examples():
    assert max_lex(*TWIN_A) == (12, 3, 3, 3, 2, 1)
    assert max_lex(*TWIN_B) == (12, 3, 3, 3, 2, 1)
    assert max_lex((2, 1), (5, 1, 1, 1)) == (15, 3, 3, 2, 1)
    assert max_lex((3, 2), (1,)) == (3, 2)
    assert max_lex((1,), (3, 2)) == (3, 2)


def test_max_translex_examples():
    want = conjugate((15, 3, 3, 2, 1))
    assert max_translex(*TWIN_A) == want
    assert max_translex(*TWIN_B) == want
    # the same value arises as the conjugate of the lex maximum of s_(2,1) o s_(5,1^3)
    assert want == conjugate(max_lex((2, 1), (5, 1, 1, 1)))
    assert signature(*TWIN_A) == signature(*TWIN_B)


def test_formulas_reject_empty():
    with pytest.raises(PartitionError):
        max_lex((), (1,))
    with pytest.raises(PartitionError):
        max_translex((1,), ())


def test_formulas_always_partitions():
    for d in range(1, 41):
        for m in range(1, d + 1):
            if d % m:
                continue
            for mu in enumerate_partitions(m):
                for nu in enumerate_partitions(d // m):
                    a, b = max_lex(nu, mu), max_translex(nu, mu)
                    assert a.size == b.size == d


def test_one_row_inner_shape():
    for n in range(1, 9):
        for m in range(1, 9):
            for nu in enumerate_partitions(n):
                assert max_lex(nu, (m,)) == add((n * m - n,), nu)
                assert max_translex(nu, (m,)) == conjugate(union((n,) * (m - 1), m_twist(nu, m)))


def test_leading_terms_match_formulas():
    for key in iter_products(12):
        e = plethysm(key.nu, key.mu)
        assert leading_term(e, "lex") == (max_lex(key.nu, key.mu), 1), str(key)
        assert leading_term(e, "translex") == (max_translex(key.nu, key.mu), 1), str(key)


def test_leading_term_examples():
    e = plethysm((1,) * 5, (2,))
    assert leading_term(e, "lex") == ((6, 1, 1, 1, 1), 1)
    # conjugates (5,1^5), (4,2,2,1,1), (3,3,2,2): the first is lex-greatest
    assert leading_term(e, "translex") == ((6, 1, 1, 1, 1), 1)
    assert leading_term(plethysm((1, 1), (2,)), "translex") == ((3, 1), 1)
    # an expansion where the two orders disagree
    e = plethysm((2,), (2,))
    assert leading_term(e, "lex") == ((4,), 1)
    assert leading_term(e, "translex") == ((2, 2), 1)


def test_leading_term_errors():
    with pytest.raises(ValueError):
        leading_term(SchurExpansion(0, {}), "lex")
    with pytest.raises(ValueError):
        leading_term(plethysm((2,), (2,)), "dominance")


def test_dominance_maximal():
    e = plethysm((1,) * 5, (2,))
    assert dominance_maximal(e) == e.terms
    e = plethysm((2,), (2,))
    assert dominance_maximal(e) == {(4,): 1}
    for key in iter_products(9):
        e = plethysm(key.nu, key.mu)
        top = dominance_maximal(e)
        for a in e.terms:
            assert any(dominates(b, a) for b in top)
