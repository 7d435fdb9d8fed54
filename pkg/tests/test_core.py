"""Axiom validation, the induced order, meets, and commuting degrees."""

from fractions import Fraction

import pytest

from bck import classify
from bck.construct import b_star, extend_top, m_chain, union
from bck.core import (
    PI,
    TC,
    TWO,
    AxiomViolation,
    BckAlgebra,
    CayleyTable,
    FormatError,
    find_violation,
    standard_algebras,
    validate,
)

import oracle


def corpus(max_order):
    return [a for n in range(1, max_order + 1) for a in classify.enumerate_algebras(n)]


# --- table format ----------------------------------------------------------


def test_rejects_non_square_table():
    with pytest.raises(FormatError):
        CayleyTable(((0, 0), (1,)))


def test_rejects_out_of_range_entry():
    with pytest.raises(FormatError):
        CayleyTable(((0, 2), (1, 0)))


def test_rejects_empty_table():
    with pytest.raises(FormatError):
        CayleyTable(())


def test_table_normalizes_rows_to_tuples():
    table = CayleyTable([[0, 0], [1, 0]])
    assert table.rows == ((0, 0), (1, 0))
    assert table.entry(1, 0) == 1
    assert table.flat() == (0, 0, 1, 0)


# --- validation ------------------------------------------------------------


def test_standard_algebras_are_the_fixed_tables():
    algebras = standard_algebras()
    assert algebras["2"].table.rows == ((0, 0), (1, 0))
    assert algebras["PI"].table.rows == ((0, 0, 0), (1, 0, 0), (2, 2, 0))
    assert algebras["TC"].table.rows == ((0, 0, 0), (1, 0, 0), (2, 1, 0))


def test_trivial_algebra_is_valid():
    assert validate(CayleyTable(((0,),))).order == 1


def test_bck4_violation_reports_least_witness():
    with pytest.raises(AxiomViolation) as info:
        validate(CayleyTable(((0, 1), (1, 0))))
    assert info.value.axiom == "BCK4"
    assert info.value.witness == (1,)


@pytest.mark.parametrize(
    "rows, axiom, witness",
    [
        (((1, 0), (1, 0)), "BCK3", (0,)),
        (((0, 1), (1, 0)), "BCK4", (1,)),
        (((0, 0), (0, 0)), "x*0=x", (1,)),
        (((0, 0, 0), (1, 0, 0), (2, 0, 0)), "BCK5", (1, 2)),
        (((0, 0, 0, 0), (1, 0, 0, 0), (2, 1, 0, 0), (3, 2, 2, 0)), "BCK2", (3, 1)),
        (((0, 0, 0), (1, 0, 2), (2, 2, 0)), "BCK1", (1, 2, 0)),
    ],
)
def test_first_violation_follows_fixed_check_order(rows, axiom, witness):
    violation = find_violation(CayleyTable(rows))
    assert violation is not None
    assert violation.axiom == axiom
    assert violation.witness == witness


def test_violation_message_names_axiom_and_witness():
    violation = find_violation(CayleyTable(((0, 1), (1, 0))))
    assert "BCK4" in str(violation)
    assert "x=1" in str(violation)


def test_valid_tables_have_no_violation():
    for algebra in (TWO, PI, TC):
        assert find_violation(algebra.table) is None


# --- order, meet, commuting ------------------------------------------------


def test_leq_from_the_fixed_tables():
    assert PI.leq(1, 2)
    assert not PI.leq(2, 1)
    assert TC.leq(1, 2)


def test_zero_is_the_least_element():
    for algebra in corpus(4):
        for x in algebra.elements():
            assert algebra.leq(0, x)
            if algebra.leq(x, 0):
                assert x == 0


def test_meet_values_from_the_fixed_tables():
    assert PI.meet(1, 2) == 0
    assert PI.meet(2, 1) == 1
    assert TC.meet(1, 2) == 1
    assert TC.meet(2, 1) == 1


def test_meet_is_idempotent():
    for algebra in corpus(4):
        for x in algebra.elements():
            assert algebra.meet(x, x) == x


def test_meet_is_a_lower_bound():
    for algebra in corpus(5):
        for x in algebra.elements():
            for y in algebra.elements():
                m = algebra.meet(x, y)
                assert algebra.leq(m, x)
                assert algebra.leq(m, y)


def test_meet_is_the_greatest_lower_bound_in_commutative_algebras():
    for algebra in corpus(5):
        if not algebra.is_commutative():
            continue
        for x in algebra.elements():
            for y in algebra.elements():
                m = algebra.meet(x, y)
                for z in algebra.elements():
                    if algebra.leq(z, x) and algebra.leq(z, y):
                        assert algebra.leq(z, m)


def test_one_commuting_pair_does_not_force_a_greatest_lower_bound():
    # 2 and 3 commute with meet 0, yet 1 lies below both of them, so a
    # single commuting pair's meet need not be the greatest lower bound;
    # that only holds once the whole algebra is commutative
    algebra = validate(
        CayleyTable(((0, 0, 0, 0), (1, 0, 0, 0), (2, 2, 0, 2), (3, 3, 3, 0)))
    )
    assert algebra.commutes(2, 3)
    assert algebra.meet(2, 3) == 0
    assert algebra.leq(1, 2) and algebra.leq(1, 3)


def test_incomparable_elements_have_a_nonzero_difference():
    for algebra in corpus(5):
        for x in algebra.elements():
            for y in algebra.elements():
                if x != y and not algebra.leq(x, y) and not algebra.leq(y, x):
                    assert algebra.op(x, y) != 0 or algebra.op(y, x) != 0


def test_commutes_examples():
    assert not PI.commutes(1, 2)
    assert TC.commutes(1, 2)
    for algebra in corpus(4):
        for x in algebra.elements():
            assert algebra.commutes(x, 0)
            assert algebra.commutes(x, x)


def test_commuting_reports_of_the_fixed_tables():
    report = PI.commuting_report()
    assert (report.order, report.pair_count) == (3, 7)
    assert report.degree == Fraction(7, 9)
    assert report.raw == "7/9"
    assert TWO.commuting_report().pair_count == 4
    assert TWO.commuting_degree() == 1
    assert TC.commuting_degree() == 1


def test_commuting_report_of_the_bounded_chain_extension():
    report = extend_top(PI).commuting_report()
    assert report.pair_count == 10
    assert report.degree == Fraction(10, 16)
    assert report.raw == "10/16"


def test_pair_counts_match_brute_force_over_corpus():
    for algebra in corpus(5):
        assert algebra.commuting_report().pair_count == oracle.pair_count(
            algebra.table.rows
        )


def test_report_bounds_and_parity_over_corpus():
    for algebra in corpus(5):
        report = algebra.commuting_report()
        n = report.order
        assert report.pair_count >= 3 * n - 2
        assert report.pair_count % 2 == n % 2
        if algebra.is_commutative():
            assert report.degree == 1
        else:
            assert report.degree < 1
            assert report.pair_count <= n * n - 2


# --- predicates -------------------------------------------------------------


def test_commutativity_and_positive_implicativity_flags():
    assert TC.is_commutative() and not TC.is_positive_implicative()
    assert PI.is_positive_implicative() and not PI.is_commutative()
    assert TWO.is_commutative() and TWO.is_positive_implicative()


def test_boundedness_and_top_element():
    extended = extend_top(PI)
    assert extended.is_bounded() and extended.top() == 3
    assert PI.top() == 2  # chains are bounded
    assert union(PI, TWO).top() is None
    assert not union(TWO, TWO).is_bounded()


# --- Hasse covers ------------------------------------------------------------


def test_hasse_covers_of_a_chain():
    assert m_chain(4).hasse_covers() == {(0, 1), (1, 2), (2, 3)}


def test_hasse_covers_of_the_trivial_algebra():
    assert validate(CayleyTable(((0,),))).hasse_covers() == set()


def test_hasse_covers_of_the_order_four_star():
    assert b_star(4).hasse_covers() == {(0, 1), (1, 2), (0, 3)}


def test_hasse_covers_are_transitively_irredundant():
    for algebra in corpus(5):
        for x, y in algebra.hasse_covers():
            assert algebra.leq(x, y) and x != y
            for z in algebra.elements():
                if z not in (x, y):
                    assert not (algebra.leq(x, z) and algebra.leq(z, y))


# --- immutability / soundness ------------------------------------------------


def test_every_corpus_algebra_revalidates():
    for algebra in corpus(5):
        assert find_violation(algebra.table) is None
        assert BckAlgebra(algebra.table).table == algebra.table
