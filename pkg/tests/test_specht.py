import random

import pytest

from youngrep.config import load_paper_fixtures
from youngrep.errors import DegreeMismatchError, GarnirPairError, GeneratorIndexError, YoungRepError
from youngrep.perm import Permutation, all_permutations, compose, identity, inverse, parse_cycles, sign
from youngrep.shapes import Cell, Partition, dimension, parse_partition, partitions_of
from youngrep.specht import (
    CASE_OTHER, CASE_SAME_COLUMN, CASE_SAME_ROW, GarnirPair, PolytabloidExpansion,
    case_of, garnir_pair, garnir_transversal, generator_matrices, generator_matrix,
    rep_matrix, straighten,
)
from youngrep.tableaux import BasisOrder, apply_perm, column_group, parse_tableau, standard_tableaux
from youngrep.utils import identity_matrix, int_matrix, matrices_equal, matrix_power, matrix_to_lists, matrix_trace

PAPER = BasisOrder.PAPER_S4


def P(text, n=4):
    return parse_cycles(text, n)


def random_perm(rng, n):
    return Permutation(tuple(rng.sample(range(1, n + 1), n)))


# =========================================
# Garnir transversal
# =========================================

def test_transversal_two_against_one():
    reps = garnir_transversal(GarnirPair({2, 3}, {1}), 4)
    assert len(reps) == 3
    assert reps[0] == (1, identity(4))
    assert set(reps[1:]) == {(-1, P("(1 2)")), (1, P("(1 3 2)"))}


def test_transversal_single_swap():
    assert garnir_transversal(GarnirPair({4}, {3})) == [(1, identity(4)), (-1, P("(3 4)"))]


@pytest.mark.parametrize("a, b", [(1, 2), (5, 3), (2, 6)])
def test_transversal_one_by_one(a, b):
    n = max(a, b)
    assert garnir_transversal(GarnirPair({a}, {b}), n) == [
        (1, identity(n)), (-1, parse_cycles(f"({a} {b})", n)),
    ]


def test_transversal_size_is_binomial():
    reps = garnir_transversal(GarnirPair({2, 3, 4}, {1}), 4)
    assert len(reps) == 4
    reps = garnir_transversal(GarnirPair({3, 5}, {1, 2}), 5)
    assert len(reps) == 6
    assert all(s == sign(pi) for s, pi in reps)


def test_garnir_pair_rejects_overlap_and_empty():
    with pytest.raises(GarnirPairError):
        GarnirPair({1, 2}, {2})
    with pytest.raises(GarnirPairError):
        GarnirPair(set(), {2})


def test_garnir_pair_at_descent():
    t = parse_tableau("21/3/4")
    pair = garnir_pair(t, Cell(1, 1))
    assert pair.A == {2, 3, 4}
    assert pair.B == {1}


# =========================================
# straighten
# =========================================

def test_straighten_chained_example():
    steps = []
    result = straighten(parse_tableau("2,1,3/4"), PAPER, trace=steps.append)
    assert result.vector() == [-1, 0, 1]
    assert str(result) == "-t1 +t3"
    moved = [str(m) for step in steps for _s, _pi, m in step.terms]
    assert "1,4,3/2" in moved


def test_straighten_first_example():
    assert straighten(parse_tableau("2,1/3/4"), PAPER).vector() == [1, -1, 1]


@pytest.mark.parametrize("lam", partitions_of(5))
def test_straighten_standard_is_unit(lam):
    basis = standard_tableaux(lam)
    for k, t in enumerate(basis):
        assert straighten(t).coeffs == {k: 1}


def test_straighten_paper_fixtures():
    for case in load_paper_fixtures()["straightening"]:
        lam = parse_partition(case["shape"])
        got = straighten(parse_tableau(case["tableau"], lam), PAPER).vector()
        assert got == case["coeffs"], case["tableau"]


@pytest.mark.parametrize("lam", partitions_of(4))
def test_straighten_column_group_sign(lam):
    for t in standard_tableaux(lam, PAPER):
        base = straighten(t, PAPER).vector()
        for s, pi in column_group(t):
            moved = straighten(apply_perm(pi, t), PAPER).vector()
            assert moved == [s * v for v in base]


def test_straighten_shared_cache_is_consistent():
    cache = {}
    t = parse_tableau("3,2,1/4")
    first = straighten(t, cache=cache)
    assert t in cache
    assert straighten(t, cache=cache) == first == straighten(t)


def test_expansion_drops_zeros_and_checks_range():
    lam = Partition((3, 1))
    e = PolytabloidExpansion(lam, PAPER, {0: 0, 2: 1})
    assert e.coeffs == {2: 1}
    assert str(PolytabloidExpansion(lam, PAPER, {})) == "0"
    assert str(PolytabloidExpansion(lam, PAPER, {1: -2})) == "-2t2"
    with pytest.raises(IndexError):
        PolytabloidExpansion(lam, PAPER, {3: 1})


# =========================================
# generator matrices
# =========================================

def test_case_of():
    assert case_of(parse_tableau("12/3/4"), 3) == CASE_SAME_COLUMN
    assert case_of(parse_tableau("12/3/4"), 1) == CASE_SAME_ROW
    assert case_of(parse_tableau("13/2/4"), 3) == CASE_OTHER


def test_generator_matrix_examples():
    assert matrix_to_lists(generator_matrix(Partition((2, 1, 1)), 1, PAPER)) == [[1, 0, 0], [-1, -1, 0], [1, 0, -1]]
    assert matrix_to_lists(generator_matrix(Partition((2, 2)), 3, PAPER)) == [[1, 0], [-1, -1]]
    assert matrix_to_lists(generator_matrix(Partition((3, 1)), 2, PAPER)) == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]


def test_generator_matrices_match_all_displays():
    fx = load_paper_fixtures()
    count = 0
    for shape_text, gens in fx["generators"].items():
        lam = parse_partition(shape_text)
        for i, rows in gens.items():
            assert matrices_equal(generator_matrix(lam, int(i), PAPER), int_matrix(rows)), (shape_text, i)
            count += 1
    assert count == 15


def test_generator_matrix_index_range():
    with pytest.raises(GeneratorIndexError):
        generator_matrix(Partition((3, 1)), 4)
    with pytest.raises(GeneratorIndexError):
        generator_matrix(Partition((3, 1)), 0)
    assert issubclass(GeneratorIndexError, YoungRepError)


def test_generator_matrix_is_read_only():
    m = generator_matrix(Partition((2, 2)), 1)
    with pytest.raises(ValueError):
        m[0, 0] = 5


@pytest.mark.parametrize("n", range(2, 7))
def test_same_column_columns_are_negative_units(n):
    for lam in partitions_of(n):
        basis = standard_tableaux(lam)
        for i, x in generator_matrices(lam).items():
            for j, t in enumerate(basis):
                if case_of(t, i) == CASE_SAME_COLUMN:
                    assert [int(v) for v in x[:, j]] == [-1 if r == j else 0 for r in range(len(basis))]


@pytest.mark.parametrize("n", range(2, 7))
def test_coxeter_relations(n):
    for lam in partitions_of(n):
        ident = identity_matrix(dimension(lam))
        gens = generator_matrices(lam)
        for i, x in gens.items():
            assert matrices_equal(x @ x, ident)
            if i + 1 in gens:
                assert matrices_equal(matrix_power(x @ gens[i + 1], 3), ident)
            for j in range(i + 2, n):
                assert matrices_equal(x @ gens[j], gens[j] @ x)


# =========================================
# rep_matrix
# =========================================

def test_rep_matrix_examples():
    assert matrix_to_lists(rep_matrix(Partition((1, 1, 1, 1)), P("(2 3)"), PAPER)) == [[-1]]
    assert matrix_trace(rep_matrix(Partition((2, 2)), P("(1 2 3 4)"), PAPER)) == 0
    assert matrix_trace(rep_matrix(Partition((3, 1)), P("(1 2 3 4)"), PAPER)) == -1
    assert matrix_to_lists(rep_matrix(Partition((2, 1, 1)), P("(3 4)"), PAPER)) == [[-1, 0, 0], [0, 0, 1], [0, 1, 0]]


@pytest.mark.parametrize("lam", partitions_of(5))
def test_rep_matrix_identity(lam):
    assert matrices_equal(rep_matrix(lam, identity(5)), identity_matrix(dimension(lam)))


def test_rep_matrix_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        rep_matrix(Partition((2, 2)), identity(5))


@pytest.mark.parametrize("order", list(BasisOrder))
def test_homomorphism_exhaustive_s4(order):
    elements = all_permutations(4)
    for lam in partitions_of(4):
        reps = {s: rep_matrix(lam, s, order) for s in elements}
        for s in elements:
            for t in elements:
                assert matrices_equal(reps[compose(s, t)], reps[s] @ reps[t])


@pytest.mark.parametrize("n", [5, 6])
def test_homomorphism_random_pairs(n):
    rng = random.Random(n)
    for lam in partitions_of(n):
        for _ in range(40):
            s, t = random_perm(rng, n), random_perm(rng, n)
            assert matrices_equal(rep_matrix(lam, compose(s, t)), rep_matrix(lam, s) @ rep_matrix(lam, t))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_rep_matrix_of_inverse(n):
    for lam in partitions_of(n):
        ident = identity_matrix(dimension(lam))
        for s in all_permutations(n):
            assert matrices_equal(rep_matrix(lam, inverse(s)) @ rep_matrix(lam, s), ident)


def test_sign_and_trivial_representations():
    for s in all_permutations(5):
        assert rep_matrix(Partition((1,) * 5), s)[0, 0] == sign(s)
        assert rep_matrix(Partition((5,)), s)[0, 0] == 1
