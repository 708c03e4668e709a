import itertools
import math

import pytest
from hypothesis import given, strategies as st

from youngrep.config import load_paper_fixtures
from youngrep.errors import DegreeMismatchError, GeneratorIndexError, LimitError, ParseError
from youngrep.perm import (
    GeneratorWord, Permutation, adjacent_word, all_permutations, class_representative,
    class_size, compose, conjugacy_classes, cycle_type, evaluate, identity, inverse,
    inversions, parse_cycles, parse_one_line, parse_permutation, sign,
)
from youngrep.shapes import Partition, partitions_of


def P(text, n=4):
    return parse_cycles(text, n)


@st.composite
def permutation_strategy(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


# =========================================
# parse_cycles
# =========================================

def test_parse_double_transposition():
    sigma = P("(1 2)(3 4)")
    assert [sigma(i) for i in range(1, 5)] == [2, 1, 4, 3]


def test_parse_identity_forms():
    assert P("") == identity(4)
    assert P("e") == identity(4)
    assert P("  e ") == identity(4)


def test_parse_four_cycle():
    sigma = P("(1 2 3 4)")
    assert sigma.images == (2, 3, 4, 1)


def test_parse_is_whitespace_tolerant():
    assert P(" ( 1  2 ) (3 4) ") == P("(1 2)(3 4)")
    assert P("(1,2)") == P("(1 2)")


def test_parse_non_disjoint_cycles_rightmost_first():
    # (1 2)(2 3): 2 -> 3 -> 3, 3 -> 2 -> 1, 1 -> 1 -> 2
    assert P("(1 2)(2 3)") == P("(1 2 3)")


@pytest.mark.parametrize("text", ["(1 5)", "(0 1)", "(1 2 1)", "(1 2", "1 2)", "(1 (2))", "()", "(a b)", "x"])
def test_parse_rejects_bad_input(text):
    with pytest.raises(ParseError):
        P(text)


def test_one_line_form():
    assert parse_one_line("[2,1,4,3]") == P("(1 2)(3 4)")
    assert parse_permutation("[2,1,4,3]", 4) == P("(1 2)(3 4)")
    with pytest.raises(ParseError):
        parse_one_line("[1,1,2]")
    with pytest.raises(ParseError):
        parse_permutation("[2,1]", 4)


def test_str_round_trip():
    assert str(identity(4)) == "e"
    assert str(P("(3 4)(1 2)")) == "(1 2)(3 4)"
    assert str(P("(2 3 1)")) == "(1 2 3)"
    for sigma in all_permutations(4):
        assert P(str(sigma)) == sigma


# =========================================
# compose / sign
# =========================================

def test_compose_applies_right_factor_first():
    assert compose(P("(1 2)"), P("(2 3)")) == P("(1 2 3)")


def test_compose_identity():
    sigma = P("(1 3 4)")
    assert compose(sigma, identity(4)) == sigma
    assert compose(identity(4), sigma) == sigma


def test_compose_conjugation_example():
    assert compose(P("(2 3)"), compose(P("(3 4)"), P("(2 3)"))) == P("(2 4)")


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(identity(3), identity(4))


def test_mul_is_compose():
    assert P("(1 2)") * P("(2 3)") == P("(1 2 3)")


def test_sign_values():
    assert sign(identity(4)) == 1
    assert sign(P("(1 2)")) == -1
    assert sign(P("(1 2 3 4)")) == -1
    assert sign(P("(1 2 3)")) == 1


def test_sign_multiplicative_exhaustive_s4():
    elements = all_permutations(4)
    for s, t in itertools.product(elements, repeat=2):
        assert sign(compose(s, t)) == sign(s) * sign(t)


def test_inverse():
    for sigma in all_permutations(4):
        assert compose(sigma, inverse(sigma)) == identity(4)


# =========================================
# cycle type / classes
# =========================================

def test_cycle_type_examples():
    assert cycle_type(P("(1 2)(3 4)")) == Partition((2, 2))
    assert cycle_type(identity(4)) == Partition((1, 1, 1, 1))
    assert cycle_type(P("(2 3 4)")) == Partition((3, 1))


def test_conjugacy_classes_s4():
    classes = conjugacy_classes(4)
    sizes = {str(k): len(v) for k, v in classes.items()}
    assert sizes == {"1,1,1,1": 1, "2,1,1": 6, "2,2": 3, "3,1": 8, "4": 6}
    assert list(classes) == partitions_of(4)
    assert sum(sizes.values()) == 24


def test_conjugacy_classes_match_listing():
    classes = conjugacy_classes(4)
    listed = {P(s) for s in ["(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]}
    assert set(classes[Partition((2, 2))]) == listed


def test_conjugacy_classes_trivial():
    assert conjugacy_classes(1) == {Partition((1,)): [identity(1)]}


def test_conjugacy_classes_s5():
    sizes = {str(k): len(v) for k, v in conjugacy_classes(5).items()}
    assert sizes == {
        "1,1,1,1,1": 1, "2,1,1,1": 10, "2,2,1": 15, "3,1,1": 20,
        "3,2": 20, "4,1": 30, "5": 24,
    }


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cycle_type_constant_on_conjugates(n):
    elements = all_permutations(n)
    for sigma in elements:
        ct = cycle_type(sigma)
        for g in elements:
            assert cycle_type(compose(g, compose(sigma, inverse(g)))) == ct


def test_class_size_formula():
    for n in range(1, 7):
        assert sum(class_size(lam) for lam in partitions_of(n)) == math.factorial(n)


def test_class_representative():
    assert class_representative(Partition((3, 1))) == P("(1 2 3)")
    assert class_representative(Partition((2, 2))) == P("(1 2)(3 4)")
    assert class_representative(Partition((1, 1, 1, 1))) == identity(4)
    for lam in partitions_of(6):
        assert cycle_type(class_representative(lam)) == lam


def test_enumeration_limit():
    with pytest.raises(LimitError):
        conjugacy_classes(11)


# =========================================
# adjacent words
# =========================================

def test_adjacent_word_for_transposition():
    word = adjacent_word(P("(2 4)"))
    assert str(word) == "(2 3)(3 4)(2 3)"
    assert word.evaluate() == P("(2 4)")


def test_adjacent_word_identity_is_empty():
    word = adjacent_word(identity(4))
    assert len(word) == 0
    assert str(word) == ""


def test_adjacent_word_corrects_erratum_entry():
    target = P("(1 3 4 2)")
    word = adjacent_word(target)
    assert len(word) == 3
    assert word.evaluate() == target
    assert str(word) == "(2 3)(3 4)(1 2)"


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_adjacent_word_evaluates_exhaustive(n):
    for sigma in all_permutations(n):
        word = adjacent_word(sigma)
        assert evaluate(word) == sigma
        assert len(word) == inversions(sigma)
        assert (-1) ** len(word) == sign(sigma)


@given(permutation_strategy())
def test_adjacent_word_is_reduced(sigma):
    word = adjacent_word(sigma)
    assert word.evaluate() == sigma
    assert all(a != b for a, b in zip(word.letters, word.letters[1:]))


def test_generator_word_rejects_bad_letters():
    with pytest.raises(GeneratorIndexError):
        GeneratorWord(4, (4,))


def test_paper_word_table():
    fx = load_paper_fixtures()
    entries = fx["decompositions"]
    assert len(entries) == 24
    errata = []
    for entry in entries:
        target = P(entry["perm"])
        product = P("".join(entry["word"]))
        if entry.get("erratum"):
            errata.append(entry["perm"])
            assert product != target
            # the printed word fails under the opposite convention too
            reversed_product = P("".join(reversed(entry["word"])))
            assert reversed_product != target
            assert P("".join(entry["corrected"])) == target
        else:
            assert product == target, entry["perm"]
    assert errata == ["(1 3 4 2)"]
