import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import full_trees, sequences
from oracles import preorder_words
from imbalance.words import (
    Code,
    CodeError,
    Dyadic,
    Lex,
    PathLengthSequence,
    Prefix,
    Word,
    canonical_code,
    is_maximal,
    kraft_sum,
    lex_compare,
    parse_sequence,
    prefix_compare,
    sequence_of,
)


@pytest.mark.parametrize(
    "v, w, expected",
    [
        ("0", "0", Prefix.EQUAL),
        ("10", "100", Prefix.V_PREFIX_OF_W),
        ("100", "10", Prefix.W_PREFIX_OF_V),
        ("10", "110", Prefix.INCOMPARABLE),
        ("", "0101", Prefix.V_PREFIX_OF_W),
    ],
)
def test_prefix_compare(v, w, expected):
    assert prefix_compare(v, w) is expected


@pytest.mark.parametrize(
    "v, w, expected",
    [("0", "10", Lex.LESS), ("10", "100", Lex.LESS), ("011", "0100", Lex.GREATER), ("11", "11", Lex.EQUAL)],
)
def test_lex_compare(v, w, expected):
    assert lex_compare(v, w) is expected


def test_lex_order_matches_preorder_walk():
    words = preorder_words(4)
    for (i, v), (j, w) in itertools.product(enumerate(words), repeat=2):
        assert lex_compare(v, w) == Lex((i > j) - (i < j))


def test_lex_refines_prefix():
    for v, w in itertools.product(preorder_words(4), repeat=2):
        if prefix_compare(v, w) is Prefix.V_PREFIX_OF_W:
            assert lex_compare(v, w) is Lex.LESS


def test_word_basics():
    assert Word("").length == 0
    assert str(Word("")) == "ε"
    assert Word("ε") == ""
    assert Word("101").bits == (1, 0, 1)
    assert Word("10").child(1) == "101"
    assert Word("101").parent() == "10"
    with pytest.raises(CodeError):
        Word("012")
    with pytest.raises(CodeError):
        Word("").parent()


class TestDyadic:
    def test_normalized(self):
        d = Dyadic(6, 3)
        assert (d.numerator, d.exponent) == (3, 2)
        z = Dyadic(0, 9)
        assert (z.numerator, z.exponent) == (0, 0)
        assert Dyadic(8, 3) == Dyadic(1)

    def test_str(self):
        assert str(Dyadic(7, 3)) == "7/8"
        assert str(Dyadic(1)) == "1"

    def test_big_exponents_stay_exact(self):
        tiny = Dyadic.weight(500)
        assert tiny + tiny == Dyadic.weight(499)
        assert Dyadic(1) > tiny

    def test_immutable(self):
        with pytest.raises(AttributeError):
            Dyadic(1).numerator = 3

    @given(st.lists(st.tuples(st.integers(0, 2**70), st.integers(0, 80)), min_size=3, max_size=3))
    def test_arithmetic_agrees_with_fraction(self, parts):
        a, b, c = (Dyadic(n, e) for n, e in parts)
        fa, fb, fc = (Fraction(n, 2**e) for n, e in parts)
        assert (a + b) + c == a + (b + c)
        assert ((a + b) + c).as_fraction() == fa + fb + fc
        assert (a < b) == (fa < fb)
        assert (a == b) == (fa == fb)
        again = Dyadic(a.numerator, a.exponent)
        assert (again.numerator, again.exponent) == (a.numerator, a.exponent)


@pytest.mark.parametrize(
    "words, expected",
    [(["0", "10", "11"], Dyadic(1)), ([], Dyadic(0)), (["0", "10"], Dyadic(3, 2))],
)
def test_kraft_sum(words, expected):
    assert kraft_sum(Code(words)) == expected


@pytest.mark.parametrize("words, expected", [(["0", "10", "11"], True), (["0", "10"], False), ([""], True)])
def test_is_maximal(words, expected):
    assert is_maximal(Code(words)) is expected


@pytest.mark.parametrize("bad", [["0", "01"], ["1", "1"], ["", "0"]])
def test_code_rejects_non_antichain(bad):
    with pytest.raises(CodeError):
        Code(bad)


@pytest.mark.parametrize(
    "lengths, words",
    [
        ((1, 2, 2), ["0", "10", "11"]),
        ((2, 2, 2, 2), ["00", "01", "10", "11"]),
        ((1, 3, 3, 4, 4, 4, 4), ["0", "100", "101", "1100", "1101", "1110", "1111"]),
        ((0,), [""]),
    ],
)
def test_canonical_code(lengths, words):
    assert list(canonical_code(PathLengthSequence(lengths))) == words


@pytest.mark.parametrize(
    "words, lengths",
    [
        (["0", "10", "11"], (1, 2, 2)),
        ([""], (0,)),
        (["00", "01", "10", "110", "1110", "11110", "11111"], (2, 2, 2, 3, 4, 5, 5)),
    ],
)
def test_sequence_of(words, lengths):
    assert sequence_of(Code(words)).lengths == lengths


def test_sequence_of_rejects_non_maximal():
    with pytest.raises(CodeError):
        sequence_of(Code(["0", "10"]))


@pytest.mark.parametrize("bad", [(1, 2, 3), (2, 1, 2), (1, 1, 1), (), (-1, 0)])
def test_sequence_invariants_enforced(bad):
    with pytest.raises(CodeError):
        PathLengthSequence(bad)


@pytest.mark.parametrize(
    "text, lengths",
    [("2,2,2,3,4,5,5", (2, 2, 2, 3, 4, 5, 5)), ("2, 1, 2", (1, 2, 2)), (" 0 ", (0,)), ("1 1", (1, 1))],
)
def test_parse_sequence(text, lengths):
    assert parse_sequence(text).lengths == lengths


def test_parse_sequence_errors():
    with pytest.raises(CodeError, match="7/8"):
        parse_sequence("1,2,3")
    with pytest.raises(CodeError, match="'a'"):
        parse_sequence("1,a,2")


@given(sequences())
def test_canonical_code_invariants(seq):
    code = canonical_code(seq)
    assert code.is_lex_monotone()
    assert kraft_sum(code) == 1
    assert sequence_of(code) == seq
    assert parse_sequence(str(seq)) == seq
    t = len(seq)
    if t >= 2:
        assert 1 <= min(seq) and max(seq) <= t - 1


@given(full_trees())
def test_any_full_tree_is_a_maximal_antichain(words):
    code = Code(words)
    assert is_maximal(code)
    assert sequence_of(code) == PathLengthSequence(sorted(map(len, words)))


def test_values_are_hashable_and_equal():
    a = PathLengthSequence((1, 2, 2))
    assert a == PathLengthSequence([1, 2, 2])
    assert len({a, PathLengthSequence((1, 2, 2))}) == 1
    assert Code(["11", "0", "10"]) == canonical_code(a)
