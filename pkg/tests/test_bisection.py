import pytest
from hypothesis import given
from hypothesis import strategies as st

from gramzip.bisection import bisection_grammar
from gramzip.errors import EmptyInput
from gramzip.grammar import Grammar, expand, grammar_size, is_cnf


def nonterminal_expansions(g):
    return [expand(Grammar(start=i, rules=g.rules)) for i in range(len(g.rules))]


@pytest.mark.parametrize(
    "text,size",
    [
        (b"a", 1),
        (b"abab", 6),
        (b"aaaaaaaa", 7),
        (b"aaaa", 5),
    ],
)
def test_exact_sizes(text, size):
    g = bisection_grammar(text)
    assert grammar_size(g) == size
    assert expand(g) == text


def test_abab_structure():
    # start -> T T, T -> A B, A -> a, B -> b
    g = bisection_grammar(b"abab")
    assert g.rules[0] == (1, 1)
    assert g.rules[1] == (2, 3)
    assert g.rules[2] == b"a"
    assert g.rules[3] == b"b"


def test_power_of_two_chain():
    # S8 -> S4 S4, S4 -> S2 S2, S2 -> A A, A -> a
    g = bisection_grammar(b"a" * 8)
    assert g.rules == ((1, 1), (2, 2), (3, 3), b"a")


def test_empty_rejected():
    with pytest.raises(EmptyInput):
        bisection_grammar(b"")


def test_cnf_shape(corpus):
    for text in corpus:
        g = bisection_grammar(text)
        assert is_cnf(g)


def test_dedup_by_full_expansion(corpus):
    # no two nonterminals may expand to the same string
    small = [t for t in corpus if len(t) <= 64]
    assert small
    for text in small:
        exps = nonterminal_expansions(bisection_grammar(text))
        assert len(set(exps)) == len(exps)


texts = st.one_of(
    st.binary(min_size=1, max_size=300),
    st.text(alphabet="ab", min_size=1, max_size=400).map(lambda s: s.encode()),
)


@given(texts)
def test_roundtrip(text):
    assert expand(bisection_grammar(text)) == text


@given(st.binary(min_size=1, max_size=64))
def test_dedup_property(text):
    exps = nonterminal_expansions(bisection_grammar(text))
    assert len(set(exps)) == len(exps)
