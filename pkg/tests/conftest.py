import pytest

from gramzip.oracle import lcp_bounded
from gramzip.parsing import Copy, Literal

from corpus import WOODCHUCK, extended_corpus, standard_corpus


@pytest.fixture(scope="session")
def wood():
    return WOODCHUCK


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def big_corpus():
    return extended_corpus()


def naive_parse(text):
    """Reference greedy parser built directly on the prefix-match oracle."""
    n = len(text)
    tokens = []
    t = 1
    while t <= n:
        best_i = best_l = 0
        for i in range(1, t):
            length = lcp_bounded(text, i, t)
            if length > best_l:
                best_i, best_l = i, length
        if best_l <= 1:
            tokens.append(Literal(text[t - 1]))
            t += 1
        else:
            tokens.append(Copy(best_i, best_l))
            t += best_l
    return tokens
