import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gramzip.errors import MalformedParse
from gramzip.parsing import (
    Copy,
    Literal,
    decode_parse,
    dump_parse,
    load_parse,
    parse_lz77,
    phrase_count,
    render_tokens,
)

from conftest import naive_parse

WOOD_RENDER = (
    "how-much-wood(9,3)ul(13,2)a(9,5)(7,2)(6,2)k-(27,6)if(20,14)(16,5)(27,6)(10,4)?"
)


def test_woodchuck_parse_exact(wood):
    parse = parse_lz77(wood)
    assert render_tokens(parse) == WOOD_RENDER
    assert phrase_count(parse) == 31


def test_single_character():
    assert parse_lz77(b"a") == [Literal(ord("a"))]


def test_aaaa():
    parse = parse_lz77(b"aaaa")
    assert parse == [Literal(ord("a")), Literal(ord("a")), Copy(1, 2)]
    assert phrase_count(parse) == 3


def test_empty_text():
    assert parse_lz77(b"") == []
    assert decode_parse([]) == b""
    assert phrase_count([]) == 0


def test_decode_examples(wood):
    assert decode_parse(parse_lz77(wood)) == wood
    assert len(wood) == 70
    assert decode_parse([Literal(ord("a")), Literal(ord("a")), Copy(1, 2)]) == b"aaaa"


def test_decode_rejects_self_reference():
    with pytest.raises(MalformedParse):
        decode_parse([Literal(97), Copy(1, 3)])  # reads past the decoded prefix
    with pytest.raises(MalformedParse):
        decode_parse([Copy(1, 2)])
    with pytest.raises(MalformedParse):
        decode_parse([Literal(97), Literal(97), Copy(0, 2)])


texts = st.one_of(
    st.binary(max_size=120),
    st.text(alphabet="ab", max_size=200).map(lambda s: s.encode()),
    st.text(alphabet="abcd", max_size=200).map(lambda s: s.encode()),
)


@given(texts)
def test_roundtrip(text):
    assert decode_parse(parse_lz77(text)) == text


@settings(max_examples=60)
@given(st.one_of(st.binary(max_size=40),
                 st.text(alphabet="ab", max_size=60).map(lambda s: s.encode())))
def test_matches_naive_reference(text):
    assert parse_lz77(text) == naive_parse(text)


@given(texts)
def test_token_invariants(text):
    parse = parse_lz77(text)
    pos = 1
    for tok in parse:
        if isinstance(tok, Copy):
            assert tok.length >= 2
            assert tok.source >= 1
            assert tok.source + tok.length - 1 <= pos - 1  # never self-referencing
            pos += tok.length
        else:
            pos += 1


def test_greediness(wood):
    # each copy is the longest match at its cursor and uses the smallest source
    from gramzip.oracle import lcp_bounded

    parse = parse_lz77(wood)
    pos = 1
    for tok in parse:
        if isinstance(tok, Copy):
            best = max(lcp_bounded(wood, i, pos) for i in range(1, pos))
            assert tok.length == best
            firsts = [i for i in range(1, pos) if lcp_bounded(wood, i, pos) == best]
            assert tok.source == firsts[0]
        pos += 1 if isinstance(tok, Literal) else tok.length


def test_format_roundtrip(wood):
    for text in (wood, b"", b"a", b"aaaa", bytes(range(256))):
        parse = parse_lz77(text)
        assert load_parse(dump_parse(parse)) == parse


def test_format_exact(wood):
    dump = dump_parse(parse_lz77(b"aaaa"))
    assert dump == "LZ77 v1 n=4\nL 97\nL 97\nC 1 2\n"


@pytest.mark.parametrize(
    "data",
    [
        "",
        "LZ77 v2 n=0\n",
        "LZ77 v1 n=1\n",  # lengths do not sum to n
        "LZ77 v1 n=2\nL 97\nC 1 1\n",  # copy length < 2
        "LZ77 v1 n=3\nL 97\nC 1 3\n",  # wrong total
        "LZ77 v1 n=3\nL 97\nC 2 2\n",  # self-referencing
        "LZ77 v1 n=1\nL 256\n",
        "LZ77 v1 n=1\nX 1\n",
    ],
)
def test_format_rejects_malformed(data):
    with pytest.raises(MalformedParse):
        load_parse(data)
