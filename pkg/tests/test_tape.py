from hypothesis import given, settings
from hypothesis import strategies as st

from gramzip.parsing import Copy, Literal, parse_lz77
from gramzip.tape import REGISTER_NAMES, Tape, run_tape_parser


class TestTape:
    def test_seek_counts_unit_moves(self):
        tape = Tape(b"abcdef")
        tape.seek(4)
        assert tape.steps == 3 and tape.reversals == 0
        tape.seek(2)
        assert tape.steps == 5 and tape.reversals == 1
        tape.seek(2)  # no move, no flip
        assert tape.steps == 5 and tape.reversals == 1
        tape.seek(6)
        assert tape.steps == 9 and tape.reversals == 2
        assert tape.read() == ord("f")


class TestRunParser:
    def test_woodchuck_equals_direct_parse(self, wood):
        parse, stats = run_tape_parser(wood)
        assert parse == parse_lz77(wood)
        assert stats.max_register == len(wood) + 1

    def test_single_byte_no_reversals(self):
        parse, stats = run_tape_parser(b"a")
        assert parse == [Literal(ord("a"))]
        assert stats.reversals == 0

    def test_aaaa_regression_trace(self):
        # frozen from the instrumented run: the trace is the contract
        parse, stats = run_tape_parser(b"aaaa")
        assert parse == [Literal(ord("a")), Literal(ord("a")), Copy(1, 2)]
        assert stats.reversals == 4
        assert stats.steps == 7
        assert stats.registers == len(REGISTER_NAMES) == 6

    def test_corpus_output_equivalence(self, corpus):
        for text in corpus:
            parse, stats = run_tape_parser(text)
            assert parse == parse_lz77(text)
            assert stats.max_register <= len(text) + 1

    def test_register_count_constant_across_sizes(self):
        counts = set()
        for n in (100, 1000, 10000):
            _, stats = run_tape_parser(b"a" * n)
            counts.add(stats.registers)
            assert stats.max_register <= n + 1
        assert len(counts) == 1

    def test_stats_lines_format(self):
        _, stats = run_tape_parser(b"aaaa")
        assert stats.lines() == (
            "reversals=4\nsteps=7\nregisters=6\nmax_register=5\n"
        )


@settings(max_examples=40)
@given(
    st.one_of(
        st.binary(max_size=60),
        st.text(alphabet="ab", max_size=80).map(lambda s: s.encode()),
    )
)
def test_output_equivalence_property(text):
    parse, stats = run_tape_parser(text)
    assert parse == parse_lz77(text)
    assert stats.max_register <= len(text) + 1
