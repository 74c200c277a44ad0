import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gramzip.errors import BadBase, EmptyInput, MalformedBlocks, OutOfRange
from gramzip.oracle import first_occurrence
from gramzip.randaccess import (
    _descend,
    access,
    build_block_structure,
    default_base,
    dump_blocks,
    extract,
    load_blocks,
    ra_size_report,
)


class TestBuild:
    def test_abab_base2(self):
        bs = build_block_structure(b"abab", base=2)
        assert [lvl.block_len for lvl in bs.levels] == [4, 2, 1]
        assert bs.levels[0].entries == {0: 1}
        assert bs.levels[1].entries == {0: 1, 1: 1}
        # only the unit blocks for positions 1 and 2 survive pruning
        assert bs.levels[2].entries == {0: ord("a"), 1: ord("b")}

    def test_single_byte(self):
        bs = build_block_structure(b"a", base=7)
        assert len(bs.levels) == 1
        assert bs.levels[0].entries == {0: ord("a")}
        assert access(bs, 1) == ord("a")

    def test_unary_kilobyte_retention(self):
        bs = build_block_structure(b"a" * 1024, base=4)
        for lvl in bs.levels[1:]:
            assert len(lvl.entries) <= 4

    def test_errors(self):
        with pytest.raises(EmptyInput):
            build_block_structure(b"")
        with pytest.raises(BadBase):
            build_block_structure(b"ab", base=1)

    def test_pointers_are_first_occurrences(self, corpus):
        for text in corpus[:40]:
            bs = build_block_structure(text, base=3)
            for lvl in bs.levels:
                if lvl.block_len == 1:
                    continue
                for j, p in lvl.entries.items():
                    lo = j * lvl.block_len + 1
                    hi = min(lo + lvl.block_len - 1, bs.n)
                    assert p == first_occurrence(text, lo, hi)


class TestAccess:
    def test_abab_descent(self):
        bs = build_block_structure(b"abab", base=2)
        byte, transitions = _descend(bs, 3)
        assert byte == ord("a")
        assert transitions == 2

    def test_woodchuck_every_position(self, wood):
        bs = build_block_structure(wood, base=3)
        for pos in range(1, len(wood) + 1):
            assert access(bs, pos) == wood[pos - 1]

    def test_descent_count_is_level_count(self, wood):
        for base in (2, 3, 4, None):
            bs = build_block_structure(wood, base=base)
            levels = len(bs.levels) - 1
            for pos in range(1, len(wood) + 1):
                assert _descend(bs, pos)[1] == levels

    def test_out_of_range(self):
        bs = build_block_structure(b"abab", base=2)
        for pos in (0, -1, 5):
            with pytest.raises(OutOfRange):
                access(bs, pos)


class TestExtract:
    def test_examples(self, wood):
        bs = build_block_structure(wood, base=3)
        assert extract(bs, 27, 6) == b"chuck-"
        assert extract(bs, 1, 0) == b""
        bs2 = build_block_structure(b"abab", base=2)
        assert extract(bs2, 2, 2) == b"ba"

    def test_out_of_range(self):
        bs = build_block_structure(b"abab", base=2)
        with pytest.raises(OutOfRange):
            extract(bs, 3, 3)
        with pytest.raises(OutOfRange):
            extract(bs, 0, 1)


class TestPruning:
    def test_pruned_and_unpruned_agree(self, corpus):
        for text in corpus[:30]:
            pruned = build_block_structure(text, base=2)
            full = build_block_structure(text, base=2, prune=False)
            for pos in range(1, len(text) + 1):
                assert access(pruned, pos) == access(full, pos)
            # pruning never grows a level
            for lp, lf in zip(pruned.levels, full.levels):
                assert set(lp.entries) <= set(lf.entries)


class TestReport:
    def test_examples(self, wood):
        assert ra_size_report(build_block_structure(b"a")).total_blocks == 1
        assert ra_size_report(build_block_structure(b"abab", base=2)).total_blocks == 5
        rep = ra_size_report(build_block_structure(b"a" * 1024, base=4))
        assert all(c <= 4 for _, _, c in rep.per_level[1:])
        assert rep.pointer_count + sum(
            c for _, blen, c in rep.per_level if blen == 1
        ) == rep.total_blocks
        assert rep.estimated_bits > 0


class TestDefaultBase:
    def test_values(self):
        assert default_base(1) == 2
        assert default_base(2) == 2
        assert default_base(1024) == 9  # round(2 ** sqrt(10))
        assert default_base(70) >= 2


class TestFormat:
    def test_roundtrip(self, wood):
        for text, base in ((wood, 3), (b"a", 2), (b"abab", 2), (b"a" * 100, 4)):
            bs = build_block_structure(text, base=base)
            loaded = load_blocks(dump_blocks(bs))
            assert loaded == bs
            for pos in range(1, len(text) + 1):
                assert access(loaded, pos) == text[pos - 1]

    def test_exact_text(self):
        bs = build_block_structure(b"abab", base=2)
        assert dump_blocks(bs) == (
            "RABLOCK v1 n=4 b=2 levels=3\n"
            "LEVEL 0 len=4 blocks=1\n0 1\n"
            "LEVEL 1 len=2 blocks=2\n0 1\n1 1\n"
            "LEVEL 2 len=1 blocks=2\n0 97\n1 98\n"
        )

    @pytest.mark.parametrize(
        "data",
        [
            "",
            "RABLOCK v2 n=4 b=2 levels=3\n",
            "RABLOCK v1 n=4 b=2 levels=2\nLEVEL 0 len=4 blocks=0\n",
            "RABLOCK v1 n=4 b=2 levels=1\nLEVEL 0 len=3 blocks=0\n",  # wrong len
            "RABLOCK v1 n=4 b=2 levels=1\nLEVEL 0 len=4 blocks=1\n0 9\n",  # bad ptr
            "RABLOCK v1 n=0 b=2 levels=1\nLEVEL 0 len=1 blocks=0\n",
        ],
    )
    def test_rejects_malformed(self, data):
        with pytest.raises((MalformedBlocks, BadBase)):
            load_blocks(data)


@settings(max_examples=40)
@given(
    st.binary(min_size=1, max_size=120),
    st.integers(min_value=2, max_value=6),
)
def test_access_matches_text(text, base):
    bs = build_block_structure(text, base=base)
    for pos in range(1, len(text) + 1):
        assert access(bs, pos) == text[pos - 1]
