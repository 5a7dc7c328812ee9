"""Interchange format: round-trips, header parsing, and rejection of
malformed or inconsistent files."""

import pytest

from permarray.constructions import BinaryCwCode, PermutationArray, block_cycle_cwpa
from permarray.pafile import (
    PaFormatError,
    dump_cw,
    dump_pa,
    load,
    loads,
    write_cw,
    write_pa,
)
from permarray.perm import Permutation, identity


class TestRoundTrips:
    def test_pa_text_round_trip(self):
        array = PermutationArray(4, [identity(4), Permutation((1, 0, 3, 2))])
        text = dump_pa(array, 4)
        header, back = loads(text)
        assert (header.kind, header.n, header.d, header.w) == ("pa", 4, 4, None)
        assert header.count == 2
        assert back == array

    def test_pa_with_weight_round_trip(self):
        array = block_cycle_cwpa(6, 2)
        header, back = loads(dump_pa(array, 4, w=2))
        assert header.w == 2
        assert back == array

    def test_cw_round_trip(self):
        code = BinaryCwCode(6, 3, ((0, 1, 2), (3, 4, 5)), 6)
        header, back = loads(dump_cw(code))
        assert (header.kind, header.n, header.d, header.w) == ("cw", 6, 6, 3)
        assert back == code

    def test_file_round_trip(self, tmp_path):
        array = block_cycle_cwpa(8, 2)
        path = tmp_path / "array.pa"
        write_pa(array, 4, path, w=2)
        header, back = load(path)
        assert back == array
        assert header.count == 4

    def test_cw_file_round_trip(self, tmp_path):
        code = BinaryCwCode(5, 2, ((0, 1), (2, 3)), 4)
        path = tmp_path / "code.pa"
        write_cw(code, path)
        _, back = load(path)
        assert back == code

    def test_comments_and_blank_lines_ignored(self):
        text = (
            "# produced by hand\n"
            "\n"
            "pa n=3 d=3 w=- count=2\n"
            "# the identity first\n"
            "0,1,2\n"
            "1,2,0\n"
            "\n"
        )
        _, array = loads(text)
        assert len(array) == 2


class TestRejections:
    def test_empty_input(self):
        with pytest.raises(PaFormatError):
            loads("")
        with pytest.raises(PaFormatError):
            loads("# only a comment\n")

    def test_unknown_kind(self):
        with pytest.raises(PaFormatError):
            loads("qa n=3 d=2 w=- count=1\n0,1,2\n")

    def test_missing_header_field(self):
        with pytest.raises(PaFormatError):
            loads("pa n=3 d=2 count=1\n0,1,2\n")

    def test_non_numeric_field(self):
        with pytest.raises(PaFormatError):
            loads("pa n=x d=2 w=- count=1\n0,1,2\n")

    def test_count_mismatch(self):
        with pytest.raises(PaFormatError, match="promises 3 members, found 2"):
            loads("pa n=3 d=2 w=- count=3\n0,1,2\n1,2,0\n")

    def test_non_bijective_body_line(self):
        with pytest.raises(PaFormatError):
            loads("pa n=3 d=2 w=- count=1\n0,0,2\n")

    def test_wrong_length_body_line(self):
        with pytest.raises(PaFormatError):
            loads("pa n=3 d=2 w=- count=1\n0,1,2,3\n")

    def test_duplicate_members(self):
        with pytest.raises(PaFormatError):
            loads("pa n=3 d=2 w=- count=2\n0,1,2\n0,1,2\n")

    def test_cw_weight_mismatch(self):
        with pytest.raises(PaFormatError):
            loads("cw n=5 d=4 w=2 count=1\n0,1,2\n")

    def test_cw_requires_numeric_weight(self):
        with pytest.raises(PaFormatError):
            loads("cw n=5 d=4 w=- count=1\n0,1\n")

    def test_garbage_body(self):
        with pytest.raises(PaFormatError):
            loads("pa n=3 d=2 w=- count=1\na,b,c\n")
