from fractions import Fraction as F

import pytest

from toneset import (
    FrequencySet,
    ParseError,
    canonical_set_expression,
    harmonic_set,
    parse_set_expression,
)


class TestParseSetExpression:
    def test_harmonic_shorthand(self):
        assert parse_set_expression("262*N6") == harmonic_set(262, 6)

    def test_harmonic_shorthand_with_underscore(self):
        assert parse_set_expression("262*N_6") == harmonic_set(262, 6)

    def test_rational_fundamental_shorthand(self):
        assert parse_set_expression("3/2*N2") == FrequencySet([F(3, 2), F(3)])

    def test_explicit_list(self):
        assert parse_set_expression("262,524,786") == FrequencySet([262, 524, 786])

    def test_decimal_list_stays_exact(self):
        fs = parse_set_expression("262,723.12")
        assert fs.elements == (F(262), F("723.12"))

    def test_note_with_reference(self):
        assert parse_set_expression("C4_6@262") == harmonic_set(262, 6)

    def test_note_with_grid_default(self):
        assert parse_set_expression("A4_5") == harmonic_set(440, 5)

    def test_union(self):
        got = parse_set_expression("C4_6@262+G4_6@393")
        assert got == harmonic_set(262, 6) | harmonic_set(393, 6)

    def test_union_dedupes(self):
        assert parse_set_expression("262*N2+262,524") == harmonic_set(262, 2)

    @pytest.mark.parametrize("bad", ["", "garbage", "262*N0", "262;524", "C4_6@x"])
    def test_rejects_bad_tokens(self, bad):
        with pytest.raises(ParseError):
            parse_set_expression(bad)

    def test_error_names_offending_token(self):
        with pytest.raises(ParseError, match="wibble"):
            parse_set_expression("262,wibble")


class TestCanonicalExpression:
    def test_round_trips(self):
        for expr in ("262*N6", "C4_6@262+G4_6@393", "1/2,3/4,440"):
            fs = parse_set_expression(expr)
            assert parse_set_expression(canonical_set_expression(fs)) == fs

    def test_plain_comma_list(self):
        fs = FrequencySet([F(3, 2), 2])
        assert canonical_set_expression(fs) == "3/2,2"
