import json
from fractions import Fraction as F

import pytest

from toneset import (
    FrequencySet,
    TuningDocument,
    affinitive_tuning,
    canonical_set_expression,
    export_scl,
    harmonic_set,
    octave_reduce,
    parse_ratio,
)

C4 = harmonic_set(262, 6)


def c4_document(annotate=False):
    table = affinitive_tuning(C4, C4)
    expr = canonical_set_expression(C4)
    return TuningDocument.from_table(
        table, expr, expr, annotate_root=F(262) if annotate else None
    )


def reduced_document():
    table = octave_reduce(affinitive_tuning(C4, C4), C4, C4)
    expr = canonical_set_expression(C4)
    return TuningDocument.from_table(table, expr, expr, parameters={"octave_reduced": True})


class TestJsonRoundTrip:
    def test_export_import_export_is_byte_identical(self):
        first = c4_document(annotate=True).to_json()
        second = TuningDocument.from_json(first).to_json()
        assert first == second

    def test_exact_fields_parse_back_identically(self):
        doc = c4_document()
        data = json.loads(doc.to_json())
        for raw, entry in zip(data["entries"], doc.entries):
            assert parse_ratio(raw["interval"]) == entry.interval
            assert parse_ratio(raw["affinity"]) == entry.affinity
            assert parse_ratio(raw["harmonicity"]) == entry.harmonicity
            assert parse_ratio(raw["total"]) == entry.total

    def test_inconsistent_total_rejected(self):
        data = json.loads(c4_document().to_json())
        data["entries"][0]["total"] = "1/7"
        with pytest.raises(ValueError, match="mean"):
            TuningDocument.from_json(json.dumps(data))

    def test_unsorted_entries_rejected(self):
        data = json.loads(c4_document().to_json())
        data["entries"].reverse()
        with pytest.raises(ValueError, match="strictly increasing"):
            TuningDocument.from_json(json.dumps(data))

    def test_missing_sections_rejected(self):
        with pytest.raises(ValueError):
            TuningDocument.from_json("{}")
        with pytest.raises(ValueError):
            TuningDocument.from_json("not json")

    def test_metadata_contents(self):
        doc = c4_document()
        assert doc.metadata["generator"] == "affinitive"
        assert doc.metadata["tool"] == "toneset"
        assert doc.metadata["context"] == canonical_set_expression(C4)

    def test_cents_rendered_to_four_decimals(self):
        data = json.loads(c4_document().to_json())
        fifth = next(e for e in data["entries"] if e["interval"] == "3/2")
        assert fifth["cents"] == 701.955

    def test_tiny_harmonicity_keeps_precision(self):
        inharmonic = FrequencySet(
            262 * F(r) for r in ("1", "2.76", "5.41", "8.94", "13.35", "18.65")
        )
        table = affinitive_tuning(inharmonic, inharmonic)
        expr = canonical_set_expression(inharmonic)
        doc = TuningDocument.from_table(table, expr, expr)
        data = json.loads(doc.to_json())
        tiny = [e["harmonicity_float"] for e in data["entries"] if e["harmonicity_float"] != 0]
        assert tiny and all(0 < v < 0.0005 or v == round(v, 3) for v in tiny)
        # scientific notation survives in the serialised text
        assert "e-" in doc.to_json()

    def test_note_annotation(self):
        doc = c4_document(annotate=True)
        notes = {str(e.interval): e.note for e in doc.entries}
        assert notes["1"] == "C4"
        assert notes["3/2"] == "G4"
        assert notes["1/6"] == "F1"

    def test_note_annotation_outside_span_is_omitted(self):
        high = harmonic_set(2000, 3)
        table = affinitive_tuning(high, high)
        expr = canonical_set_expression(high)
        doc = TuningDocument.from_table(table, expr, expr, annotate_root=F(2000))
        notes = {str(e.interval): e.note for e in doc.entries}
        assert notes["3"] is None  # 6000 Hz is above the naming span
        assert notes["1"] == "B6"


class TestCsv:
    def test_header_and_line_endings(self):
        text = c4_document().to_csv()
        lines = text.split("\n")
        assert lines[0] == "interval_ratio,cents,affinity,harmonicity,total"
        assert "\r" not in text
        assert len(lines) == 23 + 2  # header + rows + trailing newline

    def test_fifth_row(self):
        rows = c4_document().to_csv().splitlines()
        fifth = next(r for r in rows if r.startswith("3/2,"))
        assert fifth.split(",")[1] == "701.9550"


class TestExportScl:
    def test_reduced_c4_table(self):
        text = export_scl(reduced_document(), name="c4-affinitive")
        assert text == (
            "! c4-affinitive.scl\n"
            "affinitive tuning; F=262,524,786,1048,1310,1572; F'=262,524,786,1048,1310,1572\n"
            "7\n"
            "6/5\n"
            "5/4\n"
            "4/3\n"
            "3/2\n"
            "8/5\n"
            "5/3\n"
            "2/1\n"
        )

    def test_rational_lines_always_carry_denominator(self):
        text = export_scl(reduced_document())
        pitch_lines = text.splitlines()[3:]
        assert all("/" in line for line in pitch_lines)
        assert pitch_lines[-1] == "2/1"

    def test_cents_lines_flag(self):
        text = export_scl(reduced_document(), cents_lines=True)
        assert text.splitlines()[-1] == "1200.0000"

    def test_unreduced_document_rejected(self):
        with pytest.raises(ValueError, match="reduce-octave"):
            export_scl(c4_document())

    def test_unison_only_document_rejected(self):
        single = FrequencySet([262])
        table = affinitive_tuning(single, single)
        expr = canonical_set_expression(single)
        doc = TuningDocument.from_table(table, expr, expr)
        with pytest.raises(ValueError, match="besides unison"):
            export_scl(doc)
