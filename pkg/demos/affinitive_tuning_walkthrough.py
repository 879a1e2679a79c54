#!/usr/bin/env python3
"""Affinitive tuning: every interval at which two spectra share a partial.

Builds the complete table for a six-partial C4 against itself (23 intervals),
folds it into one octave, and shows the Scala file that falls out.
"""

from fractions import Fraction as F

from toneset import (
    TuningDocument,
    affinitive_tuning,
    canonical_set_expression,
    cents,
    export_scl,
    format_ratio,
    note_set,
    octave_reduce,
)


def bar(value, width=40):
    return "#" * round(float(value) * width)


c4 = note_set("C4_6", 262)
table = affinitive_tuning(c4, c4)

print(f"Affinitive tuning for C4 with 6 partials: {len(table.entries)} intervals\n")
print(f"{'interval':>8}  {'cents':>9}  total consonance")
for entry in table.entries:
    t = entry.interval
    print(f"{format_ratio(t):>8}  {cents(t):>9.2f}  "
          f"{float(entry.score.total):.3f} {bar(entry.score.total)}")

print("\nOnly the unison is perfectly consonant; octaves score 5/8 and the")
print("fifths 4/9. The table is symmetric: t and 1/t always appear together.\n")

reduced = octave_reduce(table, c4, c4)
print(f"Folded into a single octave and rescored: {len(reduced.entries)} intervals")
for entry in reduced.entries:
    score = entry.score
    print(f"  {format_ratio(entry.interval):>4}: affinity {format_ratio(score.affinity, True):>4}, "
          f"total {float(score.total):.3f}")
print("\nNote the 8/5 entry (folded from 4/5): after rescoring its affinity is")
print("zero, because the folded interval no longer shares any partials with")
print("the six-partial context. Octave equivalence changes consonance.\n")

expr = canonical_set_expression(c4)
doc = TuningDocument.from_table(reduced, expr, expr,
                                parameters={"octave_reduced": True})
print("As a Scala scale file:\n")
print(export_scl(doc, name="c4-affinitive"))
