#!/usr/bin/env python3
"""Harmonic-superset tuning: intervals from virtual pitches, scores from real ones.

A single sine wave shares a partial with its transposition only at the
unison, so its affinitive tuning has one entry. Extending the sound's
harmonic superset by a few partials generates a full set of just intervals,
while consonance is still measured against the actual (single-partial)
spectrum.
"""

from fractions import Fraction as F

from toneset import (
    FrequencySet,
    affinitive_intervals,
    format_ratio,
    harmonic_superset,
    note_set,
    superset_tuning,
)

single = FrequencySet([262])

print("Superset tuning of a bare 262 Hz sine against itself:\n")
for n in (0, 2, 4):
    table = superset_tuning(single, single, n, n)
    sup = harmonic_superset(single, n)
    shown = ", ".join(format_ratio(e.interval) for e in table.entries)
    print(f"  n = m = {n}: superset has {len(sup)} partials -> "
          f"{len(table.entries)} intervals")
    print(f"      {shown}")
print()
print("With n = m = 4 all ratios p/q with p, q <= 5 appear. Apart from the")
print("unison every entry has zero affinity (the generated partials are not")
print("physically present), so the consonance comes from harmonicity alone.\n")

c4 = note_set("C4_6", 262)
zero = superset_tuning(c4, c4, 0, 0)
print(f"For an already-harmonic sound the n = m = 0 superset adds nothing:")
print(f"  superset intervals == affinitive intervals: "
      f"{ {e.interval for e in zero.entries} == affinitive_intervals(c4, c4) }")
print()

chord = c4 | c4.transpose(F(3, 2))
aff = affinitive_intervals(chord, c4)
sup = {e.interval for e in superset_tuning(chord, c4, 0, 0).entries}
print("For a chord context the superset fills the spectrum's gaps:")
print(f"  affinitive intervals: {len(aff)}")
print(f"  superset intervals:   {len(sup)} (affinitive is a subset: {aff <= sup})")
extra = sorted(sup - aff)[:8]
print(f"  first extra intervals: {', '.join(format_ratio(t) for t in extra)} ...")
