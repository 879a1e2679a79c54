#!/usr/bin/env python3
"""Tour of the exact rational core: frequency sets, fundamentals, note names.

Everything below is computed with arbitrary-precision rationals; no value is
ever a binary float, so gcds and periods come out exact.
"""

from fractions import Fraction as F

from toneset import (
    FrequencySet,
    affinity,
    cents,
    format_ratio,
    format_set,
    gcd_set,
    harmonic_set,
    harmonic_superset,
    harmonicity,
    note_name,
    note_set,
    total_consonance,
    total_period,
)

print("A harmonic sound is integer multiples of a fundamental:")
a2 = harmonic_set(110, 4)
print(f"  110 Hz with 4 partials -> {format_set(a2)}")
print(f"  fundamental (gcd)      -> {gcd_set(a2)} Hz")
print(f"  period of the wave     -> {total_period(a2)} s "
      f"(~{float(total_period(a2)) * 1000:.1f} ms)")
print(f"  named                  -> {note_name(gcd_set(a2))}")
print()

print("A sound can have a phantom fundamental it does not contain:")
pair = FrequencySet([440, 550])
print(f"  {format_set(pair)} -> gcd {gcd_set(pair)} Hz "
      f"({'in' if gcd_set(pair) in pair else 'NOT in'} the set)")
print(f"  its minimal harmonic superset: {format_set(harmonic_superset(pair))}")
print()

print("Notes are windows of +-50 cents around the 12-tet grid:")
for freq in (F(110), F(550), F("554.37")):
    print(f"  {format_ratio(freq):>7} Hz -> {note_name(freq)}")
print()

print("Affinity counts shared partials; harmonicity measures how close the")
print("combined spectrum is to a single virtual pitch:")
c4 = note_set("C4_6", 262)
for label, t in (("unison", F(1)), ("octave", F(2)), ("fifth", F(3, 2)),
                 ("major third", F(5, 4))):
    other = c4.transpose(t)
    score = total_consonance(c4, other)
    print(f"  C4 vs {format_ratio(t):>4} ({label:<11}) "
          f"affinity={format_ratio(score.affinity, True):>4}  "
          f"harmonicity={format_ratio(score.harmonicity, True):>5}  "
          f"total={format_ratio(score.total, True):>5} "
          f"({float(score.total):.3f})  [{cents(t):8.3f} cents]")
print()

print("Chords are unions; consonance applies to them unchanged:")
triad = c4 | c4.transpose(F(5, 4)) | c4.transpose(F(3, 2))
print(f"  just major triad on C4: {len(triad)} distinct partials")
print(f"  self-harmonicity of the triad: {harmonicity(triad)} "
      f"(~{float(harmonicity(triad)):.3f})")
print(f"  affinity of triad with its fifth: "
      f"{affinity(triad, c4.transpose(F(3, 2)))}")
