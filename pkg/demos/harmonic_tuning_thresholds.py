#!/usr/bin/env python3
"""Harmonic tuning: rate every rational interval, then filter by threshold.

For single-partial sounds the total consonance of an interval p/q is exactly
1/max(p, q) - a fractal staircase over the rationals. For sounds with a few
partials the same machinery turns a useless two-interval affinitive table
into a playable scale, once the threshold h is chosen well.
"""

from fractions import Fraction as F

from toneset import (
    FrequencySet,
    cents,
    format_ratio,
    harmonic_tuning,
    thomae_modified,
)

single = FrequencySet([262])
table = harmonic_tuning(single, single, 0, F(1, 2), 2, 12)
print("Single partial, denominators up to 12, one octave either way:")
print(f"{'interval':>8}  {'cents':>9}  total      1/max(p,q)")
for entry in table.entries:
    t = entry.interval
    marker = "#" * round(float(entry.score.total) * 30)
    print(f"{format_ratio(t):>8}  {cents(t):>9.2f}  "
          f"{float(entry.score.total):<9.4f}  {format_ratio(thomae_modified(t), True):>5}  {marker}")
print()
print("Every total equals 1/max(p, q): interval complexity IS the consonance")
print("of a bare interval. Simple ratios poke out of a sea of tiny values.\n")

sparse = FrequencySet([262, 524, 1048])
print(f"Now a sparse spectrum {format_ratio(sparse.elements[0])},"
      f" {format_ratio(sparse.elements[1])}, {format_ratio(sparse.elements[2])} Hz"
      " (partials 1, 2, 4):")
for h in (F(0), F(23, 100)):
    table = harmonic_tuning(sparse, sparse, h, F(1, 4), 4, 60)
    print(f"  h = {format_ratio(h, True):>6}: {len(table.entries):>5} intervals", end="")
    if len(table.entries) <= 24:
        shown = ", ".join(format_ratio(e.interval) for e in table.entries)
        print(f"  -> {shown}")
    else:
        print("  (far too many to play)")
print()
print("h = 0 keeps every rational candidate; h = 0.23 leaves the handful of")
print("genuinely consonant ones, octaves and simple ratios included.")
