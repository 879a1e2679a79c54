#!/usr/bin/env python3
"""Roughness curves as a cross-check on the rational tuning tables.

Sweeps a six-partial C4 against itself with the Plomp-Levelt/Sethares
roughness model and locates the curve's sharp minima. They land on exactly
the intervals the affinitive table derives by pure arithmetic - two very
different routes to the same scale.
"""

from toneset import (
    DissonanceParams,
    affinitive_intervals,
    cents,
    dissonance_curve,
    note_set,
)

c4 = note_set("C4_6", 262)
points = dissonance_curve(c4, c4, 1.0, 2.1, 4000)
values = [p.dissonance for p in points]
ts = [p.t for p in points]

minima = [
    i
    for i in range(1, len(values) - 1)
    if values[i] <= values[i - 1] and values[i] <= values[i + 1]
]

print("Sharp minima of the roughness curve for C4 (6 partials) vs itself:\n")
print(f"{'minimum at':>12}  {'cents':>9}  nearest rational from the affinitive table")
rational_targets = sorted(t for t in affinitive_intervals(c4, c4) if 1 <= t <= 2.1)
for i in minima:
    t = ts[i]
    nearest = min(rational_targets, key=lambda r: abs(cents(r) - cents(t)))
    gap = cents(t) - cents(nearest)
    print(f"{t:>12.5f}  {cents(t):>9.2f}  {str(nearest):>5}  ({gap:+.2f} cents)")

print()
print("Lowering the resolution parameter chi* stretches the roughness kernel")
print("far past the partial spacing; the coincidence dips disappear:\n")
for chi in (0.24, 0.03, 0.003):
    vals = [
        p.dissonance
        for p in dissonance_curve(c4, c4, 1.0, 2.1, 2000, DissonanceParams(chi_star=chi))
    ]
    count = sum(
        1
        for i in range(1, len(vals) - 1)
        if vals[i] <= vals[i - 1] and vals[i] <= vals[i + 1]
    )
    print(f"  chi* = {chi:<6} -> {count:>3} interior local minima "
          f"(curve spans {min(vals):.2f}..{max(vals):.2f})")

print()
print("The rational tables need none of this psychoacoustics; the curve is an")
print("independent, float-valued witness that the arithmetic picks the right")
print("intervals.")
