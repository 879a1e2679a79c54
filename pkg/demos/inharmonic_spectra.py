#!/usr/bin/env python3
"""Inharmonic spectra: why exactness matters and what tuning survives.

A metallic, bell-like spectrum has partials at awkward ratios. Its tuning
still exists - the pairwise-ratio table is as exact as ever - but the
harmonicity contribution collapses to near-nothing, and rounding a partial
by one decimal digit changes harmonicity twentyfold. Floating point would
silently destroy all of this.
"""

from fractions import Fraction as F

from toneset import (
    FrequencySet,
    affinitive_tuning,
    format_ratio,
    format_set,
    gcd_set,
    harmonicity,
)

precise = FrequencySet(262 * F(r) for r in ("1", "2.76", "5.41", "8.94", "13.35", "18.65"))
rounded = FrequencySet(262 * F(r) for r in ("1", "2.8", "5.4", "8.8", "13.4", "18.6"))

print("An inharmonic six-partial spectrum (262 Hz times 1, 2.76, 5.41, ...):")
print(f"  {format_set(precise)}")
print(f"  fundamental: {gcd_set(precise)} Hz = {float(gcd_set(precise)):.2f} Hz "
      "(far below hearing)")
print()

table = affinitive_tuning(precise, precise)
print(f"Its affinitive tuning has {len(table.entries)} intervals. A sample:")
for entry in table.entries[14:20]:
    s = entry.score
    print(f"  {format_ratio(entry.interval):>9}: affinity {format_ratio(s.affinity, True):>4},"
          f" harmonicity {float(s.harmonicity):.2e}")
print()
print("Affinity carries all the weight; harmonicity is orders of magnitude")
print("smaller because the common fundamental is absurdly low.\n")

chi_precise = harmonicity(precise)
chi_rounded = harmonicity(rounded)
print("Sensitivity to partial precision:")
print(f"  self-harmonicity at full precision : {chi_precise} ~ {float(chi_precise):.2e}")
print(f"  after dropping one decimal digit   : {chi_rounded} ~ {float(chi_rounded):.2e}")
print(f"  ratio: {chi_rounded / chi_precise} ~ "
      f"{float(chi_rounded / chi_precise):.1f}x")
print()
print("One decimal digit of rounding moves harmonicity by a factor of twenty.")
print("This is why the whole pipeline works on exact rationals and refuses")
print("binary floats at the door.")
