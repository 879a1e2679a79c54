"""Tuning generation from consonance measures.

Three generators, each producing a table of (interval, consonance) pairs for
a contextual set F and a complementary set F' that is transposed against it:

* affinitive - every pairwise frequency ratio f/f'. These are exactly the
  transpositions with nonzero affinity, so the table is finite and cheap.
* harmonic - all reduced rationals within enumeration bounds whose
  union-harmonicity clears a threshold h. Rich for sparse spectra but needs
  explicit bounds (defaults: +-3 octaves, denominators up to 60).
* superset - affinitive intervals of the harmonic supersets of F and F',
  scored on the original sets. Contains the affinitive table and never
  misses a high-harmonicity interval.

Octave reduction folds intervals into [1, 2) and rescores them from scratch;
consonance is not preserved by octave transposition (4/5 folds to 8/5, which
shares no partials with a six-partial context), so carried-over scores would
be wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .consonance import ConsonanceScore, harmonicity, harmonic_superset, total_consonance
from .core import FrequencySet, RatioLike, format_ratio, format_set, to_ratio

__all__ = [
    "TuningEntry",
    "TuningTable",
    "affinitive_intervals",
    "affinitive_tuning",
    "enumerate_rationals",
    "harmonic_intervals",
    "harmonic_tuning",
    "superset_tuning",
    "fold_to_octave",
    "octave_reduce",
]


@dataclass(frozen=True)
class TuningEntry:
    interval: Fraction
    score: ConsonanceScore


@dataclass(frozen=True)
class TuningTable:
    """Entries sorted by interval, plus a record of how they were generated."""

    entries: tuple[TuningEntry, ...]
    generator: str
    context_descriptor: str

    def __post_init__(self) -> None:
        intervals = [e.interval for e in self.entries]
        if any(b <= a for a, b in zip(intervals, intervals[1:])):
            raise ValueError("tuning entries must be strictly increasing by interval")

    @property
    def intervals(self) -> tuple[Fraction, ...]:
        return tuple(e.interval for e in self.entries)


def _score(contextual: FrequencySet, complementary: FrequencySet, t: Fraction) -> ConsonanceScore:
    return total_consonance(contextual, complementary.transpose(t))


def _table(
    intervals,
    contextual: FrequencySet,
    complementary: FrequencySet,
    generator: str,
    descriptor: str,
) -> TuningTable:
    entries = tuple(
        TuningEntry(t, _score(contextual, complementary, t)) for t in sorted(intervals)
    )
    return TuningTable(entries, generator, descriptor)


def affinitive_intervals(
    contextual: FrequencySet, complementary: FrequencySet
) -> frozenset[Fraction]:
    """All pairwise ratios f/f' - the transpositions with nonzero affinity."""
    if not contextual or not complementary:
        raise ValueError("empty frequency set")
    return frozenset(f / g for f in contextual for g in complementary)


def affinitive_tuning(
    contextual: FrequencySet, complementary: FrequencySet
) -> TuningTable:
    """One scored entry per affinitive interval."""
    descriptor = f"F={format_set(contextual)}; F'={format_set(complementary)}"
    return _table(
        affinitive_intervals(contextual, complementary),
        contextual,
        complementary,
        "affinitive",
        descriptor,
    )


def enumerate_rationals(lo: RatioLike, hi: RatioLike, max_den: int) -> list[Fraction]:
    """All reduced fractions p/q with q <= max_den and lo <= p/q <= hi, ascending.

    Walks the Stern-Brocot tree iteratively, pruning subtrees outside the
    range; every rational appears exactly once and already in lowest terms.
    """
    low, high = to_ratio(lo), to_ratio(hi)
    if not 0 < low < high:
        raise ValueError(f"invalid range [{format_ratio(low)}, {format_ratio(high)}]")
    if max_den < 1:
        raise ValueError("max_den must be at least 1")
    found: list[Fraction] = []
    stack = [((0, 1), (1, 0))]
    while stack:
        (ln, ld), (rn, rd) = stack.pop()
        num, den = ln + rn, ld + rd
        if den > max_den:  # denominators only grow deeper in the tree
            continue
        mediant = Fraction(num, den)
        if mediant < low:
            stack.append(((num, den), (rn, rd)))
        elif mediant > high:
            stack.append(((ln, ld), (num, den)))
        else:
            found.append(mediant)
            stack.append(((ln, ld), (num, den)))
            stack.append(((num, den), (rn, rd)))
    found.sort()
    return found


def harmonic_intervals(
    contextual: FrequencySet,
    complementary: FrequencySet,
    h: RatioLike,
    lo: RatioLike = Fraction(1, 8),
    hi: RatioLike = Fraction(8),
    max_den: int = 60,
) -> frozenset[Fraction]:
    """Candidate intervals whose union-harmonicity strictly exceeds h."""
    threshold = to_ratio(h)
    if not 0 <= threshold < 1:
        raise ValueError("harmonicity threshold h must lie in [0, 1)")
    if not contextual or not complementary:
        raise ValueError("empty frequency set")
    return frozenset(
        t
        for t in enumerate_rationals(lo, hi, max_den)
        if harmonicity(contextual, complementary.transpose(t)) > threshold
    )


def harmonic_tuning(
    contextual: FrequencySet,
    complementary: FrequencySet,
    h: RatioLike,
    lo: RatioLike = Fraction(1, 8),
    hi: RatioLike = Fraction(8),
    max_den: int = 60,
) -> TuningTable:
    """Scored table over the harmonicity-thresholded interval set."""
    descriptor = (
        f"F={format_set(contextual)}; F'={format_set(complementary)}; "
        f"h={format_ratio(to_ratio(h))}; lo={format_ratio(to_ratio(lo))}; "
        f"hi={format_ratio(to_ratio(hi))}; max_den={max_den}"
    )
    return _table(
        harmonic_intervals(contextual, complementary, h, lo, hi, max_den),
        contextual,
        complementary,
        "harmonic",
        descriptor,
    )


def superset_tuning(
    contextual: FrequencySet,
    complementary: FrequencySet,
    n: int = 0,
    m: int = 0,
) -> TuningTable:
    """Affinitive intervals of the harmonic supersets, scored on the originals.

    The supersets (extended by n and m partials) only generate candidate
    intervals; consonance is measured against the real spectra, so entries
    with zero affinity are normal and kept.
    """
    if not contextual or not complementary:
        raise ValueError("empty frequency set")
    intervals = affinitive_intervals(
        harmonic_superset(contextual, n), harmonic_superset(complementary, m)
    )
    descriptor = (
        f"F={format_set(contextual)}; F'={format_set(complementary)}; n={n}; m={m}"
    )
    return _table(intervals, contextual, complementary, "superset", descriptor)


def fold_to_octave(interval: RatioLike) -> Fraction:
    """Transpose an interval by octaves into [1, 2)."""
    t = to_ratio(interval)
    if t <= 0:
        raise ValueError("interval must be positive")
    while t < 1:
        t *= 2
    while t >= 2:
        t /= 2
    return t


def octave_reduce(
    table: TuningTable,
    contextual: FrequencySet,
    complementary: FrequencySet,
) -> TuningTable:
    """Fold every interval into [1, 2), deduplicate, and rescore.

    Scores are recomputed against the source sets rather than carried over:
    an interval and its octave transposition generally have different
    consonance.
    """
    folded = {fold_to_octave(e.interval) for e in table.entries}
    return _table(
        folded,
        contextual,
        complementary,
        table.generator,
        table.context_descriptor + "; octave-reduced",
    )
