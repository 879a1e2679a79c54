"""Frequency sets over exact rational arithmetic.

A sound is modelled as a finite set of partial frequencies in Hz. All
frequencies and intervals are ``fractions.Fraction`` values, so set algebra,
common fundamentals and wave periods come out exact regardless of how the
sets were built. Floating point appears only at the display edge (``cents``)
and in the roughness model (:mod:`toneset.dissonance`); it never feeds back
into the rational layer. Tiny deviations from exact ratios collapse the
common fundamental, so binary floats are rejected rather than silently
converted: pass decimals as strings ("2.76") to keep them exact.

Everything here is an immutable value; all operations are pure functions and
safe for unrestricted concurrent use.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Union

__all__ = [
    "Ratio",
    "RatioLike",
    "ParseError",
    "parse_ratio",
    "format_ratio",
    "to_ratio",
    "rational_gcd",
    "rational_lcm",
    "cents",
    "FrequencySet",
    "gcd_set",
    "total_period",
    "transpose",
    "harmonic_set",
    "format_set",
]

# Frequencies, intervals and consonance scores all share one scalar type.
Ratio = Fraction
RatioLike = Union[Fraction, int, str]


class ParseError(ValueError):
    """Raised when rational, note or set notation cannot be parsed."""


def parse_ratio(text: str) -> Fraction:
    """Parse "p/q" or decimal text ("3/2", "440", "2.76") to an exact ratio.

    Decimal strings convert exactly (2.76 becomes 69/25), never through a
    binary float.
    """
    token = text.strip()
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(
            f"cannot parse ratio {token!r} (expected 'p/q' or a decimal)"
        ) from None


def format_ratio(value: Fraction, always_slash: bool = False) -> str:
    """Render a ratio as "p/q", or bare "p" for integers unless forced."""
    if always_slash or value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(value.numerator)


def to_ratio(value: RatioLike) -> Fraction:
    """Coerce ints, strings and Fractions to an exact ratio.

    Floats are refused: their binary rounding is exactly the kind of
    imprecision that destroys common fundamentals.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_ratio(value)
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: pass it as a string (e.g. '2.76') to stay exact"
        )
    raise TypeError(f"cannot interpret {value!r} as a ratio")


def rational_gcd(a: Fraction, b: Fraction) -> Fraction:
    """Greatest common divisor of two rationals.

    The unique largest rational dividing both a and b a whole number of
    times: gcd of the numerators over lcm of the denominators.
    """
    return Fraction(
        math.gcd(a.numerator, b.numerator),
        math.lcm(a.denominator, b.denominator),
    )


def rational_lcm(a: Fraction, b: Fraction) -> Fraction:
    """Least common multiple of two rationals (dual of :func:`rational_gcd`)."""
    return Fraction(
        math.lcm(a.numerator, b.numerator),
        math.gcd(a.denominator, b.denominator),
    )


def cents(interval: Union[RatioLike, float]) -> float:
    """Interval size in cents, 1200 per octave. Display-only: never exact."""
    if isinstance(interval, float):
        if interval <= 0:
            raise ValueError("interval must be positive")
        return 1200.0 * math.log2(interval)
    value = to_ratio(interval)
    if value <= 0:
        raise ValueError("interval must be positive")
    # log of numerator and denominator separately survives huge ratios that
    # would overflow or underflow a single float conversion
    return 1200.0 * (math.log2(value.numerator) - math.log2(value.denominator))


class FrequencySet:
    """Finite set of positive rational frequencies in Hz.

    Stored sorted ascending with duplicates removed. Supports the small
    algebra tuning work needs: union, intersection, transposition by a
    rational interval (``t * fs`` or ``fs.transpose(t)``), the common
    fundamental (gcd of the elements) and the period of the summed wave.
    """

    __slots__ = ("_freqs", "_element_set", "_fundamental")

    def __init__(self, frequencies: Iterable[RatioLike] = ()):
        freqs = sorted({to_ratio(f) for f in frequencies})
        if freqs and freqs[0] <= 0:
            raise ValueError(f"non-positive frequency {freqs[0]}")
        self._freqs: tuple[Fraction, ...] = tuple(freqs)
        # lazy caches; safe because the value is immutable
        self._element_set: frozenset[Fraction] | None = None
        self._fundamental: Fraction | None = None

    @classmethod
    def _from_sorted(cls, freqs: tuple[Fraction, ...]) -> "FrequencySet":
        # internal: caller guarantees sorted, deduplicated, positive elements
        obj = cls.__new__(cls)
        obj._freqs = freqs
        obj._element_set = None
        obj._fundamental = None
        return obj

    @classmethod
    def harmonic(cls, fundamental: RatioLike, count: int) -> "FrequencySet":
        """The first ``count`` integer multiples of ``fundamental``."""
        base = to_ratio(fundamental)
        if base <= 0:
            raise ValueError("fundamental must be positive")
        if count < 1:
            raise ValueError("partial count must be at least 1")
        return cls._from_sorted(tuple(base * n for n in range(1, count + 1)))

    @property
    def elements(self) -> tuple[Fraction, ...]:
        return self._freqs

    def element_set(self) -> frozenset[Fraction]:
        if self._element_set is None:
            self._element_set = frozenset(self._freqs)
        return self._element_set

    def __len__(self) -> int:
        return len(self._freqs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._freqs)

    def __bool__(self) -> bool:
        return bool(self._freqs)

    def __contains__(self, value: RatioLike) -> bool:
        return to_ratio(value) in self.element_set()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FrequencySet):
            return NotImplemented
        return self._freqs == other._freqs

    def __hash__(self) -> int:
        return hash(self._freqs)

    def __repr__(self) -> str:
        return f"FrequencySet({format_set(self)})"

    def __or__(self, other: "FrequencySet") -> "FrequencySet":
        return FrequencySet(self._freqs + other._freqs)

    def __and__(self, other: "FrequencySet") -> "FrequencySet":
        return FrequencySet(self.element_set() & other.element_set())

    def union(self, other: "FrequencySet") -> "FrequencySet":
        return self | other

    def intersection(self, other: "FrequencySet") -> "FrequencySet":
        return self & other

    def transpose(self, interval: RatioLike) -> "FrequencySet":
        """Multiply every frequency by a positive rational interval."""
        t = to_ratio(interval)
        if t <= 0:
            raise ValueError("transposition interval must be positive")
        # multiplying distinct sorted values by t > 0 keeps them distinct
        # and sorted, so the canonical form survives without re-sorting
        return FrequencySet._from_sorted(tuple(t * f for f in self._freqs))

    def __mul__(self, interval: RatioLike) -> "FrequencySet":
        return self.transpose(interval)

    __rmul__ = __mul__

    def fundamental(self) -> Fraction:
        """Greatest common divisor of the elements.

        Every frequency in the set is an integer multiple of this value; it
        need not itself belong to the set.
        """
        if not self._freqs:
            raise ValueError("empty frequency set")
        if self._fundamental is None:
            acc = self._freqs[0]
            for f in self._freqs[1:]:
                acc = rational_gcd(acc, f)
            self._fundamental = acc
        return self._fundamental

    def total_period(self) -> Fraction:
        """Period in seconds of the summed wave: 1 / fundamental.

        Equals the lcm of the individual partial periods.
        """
        return 1 / self.fundamental()


def gcd_set(freq_set: FrequencySet) -> Fraction:
    """Common fundamental of a frequency set (gcd of its elements)."""
    return freq_set.fundamental()


def total_period(freq_set: FrequencySet) -> Fraction:
    """Period in seconds of the set's summed wave."""
    return freq_set.total_period()


def transpose(freq_set: FrequencySet, interval: RatioLike) -> FrequencySet:
    """Transpose a set by a positive rational interval."""
    return freq_set.transpose(interval)


def harmonic_set(fundamental: RatioLike, count: int) -> FrequencySet:
    """Harmonic set: integer multiples 1..count of a fundamental."""
    return FrequencySet.harmonic(fundamental, count)


def format_set(freq_set: FrequencySet) -> str:
    """Compact display form, e.g. ``{262, 524, 786}``."""
    return "{" + ", ".join(format_ratio(f) for f in freq_set) + "}"
