"""Roughness-based dissonance curves for comparison against rational tunings.

Pairwise roughness follows the Plomp & Levelt (1965) critical-band data in
the parameterised form popularised by Sethares ("Tuning, Timbre, Spectrum,
Scale"): two exponentials whose horizontal scale tracks the critical band of
the lower partial. ``chi_star`` is the interval fraction of maximum
roughness; shrinking it models a coarser auditory resolution and flattens
the curve's sharp minima.

Those sharp minima appear where partials of the two sounds coincide, i.e.
exactly at the nonzero-affinity intervals, which is what this module is here
to check. Amplitudes are uniform (spectra are bare frequency sets), and the
contract is qualitative: minima locations, not bit-exact curve values.

This is the one floating-point corner of the package; nothing here feeds
back into the rational layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .core import FrequencySet

__all__ = [
    "DissonanceParams",
    "DEFAULT_PARAMS",
    "CurvePoint",
    "pair_roughness",
    "spectrum_roughness",
    "dissonance_curve",
]


@dataclass(frozen=True)
class DissonanceParams:
    """Constants of the pairwise roughness kernel.

    roughness(f1, f2) = a^2 * (c1 * exp(b1*s*d) + c2 * exp(b2*s*d)) with
    d = |f2 - f1| and s = chi_star / (s1 * min(f1, f2) + s2).
    """

    chi_star: float = 0.24  # interval fraction of maximum roughness
    curve_slope: float = 0.0207  # s1: critical-band growth per Hz
    curve_offset: float = 18.96  # s2: critical-band floor in Hz
    decay_fast: float = -3.51  # b1
    decay_slow: float = -5.75  # b2
    weight_fast: float = 5.0  # c1
    weight_slow: float = -5.0  # c2
    amplitude: float = 1.0  # uniform amplitude convention

    def __post_init__(self) -> None:
        if self.chi_star <= 0:
            raise ValueError("chi_star must be positive")


DEFAULT_PARAMS = DissonanceParams()


@dataclass(frozen=True)
class CurvePoint:
    t: float
    dissonance: float

    def __post_init__(self) -> None:
        if self.dissonance < 0:
            raise ValueError("dissonance cannot be negative")


def pair_roughness(
    f1: float, f2: float, params: DissonanceParams = DEFAULT_PARAMS
) -> float:
    """Roughness of two sine partials: 0 at coincidence, peaked nearby.

    The interior maximum sits at the chi_star-governed fraction of the lower
    frequency's critical band and the value tails off to zero as the
    frequencies separate.
    """
    if f1 <= 0 or f2 <= 0:
        raise ValueError("frequencies must be positive")
    spread = params.chi_star / (params.curve_slope * min(f1, f2) + params.curve_offset)
    x = spread * abs(f2 - f1)
    gain = params.amplitude * params.amplitude
    return gain * (
        params.weight_fast * math.exp(params.decay_fast * x)
        + params.weight_slow * math.exp(params.decay_slow * x)
    )


def _roughness_matrix(spectra: np.ndarray, params: DissonanceParams) -> np.ndarray:
    # spectra: (..., n) partial frequencies; returns summed roughness over
    # all unordered pairs along the last axis.
    fi = spectra[..., :, None]
    fj = spectra[..., None, :]
    fmin = np.minimum(fi, fj)
    diff = np.abs(fj - fi)
    x = params.chi_star / (params.curve_slope * fmin + params.curve_offset) * diff
    pair = params.weight_fast * np.exp(params.decay_fast * x)
    pair += params.weight_slow * np.exp(params.decay_slow * x)
    pair *= params.amplitude * params.amplitude
    n = spectra.shape[-1]
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    return pair[..., upper].sum(axis=-1)


def _as_float_array(freqs: Union[FrequencySet, Iterable[float]]) -> np.ndarray:
    arr = np.asarray([float(f) for f in freqs], dtype=float)
    if arr.size == 0:
        raise ValueError("empty frequency set")
    if np.any(arr <= 0):
        raise ValueError("frequencies must be positive")
    return arr


def spectrum_roughness(
    freqs: Union[FrequencySet, Iterable[float]],
    params: DissonanceParams = DEFAULT_PARAMS,
) -> float:
    """Total roughness of one spectrum: sum over all unordered partial pairs."""
    return float(_roughness_matrix(_as_float_array(freqs), params))


def dissonance_curve(
    contextual: Union[FrequencySet, Iterable[float]],
    complementary: Union[FrequencySet, Iterable[float]],
    t_lo: float = 1.0,
    t_hi: float = 2.1,
    steps: int = 2000,
    params: DissonanceParams = DEFAULT_PARAMS,
) -> list[CurvePoint]:
    """Sweep the complementary set across [t_lo, t_hi] and sum roughness.

    Samples are spaced geometrically (uniform in cents). At each sampled t
    the roughness of the combined spectrum F u tF' is summed over all
    partial pairs, within-set pairs included.
    """
    if not 0 < t_lo < t_hi:
        raise ValueError(f"invalid sweep range [{t_lo}, {t_hi}]")
    if steps < 2:
        raise ValueError("steps must be at least 2")
    base = _as_float_array(contextual)
    moving = _as_float_array(complementary)
    ts = np.geomspace(t_lo, t_hi, steps)
    spectra = np.concatenate(
        [np.broadcast_to(base, (steps, base.size)), ts[:, None] * moving], axis=1
    )
    totals = _roughness_matrix(spectra, params)
    return [CurvePoint(float(t), float(d)) for t, d in zip(ts, totals)]
