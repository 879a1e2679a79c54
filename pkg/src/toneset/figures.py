"""Reference dataset emission for the documented tuning scenarios.

Each figure id maps to one or more CSV blocks (a multi-panel scenario emits
one block per panel, and curve overlays get a sidecar block). CSVs carry
exact interval ratios plus float columns sufficient to re-plot the scenario;
plotting itself is out of scope.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Callable, Mapping, Optional

from .consonance import harmonicity, thomae_classical, total_consonance
from .core import FrequencySet, cents, format_ratio, harmonic_set
from .dissonance import DissonanceParams, dissonance_curve
from .tuning import (
    TuningTable,
    affinitive_tuning,
    enumerate_rationals,
    harmonic_tuning,
    octave_reduce,
    superset_tuning,
)

__all__ = ["emit_figure_data", "supported_figures"]

C4_FUNDAMENTAL = Fraction(262)
FIFTH = Fraction(3, 2)
MAJOR_THIRD = Fraction(5, 4)
HARMONIC_SEVENTH = Fraction(7, 4)

# Highly inharmonic six-partial spectrum, and the same spectrum with one
# fewer decimal digit of partial precision.
INHARMONIC_RATIOS = tuple(Fraction(r) for r in ("1", "2.76", "5.41", "8.94", "13.35", "18.65"))
INHARMONIC_ROUNDED_RATIOS = tuple(Fraction(r) for r in ("1", "2.8", "5.4", "8.8", "13.4", "18.6"))


def _c4(partials: int = 6) -> FrequencySet:
    return harmonic_set(C4_FUNDAMENTAL, partials)


def _inharmonic(rounded: bool = False) -> FrequencySet:
    ratios = INHARMONIC_ROUNDED_RATIOS if rounded else INHARMONIC_RATIOS
    return FrequencySet(C4_FUNDAMENTAL * r for r in ratios)


def _csv(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _table_csv(table: TuningTable) -> str:
    rows = [
        [
            format_ratio(e.interval, always_slash=True),
            f"{cents(e.interval):.4f}",
            repr(float(e.score.affinity)),
            repr(float(e.score.harmonicity)),
            repr(float(e.score.total)),
        ]
        for e in table.entries
    ]
    return _csv(["interval_ratio", "cents", "affinity", "harmonicity", "total"], rows)


def _distribution_csv(
    contextual: FrequencySet,
    complementary: FrequencySet,
    lo: Fraction,
    hi: Fraction,
    max_den: int,
) -> str:
    rows = []
    for t in enumerate_rationals(lo, hi, max_den):
        score = total_consonance(contextual, complementary.transpose(t))
        rows.append(
            [
                format_ratio(t, always_slash=True),
                f"{cents(t):.4f}",
                repr(float(score.affinity)),
                repr(float(score.harmonicity)),
                repr(float(score.total)),
            ]
        )
    return _csv(["interval_ratio", "cents", "affinity", "harmonicity", "total"], rows)


def _curve_csv(
    contextual: FrequencySet,
    complementary: FrequencySet,
    t_lo: float,
    t_hi: float,
    steps: int,
    params: DissonanceParams,
) -> str:
    rows = [
        [repr(p.t), f"{cents(p.t):.4f}", repr(p.dissonance)]
        for p in dissonance_curve(contextual, complementary, t_lo, t_hi, steps, params)
    ]
    return _csv(["t", "cents", "dissonance"], rows)


Params = Mapping[str, object]


def _steps(params: Params) -> int:
    return int(params.get("steps", 2000))


def _max_den(params: Params, default: int = 60) -> int:
    return int(params.get("max_den", default))


def _fig4_2(params: Params) -> dict[str, str]:
    inh = _inharmonic()
    return {"fig4_2": _curve_csv(inh, inh, 1.0, 2.3, _steps(params), DissonanceParams())}


def _fig4_3(params: Params) -> dict[str, str]:
    c4 = _c4()
    parts = {}
    for chi in (0.24, 0.03, 0.003):
        key = f"fig4_3_chi_{str(chi).replace('.', '_')}"
        parts[key] = _curve_csv(
            c4, c4, 1.0, 2.1, _steps(params), DissonanceParams(chi_star=chi)
        )
    return parts


def _fig5_1(params: Params) -> dict[str, str]:
    c4 = _c4()
    table = affinitive_tuning(c4, c4)
    return {
        "fig5_1": _table_csv(table),
        "fig5_1_dissonance": _curve_csv(
            c4, c4, float(Fraction(1, 6)), 6.0, _steps(params), DissonanceParams()
        ),
    }


def _fig5_2(params: Params) -> dict[str, str]:
    c4 = _c4()
    return {"fig5_2": _table_csv(octave_reduce(affinitive_tuning(c4, c4), c4, c4))}


def _fig5_3(params: Params) -> dict[str, str]:
    c4 = _c4()
    contexts = {
        "fig5_3a": c4,
        "fig5_3b": c4 | c4.transpose(FIFTH),
        "fig5_3c": c4 | c4.transpose(MAJOR_THIRD) | c4.transpose(FIFTH),
    }
    return {key: _table_csv(affinitive_tuning(ctx, c4)) for key, ctx in contexts.items()}


def _fig5_4(params: Params) -> dict[str, str]:
    inh = _inharmonic()
    return {"fig5_4": _table_csv(affinitive_tuning(inh, inh))}


def _fig5_5(params: Params) -> dict[str, str]:
    single = FrequencySet([C4_FUNDAMENTAL])
    table = harmonic_tuning(single, single, 0, Fraction(1, 8), 8, _max_den(params))
    return {"fig5_5": _table_csv(table)}


def _fig5_6(params: Params) -> dict[str, str]:
    single = FrequencySet([C4_FUNDAMENTAL])
    rows = []
    for t in enumerate_rationals(Fraction(1, 8), 8, _max_den(params)):
        score = total_consonance(single, single.transpose(t))
        thomae = Fraction(1, max(t.numerator, t.denominator))
        rows.append(
            [
                format_ratio(t, always_slash=True),
                f"{cents(t):.4f}",
                repr(float(score.total)),
                repr(float(thomae)),
            ]
        )
    return {"fig5_6": _csv(["interval_ratio", "cents", "total", "thomae_modified"], rows)}


def _fig5_7(params: Params) -> dict[str, str]:
    counts = params.get("partials", (1, 6, 256))
    parts = {}
    for k in counts:  # type: ignore[union-attr]
        spectrum = _c4(int(k))
        parts[f"fig5_7_k{k}"] = _distribution_csv(
            spectrum, spectrum, Fraction(1, 8), Fraction(8), _max_den(params)
        )
    return parts


def _fig5_8(params: Params) -> dict[str, str]:
    c4 = _c4()
    g4 = c4.transpose(FIFTH)
    e4 = c4.transpose(MAJOR_THIRD)
    bb4 = c4.transpose(HARMONIC_SEVENTH)
    contexts = {
        "fig5_8a": c4,
        "fig5_8b": c4 | g4,
        "fig5_8c": c4 | e4 | g4,
        "fig5_8d": c4 | e4 | g4 | bb4,
    }
    return {
        key: _distribution_csv(ctx, c4, Fraction(1, 4), Fraction(4), _max_den(params))
        for key, ctx in contexts.items()
    }


def _fig5_9(params: Params) -> dict[str, str]:
    k = int(params.get("partials", 60))
    rich = _c4(k)
    contexts = {
        "fig5_9a": rich | rich.transpose(FIFTH),
        "fig5_9b": rich | rich.transpose(MAJOR_THIRD) | rich.transpose(FIFTH),
    }
    return {
        key: _distribution_csv(ctx, rich, Fraction(1, 4), Fraction(4), _max_den(params))
        for key, ctx in contexts.items()
    }


def _fig5_10(params: Params) -> dict[str, str]:
    parts = {}
    for key, rounded in (("fig5_10_rounded", True), ("fig5_10_original", False)):
        spectrum = _inharmonic(rounded)
        parts[key] = _distribution_csv(
            spectrum, spectrum, Fraction(1, 4), Fraction(4), _max_den(params)
        )
    return parts


def _fig5_11(params: Params) -> dict[str, str]:
    sparse = FrequencySet(C4_FUNDAMENTAL * n for n in (1, 2, 4))
    bounds = (Fraction(1, 4), Fraction(4), _max_den(params))
    return {
        "fig5_11a": _table_csv(affinitive_tuning(sparse, sparse)),
        "fig5_11b": _table_csv(harmonic_tuning(sparse, sparse, 0, *bounds)),
        "fig5_11c": _table_csv(harmonic_tuning(sparse, sparse, Fraction(23, 100), *bounds)),
    }


def _fig5_12(params: Params) -> dict[str, str]:
    single = FrequencySet([C4_FUNDAMENTAL])
    return {
        "fig5_12a": _table_csv(affinitive_tuning(single, single)),
        "fig5_12b": _table_csv(superset_tuning(single, single, 2, 2)),
        "fig5_12c": _table_csv(superset_tuning(single, single, 4, 4)),
    }


def _fig5_13(params: Params) -> dict[str, str]:
    c4 = _c4()
    g4 = c4.transpose(FIFTH)
    e4 = c4.transpose(MAJOR_THIRD)
    contexts = {
        "fig5_13a": c4,
        "fig5_13b": c4 | g4,
        "fig5_13c": c4 | e4 | g4,
    }
    return {key: _table_csv(superset_tuning(ctx, c4, 0, 0)) for key, ctx in contexts.items()}


def _fig5_14(params: Params) -> dict[str, str]:
    spectrum = _inharmonic(rounded=True)
    return {
        "fig5_14a": _table_csv(
            harmonic_tuning(spectrum, spectrum, 0, Fraction(1, 4), 4, _max_den(params, 30))
        ),
        "fig5_14b": _table_csv(superset_tuning(spectrum, spectrum, 0, 0)),
    }


def _fig8_1(params: Params) -> dict[str, str]:
    rows = []
    for t in enumerate_rationals(Fraction(1, 8), 8, _max_den(params)):
        rows.append(
            [
                format_ratio(t, always_slash=True),
                f"{cents(t):.4f}",
                repr(float(thomae_classical(t))),
            ]
        )
    return {"fig8_1": _csv(["interval_ratio", "cents", "thomae"], rows)}


_BUILDERS: dict[str, Callable[[Params], dict[str, str]]] = {
    "fig4_2": _fig4_2,
    "fig4_3": _fig4_3,
    "fig5_1": _fig5_1,
    "fig5_2": _fig5_2,
    "fig5_3": _fig5_3,
    "fig5_4": _fig5_4,
    "fig5_5": _fig5_5,
    "fig5_6": _fig5_6,
    "fig5_7": _fig5_7,
    "fig5_8": _fig5_8,
    "fig5_9": _fig5_9,
    "fig5_10": _fig5_10,
    "fig5_11": _fig5_11,
    "fig5_12": _fig5_12,
    "fig5_13": _fig5_13,
    "fig5_14": _fig5_14,
    "fig8_1": _fig8_1,
}


def supported_figures() -> list[str]:
    return sorted(_BUILDERS)


def emit_figure_data(figure_id: str, params: Optional[Params] = None) -> dict[str, str]:
    """CSV blocks for a figure id; multi-panel scenarios emit one per panel."""
    try:
        builder = _BUILDERS[figure_id]
    except KeyError:
        raise ValueError(
            f"unknown figure id {figure_id!r}; supported: {', '.join(supported_figures())}"
        ) from None
    return builder(params or {})
