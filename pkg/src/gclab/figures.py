"""Preset parameter tables for the reference figures.

Presets are data, not code: each figure is a list of curves, each curve an
initial state plus a channel.  Time axis defaults to Gamma = 1, Gamma*t in
[0, 3].  Curves whose caption parameters are unphysical (a bath "purity"
above one, or an initial state violating the uncertainty relation) are kept
in the table so the CLI can warn about them explicitly before skipping.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CurvePreset:
    label: str
    state_kind: str                       # "sf" or "squeezed_thermal"
    state_params: tuple[float, ...]       # (a, b, c1, c2) or (mu, r)
    mu1: float
    r1: float
    mu2: float
    r2: float
    phi2: float = 0.0


PI4 = 0.7853981633974483

FIGURE_TMAX = 3.0
FIGURE_POINTS = 301

FIGURES: dict[int, list[CurvePreset]] = {
    1: [
        CurvePreset("solid", "sf", (2, 1, 1, -1), 1 / 2, 0, 1 / 2, 0),
        CurvePreset("dashed", "sf", (2, 1, 1, -1), 1 / 2, 0, 1 / 6, 0),
        CurvePreset("dot_dashed", "sf", (2, 1, 1, -1), 1 / 6, 0, 1 / 2, 0),
        CurvePreset("dotted", "sf", (2, 1, 1, -1), 1 / 2, 1, 1 / 2, 1),
    ],
    2: [
        CurvePreset("solid", "sf", (1.5, 1.5, 1.2, -1.4), 1 / 2, 0, 1 / 2, 0),
        CurvePreset("dashed", "sf", (1.5, 1.5, 1.2, -1.4), 1 / 4, 0, 1 / 4, 0),
        CurvePreset("dot_dashed", "sf", (1.5, 1.5, 1.2, -1.4), 1 / 2, 1, 1 / 2, 1),
        CurvePreset("dotted", "sf", (1.5, 1.5, 1.2, -1.4), 1 / 2, 0, 1 / 2, 1.5),
    ],
    3: [
        CurvePreset("solid", "squeezed_thermal", (1, 1), 1 / 2, 0, 1 / 2, 0),
        # caption says mu1 = 4, which is not a purity; kept verbatim, skipped with a warning
        CurvePreset("dashed", "squeezed_thermal", (1, 1), 4, 0, 1, 0),
        CurvePreset("dot_dashed", "squeezed_thermal", (1, 1), 1 / 2, 1, 1 / 2, 1),
        CurvePreset("dotted", "squeezed_thermal", (1, 1), 1 / 2, 1, 1 / 2, 1, PI4),
    ],
    4: [
        CurvePreset("solid", "squeezed_thermal", (1 / 9, 1), 1 / 2, 0, 1 / 2, 0),
        CurvePreset("dashed", "squeezed_thermal", (1 / 9, 1), 4, 0, 1, 0),
        CurvePreset("dot_dashed", "squeezed_thermal", (1 / 9, 1), 1 / 2, 1, 1 / 2, 1),
        CurvePreset("dotted", "squeezed_thermal", (1 / 9, 1), 1 / 2, 1, 1 / 2, 1, PI4),
    ],
    5: [
        CurvePreset("solid", "squeezed_thermal", (1, 1), 1 / 2, 0, 1 / 2, 0),
        CurvePreset("dashed", "squeezed_thermal", (1, 1), 1 / 2, 1, 1 / 2, 1),
        CurvePreset("dot_dashed", "squeezed_thermal", (1 / 9, 1), 1 / 2, 0, 1 / 2, 0),
        CurvePreset("dotted", "squeezed_thermal", (1 / 9, 1), 1 / 2, 1, 1 / 2, 1),
    ],
    6: [
        # caption state violates the uncertainty relation; kept verbatim, skipped with a warning
        CurvePreset("solid", "sf", (1, 1, 1, -1), 1 / 3, 0, 1 / 3, 0),
        CurvePreset("dashed", "squeezed_thermal", (1, 1), 1 / 3, 0, 1 / 3, 0),
        CurvePreset("dot_dashed", "squeezed_thermal", (1 / 16, 1), 1 / 3, 0, 1 / 3, 0),
        CurvePreset("dotted", "sf", (2, 2, 1.5, -1.5), 1 / 3, 0, 1 / 3, 0),
    ],
    7: [
        CurvePreset("solid", "squeezed_thermal", (1, 1), 1 / 3, 0, 1 / 3, 0),
        CurvePreset("dotted", "squeezed_thermal", (1, 1), 1 / 3, 1, 1 / 3, 1),
        CurvePreset("dashed", "squeezed_thermal", (1 / 16, 1), 1 / 3, 0, 1 / 3, 0),
        CurvePreset("dot_dashed", "squeezed_thermal", (1 / 16, 1), 1 / 3, 1, 1 / 3, 1),
    ],
    8: [
        CurvePreset("solid", "sf", (2, 1, 1, -1), 1 / 3, 0, 1 / 3, 0),
        CurvePreset("dotted", "sf", (2, 1, 1, -1), 1 / 3, 1, 1 / 3, 1),
        CurvePreset("dashed", "sf", (2, 2, 1.5, -1.5), 1 / 3, 0, 1 / 3, 0),
        CurvePreset("dot_dashed", "sf", (2, 2, 1.5, -1.5), 1 / 3, 1, 1 / 3, 1),
    ],
}
