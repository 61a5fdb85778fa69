"""Named parameter sets used by the demos and the test suite.

Each entry is ``(variant, a, b, m, alpha)``. All of them satisfy the
admissibility conditions of their family.
"""

from __future__ import annotations

import math

from .mapping import ConstructionParams

_S = math.sqrt(0.5)

PRESETS = {
    "t1-a1b1-m2": ("T1", 1.0, 1.0, 2, -1j),
    "t1-a1b1-m4": ("T1", 1.0, 1.0, 4, 0.75j),
    "t1-a1b1-m6": ("T1", 1.0, 1.0, 6, complex(-_S, _S)),
    "t2-a1b05-m4": ("T2", 1.0, 0.5, 4, 1.0),
    "t2-a1b05-m4-rot": ("T2", 1.0, 0.5, 4, complex(-_S, -_S)),
    "t2-a1b05-m6": ("T2", 1.0, 0.5, 6, 1.0),
    "t2-a1b17-m4": ("T2", 1.0, 1 / 7, 4, 1j / 7),
    "t2-a34b23-m2": ("T2", 0.75, 2 / 3, 2, complex(-0.871 * _S, -0.871 * _S)),
}


def preset(name: str, trunc_order: int = 0) -> ConstructionParams:
    variant, a, b, m, alpha = PRESETS[name]
    return ConstructionParams(a, b, m, alpha, variant, trunc_order)


def all_presets(trunc_order: int = 0) -> dict:
    return {name: preset(name, trunc_order) for name in PRESETS}
