"""Polar sampling grids on a disk |z| <= r inside the unit disk."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_RADIUS = 0.995


@dataclass(frozen=True)
class GridSpec:
    """Polar grid: the center plus ``n_circles`` rings of ``n_spokes`` nodes.

    Ring ``i`` (1-based) has radius ``radius * i / n_circles``; spoke ``j`` sits
    at angle ``2 pi j / n_spokes``. Nodes are ordered center first, then ring by
    ring, spokes counterclockwise.
    """

    radius: float
    n_circles: int
    n_spokes: int

    def __post_init__(self):
        if not 0.0 < self.radius <= MAX_RADIUS:
            raise ValueError(
                f"grid radius must lie in (0, {MAX_RADIUS}], got {self.radius}"
            )
        if self.n_circles < 1 or self.n_spokes < 3:
            raise ValueError("need n_circles >= 1 and n_spokes >= 3")

    @classmethod
    def parse(cls, text: str, radius: float) -> "GridSpec":
        """Parse ``"CxS"`` such as ``"64x64"``."""
        try:
            c, s = text.lower().split("x")
            return cls(radius, int(c), int(s))
        except ValueError as exc:
            raise ValueError(f"grid must look like CxS (e.g. 64x64), got {text!r}") from exc

    @property
    def n_nodes(self) -> int:
        return self.n_circles * self.n_spokes + 1

    def radii(self) -> np.ndarray:
        return self.radius * np.arange(1, self.n_circles + 1) / self.n_circles

    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.n_spokes) / self.n_spokes

    def nodes(self) -> np.ndarray:
        rings = self.radii()[:, None] * np.exp(1j * self.angles())[None, :]
        return np.concatenate([[0.0 + 0.0j], rings.ravel()])

    def index(self, ring: int, spoke: int) -> int:
        """Node index of ring ``ring`` (1-based) and spoke ``spoke`` (mod n_spokes)."""
        return 1 + (ring - 1) * self.n_spokes + spoke % self.n_spokes
