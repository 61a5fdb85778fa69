"""Map documents (JSON), OBJ meshes and planar grid images (CSV / SVG)."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .grid import GridSpec
from .mapping import ConstructionParams, HarmonicMap, build_map
from .specfun import PowerSeries
from .surface import SurfaceMesh

SCHEMA_VERSION = "1.0"
MAP_FIELDS = ("schema_version", "variant", "a", "b", "m", "alpha", "trunc_order",
              "h_coeffs", "g_coeffs")
MIN_SAMPLES = 128


class MapDocumentError(ValueError):
    """Schema violation in a map document; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _num(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("map documents hold finite numbers only")
    if x == 0:
        return "0.0"
    return format(x, ".17g")


def _pair(z) -> str:
    z = complex(z)
    return f"[{_num(z.real)}, {_num(z.imag)}]"


def _pairs(c: np.ndarray) -> str:
    return "[" + ", ".join(_pair(x) for x in c) + "]"


def serialize_map(f: HarmonicMap) -> str:
    """JSON map document; every number written with 17 significant digits."""
    p = f.params
    fields = [
        ("schema_version", json.dumps(SCHEMA_VERSION)),
        ("variant", json.dumps(p.variant) if p else "null"),
        ("a", _pair(p.a) if p else "null"),
        ("b", _pair(p.b) if p else "null"),
        ("m", str(p.m) if p else "null"),
        ("alpha", _pair(p.alpha) if p else "null"),
        ("trunc_order", str(f.trunc_order)),
        ("h_coeffs", _pairs(f.h.coeffs)),
        ("g_coeffs", _pairs(f.g.coeffs)),
    ]
    body = ",\n".join(f"  {json.dumps(k)}: {v}" for k, v in fields)
    return "{\n" + body + "\n}\n"


def _complex_field(doc: dict, name: str) -> complex:
    v = doc[name]
    if (not isinstance(v, list) or len(v) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v)):
        raise MapDocumentError(name, "expected [re, im]")
    return complex(v[0], v[1])


def _coeff_field(doc: dict, name: str, order: int) -> PowerSeries:
    if name not in doc:
        raise MapDocumentError(name, "missing required field")
    v = doc[name]
    if not isinstance(v, list) or not v:
        raise MapDocumentError(name, "expected a non-empty list of [re, im] pairs")
    try:
        arr = np.array(v, dtype=np.float64)
    except (TypeError, ValueError):
        raise MapDocumentError(name, "entries must be [re, im] number pairs") from None
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise MapDocumentError(name, "entries must be [re, im] number pairs")
    if arr.shape[0] != order + 1:
        raise MapDocumentError(name, f"expected {order + 1} coefficients for trunc_order {order}, "
                                     f"got {arr.shape[0]}")
    return PowerSeries(arr[:, 0] + 1j * arr[:, 1])


def parse_map(text: str, check_rebuild: bool = True, rtol: float = 1e-12) -> HarmonicMap:
    """Inverse of :func:`serialize_map`.

    With construction parameters present and ``check_rebuild`` set, the stored
    coefficients must agree with a rebuild from those parameters.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MapDocumentError("<document>", f"invalid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise MapDocumentError("<document>", "expected a JSON object")
    for name in MAP_FIELDS:
        if name not in doc:
            raise MapDocumentError(name, "missing required field")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise MapDocumentError("schema_version", f"unsupported version {doc['schema_version']!r}")
    order = doc["trunc_order"]
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise MapDocumentError("trunc_order", "expected a positive integer")
    h = _coeff_field(doc, "h_coeffs", order)
    g = _coeff_field(doc, "g_coeffs", order)

    params: Optional[ConstructionParams] = None
    construction = ("variant", "a", "b", "m", "alpha")
    given = [doc[k] is not None for k in construction]
    if any(given):
        for k, present in zip(construction, given):
            if not present:
                raise MapDocumentError(k, "construction fields must be all present or all null")
        if doc["variant"] not in ("T1", "T2"):
            raise MapDocumentError("variant", "expected 'T1' or 'T2'")
        if not isinstance(doc["m"], int) or isinstance(doc["m"], bool) or doc["m"] < 1:
            raise MapDocumentError("m", "expected a positive integer")
        try:
            params = ConstructionParams(
                _complex_field(doc, "a"), _complex_field(doc, "b"), doc["m"],
                _complex_field(doc, "alpha"), doc["variant"], order,
            )
        except MapDocumentError:
            raise
        except ValueError as exc:
            raise MapDocumentError("a", str(exc)) from None
    try:
        f = HarmonicMap(h, g, params)
    except ValueError as exc:
        raise MapDocumentError("h_coeffs", str(exc)) from None
    if params is not None and check_rebuild:
        ref = build_map(params)
        for name, got, want in (("h_coeffs", h, ref.h), ("g_coeffs", g, ref.g)):
            err = np.abs(got.coeffs - want.coeffs)
            if np.any(err > rtol * np.maximum(1.0, np.abs(want.coeffs))):
                raise MapDocumentError(name, "coefficients disagree with a rebuild from the parameters")
    return f


def export_obj(mesh: SurfaceMesh) -> str:
    """ASCII OBJ: ``v u v t`` lines in vertex order, then 1-based ``f i j k`` lines."""
    lines = [f"v {_num(u)} {_num(v)} {_num(t)}" for u, v, t in mesh.vertices]
    lines += [f"f {i + 1} {j + 1} {k + 1}" for i, j, k in mesh.faces]
    return "\n".join(lines) + "\n"


@dataclass
class PlanarImage:
    """Images of grid circles and spokes; each polyline is an (n, 2) array of (u, v)."""

    polylines: list
    kinds: list

    def __post_init__(self):
        if len(self.polylines) != len(self.kinds):
            raise ValueError("one kind per polyline")
        for pl, kind in zip(self.polylines, self.kinds):
            if kind not in ("circle_image", "spoke_image"):
                raise ValueError(f"unknown polyline kind {kind!r}")
            if len(pl) < 2 or not np.all(np.isfinite(pl)):
                raise ValueError("polylines need at least two finite points")

    def bounds(self):
        pts = np.concatenate(self.polylines)
        return pts.min(axis=0), pts.max(axis=0)


def export_planar(f: HarmonicMap, grid: GridSpec, samples: int = 256) -> PlanarImage:
    """Images under ``f`` of the grid's circles (closed) and radial spokes."""
    samples = max(samples, MIN_SAMPLES)
    polylines, kinds = [], []
    theta = np.linspace(0.0, 2.0 * np.pi, samples + 1)
    for r in grid.radii():
        w = f.evaluate(r * np.exp(1j * theta))
        polylines.append(np.column_stack([w.real, w.imag]))
        kinds.append("circle_image")
    s = np.linspace(0.0, grid.radius, samples)
    for phi in grid.angles():
        w = f.evaluate(s * np.exp(1j * phi))
        polylines.append(np.column_stack([w.real, w.imag]))
        kinds.append("spoke_image")
    return PlanarImage(polylines, kinds)


def planar_to_csv(img: PlanarImage) -> str:
    rows = ["polyline_id,kind,u,v"]
    for i, (pl, kind) in enumerate(zip(img.polylines, img.kinds)):
        rows += [f"{i},{kind},{_num(u)},{_num(v)}" for u, v in pl]
    return "\n".join(rows) + "\n"


def planar_to_svg(img: PlanarImage, width: int = 800) -> str:
    """SVG 1.1 with the viewBox fitted to the data; +v points up."""
    lo, hi = img.bounds()
    span = np.maximum(hi - lo, 1e-12)
    pad = 0.02 * span.max()
    x0, y0 = lo[0] - pad, -(hi[1] + pad)
    w, h = span[0] + 2 * pad, span[1] + 2 * pad
    height = max(1, int(round(width * h / w)))
    stroke = 0.002 * max(w, h)
    colors = {"circle_image": "#1f4e9c", "spoke_image": "#b03a2e"}
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="{x0:.9g} {y0:.9g} {w:.9g} {h:.9g}">',
    ]
    for pl, kind in zip(img.polylines, img.kinds):
        d = "M " + " L ".join(f"{u:.9g},{-v:.9g}" for u, v in pl)
        out.append(f'<path class="{kind}" d="{d}" fill="none" stroke="{colors[kind]}" '
                   f'stroke-width="{stroke:.6g}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
