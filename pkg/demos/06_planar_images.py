# # Images of circles and spokes
#
# The usual picture of a planar harmonic map is the image of a polar grid.
# export_planar samples each circle and spoke, and the SVG writer fits the
# view box to the data with +v pointing up.

from pathlib import Path

from hcc.grid import GridSpec
from hcc.io import export_planar, planar_to_csv, planar_to_svg
from hcc.mapping import HarmonicMap, build_map, ensure_resolution
from hcc.presets import all_presets
from hcc.specfun import PowerSeries

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)
grid = GridSpec(0.98, 20, 32)

for name, p in all_presets().items():
    # r = 0.98 needs more terms than the default for some parameters
    f = ensure_resolution(build_map(p), grid.radius)
    img = export_planar(f, grid)
    lo, hi = img.bounds()
    print(f"{name:18s} trunc {f.trunc_order:5d}  u in [{lo[0]:7.3f}, {hi[0]:7.3f}]  "
          f"v in [{lo[1]:7.3f}, {hi[1]:7.3f}]")
    (out / f"{name}.svg").write_text(planar_to_svg(img))

    # The T2 pre-shear h + g is an analytic map convex in the vertical direction.

    if p.variant == "T2":
        phi = HarmonicMap(f.pre_shear(), PowerSeries.zeros(f.trunc_order))
        (out / f"{name}-pre-shear.svg").write_text(planar_to_svg(export_planar(phi, grid)))

# CSV is handy for other plotting tools.

f = build_map(all_presets()["t1-a1b1-m2"])
(out / "t1-a1b1-m2.csv").write_text(planar_to_csv(export_planar(f, GridSpec(0.9, 5, 8))))
print("images written to", out)
