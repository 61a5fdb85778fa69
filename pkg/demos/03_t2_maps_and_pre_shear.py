# # The T2 family: h = z F(a, b; a+b; z^2)
#
# Here h is odd, and the analytic map h + g (the pre-shear) should be convex
# in the vertical direction. That property transfers to f itself.

import numpy as np

from hcc.criteria import direction_convexity_check
from hcc.grid import GridSpec
from hcc.mapping import ConstructionParams, build_map
from hcc.specfun import PowerSeries

p = ConstructionParams(a=1, b=0.5, m=4, alpha=1.0, variant="T2")
f = build_map(p)

# For a = 1, b = 1/2 the coefficients of h telescope to 1/(2n - 1), so h = artanh z.

print("odd coefficients of h:", np.round(f.h.coeffs[1:10:2].real, 6))
print("h(0.5) =", f.h(0.5).real, " artanh(0.5) =", np.arctanh(0.5))

# h(-z) = -h(z) holds coefficient by coefficient.

print("even coefficients all zero:", not np.any(f.h.coeffs[0::2]))

# ## Pre-shear
#
# Re((1 - z^2) phi'(z)) > 0 on the disk certifies vertical convexity of phi.

grid = GridSpec(0.95, 64, 64)
for alpha in [1.0, complex(-0.5**0.5, -0.5**0.5)]:
    g = build_map(ConstructionParams(1, 0.5, 4, alpha, "T2"))
    print(f"alpha = {alpha}: {direction_convexity_check(g.pre_shear(), grid)}")

# z^2 is not univalent, and the same test catches it near z = -0.9.

print(direction_convexity_check(PowerSeries([0, 0, 1]), grid))
