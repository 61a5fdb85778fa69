# # The T1 family: h = z F(a, b; a+b; z)
#
# The co-analytic part g is chosen so that the dilatation g'/h' is exactly
# alpha z^m. For a = b = 1 everything reduces to logarithms, which gives an
# independent check of the series construction.

import numpy as np

from hcc.grid import GridSpec
from hcc.mapping import ConstructionParams, build_map, closed_form_example_t1

# ## Build one map

p = ConstructionParams(a=1, b=1, m=2, alpha=-1j)
f = build_map(p)
print("h coefficients:", np.round(f.h.coeffs[:6].real, 6))
print("g coefficients:", np.round(f.g.coeffs[:6], 6))

# ## Compare with the logarithmic form
#
# With a = b = 1 and m = 2, g(z) = -(alpha/2)(2z + z^2 + 2 log(1 - z)).

z = np.array([0.3, -0.5 + 0.2j, 0.7j])
print("series - closed form:", np.abs(f.evaluate(z) - closed_form_example_t1(2, -1j, z)))

# ## Dilatation and Jacobian on a polar grid

grid = GridSpec(0.8, 32, 32)
nodes = grid.nodes()
print("max |g'/h' - alpha z^m| =", np.max(np.abs(f.dilatation(nodes) - p.alpha * nodes**2)))
print("min Jacobian on |z| <= 0.95:", f.jacobian(GridSpec(0.95, 64, 64).nodes()).min())

# ## Other parameters
#
# Real a, b and conjugate pairs are both accepted.

for a, b in [(0.5, 0.5), (0.4 + 0.3j, 0.4 - 0.3j)]:
    g = build_map(ConstructionParams(a, b, 3, 0.2))
    print(f"a = {a}: h(0.5) = {g.h(0.5):.6f}, dilatation at 0.5 = {g.dilatation(0.5):.6f}")
