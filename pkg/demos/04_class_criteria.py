# # Coefficient sums, closed forms and admissibility
#
# A map is certified close-to-convex when a weighted sum of coefficient
# differences stays below 1 - |b_1|. For the hypergeometric families the sum
# telescopes to a Beta-function expression, which is what the admissibility
# conditions bound.

from hcc.criteria import (
    admissible_t1,
    admissible_t2,
    closed_T_t1,
    coeff_sum_F1,
    coeff_sum_F2,
    pointwise_class_check,
)
from hcc.grid import GridSpec
from hcc.mapping import ConstructionParams, build_map

# ## Admissibility
#
# For a = b = 1 both conditions meet at |alpha| <= 1.

print(admissible_t1(1, 1, 1.0))
print(admissible_t1(1, 1, 1.1))

# For (2, 3) we have 2B - 1 < 0, so no alpha at all is admissible.

print(admissible_t1(2, 3, 0.0))

# In the T2 family with a = 1, b < 1/2 the bound is b/(1 - b).

print(admissible_t2(1, 1 / 7, 1 / 6))

# ## Partial sums converge to the closed form
#
# The gap shrinks roughly like C/N.

closed = closed_T_t1(0.5, 0.5, 2, 0.1, "CaseA")
f = build_map(ConstructionParams(0.5, 0.5, 2, 0.1, "T1", 10_002))
for N in (100, 1000, 10_000):
    gap = closed - coeff_sum_F1(f, N).value
    print(f"N = {N:6d}: gap = {gap:.3e}, N * gap = {N * gap:.4f}")

# ## Sum criterion versus pointwise inequality
#
# Passing the coefficient test implies the pointwise inequality on the disk.
# The converse fails: alpha = -1.1i breaks the sum but still satisfies the
# inequality on this grid, because the sum test is only sufficient.

grid = GridSpec(0.95, 64, 64)
for alpha in (-1j, -1.1j):
    g = build_map(ConstructionParams(1, 1, 2, alpha))
    print(coeff_sum_F1(g))
    print(pointwise_class_check(g, "F1", grid))

t2 = build_map(ConstructionParams(0.75, 2 / 3, 2, 0.871, "T2"))
print(coeff_sum_F2(t2))
