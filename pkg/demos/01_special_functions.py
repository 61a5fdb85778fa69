# # Special functions behind the constructions
#
# Everything in hcc rests on a few kernels: the Beta function (through a
# Lanczos log-Gamma), Gaussian hypergeometric coefficients, and truncated
# power series with tail estimates. This script pokes at each of them.

import math

import numpy as np

from hcc.specfun import (
    HypParams,
    PowerSeries,
    beta,
    hadamard,
    hyp2f1_coeffs,
    series_eval,
    stirling_limit_class,
)

# ## Beta values
#
# B(2, 3) = 1/12 and B(1, 1/2) = 2 follow from factorials and Gamma(1/2) = sqrt(pi).

for a, b in [(1, 1), (2, 3), (1, 0.5), (0.75, 2 / 3)]:
    print(f"B({a:.4g}, {b:.4g}) = {beta(a, b):.16g}")

# Conjugate pairs give a real Beta value, which is what lets a and b be complex.

a = 0.6 + 0.8j
print("B(a, conj a) =", beta(a, a.conjugate()))

# ## Hypergeometric coefficients
#
# F(1, 1; 2; z) = -log(1 - z)/z has coefficients 1/(n+1).

F = hyp2f1_coeffs(HypParams(1, 1, 2), 400)
print("first coefficients:", np.round(F.coeffs[:5].real, 6))
value, tail = series_eval(F, 0.5)
print(f"F(1,1;2;1/2) = {value.real:.15f}  (2 log 2 = {2 * math.log(2):.15f}, tail <= {tail:.1e})")

# For c = a + b the coefficients decay like 1/(n B(a, b)), so n * A_n * B -> 1.

A = hyp2f1_coeffs(HypParams(2, 3, 5), 10_000).coeffs.real
for n in (10, 100, 1000, 10_000):
    print(f"n = {n:6d}: n A_n B(2,3) = {n * A[n] * beta(2, 3):.8f}")

# The trichotomy of that limit is available directly.

for triple in [(1, 1, 2), (1, 2, 2), (2, 2, 2)]:
    print(triple, "->", stirling_limit_class(*triple))

# ## Series algebra
#
# The Hadamard product multiplies coefficients; with F(2, 2; 3) it gives 2/(n+2).

prod = hadamard(F, hyp2f1_coeffs(HypParams(2, 2, 3), 400))
print("Hadamard product, first terms:", np.round(prod.coeffs[:5].real, 6))

# Derivative and antiderivative undo each other up to the constant term.

s = PowerSeries([3.0, 1.0, 2.0, 5.0])
print("antiderivative(derivative(s)) =", s.derivative().antiderivative().coeffs.real)
