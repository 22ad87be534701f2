"""
Ordered forests from powers of A
================================

A sequence of k binary trees has generating function A^k. Taking H(z) = z^k
in the inversion formula gives [x^n] A^k = (k/n) [z^(n-k)] (1 + z^2)^n
directly, which we compare against squaring/cubing A and a brute-force count.
"""

from lagrinv import Series, count_forests, power_coefficient, solve_functional_equation
from lagrinv.series import pow

N = 14
phi = Series([1, 0, 1], N)
a = solve_functional_equation(phi, N)

for k in range(4):
    formula = [int(power_coefficient(k, phi, n)) for n in range(N + 1)]
    by_powering = [int(c) for c in pow(a, k).coeffs]
    brute = list(count_forests(2, k, N).counts)
    assert formula == by_powering == brute
    print(f"k = {k}: {formula}")
