"""
Compositional inverses
======================

If F(x) = f_1 x + f_2 x^2 + ... with f_1 != 0, its inverse G solves
G = x * phi(G) with phi = x / F(x). The inverse of x - x^2 has the Catalan
numbers as coefficients; the inverse of a truncated sine recovers arcsine.
"""

from fractions import Fraction
from math import factorial

from lagrinv import Series, compose, compositional_inverse, render_series

N = 9

f = Series([0, 1, -1], N)
g = compositional_inverse(f)
print("F   =", render_series(f))
print("F^-1 =", render_series(g))
print("F(F^-1(x)) =", render_series(compose(f, g)))

sine = Series([0 if k % 2 == 0 else Fraction((-1) ** (k // 2), factorial(k)) for k in range(N + 1)])
arcsine = compositional_inverse(sine)
print()
print("sin    =", render_series(sine))
print("arcsin =", render_series(arcsine))
