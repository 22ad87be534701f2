"""
Counting plane t-ary trees three ways
=====================================

A t-ary tree is either a single vertex or a root with t ordered subtrees, so
its generating function satisfies A = x(1 + A^t). For t >= 5 there is no
closed-form solution for A, but its coefficients still come out of the
fixed-point solver, of Lagrange inversion, and of a brute-force count.
"""

from lagrinv import Series, closed_form, count_trees, lif_coefficient, solve_functional_equation

N = 16

for t in (2, 3, 5):
    phi = Series.constant(1, N) + Series.monomial(t, N)
    solved = solve_functional_equation(phi, N)
    brute = count_trees(t, N)
    print(f"t = {t}")
    print("  solver      ", [int(c) for c in solved.coeffs])
    print("  brute force ", list(brute.counts))
    print("  closed form ", [0] + [int(closed_form(t, n)) for n in range(1, N + 1)])
    # lif_coefficient never builds A: it reads off [z^(n-1)] phi^n / n
    print("  inversion   ", [0] + [int(lif_coefficient(Series.x(N), phi, n)) for n in range(1, N + 1)])
