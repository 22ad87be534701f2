"""
Checking n [x^n] H(A) = [z^(n-1)] H'(z) phi(z)^n
================================================

``lif_verify`` computes the left side by solving for A and composing, the
right side by plain series arithmetic, and never divides by n. The identity
also holds for degenerate phi with phi(0) = 0, where A = 0.
"""

from lagrinv import lif_verify, parse_series

cases = [
    ("z^3", "1 + z + z^2"),
    ("1/2 - z + 3*z^4", "2 - 1/3*z + z^5"),
    ("1 + z + z^2", "z^2"),  # degenerate: phi(0) = 0
]

for h_text, phi_text in cases:
    h = parse_series(h_text, 10)
    phi = parse_series(phi_text, 10)
    rows = lif_verify(h, phi, 10)
    print(f"H = {h_text},  phi = {phi_text}")
    for r in rows:
        print(f"  n={r.n:2d}  {str(r.lhs_times_n):>14}  {str(r.rhs):>14}  {'ok' if r.holds else 'MISMATCH'}")
