"""Lagrange inversion over truncated series.

Solves ``A(x) = x * phi(A(x))``, extracts ``[x^n] H(A(x))`` through the
inversion formula ``n [x^n] H(A) = [z^(n-1)] H'(z) phi(z)^n``, checks that
identity without dividing by ``n``, and builds compositional inverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import format_rational
from .series import (
    NotInvertibleError,
    PrecisionError,
    Series,
    coeff,
    compose,
    derivative,
    div_by_x,
    mul,
    mul_by_x,
    pow,
    recip,
)


class FixpointError(AssertionError):
    """Solver output fails ``A = x*phi(A)``; indicates an internal bug."""


@dataclass(frozen=True)
class FunctionalEquation:
    """``A = x * phi(A)`` to be solved through ``x^precision``."""

    phi: Series
    precision: int

    def __post_init__(self):
        if self.precision < 0:
            raise ValueError(f"precision must be nonnegative, got {self.precision}")
        if self.phi.precision < self.precision - 1:
            raise PrecisionError(
                f"phi known to precision {self.phi.precision}; "
                f"need at least {self.precision - 1} to determine a_1..a_{self.precision}"
            )


@dataclass(frozen=True)
class LifReport:
    """One degree of the division-free check ``n [x^n] H(A) == [z^(n-1)] H' phi^n``."""

    n: int
    lhs_times_n: Fraction
    rhs: Fraction
    holds: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lhs_times_n": format_rational(self.lhs_times_n),
            "rhs": format_rational(self.rhs),
            "holds": self.holds,
        }


def solve_functional_equation(eq: FunctionalEquation | Series, precision: int | None = None) -> Series:
    """Return the series ``A`` with ``A(0) = 0`` and ``A = x*phi(A)`` up to ``x^N``.

    Accepts either a :class:`FunctionalEquation` or ``(phi, precision)``.
    Runs ``N + 1`` rounds of ``A <- x*phi(A)`` starting from zero; each round
    fixes at least one more coefficient.
    """
    if not isinstance(eq, FunctionalEquation):
        if precision is None:
            raise TypeError("precision is required when passing phi directly")
        eq = FunctionalEquation(eq, precision)
    n = eq.precision
    if n == 0:
        return Series.zero(0)
    phi = eq.phi.truncate(n - 1)

    a = Series.zero(n)
    for _ in range(n + 1):
        a = mul_by_x(compose(phi, a.truncate(n - 1)))

    if mul_by_x(compose(phi, a.truncate(n - 1))) != a:
        raise FixpointError(f"solver did not reach a fixpoint at precision {n}")
    return a


def lif_lhs(h: Series, a: Series, n: int) -> Fraction:
    """``n * [x^n] H(A(x))`` for an already solved ``A``."""
    return n * coeff(compose(h, a), n)


def lif_rhs(h: Series, phi: Series, n: int) -> Fraction:
    """``[z^(n-1)] H'(z) phi(z)^n``; zero at ``n = 0``."""
    if n == 0:
        return Fraction(0)
    _require(h, n, "h")
    _require(phi, n - 1, "phi")
    dh = derivative(h.truncate(n)).truncate(n - 1)
    return coeff(mul(dh, pow(phi.truncate(n - 1), n)), n - 1)


def lif_coefficient(h: Series, phi: Series, n: int) -> Fraction:
    """``[x^n] H(A(x))`` where ``A = x*phi(A)``, without solving for ``A``.

    For ``n = 0`` this is ``h_0`` because ``A`` has no constant term.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return coeff(h, 0)
    return lif_rhs(h, phi, n) / n


def lif_verify(h: Series, phi: Series, max_n: int) -> list[LifReport]:
    """Compare both sides of the inversion formula for ``0 <= n <= max_n``.

    The left side is computed by actually solving for ``A`` and composing, the
    right side by series arithmetic on ``H'`` and ``phi``. Neither side divides
    by ``n``.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    _require(h, max_n, "h")
    _require(phi, max_n, "phi")
    a = solve_functional_equation(phi, max_n)
    h = h.truncate(max_n)
    reports = []
    for n in range(max_n + 1):
        lhs = lif_lhs(h, a, n)
        rhs = lif_rhs(h, phi, n)
        reports.append(LifReport(n, lhs, rhs, lhs == rhs))
    return reports


def power_coefficient(k: int, phi: Series, n: int) -> Fraction:
    """``[x^n] A(x)^k``, i.e. ``(k/n) [z^(n-k)] phi^n`` for ``1 <= k <= n``."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    _require(phi, n, "phi")
    if n == 0:
        return Fraction(1 if k == 0 else 0)
    if k == 0 or k > n:
        return Fraction(0)
    return Fraction(k, n) * coeff(pow(phi.truncate(n), n), n - k)


def compositional_inverse(f: Series) -> Series:
    """Series ``G`` with ``f(G(x)) = x = G(f(x))`` to ``f``'s precision.

    Solves ``G = x * phi(G)`` with ``phi = x / f(x)``.
    """
    if f.coeffs[0] != 0:
        raise NotInvertibleError("compositional inverse needs a zero constant term")
    if f.precision < 1 or f.coeffs[1] == 0:
        raise NotInvertibleError("compositional inverse needs an invertible linear coefficient")
    phi = recip(div_by_x(f))
    return solve_functional_equation(phi, f.precision)


def _require(s: Series, precision: int, name: str) -> None:
    if s.precision < precision:
        raise PrecisionError(f"{name} known to precision {s.precision}; need {precision}")
