"""Truncated formal power series with exact rational coefficients.

A :class:`Series` of precision ``N`` knows the coefficients of ``z^0`` through
``z^N`` and nothing beyond. Binary operations return the smaller of the two
precisions; asking for a coefficient past the known precision is an error.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .exactnum import format_rational, parse_rational


class PrecisionError(ValueError):
    """Requested information beyond the known truncation precision."""


class NotInvertibleError(ValueError):
    """The series has no inverse for the requested operation."""


class CompositionError(ValueError):
    """Inner series of a composition has a nonzero constant term."""


class Series:
    """Immutable truncated power series ``c_0 + c_1 z + ... + c_N z^N``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, precision: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if precision is None:
            if not cs:
                raise ValueError("cannot infer precision from an empty coefficient list")
            precision = len(cs) - 1
        if precision < 0:
            raise ValueError(f"precision must be nonnegative, got {precision}")
        # pad or truncate to exactly precision + 1 entries
        cs = cs[: precision + 1]
        cs.extend([Fraction(0)] * (precision + 1 - len(cs)))
        self._coeffs = tuple(cs)

    # construction helpers

    @classmethod
    def zero(cls, precision: int) -> Series:
        return cls([], precision)

    @classmethod
    def one(cls, precision: int) -> Series:
        return cls([1], precision)

    @classmethod
    def constant(cls, c, precision: int) -> Series:
        return cls([c], precision)

    @classmethod
    def monomial(cls, power: int, precision: int, c=1) -> Series:
        """``c * z**power``; vanishes when ``power > precision``."""
        if power < 0:
            raise ValueError("negative powers are not supported")
        coeffs = [0] * (power + 1)
        coeffs[power] = c
        return cls(coeffs, precision)

    @classmethod
    def x(cls, precision: int) -> Series:
        return cls.monomial(1, precision)

    # basic access

    @property
    def precision(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        return coeff(self, n)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all are zero."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def truncate(self, precision: int) -> Series:
        if precision > self.precision:
            raise PrecisionError(
                f"cannot raise precision from {self.precision} to {precision}"
            )
        if precision == self.precision:
            return self
        return Series(self._coeffs[: precision + 1])

    def agrees_with(self, other: Series) -> bool:
        """Equality up to the common precision (truncation equivalence)."""
        n = min(self.precision, other.precision)
        return self._coeffs[: n + 1] == other._coeffs[: n + 1]

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"Series({format_coeffs(self)})"

    def __str__(self):
        return format_coeffs(self)

    # arithmetic operators delegate to the module functions

    def __add__(self, other):
        if isinstance(other, Series):
            return add(self, other)
        return add(self, Series.constant(other, self.precision))

    __radd__ = __add__

    def __neg__(self):
        return scale(self, -1)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        return pow(self, m)

    def __call__(self, inner: Series) -> Series:
        return compose(self, inner)


def coeff(s: Series, n: int) -> Fraction:
    """``[z^n] s``. Raises :class:`PrecisionError` past the known precision."""
    if n < 0:
        raise PrecisionError(f"negative coefficient index {n}")
    if n > s.precision:
        raise PrecisionError(
            f"coefficient {n} requested from a series known only to precision {s.precision}"
        )
    return s.coeffs[n]


def add(a: Series, b: Series) -> Series:
    n = min(a.precision, b.precision)
    return Series([a.coeffs[i] + b.coeffs[i] for i in range(n + 1)])


def scale(s: Series, c) -> Series:
    c = Fraction(c)
    return Series([c * v for v in s.coeffs])


def mul(a: Series, b: Series) -> Series:
    """Truncated Cauchy product."""
    n = min(a.precision, b.precision)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for r in range(n + 1):
        total = Fraction(0)
        for s in range(r + 1):
            x = ac[s]
            if x:
                y = bc[r - s]
                if y:
                    total += x * y
        out.append(total)
    return Series(out)


def derivative(s: Series) -> Series:
    """Formal derivative; the result loses one order of precision."""
    if s.precision < 1:
        raise PrecisionError("derivative of a precision-0 series is unknown")
    return Series([r * s.coeffs[r] for r in range(1, s.precision + 1)])


def pow(s: Series, m: int) -> Series:
    """``s**m`` by binary exponentiation; ``pow(s, 0)`` is 1."""
    if m < 0:
        raise ValueError("negative exponent; use recip() first")
    result = Series.one(s.precision)
    base = s
    while m:
        if m & 1:
            result = mul(result, base)
        m >>= 1
        if m:
            base = mul(base, base)
    return result


def recip(s: Series) -> Series:
    """Multiplicative inverse; requires a nonzero constant term."""
    c0 = s.coeffs[0]
    if c0 == 0:
        raise NotInvertibleError("series with zero constant term has no reciprocal")
    inv0 = 1 / c0
    sc = s.coeffs
    r = [inv0]
    for n in range(1, s.precision + 1):
        total = sum((sc[i] * r[n - i] for i in range(1, n + 1) if sc[i]), Fraction(0))
        r.append(-inv0 * total)
    return Series(r)


def compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(z))`` by truncated Horner evaluation.

    ``inner`` must have zero constant term, so coefficient ``n`` of the result
    depends only on coefficients ``<= n`` of both arguments.
    """
    if inner.coeffs[0] != 0:
        raise CompositionError("inner series of a composition must have zero constant term")
    n = min(outer.precision, inner.precision)
    inner = inner.truncate(n)
    oc = outer.coeffs
    result = Series.constant(oc[n], n)
    for i in range(n - 1, -1, -1):
        result = mul(result, inner)
        result = Series((result.coeffs[0] + oc[i],) + result.coeffs[1:])
    return result


def mul_by_x(s: Series) -> Series:
    """Shift up by one power; precision grows by one."""
    return Series((Fraction(0),) + s.coeffs)


def div_by_x(s: Series) -> Series:
    """Inverse of :func:`mul_by_x`; requires zero constant term."""
    if s.coeffs[0] != 0:
        raise NotInvertibleError("constant term must vanish to divide by z")
    if s.precision < 1:
        raise PrecisionError("dividing a precision-0 series by z leaves nothing known")
    return Series(s.coeffs[1:])


def format_coeffs(s: Series) -> str:
    """Canonical ``[c0, c1, ..., cN]`` text form."""
    return "[" + ", ".join(format_rational(c) for c in s.coeffs) + "]"


def parse_coeffs(text: str) -> Series:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"coefficient list must be bracketed: {text!r}")
    items = [t for t in body[1:-1].split(",")]
    if items == [""] or not items:
        raise ValueError("empty coefficient list")
    return Series(parse_rational(t) for t in items)
