"""Brute-force counts of plane t-ary trees and ordered forests.

Everything here is plain integer dynamic programming and deliberately does
not touch :mod:`lagrinv.series`, so it can serve as an independent check on
the inversion machinery. Trees are counted by total number of vertices,
leaves included, so a single vertex is the unique tree of size 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class TreeFamily:
    """Plane trees where every internal vertex has exactly ``t`` ordered children.

    Their generating function satisfies ``A = x(1 + A^t)``.
    """

    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"arity must be at least 1, got {self.t}")


@dataclass(frozen=True)
class CountTable:
    family: TreeFamily
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self):
        return len(self.counts)

    def to_json(self) -> list[str]:
        # decimal strings: counts overflow 64 bits quickly
        return [str(c) for c in self.counts]


def _as_family(family: TreeFamily | int) -> TreeFamily:
    return family if isinstance(family, TreeFamily) else TreeFamily(family)


def _tree_counts(t: int, max_n: int) -> list[int]:
    # seq[j][m]: ordered j-tuples of trees with m vertices in total
    a = [0] * (max_n + 1)
    seq = [[0] * (max_n + 1) for _ in range(t + 1)]
    seq[0][0] = 1
    for n in range(1, max_n + 1):
        m = n - 1
        # a[1..n-1] are final, so every seq[j][m] is now computable
        for j in range(1, t + 1):
            prev = seq[j - 1]
            seq[j][m] = sum(a[i] * prev[m - i] for i in range(1, m + 1))
        a[n] = (1 if n == 1 else 0) + seq[t][m]
    return a


def count_trees(family: TreeFamily | int, max_n: int) -> CountTable:
    """Number of t-ary trees with ``n`` vertices for ``0 <= n <= max_n``."""
    family = _as_family(family)
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    return CountTable(family, tuple(_tree_counts(family.t, max_n)))


def count_forests(family: TreeFamily | int, k: int, max_n: int) -> CountTable:
    """Number of ordered sequences of ``k`` t-ary trees with ``n`` vertices in total."""
    family = _as_family(family)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    trees = _tree_counts(family.t, max_n)
    forest = [1] + [0] * max_n
    for _ in range(k):
        forest = [
            sum(trees[i] * forest[m - i] for i in range(1, m + 1))
            for m in range(max_n + 1)
        ]
    return CountTable(family, tuple(forest))


def binomial(n: int, r: int) -> int:
    """``C(n, r)`` by the multiplicative formula; exact at every step."""
    if r < 0 or r > n:
        return 0
    r = min(r, n - r)
    result = 1
    for i in range(1, r + 1):
        result = result * (n - r + i) // i
    return result


def closed_form(family: TreeFamily | int, n: int) -> Fraction:
    """``C(n, (n-1)/t) / n`` when ``t`` divides ``n-1``, else 0."""
    family = _as_family(family)
    if n < 1:
        raise ValueError("closed form is defined for n >= 1")
    q, rem = divmod(n - 1, family.t)
    if rem:
        return Fraction(0)
    return Fraction(binomial(n, q), n)
