"""Explicit families: C_n, C_n^+, direct sums, wreath products and friends."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, product

import mpmath

from .errors import InvalidParameter, MaterializationTooLarge
from .family import SetFamily, elements_of, mask_of, popcount

DEFAULT_CAP = int(os.environ.get("ODDSUN_CAP", 2**20))


@dataclass(frozen=True)
class LabelMap:
    """Where each source family's elements landed in the combined universe.

    ``blocks[s][e - 1]`` is the target label of element ``e`` of source ``s``.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __call__(self, source: int, element: int) -> int:
        return self.blocks[source][element - 1]

    def block_mask(self, source: int) -> int:
        return mask_of(self.blocks[source])


def _shift(mask: int, offset: int) -> int:
    return mask << offset


def _check_cap(count: int, cap: int) -> None:
    if count > cap:
        raise MaterializationTooLarge(f"{count} members exceeds cap {cap}")


def c_n(n: int) -> SetFamily:
    """All (n-1)-subsets of {1..n}."""
    if n < 2:
        raise InvalidParameter("C_n needs n >= 2")
    full = (1 << n) - 1
    return SetFamily(n, tuple(full ^ (1 << i) for i in range(n)))


def c_n_plus(n: int) -> SetFamily:
    if n < 2:
        raise InvalidParameter("C_n^+ needs n >= 2")
    return SetFamily(n, c_n(n).members + ((1 << n) - 1,))


def direct_sum(
    f: SetFamily, g: SetFamily, cap: int = DEFAULT_CAP
) -> tuple[SetFamily, LabelMap]:
    """All unions F | G', where G' is G shifted onto labels n+1..n+m."""
    _check_cap(len(f) * len(g), cap)
    n, m = f.universe, g.universe
    members = tuple(a | _shift(b, n) for a in f.members for b in g.members)
    labels = LabelMap(
        (tuple(range(1, n + 1)), tuple(range(n + 1, n + m + 1)))
    )
    return SetFamily(n + m, members), labels


def direct_power(f: SetFamily, t: int, cap: int = DEFAULT_CAP) -> SetFamily:
    if t < 1:
        raise InvalidParameter("direct power needs t >= 1")
    _check_cap(len(f) ** t, cap)
    out = f
    for _ in range(t - 1):
        out, _ = direct_sum(out, f, cap)
    return out


def wreath_size(f: SetFamily, g_size: int) -> int:
    return sum(g_size ** popcount(a) for a in f.members)


def wreath(
    f: SetFamily, g: SetFamily, cap: int = DEFAULT_CAP
) -> tuple[SetFamily, LabelMap]:
    """Wreath product: for each F in f, pick a member of copy i of g for every i in F.

    Copy i of g lives on labels (i-1)m+1..im.
    """
    n, m = f.universe, g.universe
    _check_cap(wreath_size(f, len(g)), cap)
    # shifted[i][j]: j-th member of g placed on block i (0-based)
    shifted = [[_shift(b, i * m) for b in g.members] for i in range(n)]
    members = []
    for a in f.members:
        choices = [shifted[e - 1] for e in elements_of(a)]
        for pick in product(*choices):
            u = 0
            for b in pick:
                u |= b
            members.append(u)
    labels = LabelMap(
        tuple(tuple(range(i * m + 1, (i + 1) * m + 1)) for i in range(n))
    )
    return SetFamily(n * m, tuple(members)), labels


def construction1(n: int, cap: int = DEFAULT_CAP) -> SetFamily:
    """Sets meeting each of the floor(n/3) consecutive triples in exactly two points.

    Elements beyond 3*floor(n/3) are left uncovered.
    """
    if n < 3:
        raise InvalidParameter("construction1 needs n >= 3")
    k = n // 3
    power = direct_power(c_n(3), k, cap)
    return SetFamily(n, power.members)


def construction2(cap: int = DEFAULT_CAP) -> SetFamily:
    """C_9 wreath C_3: 3^10 sets, 16-uniform, on 27 elements."""
    return wreath(c_n(9), c_n(3), cap)[0]


def binary_tree_family(k: int, cap: int = DEFAULT_CAP) -> SetFamily:
    """Root-to-leaf paths of the complete binary tree with k levels.

    Vertices are numbered breadth-first from the root 1, so v has children
    2v and 2v+1.
    """
    if k < 1:
        raise InvalidParameter("tree depth must be >= 1")
    _check_cap(2 ** (k - 1), cap)
    members = []
    for leaf in range(2 ** (k - 1), 2**k):
        path = 0
        v = leaf
        while v:
            path |= 1 << (v - 1)
            v //= 2
        members.append(path)
    return SetFamily(2**k - 1, tuple(members))


def _wreath_exponent(n: int, g_size: int):
    # log of (n * g^(n-1)) per outer element; the 1/m factor is common to all n
    return (mpmath.log(n) + (n - 1) * mpmath.log(g_size)) / n


def optimal_wreath_n(g_size: int) -> int:
    """Odd n maximising (n * g_size**(n-1))**(1/n): one of the odd neighbours of e*g_size."""
    if g_size < 1:
        raise InvalidParameter("g_size must be >= 1")
    with mpmath.workdps(60):
        target = mpmath.e * g_size
        below = int(mpmath.floor(target))
        if below % 2 == 0:
            below -= 1
        above = int(mpmath.ceil(target))
        if above % 2 == 0:
            above += 1
        candidates = [c for c in (below, above) if c >= 1]
        return max(candidates, key=lambda c: _wreath_exponent(c, g_size))


def all_k_subsets(n: int, k: int) -> list[int]:
    return [mask_of(c) for c in combinations(range(1, n + 1), k)]


__all__ = [
    "DEFAULT_CAP",
    "LabelMap",
    "all_k_subsets",
    "binary_tree_family",
    "c_n",
    "c_n_plus",
    "construction1",
    "construction2",
    "direct_power",
    "direct_sum",
    "optimal_wreath_n",
    "wreath",
    "wreath_size",
]
