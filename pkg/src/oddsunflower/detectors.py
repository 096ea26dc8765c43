"""Detectors for classic, even- and odd-sunflowers, with self-checking certificates."""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .errors import PreconditionViolated
from .family import Family, MultiFamily, SetFamily, parity_masks

DEFAULT_BUDGET = int(os.environ.get("ODDSUN_BUDGET", 10**7))


class Kind(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    CLASSIC = "classic"


@dataclass(frozen=True)
class Certificate:
    """A witness subfamily, given as ``(member index, multiplicity)`` pairs."""

    kind: Kind
    member_indices: tuple[tuple[int, int], ...]

    @property
    def indices(self) -> list[int]:
        return [i for i, _ in self.member_indices]

    def members(self, f: SetFamily) -> list[int]:
        return [f.members[i] for i in self.indices]

    def as_multifamily(self, f: SetFamily) -> MultiFamily:
        return MultiFamily(
            f.universe, tuple((f.members[i], k) for i, k in self.member_indices)
        )


@dataclass(frozen=True)
class BudgetExceeded:
    """Returned instead of a verdict when the node budget ran out."""

    nodes: int


def _cert(kind: Kind, indices) -> Certificate:
    return Certificate(kind, tuple((i, 1) for i in indices))


def is_even_sunflower(f: Family) -> bool:
    covered, odd = parity_masks(f)
    return covered != 0 and odd == 0


def is_odd_sunflower(f: Family) -> bool:
    count = len(f) if isinstance(f, SetFamily) else f.total()
    if count < 2:
        return False
    covered, odd = parity_masks(f)
    return covered == odd


def is_classic_sunflower(members) -> bool:
    """At least three sets whose pairwise intersections all coincide."""
    ms = list(members)
    if len(ms) < 3:
        return False
    core = ms[0] & ms[1]
    return all(a & b == core for a, b in combinations(ms, 2))


def find_even_sunflower(f: SetFamily) -> Optional[Certificate]:
    """Find a nonzero kernel vector of the incidence matrix over GF(2).

    Columns (members) are reduced in order against a pivot basis; the first
    column that reduces to zero yields the dependency it closes.
    """
    basis: dict[int, tuple[int, int]] = {}  # pivot bit -> (vector, combination)
    for j, mask in enumerate(f.members):
        vec, comb = mask, 1 << j
        while vec:
            low = vec & -vec
            if low not in basis:
                basis[low] = (vec, comb)
                break
            bv, bc = basis[low]
            vec ^= bv
            comb ^= bc
        else:
            return _cert(Kind.EVEN, [i for i in range(j + 1) if comb >> i & 1])
    return None


# cap on remembered refuted states, to bound memory on long searches
MEMO_LIMIT = 2_000_000


def _suffix_bases(ms: tuple[int, ...]) -> list[tuple[int, ...]]:
    """GF(2) basis of the span of ms[j:], for every j."""
    bases: list[tuple[int, ...]] = [()] * (len(ms) + 1)
    basis: dict[int, int] = {}
    for j in range(len(ms) - 1, -1, -1):
        v = ms[j]
        while v:
            top = v.bit_length()
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
        bases[j] = tuple(basis.values())
    return bases


def _in_projected_span(target: int, vectors: tuple[int, ...], keep: int) -> bool:
    """Is ``target`` (inside ``keep``) a sum of the vectors restricted to ``keep``?"""
    basis: dict[int, int] = {}
    for v in vectors:
        v &= keep
        while v:
            top = v.bit_length()
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    while target:
        top = target.bit_length()
        if top not in basis:
            return False
        target ^= basis[top]
    return True


def find_odd_sunflower(
    f: SetFamily, limit: int = DEFAULT_BUDGET
) -> Union[Certificate, None, BudgetExceeded]:
    """Exact depth-first search for an odd-sunflower subfamily.

    Subfamilies are visited in lexicographic order of their sorted index
    tuples, so the first hit is the lexicographically least witness.

    Two cuts keep the search small. Some covered element of even degree may
    be absent from every later member. Or, over GF(2), no choice of later
    members restricted to the covered elements can flip exactly the
    even-degree ones while leaving the odd-degree ones alone. States that
    were already refuted from an earlier start index are skipped as well.
    """
    ms = f.members
    m = len(ms)
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | ms[i]
    bases = _suffix_bases(ms)
    # (covered, odd) -> smallest start index from which that state was fully refuted
    dead: dict[tuple[int, int], int] = {}

    nodes = 0
    chosen: list[int] = []
    # per depth: covered/odd masks of the chosen prefix
    covered = [0]
    odd = [0]
    j = 0
    while True:
        if j >= m:
            if not chosen:
                return None
            last = chosen.pop()
            state = (covered.pop(), odd.pop())
            if len(dead) < MEMO_LIMIT or state in dead:
                dead[state] = min(dead.get(state, m), last + 1)
            j = last + 1
            continue
        nodes += 1
        if nodes > limit:
            return BudgetExceeded(nodes - 1)
        c = covered[-1] | ms[j]
        o = odd[-1] ^ ms[j]
        if chosen and c == o:
            chosen.append(j)
            return _cert(Kind.ODD, chosen)
        bad = c & ~o
        if (
            bad & ~suffix[j + 1]
            or dead.get((c, o), m + 1) <= j + 1
            or not _in_projected_span(bad, bases[j + 1], c)
        ):
            j += 1
            continue
        chosen.append(j)
        covered.append(c)
        odd.append(o)
        j += 1


def brute_force_odd_sunflower(f: SetFamily) -> Optional[list[int]]:
    """Reference oracle: scan every subfamily by bitmask (small families only)."""
    ms = f.members
    best = None
    for sub in range(1, 1 << len(ms)):
        if sub & (sub - 1) == 0:
            continue
        idx = [i for i in range(len(ms)) if sub >> i & 1]
        if is_odd_sunflower(f.subfamily(idx)):
            if best is None or idx < best:
                best = idx
    return best


def find_classic_sunflower(f: SetFamily) -> Optional[Certificate]:
    ms = f.members
    for i, j, k in combinations(range(len(ms)), 3):
        core = ms[i] & ms[j]
        if ms[i] & ms[k] == core and ms[j] & ms[k] == core:
            return _cert(Kind.CLASSIC, (i, j, k))
    return None


def verify_certificate(f: SetFamily, cert: Certificate) -> bool:
    if any(not 0 <= i < len(f) for i in cert.indices):
        return False
    if len(set(cert.indices)) != len(cert.indices):
        return False
    h = cert.as_multifamily(f)
    if cert.kind is Kind.EVEN:
        return is_even_sunflower(h)
    if cert.kind is Kind.ODD:
        return is_odd_sunflower(h)
    return len(cert.indices) == 3 and is_classic_sunflower(cert.members(f))


class MultiTag(enum.Enum):
    NOT_ODD_SUNFLOWER = "NotOddSunflower"
    ODD_COPIES_PLUS_EVEN_SUBSETS = "OddCopiesOfOneSetPlusEvenSubsets"


@dataclass(frozen=True)
class MultiClassification:
    tag: MultiTag
    principal: Optional[int] = None


def classify_multifamily(base: SetFamily, h: MultiFamily) -> MultiClassification:
    """Structural classification of a multifamily drawn from an odd-sunflower-free base.

    Looks only at multiplicities and containments: the multifamily qualifies
    when exactly one member has odd multiplicity and every other member is
    a subset of it.
    """
    for mask, _ in h.entries:
        if mask not in base:
            raise PreconditionViolated("multifamily member not in base family")
    if h.total() < 2:
        raise PreconditionViolated("multifamily needs at least two members")
    odd = [mask for mask, k in h.entries if k % 2 == 1]
    if len(odd) != 1:
        return MultiClassification(MultiTag.NOT_ODD_SUNFLOWER)
    top = odd[0]
    if all(mask & ~top == 0 for mask, _ in h.entries):
        return MultiClassification(MultiTag.ODD_COPIES_PLUS_EVEN_SUBSETS, top)
    return MultiClassification(MultiTag.NOT_ODD_SUNFLOWER)
