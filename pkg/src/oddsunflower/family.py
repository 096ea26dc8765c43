"""Set families and multifamilies over a finite universe, stored as int bitmasks.

Element ``i`` of the universe ``{1, ..., n}`` is bit ``i - 1`` of a member mask.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import DuplicateSet, ElementOutOfRange, EmptySet, InvalidParameter


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _check_mask(mask: int, universe: int) -> None:
    if mask == 0:
        raise EmptySet("families may not contain the empty set")
    if mask >> universe:
        raise ElementOutOfRange(
            f"set {elements_of(mask)} has elements outside 1..{universe}"
        )


@dataclass(frozen=True)
class SetFamily:
    """Distinct nonempty subsets of ``{1..universe}``, sorted by mask value."""

    universe: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.universe < 0:
            raise InvalidParameter("universe size must be non-negative")
        for m in self.members:
            _check_mask(m, self.universe)
        ordered = tuple(sorted(self.members))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise DuplicateSet(f"set {elements_of(a)} appears twice")
        object.__setattr__(self, "members", ordered)

    @classmethod
    def empty(cls, universe: int) -> "SetFamily":
        return cls(universe, ())

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        i = bisect_left(self.members, mask)
        return i < len(self.members) and self.members[i] == mask

    def index(self, mask: int) -> int:
        return self.members.index(mask)

    def as_lists(self) -> list[list[int]]:
        return [elements_of(m) for m in self.members]

    def subfamily(self, indices: Iterable[int]) -> "SetFamily":
        return SetFamily(self.universe, tuple(self.members[i] for i in indices))

    def to_multi(self) -> "MultiFamily":
        return MultiFamily(self.universe, tuple((m, 1) for m in self.members))


@dataclass(frozen=True)
class MultiFamily:
    """Nonempty sets with positive multiplicities; entries sorted by mask."""

    universe: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for mask, mult in self.entries:
            _check_mask(mask, self.universe)
            if mult < 1:
                raise InvalidParameter("multiplicities must be positive")
            if mask in seen:
                raise DuplicateSet(f"set {elements_of(mask)} listed twice")
            seen.add(mask)
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    @classmethod
    def from_lists(cls, universe: int, entries: Iterable[tuple[Sequence[int], int]]):
        return cls(universe, tuple((mask_of(s), k) for s, k in entries))

    def total(self) -> int:
        """Number of members counted with multiplicity."""
        return sum(k for _, k in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


Family = Union[SetFamily, MultiFamily]


def _weighted(f: Family) -> Iterable[tuple[int, int]]:
    if isinstance(f, SetFamily):
        return ((m, 1) for m in f.members)
    return f.entries


def make_family(universe_size: int, sets: Iterable[Sequence[int]]) -> SetFamily:
    masks = []
    for s in sets:
        if len(s) == 0:
            raise EmptySet("families may not contain the empty set")
        for e in s:
            if not 1 <= e <= universe_size:
                raise ElementOutOfRange(f"element {e} outside 1..{universe_size}")
        masks.append(mask_of(s))
    return SetFamily(universe_size, tuple(masks))


def degree_vector(f: Family) -> tuple[int, ...]:
    """Degree of every element 1..n, counting multiplicity."""
    deg = [0] * f.universe
    for mask, mult in _weighted(f):
        for e in elements_of(mask):
            deg[e - 1] += mult
    return tuple(deg)


def parity_masks(f: Family) -> tuple[int, int]:
    """Return ``(covered, odd)``: union of members and elements of odd degree."""
    covered = odd = 0
    for mask, mult in _weighted(f):
        covered |= mask
        if mult & 1:
            odd ^= mask
    return covered, odd


def is_antichain(f: SetFamily) -> bool:
    ms = f.members
    if len({popcount(m) for m in ms}) <= 1:
        # distinct sets of one size
        return True
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            u = a & b
            if u == a or u == b:
                return False
    return True


def is_uniform(f: SetFamily, k: int) -> bool:
    return all(popcount(m) == k for m in f.members)


def uniformity(f: SetFamily) -> int | None:
    """Common member size, or None if sizes differ or the family is empty."""
    sizes = {popcount(m) for m in f.members}
    return sizes.pop() if len(sizes) == 1 else None


def slice_family(f: SetFamily, k: int) -> SetFamily:
    return SetFamily(f.universe, tuple(m for m in f.members if popcount(m) == k))


def restrict(f: MultiFamily, keep: Iterable[int] | int) -> MultiFamily:
    """Intersect every member with ``keep``, dropping empties and merging equals."""
    keep_mask = keep if isinstance(keep, int) else mask_of(keep)
    merged: dict[int, int] = {}
    for mask, mult in f.entries:
        m = mask & keep_mask
        if m:
            merged[m] = merged.get(m, 0) + mult
    return MultiFamily(f.universe, tuple(merged.items()))
