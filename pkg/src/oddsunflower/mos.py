"""Minimal odd-sunflowers (MOS) of fixed uniformity, enumerated up to isomorphism."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .detectors import find_odd_sunflower, is_odd_sunflower
from .errors import InvalidParameter, TooLarge
from .family import SetFamily, degree_vector, elements_of, mask_of

log = logging.getLogger(__name__)

CANON_MAX_UNIVERSE = 10
MINIMALITY_MAX_MEMBERS = 25


@dataclass(frozen=True)
class CanonicalClass:
    canonical_members: tuple[int, ...]
    universe: int
    automorphism_count: int = field(compare=False)
    bounded_search: bool = field(default=False, compare=False)

    @property
    def family(self) -> SetFamily:
        return SetFamily(self.universe, self.canonical_members)


def _element_invariants(f: SetFamily) -> list[tuple]:
    """Relabeling-invariant signature per element, used to restrict the permutation search."""
    deg = degree_vector(f)
    inv = []
    for e in range(1, f.universe + 1):
        bit = 1 << (e - 1)
        around = sorted(
            tuple(sorted(deg[x - 1] for x in elements_of(m)))
            for m in f.members
            if m & bit
        )
        inv.append((deg[e - 1], tuple(around)))
    return inv


def canonical_form(f: SetFamily) -> CanonicalClass:
    """Least sorted member tuple over all relabelings that respect element invariants.

    Elements are grouped by an isomorphism-invariant signature; groups receive
    consecutive label blocks in a fixed order and only permutations inside
    groups are tried. Relabelings reaching the minimum form a coset of the
    automorphism group, so counting them gives its order.
    """
    n = f.universe
    if n > CANON_MAX_UNIVERSE:
        raise TooLarge(f"canonical_form supports universe <= {CANON_MAX_UNIVERSE}")
    inv = _element_invariants(f)
    groups: dict[tuple, list[int]] = {}
    for e, key in enumerate(inv):
        groups.setdefault(key, []).append(e)
    ordered = [groups[key] for key in sorted(groups, reverse=True)]
    blocks = []
    start = 0
    for g in ordered:
        blocks.append(list(range(start, start + len(g))))
        start += len(g)

    best = None
    count = 0
    members = f.members
    for choice in product(*(permutations(b) for b in blocks)):
        image = [0] * n
        for g, targets in zip(ordered, choice):
            for src, dst in zip(g, targets):
                image[src] = 1 << dst
        mapped = []
        for m in members:
            out = 0
            i = 0
            while m:
                if m & 1:
                    out |= image[i]
                m >>= 1
                i += 1
            mapped.append(out)
        mapped.sort()
        key = tuple(mapped)
        if best is None or key < best:
            best, count = key, 1
        elif key == best:
            count += 1
    return CanonicalClass(best if best is not None else (), n, count)


def is_minimal_odd_sunflower(f: SetFamily) -> bool:
    if len(f) > MINIMALITY_MAX_MEMBERS:
        raise TooLarge(f"minimality check supports <= {MINIMALITY_MAX_MEMBERS} members")
    if not is_odd_sunflower(f):
        return False
    # every proper subfamily misses at least one member
    for i in range(len(f)):
        rest = f.subfamily(j for j in range(len(f)) if j != i)
        if find_odd_sunflower(rest, limit=1 << 40) is not None:
            return False
    return True


def mos_size_bound(n: int, k: int) -> int:
    """Largest possible member count of a k-uniform MOS on n elements."""
    return n if k % 2 else n - 1


# (max_members, max_universe) per uniformity; see MosSearchConfig.default
_DEFAULTS = {1: (2, 2), 2: (7, 8), 3: (7, 7)}


@dataclass(frozen=True)
class MosSearchConfig:
    k: int
    max_members: int
    max_universe: int

    @classmethod
    def default(cls, k: int) -> "MosSearchConfig":
        """Complete search bounds for k <= 3.

        k=1: two singletons already form an odd-sunflower. k=2: an intersecting
        2-MOS has at most 1 + 6 edges (a sunflower-free graph has <= 6 edges)
        on <= 8 vertices. k=3: at most 7 members, all classes fit in 7 elements.
        """
        if k not in _DEFAULTS:
            raise InvalidParameter(f"no default bounds for k={k}; pass them explicitly")
        members, universe = _DEFAULTS[k]
        return cls(k, members, universe)


def _extensions(members: tuple[int, ...], used: int, cfg: MosSearchConfig):
    """k-sets meeting every member, drawing new elements from the next fresh labels."""
    k = cfg.k
    for fresh in range(0, min(k - 1, cfg.max_universe - used) + 1):
        fresh_mask = ((1 << fresh) - 1) << used
        for old in combinations(range(used), k - fresh):
            s = mask_of(e + 1 for e in old) | fresh_mask
            if s in members:
                continue
            if all(s & m for m in members):
                yield s, used + fresh


def _hopeless(f: SetFamily, cfg: MosSearchConfig) -> bool:
    """Too many even-degree elements left for the remaining member budget to fix."""
    remaining = cfg.max_members - len(f)
    even = sum(1 for d in degree_vector(f) if d and d % 2 == 0)
    return even > remaining * cfg.k


def enumerate_mos(config: MosSearchConfig) -> list[CanonicalClass]:
    """All k-uniform MOS within the configured bounds, one canonical class each.

    Two disjoint k-sets are emitted directly. Every other MOS is intersecting,
    so it is grown one set at a time from a single k-set, keeping only one
    canonical representative per isomorphism class at each size. Partial
    families that already are (or contain) an odd-sunflower are not extended.
    """
    k = config.k
    if k < 1:
        raise InvalidParameter("k must be >= 1")
    bounded = k >= 4
    found: dict[tuple, CanonicalClass] = {}

    def emit(f: SetFamily) -> None:
        c = canonical_form(f)
        if c.canonical_members not in found:
            found[c.canonical_members] = CanonicalClass(
                c.canonical_members, c.universe, c.automorphism_count, bounded
            )

    if config.max_members >= 2 and 2 * k <= config.max_universe:
        emit(SetFamily(2 * k, ((1 << k) - 1, ((1 << k) - 1) << k)))

    if k > config.max_universe:
        return sorted(found.values(), key=_sort_key)
    level = {canonical_form(SetFamily(k, ((1 << k) - 1,))).canonical_members: k}
    size = 1
    while level and size < config.max_members:
        nxt: dict[tuple, int] = {}
        for members, used in level.items():
            for s, new_used in _extensions(members, used, config):
                g = SetFamily(new_used, members + (s,))
                c = canonical_form(g)
                if c.canonical_members in nxt or c.canonical_members in found:
                    continue
                cf = c.family
                if is_odd_sunflower(cf):
                    if is_minimal_odd_sunflower(cf):
                        emit(cf)
                    continue
                if find_odd_sunflower(cf) is not None:
                    continue
                if _hopeless(cf, config):
                    continue
                nxt[c.canonical_members] = new_used
        size += 1
        log.debug("k=%d size=%d: %d partial classes", k, size, len(nxt))
        level = nxt
    return sorted(found.values(), key=_sort_key)


def _sort_key(c: CanonicalClass):
    return (len(c.canonical_members), c.universe, c.canonical_members)


def known_3mos() -> list[SetFamily]:
    """The seven 3-MOS families as listed in the classification, in order."""
    raw = [
        "123 456",
        "123 145 167",
        "123 124 125",
        "123 124 134 234",
        "123 124 135 245 345",
        "123 124 135 236",
        "123 124 156 256 345 346",
    ]
    out = []
    for line in raw:
        sets = [[int(ch) for ch in word] for word in line.split()]
        n = max(max(s) for s in sets)
        out.append(SetFamily(n, tuple(mask_of(s) for s in sets)))
    return out


__all__ = [
    "CanonicalClass",
    "MosSearchConfig",
    "canonical_form",
    "enumerate_mos",
    "is_minimal_odd_sunflower",
    "mos_size_bound",
    "known_3mos",
]
