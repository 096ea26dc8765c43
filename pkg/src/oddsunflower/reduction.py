"""Reduction from 3-dimensional matching to odd-sunflower containment, plus a differential check."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator, Optional

from .detectors import BudgetExceeded, find_odd_sunflower
from .errors import EmptyInstance, EvenN, InvalidParameter, PreconditionViolated, TooLarge
from .family import SetFamily

VERIFY_MAX_MEMBERS = 20

Edge = tuple[int, int, int]
PARTS = "ABC"


@dataclass(frozen=True)
class ThreeDMInstance:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter("n must be positive")
        edges = tuple(tuple(e) for e in self.edges)
        if len(set(edges)) != len(edges):
            raise InvalidParameter("duplicate edge")
        for e in edges:
            if len(e) != 3 or not all(1 <= v <= self.n for v in e):
                raise InvalidParameter(f"edge {e} out of range 1..{self.n}")
        object.__setattr__(self, "edges", edges)


@dataclass(frozen=True)
class ReducedInstance:
    """The reduced family plus what every element and member stands for.

    ``element_legend[label]`` is one of ``("vertex", part, index)``,
    ``("tag", j)`` or ``("pair", copy1, copy2, reason)`` where each copy is an
    ``(edge index, copy number)`` pair and reason is ``"vertex"`` or ``"tag"``.
    ``copy_index[i]`` gives ``(edge index, copy number)`` of member ``i`` in
    the family's canonical order. Edge indices refer to ``padded.edges``; when
    padding is on, the last edge is the dummy one.
    """

    family: SetFamily
    element_legend: dict[int, tuple]
    copy_index: tuple[tuple[int, int], ...]
    instance: ThreeDMInstance
    padded: ThreeDMInstance

    @property
    def dummy_edge(self) -> Optional[int]:
        if self.padded is self.instance:
            return None
        return len(self.padded.edges) - 1


def pad_instance(inst: ThreeDMInstance) -> ThreeDMInstance:
    """Add vertex n+1 to every part and the edge joining them.

    Matchings of the result are exactly matchings of ``inst`` plus the new edge.
    """
    m = inst.n + 1
    return ThreeDMInstance(m, inst.edges + ((m, m, m),))


def reduce_3dm(inst: ThreeDMInstance, pad: bool = True) -> ReducedInstance:
    """Family that contains an odd-sunflower iff ``inst`` has a perfect matching.

    Every edge gets one copy per tag subset of a shared C_t on t fresh
    elements, and every two copies that must not appear together (same edge,
    a common vertex, or the same tag subset on different edges) get a private
    element of their own.

    The tag family only works when C_t is itself an odd-sunflower, i.e. t is
    even. Inputs have odd n, so by default the instance is padded to n+1 with
    one forced dummy edge. ``pad=False`` builds the unpadded variant with t=n,
    which never contains an odd-sunflower through a matching.
    """
    if inst.n % 2 == 0:
        raise EvenN(f"n={inst.n} is even; the reduction takes odd n")
    if inst.n < 3:
        raise InvalidParameter("n=1 is not supported")
    if not inst.edges:
        raise EmptyInstance("instance has no edges")
    work = pad_instance(inst) if pad else inst
    n = work.n

    legend: dict[int, tuple] = {}
    for p, part in enumerate(PARTS):
        for i in range(1, n + 1):
            legend[p * n + i] = ("vertex", part, i)
    tag0 = 3 * n
    for j in range(1, n + 1):
        legend[tag0 + j] = ("tag", j)

    # copies in (edge, copy number) order; copy c carries every tag but tag c
    copies = [(ei, c) for ei in range(len(work.edges)) for c in range(1, n + 1)]
    sets = []
    full_tags = ((1 << n) - 1) << tag0
    for ei, c in copies:
        a, b, cc = work.edges[ei]
        s = (1 << (a - 1)) | (1 << (n + b - 1)) | (1 << (2 * n + cc - 1))
        s |= full_tags ^ (1 << (tag0 + c - 1))
        sets.append(s)

    label = 4 * n
    for x, y in combinations(range(len(copies)), 2):
        (ex, cx), (ey, cy) = copies[x], copies[y]
        shares_vertex = any(u == v for u, v in zip(work.edges[ex], work.edges[ey]))
        if shares_vertex:
            label += 1
            legend[label] = ("pair", copies[x], copies[y], "vertex")
            sets[x] |= 1 << (label - 1)
            sets[y] |= 1 << (label - 1)
        if ex != ey and cx == cy:
            label += 1
            legend[label] = ("pair", copies[x], copies[y], "tag")
            sets[x] |= 1 << (label - 1)
            sets[y] |= 1 << (label - 1)

    family = SetFamily(label, tuple(sets))
    position = {s: i for i, s in enumerate(family.members)}
    copy_index: list = [None] * len(sets)
    for k, s in enumerate(sets):
        copy_index[position[s]] = copies[k]
    return ReducedInstance(family, legend, tuple(copy_index), inst, work)


def solve_3dm(inst: ThreeDMInstance) -> Optional[list[Edge]]:
    """Backtracking search for n pairwise disjoint edges; covers A-vertices in order."""
    n = inst.n
    by_a: dict[int, list[Edge]] = {a: [] for a in range(1, n + 1)}
    for e in inst.edges:
        by_a[e[0]].append(e)
    used_b: set[int] = set()
    used_c: set[int] = set()
    chosen: list[Edge] = []

    def go(a: int) -> bool:
        if a > n:
            return True
        for e in by_a[a]:
            if e[1] in used_b or e[2] in used_c:
                continue
            used_b.add(e[1])
            used_c.add(e[2])
            chosen.append(e)
            if go(a + 1):
                return True
            chosen.pop()
            used_b.discard(e[1])
            used_c.discard(e[2])
        return False

    return list(chosen) if go(1) else None


def decode_certificate(red: ReducedInstance, indices) -> list[Edge]:
    """Original edges behind the given members, dummy edge dropped."""
    dummy = red.dummy_edge
    return [
        red.padded.edges[red.copy_index[i][0]]
        for i in indices
        if red.copy_index[i][0] != dummy
    ]


def is_perfect_matching(inst: ThreeDMInstance, edges: list[Edge]) -> bool:
    if len(edges) != inst.n:
        return False
    full = set(range(1, inst.n + 1))
    return all({e[p] for e in edges} == full for p in range(3))


def verify_reduction(inst: ThreeDMInstance, pad: bool = True) -> bool:
    """Does the reduced family contain an odd-sunflower exactly when a matching exists?

    A found certificate must also use one copy per tag subset, of pairwise
    disjoint edges, and decode to a perfect matching of ``inst``.
    """
    red = reduce_3dm(inst, pad)
    if len(red.family) > VERIFY_MAX_MEMBERS:
        raise TooLarge(
            f"{len(red.family)} members; exhaustive verification stops at {VERIFY_MAX_MEMBERS}"
        )
    matching = solve_3dm(inst)
    cert = find_odd_sunflower(red.family, limit=1 << 40)
    if isinstance(cert, BudgetExceeded):
        raise PreconditionViolated("odd-sunflower search did not complete")
    if (matching is None) != (cert is None):
        return False
    if cert is None:
        return True
    idx = cert.indices
    t = red.padded.n
    if len(idx) != t:
        return False
    if sorted(red.copy_index[i][1] for i in idx) != list(range(1, t + 1)):
        return False
    used = [red.padded.edges[red.copy_index[i][0]] for i in idx]
    return is_perfect_matching(red.padded, used) and is_perfect_matching(
        inst, decode_certificate(red, idx)
    )


def all_edges(n: int) -> list[Edge]:
    return list(product(range(1, n + 1), repeat=3))


def instance_orbits(n: int, max_edges: int) -> Iterator[ThreeDMInstance]:
    """One instance per orbit of nonempty edge sets under per-part vertex relabelings."""
    edges = all_edges(n)
    perms = list(permutations(range(1, n + 1)))
    group = [
        (pa, pb, pc) for pa in perms for pb in perms for pc in perms
    ]
    seen: set[tuple] = set()
    for size in range(1, max_edges + 1):
        for combo in combinations(edges, size):
            key = min(
                tuple(sorted((pa[a - 1], pb[b - 1], pc[c - 1]) for a, b, c in combo))
                for pa, pb, pc in group
            )
            if key in seen:
                continue
            seen.add(key)
            yield ThreeDMInstance(n, key)
