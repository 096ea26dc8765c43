"""Log-domain lower bounds on the odd-sunflower growth rate, and exact small-n oracles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import mpmath

from .constructions import direct_sum
from .detectors import find_odd_sunflower
from .errors import InvalidParameter, TooLarge
from .family import SetFamily, is_antichain, popcount

ExtremalKind = Literal["even", "odd", "odd-antichain"]
KINDS: tuple[ExtremalKind, ...] = ("even", "odd", "odd-antichain")

EXHAUSTIVE_MAX_N = 4
BNB_MAX_N = 5

# outer C_n of the third construction and the size/universe of C_9 wr C_3
C3_OUTER = 160511
C2_LOG3_EXPONENT = 10
C2_UNIVERSE = 27


@dataclass(frozen=True)
class LogBound:
    log_size: float
    universe: int
    value: float

    def recompute(self) -> float:
        return math.exp(self.log_size / self.universe)


def mu_lower_bound(size_log: float, universe: int) -> LogBound:
    """Bound ``size ** (1/universe)`` from a family of ``exp(size_log)`` sets."""
    if universe < 1:
        raise InvalidParameter("universe must be >= 1")
    if size_log < 0:
        raise InvalidParameter("size_log must be >= 0")
    return LogBound(size_log, universe, math.exp(size_log / universe))


def construction3_log_size() -> float:
    # |C_N| * |C_9 wr C_3|^(N-1) = N * 3^(10 (N-1))
    return math.log(C3_OUTER) + C2_LOG3_EXPONENT * (C3_OUTER - 1) * math.log(3)


def construction3_bound() -> LogBound:
    """C_160511 wreath (C_9 wreath C_3), evaluated symbolically."""
    return mu_lower_bound(construction3_log_size(), C3_OUTER * C2_UNIVERSE)


def construction3_bound_hp(dps: int = 60):
    """Same bound with ~200-bit mpmath arithmetic, as an mpf."""
    with mpmath.workdps(dps):
        log_size = mpmath.log(C3_OUTER) + C2_LOG3_EXPONENT * (C3_OUTER - 1) * mpmath.log(3)
        return +mpmath.exp(log_size / (C3_OUTER * C2_UNIVERSE))


def growth_bounds() -> dict[int, LogBound]:
    """The three bounds: C_3 direct powers, C_9 wr C_3, and the third construction."""
    return {
        1: mu_lower_bound(math.log(3), 3),
        2: mu_lower_bound(C2_LOG3_EXPONENT * math.log(3), C2_UNIVERSE),
        3: construction3_bound(),
    }


THRESHOLDS = {1: 1.44, 2: 1.502144, 3: 1.502148}


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    kind: ExtremalKind
    value: int
    witness: SetFamily


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise InvalidParameter(f"unknown kind {kind!r}")


def _exhaustive(n: int, kind: ExtremalKind) -> ExtremalRecord:
    """Scan every family of nonempty subsets of [n] as a bitmask over the 2^n - 1 subsets.

    A family is bad if it *is* a forbidden configuration; it contains one iff it
    or some one-smaller subfamily contains one, which is filled in by increasing mask.
    """
    subsets = list(range(1, 1 << n))
    N = len(subsets)
    total = 1 << N
    covered = [0] * total
    parity = [0] * total
    contains = bytearray(total)
    best_size, best = 0, ()
    for fam in range(1, total):
        low = fam & -fam
        rest = fam ^ low
        s = subsets[low.bit_length() - 1]
        covered[fam] = covered[rest] | s
        parity[fam] = parity[rest] ^ s
        size = popcount(fam)
        if kind == "even":
            bad = parity[fam] == 0
        else:
            bad = size >= 2 and covered[fam] == parity[fam]
        if not bad:
            r = fam
            while r:
                b = r & -r
                if contains[fam ^ b]:
                    bad = True
                    break
                r ^= b
        contains[fam] = bad
        if bad or size < best_size:
            continue
        members = tuple(subsets[i] for i in range(N) if fam >> i & 1)
        if kind == "odd-antichain" and not is_antichain(SetFamily(n, members)):
            continue
        if size > best_size or members < best:
            best_size, best = size, members
    return ExtremalRecord(n, kind, best_size, SetFamily(n, best))


def _extend_ok(kind: ExtremalKind, states: frozenset, s: int) -> bool:
    if kind == "even":
        return s not in states
    return all(p ^ s != c | s for c, p in states)


def _extend_states(kind: ExtremalKind, states: frozenset, s: int) -> frozenset:
    if kind == "even":
        return states | {p ^ s for p in states} | {s}
    return states | {(c | s, p ^ s) for c, p in states} | {(s, s)}


def _branch_and_bound(n: int, kind: ExtremalKind) -> ExtremalRecord:
    """Depth-first search over families in lexicographic order of sorted member tuples.

    Each node keeps the set of reachable subfamily signatures: parities for the even
    kind, (covered, parity) pairs otherwise, so a new set is tested against every
    subfamily at once. At most 3^n signatures exist.
    """
    subsets = list(range(1, 1 << n))
    N = len(subsets)
    cap = n if kind == "even" else N
    best_size = 0
    best: tuple[int, ...] = ()
    chosen: list[int] = []

    def dfs(start: int, states: frozenset) -> None:
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size, best = len(chosen), tuple(chosen)
        if len(chosen) >= cap:
            return
        for j in range(start, N):
            if len(chosen) + (N - j) <= best_size:
                return
            s = subsets[j]
            if kind == "odd-antichain" and any(
                (s & t) in (s, t) for t in chosen
            ):
                continue
            if not _extend_ok(kind, states, s):
                continue
            chosen.append(s)
            dfs(j + 1, _extend_states(kind, states, s))
            chosen.pop()

    dfs(0, frozenset())
    return ExtremalRecord(n, kind, best_size, SetFamily(n, best))


def exact_extremal(
    n: int, kind: ExtremalKind, mode: Literal["exhaustive", "bnb"] = "exhaustive"
) -> ExtremalRecord:
    """Largest family of nonempty subsets of [n] free of the given configuration.

    Returns the lexicographically least maximum family (members compared by mask).
    """
    _check_kind(kind)
    if n < 0:
        raise InvalidParameter("n must be >= 0")
    if mode == "exhaustive":
        if n > EXHAUSTIVE_MAX_N:
            raise TooLarge(f"exhaustive mode supports n <= {EXHAUSTIVE_MAX_N}")
        return _exhaustive(n, kind)
    if mode == "bnb":
        if n > BNB_MAX_N:
            raise TooLarge(f"branch-and-bound mode supports n <= {BNB_MAX_N}")
        return _branch_and_bound(n, kind)
    raise InvalidParameter(f"unknown mode {mode!r}")


def verify_supermultiplicativity(
    n: int, m: int, mode: Literal["exhaustive", "bnb"] = "exhaustive"
) -> bool:
    """Check f_oa(n+m) >= f_oa(n) f_oa(m) and that the summed witnesses realise it."""
    a = exact_extremal(n, "odd-antichain", mode)
    b = exact_extremal(m, "odd-antichain", mode)
    ab = exact_extremal(n + m, "odd-antichain", mode)
    if ab.value < a.value * b.value:
        return False
    summed, _ = direct_sum(a.witness, b.witness)
    return (
        len(summed) == a.value * b.value
        and is_antichain(summed)
        and find_odd_sunflower(summed) is None
    )
