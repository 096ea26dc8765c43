import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddsunflower.constructions import c_n
from oddsunflower.errors import InvalidParameter, TooLarge
from oddsunflower.family import SetFamily, degree_vector, elements_of, make_family, mask_of
from oddsunflower.mos import (
    MosSearchConfig,
    canonical_form,
    enumerate_mos,
    is_minimal_odd_sunflower,
    known_3mos,
    mos_size_bound,
)

from . import oracles
from .conftest import families


def relabel(f: SetFamily, perm) -> SetFamily:
    return SetFamily(
        f.universe, tuple(mask_of(perm[e - 1] for e in elements_of(m)) for m in f.members)
    )


# --- canonical form ----------------------------------------------------------

def test_canonical_examples():
    a = make_family(3, [[2, 3], [1, 3]])
    b = make_family(3, [[1, 2], [1, 3]])
    assert canonical_form(a) == canonical_form(b)
    x = make_family(6, [[1, 2, 3], [4, 5, 6]])
    y = make_family(6, [[4, 5, 6], [1, 2, 3]])
    assert canonical_form(x) == canonical_form(y)


def test_c4_automorphisms():
    c = canonical_form(c_n(4))
    assert c.automorphism_count == 24 == oracles.automorphisms(c_n(4).as_lists(), 4)


@settings(max_examples=100)
@given(families(max_universe=6, max_members=7))
def test_automorphism_count_matches_oracle(f):
    assert canonical_form(f).automorphism_count == oracles.automorphisms(f.as_lists(), f.universe)


@given(families(max_universe=7, max_members=8))
def test_canonical_form_idempotent(f):
    c = canonical_form(f)
    assert canonical_form(c.family).canonical_members == c.canonical_members


def test_canonical_invariance_thousand_permutations(rng):
    for _ in range(1000):
        n = rng.randint(1, 8)
        m = rng.randint(0, min(8, (1 << n) - 1))
        f = SetFamily(n, tuple(rng.sample(range(1, 1 << n), m)))
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        assert canonical_form(f) == canonical_form(relabel(f, perm))


@settings(max_examples=150)
@given(families(max_universe=5, max_members=5), families(max_universe=5, max_members=5))
def test_canonical_equality_iff_isomorphic(f, g):
    if f.universe != g.universe:
        return
    same = canonical_form(f) == canonical_form(g)
    assert same == oracles.isomorphic(f.as_lists(), g.as_lists(), f.universe)


def test_canonical_universe_limit():
    with pytest.raises(TooLarge):
        canonical_form(c_n(11))


# --- minimality ---------------------------------------------------------------

def test_minimality_examples():
    assert is_minimal_odd_sunflower(make_family(3, [[1, 2], [1, 3], [2, 3], [1, 2, 3]]))
    assert is_minimal_odd_sunflower(c_n(6))
    assert not is_minimal_odd_sunflower(make_family(3, [[1], [2], [3]]))
    assert not is_minimal_odd_sunflower(c_n(3))


@settings(max_examples=100)
@given(families(max_universe=5, max_members=8, min_members=2))
def test_minimality_matches_oracle(f):
    hits = oracles.odd_subfamilies(f.as_lists())
    whole = tuple(range(len(f)))
    expected = hits == [whole]
    assert is_minimal_odd_sunflower(f) == expected


def test_minimality_member_limit():
    with pytest.raises(TooLarge):
        is_minimal_odd_sunflower(SetFamily(5, tuple(range(1, 27))))


def test_mos_size_bound_examples():
    assert mos_size_bound(6, 3) == 6
    assert mos_size_bound(6, 2) == 5
    assert mos_size_bound(1, 2) == 0


# --- enumeration --------------------------------------------------------------

@pytest.fixture(scope="module")
def classes():
    return {k: enumerate_mos(MosSearchConfig.default(k)) for k in (1, 2, 3)}


def test_k1(classes):
    (c,) = classes[1]
    assert c.family.as_lists() == [[1], [2]]


def test_k2(classes):
    got = {c.canonical_members for c in classes[2]}
    want = {
        canonical_form(make_family(4, [[1, 2], [3, 4]])).canonical_members,
        canonical_form(make_family(4, [[1, 2], [1, 3], [1, 4]])).canonical_members,
    }
    assert got == want


def test_k3_matches_listed_families(classes):
    got = [c.canonical_members for c in classes[3]]
    want = sorted(canonical_form(f).canonical_members for f in known_3mos())
    assert sorted(got) == want
    assert len(got) == 7


def test_k3_listed_families_are_minimal():
    for f in known_3mos():
        assert is_minimal_odd_sunflower(f)
        assert not oracles.has_odd_sunflower(f.as_lists()[:-1])


def test_k3_case5():
    f = make_family(5, [[1, 2, 3], [1, 2, 4], [1, 3, 5], [2, 4, 5], [3, 4, 5]])
    assert is_minimal_odd_sunflower(f)
    # complements are the edges 45 35 24 13 12, a 5-cycle 1-2-4-5-3-1
    edges = {frozenset(set(range(1, 6)) - set(s)) for s in f.as_lists()}
    deg = {v: sum(v in e for e in edges) for v in range(1, 6)}
    assert len(edges) == 5 and set(deg.values()) == {2}


def test_post_hoc_invariants(classes):
    for k, cls in classes.items():
        for c in cls:
            f = c.family
            assert is_minimal_odd_sunflower(f)
            used = sum(1 for d in degree_vector(f) if d)
            assert len(f) <= mos_size_bound(used, k)
    for c in classes[3]:
        f = c.family
        assert len(f) <= 6
        common = f.members[0]
        for m in f.members:
            common &= m
        pairwise = all(a & b for a in f.members for b in f.members)
        if pairwise and not common:
            assert all(d in (0, 1, 3) for d in degree_vector(f))


def test_k3_wider_universe_finds_nothing_new(classes):
    wide = enumerate_mos(MosSearchConfig(3, 7, 8))
    assert {c.canonical_members for c in wide} == {c.canonical_members for c in classes[3]}


def test_k4_requires_explicit_bounds():
    with pytest.raises(InvalidParameter):
        MosSearchConfig.default(4)
    small = enumerate_mos(MosSearchConfig(4, 3, 8))
    assert small and all(c.bounded_search for c in small)
    assert all(is_minimal_odd_sunflower(c.family) for c in small)
