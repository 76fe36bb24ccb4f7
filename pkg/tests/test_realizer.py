import itertools
import random

import pytest

import posetkit as pk

from conftest import all_posets_upto_iso, random_two_dim


def brute_has_transitive_orientation(P):
    """Try all orientations of the incomparability graph."""
    inc = pk.incomparable_pairs(P)
    for choice in range(1 << len(inc)):
        arcs = set()
        for t, (a, b) in enumerate(inc):
            arcs.add((a, b) if choice >> t & 1 else (b, a))
        if all(
            (a, c) in arcs
            for (a, b) in arcs
            for (b2, c) in arcs
            if b2 == b and a != c
        ):
            return True
    return False


def test_orientation_simple_cases():
    assert pk.transitive_orientation(pk.chain(4)) == []
    assert pk.transitive_orientation(pk.antichain_poset(3)) == [(1, 2), (1, 3), (2, 3)]


def test_orientation_is_transitive_and_complete():
    for P in all_posets_upto_iso(5):
        if not pk.is_two_dimensional(P):
            continue
        arcs = pk.transitive_orientation(P)
        assert sorted(tuple(sorted(a)) for a in arcs) == pk.incomparable_pairs(P)
        s = set(arcs)
        for (a, b) in s:
            for (b2, c) in s:
                if b2 == b and a != c:
                    assert (a, c) in s


def test_chevron_not_two_dimensional():
    with pytest.raises(pk.NotTwoDimensional):
        pk.transitive_orientation(pk.chevron())
    assert not pk.is_two_dimensional(pk.chevron())


def test_orientation_agrees_with_brute_search():
    for P in all_posets_upto_iso(5):
        assert pk.is_two_dimensional(P) == brute_has_transitive_orientation(P)
    rng = random.Random(3)
    sample = [pk.chevron()]
    while len(sample) < 30:
        pairs = [
            (a, b)
            for a in range(1, 7)
            for b in range(a + 1, 7)
            if rng.random() < 0.3
        ]
        sample.append(pk.poset_from_relations(6, pairs))
    for P in sample:
        assert pk.is_two_dimensional(P) == brute_has_transitive_orientation(P)


def test_realizer_examples():
    r = pk.realizer(pk.antichain_poset(2))
    assert r.sigma == (1, 2) and r.sigma_bar == (2, 1)
    r = pk.realizer(pk.chain(3))
    assert r.sigma == r.sigma_bar == (1, 2, 3)
    r = pk.realizer(pk.chain_union([2, 1]))
    assert pk.is_linear_extension(pk.chain_union([2, 1]), r.sigma)


def test_realizer_intersection_is_poset():
    for P in all_posets_upto_iso(5):
        if not pk.is_two_dimensional(P):
            continue
        r = pk.realizer(P)
        pos1 = {e: i for i, e in enumerate(r.sigma)}
        pos2 = {e: i for i, e in enumerate(r.sigma_bar)}
        reversed_pairs = 0
        for a, b in itertools.combinations(P.elements(), 2):
            agree = (pos1[a] < pos1[b]) == (pos2[a] < pos2[b])
            assert agree == (P.less(a, b) or P.less(b, a))
            reversed_pairs += not agree
        assert reversed_pairs == len(pk.incomparable_pairs(P))
        assert pk.is_non_separating(P, r.sigma)
        assert pk.is_non_separating(P, r.sigma_bar)


def test_realizer_deterministic():
    rng = random.Random(11)
    for _ in range(20):
        P = random_two_dim(8, rng)
        assert pk.realizer(P) == pk.realizer(P)


def test_non_separating():
    P = pk.poset_from_relations(3, [(1, 3)])
    assert not pk.is_non_separating(P, (1, 2, 3))
    assert pk.is_non_separating(P, (2, 1, 3))
    assert pk.is_non_separating(P, (1, 3, 2))
    for pi in itertools.permutations(range(1, 4)):
        assert pk.is_non_separating(pk.antichain_poset(3), pi)
    with pytest.raises(pk.NotALinearExtension):
        pk.is_non_separating(P, (3, 2, 1))
    with pytest.raises(pk.NotALinearExtension):
        pk.is_non_separating(P, (1, 2))
