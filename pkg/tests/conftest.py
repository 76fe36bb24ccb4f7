"""Shared generators for the test suite: exhaustive small posets up to
isomorphism, random 2-dimensional posets, and brute-force baselines."""

import itertools
import random

import posetkit as pk


def closed_relation_subsets(n):
    """All subsets of the numerically increasing pairs on 1..n that are
    transitively closed.  Every poset is isomorphic to one of these, since
    any linear extension can be relabeled to the identity."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for sub in range(1 << len(pairs)):
        rel = {pairs[t] for t in range(len(pairs)) if sub >> t & 1}
        if all(
            (a, c) in rel
            for (a, b) in rel
            for (b2, c) in rel
            if b2 == b and a != c
        ):
            yield sorted(rel)


def canonical_relations(P):
    best = None
    rels = P.relation_pairs()
    for perm in itertools.permutations(range(1, P.n + 1)):
        key = tuple(sorted((perm[a - 1], perm[b - 1]) for a, b in rels))
        if best is None or key < best:
            best = key
    return best


def all_posets_upto_iso(n):
    seen = set()
    out = []
    for rel in closed_relation_subsets(n):
        P = pk.poset_from_relations(n, rel)
        key = canonical_relations(P)
        if key not in seen:
            seen.add(key)
            out.append(P)
    return out


def random_two_dim(n, rng):
    """Intersection of two random permutation orders: 2-dimensional (or
    less) by construction."""
    p1 = list(range(1, n + 1))
    p2 = list(range(1, n + 1))
    rng.shuffle(p1)
    rng.shuffle(p2)
    r1 = {e: i for i, e in enumerate(p1)}
    r2 = {e: i for i, e in enumerate(p2)}
    rel = [
        (a, b)
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        if a != b and r1[a] < r1[b] and r2[a] < r2[b]
    ]
    return pk.poset_from_relations(n, rel)


def random_extension(P, rng):
    placed = 0
    order = []
    down = P.down_masks
    while len(order) < P.n:
        avail = [
            i + 1
            for i in range(P.n)
            if not placed >> i & 1 and not down[i] & ~placed
        ]
        pick = rng.choice(avail)
        order.append(pick)
        placed |= 1 << (pick - 1)
    return tuple(order)


def brute_antichains(P):
    """Subset filter baseline for the antichain-count DP."""
    out = []
    for r in range(P.n + 1):
        for sub in itertools.combinations(P.elements(), r):
            if pk.poset.is_antichain(P, sub):
                out.append(sub)
    return out


def as_lattice_extension(dl, ext):
    """Wrap a linear extension of the lattice poset (element ids) as an
    extension listing the downsets themselves."""
    order = tuple(dl.downsets[e - 1] for e in ext)
    return pk.LatticeExtension(order, {d: p for p, d in enumerate(order, 1)})


def validate_lattice_extension(P, L, cap=pk.DEFAULT_CAP):
    """The order must list every downset exactly once and respect inclusion."""
    downs = [tuple(j + 1 for j in pk.poset._bits(m))
             for m in pk.all_downsets(P, cap)]
    assert sorted(L.order) == sorted(downs)
    for p, early in enumerate(L.order):
        s = set(early)
        for late in L.order[p + 1:]:
            assert not s > set(late), (early, late)
