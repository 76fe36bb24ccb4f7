import itertools

import pytest
from hypothesis import given, settings, strategies as st

import posetkit as pk
from posetkit.poset import _bits, is_antichain

from conftest import all_posets_upto_iso, brute_antichains


def test_from_relations_takes_closure():
    P = pk.poset_from_relations(3, [(1, 2), (2, 3)])
    assert P.less(1, 3)
    assert P.relation_pairs() == [(1, 2), (1, 3), (2, 3)]


def test_rejects_cycles_and_bad_ids():
    with pytest.raises(pk.CycleDetected):
        pk.poset_from_relations(2, [(1, 2), (2, 1)])
    with pytest.raises(pk.CycleDetected):
        pk.poset_from_relations(1, [(1, 1)])
    with pytest.raises(pk.IndexOutOfRange):
        pk.poset_from_relations(2, [(1, 3)])
    with pytest.raises(pk.IndexOutOfRange):
        pk.poset_from_relations(2, [(0, 1)])


@given(st.integers(1, 7), st.data())
@settings(max_examples=60, deadline=None)
def test_order_axioms_random(n, data):
    pairs = data.draw(
        st.lists(
            st.tuples(st.integers(1, n), st.integers(1, n)).filter(
                lambda p: p[0] < p[1]
            ),
            max_size=12,
        )
    )
    P = pk.poset_from_relations(n, pairs)
    for a in P.elements():
        assert not P.less(a, a)
        for b in P.elements():
            assert not (P.less(a, b) and P.less(b, a))
            for c in P.elements():
                if P.less(a, b) and P.less(b, c):
                    assert P.less(a, c)


def test_order_axioms_constructors_n64():
    for P in (pk.chain(64), pk.antichain_poset(64), pk.chain_union([16] * 4)):
        up = P.up_masks
        for i in range(P.n):
            assert not up[i] >> i & 1
            for j in _bits(up[i]):
                assert not up[j] >> i & 1
                assert not up[j] & ~up[i]


def test_incomparable_pairs():
    assert pk.incomparable_pairs(pk.chain(3)) == []
    assert pk.incomparable_pairs(pk.antichain_poset(3)) == [(1, 2), (1, 3), (2, 3)]
    assert len(pk.incomparable_pairs(pk.chevron())) == 7


def test_induced():
    P = pk.chain(3)
    Q, ids = pk.induced(P, {1, 3})
    assert ids == (1, 3)
    assert Q.relation_pairs() == [(1, 2)]
    E, ids = pk.induced(P, set())
    assert E.n == 0 and ids == ()
    M, _ = pk.induced(pk.chevron(), pk.max_of(pk.chevron(), range(1, 7)))
    assert M.relation_pairs() == []


def test_components():
    P = pk.chain_union([2, 1, 3])
    assert pk.components(P) == [(1, 2), (3,), (4, 5, 6)]
    assert pk.components(pk.antichain_poset(3)) == [(1,), (2,), (3,)]


def test_max_min():
    P = pk.chain(3)
    assert pk.max_of(P, P.elements()) == (3,)
    assert pk.min_of(P, P.elements()) == (1,)
    assert pk.min_of(P, ()) == ()
    assert pk.max_of(pk.chevron(), range(1, 7)) == (5, 6)


def test_downset_roundtrip_small_posets():
    for P in all_posets_upto_iso(4) + all_posets_upto_iso(5)[:20]:
        for A in brute_antichains(P):
            S = pk.downset_of(P, A)
            assert pk.maxima_of_downset(P, S) == tuple(sorted(A))


def test_downset_errors():
    P = pk.chain(2)
    with pytest.raises(pk.NotAnAntichain):
        pk.downset_of(P, {1, 2})
    with pytest.raises(pk.NotADownset):
        pk.maxima_of_downset(P, {2})


def test_symmetric_difference_of_antichains_has_height_two():
    for P in all_posets_upto_iso(4):
        chains = brute_antichains(P)
        for A, B in itertools.product(chains, repeat=2):
            D = set(A) ^ set(B)
            Q, _ = pk.induced(P, D)
            for a in Q.elements():
                for b in Q.elements():
                    for c in Q.elements():
                        assert not (Q.less(a, b) and Q.less(b, c)), (A, B)


def test_enumerate_antichains():
    assert pk.enumerate_antichains(pk.antichain_poset(3)) == [
        (), (1,), (1, 2), (1, 2, 3), (1, 3), (2,), (2, 3), (3,),
    ]
    assert len(pk.enumerate_antichains(pk.chain(5))) == 6
    with pytest.raises(pk.CapExceeded):
        pk.enumerate_antichains(pk.antichain_poset(8), cap=100)


def test_antichain_count_matches_subset_filter():
    for P in all_posets_upto_iso(4):
        assert len(pk.enumerate_antichains(P)) == len(brute_antichains(P))


def test_downset_lattice_of_antichain_is_boolean():
    dl = pk.downset_lattice(pk.antichain_poset(3))
    assert dl.lattice.n == 8
    assert dl.downsets[0] == ()
    assert dl.index[(1, 2, 3)] == 8
    # inclusion order: element for {1} below element for {1,3}
    assert dl.lattice.less(dl.index[(1,)], dl.index[(1, 3)])
    assert not dl.lattice.less(dl.index[(1,)], dl.index[(2, 3)])


def test_downset_lattice_cap():
    with pytest.raises(pk.CapExceeded):
        pk.downset_lattice(pk.antichain_poset(10), cap=100)


def test_cover_pairs():
    assert pk.cover_pairs(pk.chain(3)) == [(1, 2), (2, 3)]
    P = pk.poset_from_relations(3, [(1, 2), (2, 3), (1, 3)])
    assert pk.cover_pairs(P) == [(1, 2), (2, 3)]


def test_chain_union_numbering():
    P = pk.chain_union([2, 3])
    assert P.relation_pairs() == [(1, 2), (3, 4), (3, 5), (4, 5)]
    with pytest.raises(ValueError):
        pk.chain_union([0])


def test_chevron_shape():
    C = pk.chevron()
    assert C.n == 6
    assert len(pk.incomparable_pairs(C)) == 7
    assert pk.max_of(C, C.elements()) == (5, 6)
    assert len(pk.min_of(C, C.elements())) == 2


def test_parse_and_format_roundtrip():
    text = "# a comment\nposet 4\n1 < 2\n\n2 < 4\n3 < 4\n"
    P = pk.parse_poset(text)
    assert P.less(1, 4)
    again = pk.parse_poset(pk.format_poset(P))
    assert again == P


def test_parse_errors():
    for bad in ("", "poset x\n", "1 < 2\n", "poset 2\n1 <\n", "poset 2\n1 2\n",
                "poset 2\na < b\n", "poset -1\n"):
        with pytest.raises(pk.PosetFormatError):
            pk.parse_poset(bad)
    with pytest.raises(pk.CycleDetected):
        pk.parse_poset("poset 2\n1 < 2\n2 < 1\n")


def test_load_poset(tmp_path):
    p = tmp_path / "p.poset"
    p.write_text(pk.format_poset(pk.chevron()), encoding="utf-8")
    assert pk.load_poset(p) == pk.chevron()


@given(st.integers(0, 6), st.data())
@settings(max_examples=40, deadline=None)
def test_downset_of_inverse_property(n, data):
    pairs = data.draw(
        st.lists(
            st.tuples(st.integers(1, max(n, 1)), st.integers(1, max(n, 1))).filter(
                lambda p: p[0] < p[1]
            ),
            max_size=10,
        )
    ) if n else []
    P = pk.poset_from_relations(n, pairs)
    subset = data.draw(st.sets(st.integers(1, n), max_size=n)) if n else set()
    if is_antichain(P, subset):
        assert pk.maxima_of_downset(P, pk.downset_of(P, subset)) == tuple(sorted(subset))
