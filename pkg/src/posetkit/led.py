"""Exact linear extension diameters of downset lattices, in polynomial time.

Everything here works in sigma-position space: a non-separating linear
extension sigma of P is fixed, elements are addressed by their 1-based
position in sigma, and subposets become bitmasks over positions.  The
counting recurrences need sigma to be non-separating; that property is
checked up front and SeparatingExtension raised otherwise.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import IndexOutOfRange, SeparatingExtension
from .poset import Poset, _bits, induced
from .realizer import _require_extension, is_non_separating, realizer


def led_boolean(n: int) -> int:
    """Diameter of the linear extension graph of the lattice of all subsets
    of an n-element set: 2^(2n-2) - (n+1) * 2^(n-2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    num = (1 << (2 * n)) - (n + 1) * (1 << n)
    assert num % 4 == 0
    return num // 4


def led_chain_union(lengths: Sequence[int]) -> int:
    """Closed form for the downset lattice of a disjoint union of chains
    with the given lengths."""
    if not lengths:
        raise ValueError("need at least one chain")
    if any(l < 1 for l in lengths):
        raise ValueError("chain lengths must be at least 1")
    prod = 1
    for l in lengths:
        prod *= l + 1
    mid = 0
    for k, l in enumerate(lengths):
        term = (l + 1) * l
        for i, m in enumerate(lengths):
            if i != k:
                term *= m + 1
        mid += term
    num = prod * prod - mid - prod
    assert num % 4 == 0
    return num // 4


class _Engine:
    """Per-(P, sigma) context: position-space masks, the antichain-count DP
    memoized by subset mask, and the full delta table."""

    def __init__(self, P: Poset, sigma: Sequence[int]):
        if not is_non_separating(P, sigma):
            raise SeparatingExtension(
                f"{tuple(sigma)} separates a comparable pair"
            )
        n = P.n
        self.P = P
        self.sigma = tuple(sigma)
        pos = {e: p for p, e in enumerate(self.sigma)}
        up = [0] * n
        down = [0] * n
        inc = [0] * n
        for p, e in enumerate(self.sigma):
            for f in _bits(P.up_masks[e - 1]):
                up[p] |= 1 << pos[f + 1]
            for f in _bits(P.down_masks[e - 1]):
                down[p] |= 1 << pos[f + 1]
            for f in _bits(P.inc_masks[e - 1]):
                inc[p] |= 1 << pos[f + 1]
        self.n = n
        self.up = up
        self.down = down
        self.inc = inc
        self._a = {0: 1}
        self._tables = None

    def a(self, mask: int) -> int:
        """Number of antichains (empty one included) of the subposet induced
        by the positions in mask, sigma order restricted to the subset."""
        v = self._a.get(mask)
        if v is not None:
            return v
        inc = self.inc
        vals = {}
        total = 1
        m = mask
        while m:
            low = m & -m
            p = low.bit_length() - 1
            m ^= low
            s = 1
            mm = inc[p] & mask & (low - 1)
            while mm:
                l2 = mm & -mm
                s += vals[l2.bit_length() - 1]
                mm ^= l2
            vals[p] = s
            total += s
        self._a[mask] = total
        return total

    def element_counts(self) -> list:
        """The per-position a(x_p) values: antichains whose sigma-largest
        member sits at position p."""
        inc = self.inc
        vals = []
        for p in range(self.n):
            s = 1
            for q in _bits(inc[p] & ((1 << p) - 1)):
                s += vals[q]
            vals.append(s)
        return vals

    def size_rows(self) -> list:
        """size_rows()[p][r-1] = number of r-element antichains whose
        sigma-largest member is at position p."""
        inc = self.inc
        rows = []
        for p in range(self.n):
            row = [1]
            for q in _bits(inc[p] & ((1 << p) - 1)):
                other = rows[q]
                for r in range(len(other)):
                    if r + 1 >= len(row):
                        row.append(0)
                    row[r + 1] += other[r]
            rows.append(row)
        return rows

    def right_mask(self, k: int, l: int) -> int:
        return self.inc[k] & ~((1 << (l + 1)) - 1)

    def tables(self) -> tuple:
        """delta1, delta2 and their sum for every position pair (k, l) with
        x_k below x_l, keyed 0-based, evaluated in increasing l so every
        reference to a smaller l is already present.

        delta1(k, l) counts the configurations whose only maximum is x_l:
        pick the sigma-least minimum x_i, fill in further minima between x_i
        and x_k from P_{i,k,l}, and attach a side antichain left of x_i that
        is incomparable to x_l.

        delta2(k, l) handles configurations with extra maxima besides x_l.
        Dropping x_l together with the minima that sit sigma-after the
        second-largest maximum x_l' leaves a smaller configuration of the
        same shape.  Two cases by the position of x_l': after x_k, the
        smaller configuration keeps the same k (its dropped minima sit after
        l', hence are none beyond those counted there); before x_k, the
        smaller configuration ends at some k' < l' and the dropped minima
        are x_k itself plus any antichain of W, the part of P_{k',k,l}
        past x_l'.
        """
        if self._tables is not None:
            return self._tables
        n = self.n
        up, down, inc = self.up, self.down, self.inc
        a = self.a
        d1 = {}
        d2 = {}
        dd = {}
        for l in range(n):
            dmask = down[l]
            incl = inc[l]
            for k in _bits(dmask):
                below_k = (1 << k) - 1
                s1 = 0
                for i in _bits((below_k | 1 << k) & (inc[k] | 1 << k) & dmask):
                    mid = below_k & ~((1 << (i + 1)) - 1)
                    p_ikl = mid & inc[i] & inc[k] & dmask
                    left = ((1 << i) - 1) & incl
                    s1 += a(p_ikl) * a(left)
                s2 = 0
                between_kl = ((1 << l) - 1) & ~(below_k | 1 << k)
                for lp in _bits(between_kl & incl):
                    s2 += dd.get((k, lp), 0)
                for lp in _bits(below_k & incl):
                    below_lp = (1 << lp) - 1
                    for kp in _bits(below_lp & down[lp] & dmask & inc[k]):
                        val = dd.get((kp, lp), 0)
                        if val:
                            w = below_k & ~(below_lp | 1 << lp)
                            w &= dmask & inc[k] & inc[kp]
                            s2 += val * a(w)
                d1[(k, l)] = s1
                d2[(k, l)] = s2
                dd[(k, l)] = s1 + s2
        self._tables = (d1, d2, dd)
        return self._tables


_engines = {}


def _engine(P: Poset, sigma: Sequence[int]) -> _Engine:
    key = (P, tuple(sigma))
    eng = _engines.get(key)
    if eng is None:
        eng = _Engine(P, sigma)
        if len(_engines) >= 8:
            _engines.pop(next(iter(_engines)))
        _engines[key] = eng
    return eng


class AntichainCountTable(NamedTuple):
    per_element: dict        # element id -> antichains with that sigma-max
    total: int               # 1 + sum of the above (the empty antichain)


def count_antichains(P: Poset, sigma: Sequence[int]) -> AntichainCountTable:
    eng = _engine(P, sigma)
    vals = eng.element_counts()
    per = {eng.sigma[p]: vals[p] for p in range(eng.n)}
    return AntichainCountTable(per, 1 + sum(vals))


class SizeVector(NamedTuple):
    s: dict                  # (element id, cardinality r) -> count


def size_vectors(P: Poset, sigma: Sequence[int]) -> SizeVector:
    eng = _engine(P, sigma)
    rows = eng.size_rows()
    s = {}
    for p in range(eng.n):
        for r, v in enumerate(rows[p], start=1):
            if v:
                s[(eng.sigma[p], r)] = v
    return SizeVector(s)


def gamma(P: Poset, sigma: Sequence[int]) -> int:
    """Twice the number of ordered pairs (A, A - x): each antichain counted
    with multiplicity its cardinality, doubled."""
    eng = _engine(P, sigma)
    total = 0
    for row in eng.size_rows():
        for r, v in enumerate(row, start=1):
            total += r * v
    return 2 * total


def _check_pos(n: int, p: int) -> None:
    if not 1 <= p <= n:
        raise IndexOutOfRange(f"sigma position {p} not in 1..{n}")


def restricted_subposets(P: Poset, sigma: Sequence[int], i: int, k: int, l: int):
    """The three side posets of the counting recurrences, for 1-based sigma
    positions i, k, l:

    - middle: positions strictly between i and k whose element is below x_l
      and forms an antichain with x_i and x_k;
    - left: positions before i whose element is incomparable to x_l;
    - right: positions after l whose element is incomparable to x_k.
    """
    _require_extension(P, sigma)
    for p in (i, k, l):
        _check_pos(P.n, p)
    sig = tuple(sigma)
    xi, xk, xl = sig[i - 1], sig[k - 1], sig[l - 1]
    mid = []
    if i == k or P.incomparable(xi, xk):
        for p in range(i + 1, k):
            xj = sig[p - 1]
            if P.less(xj, xl) and P.incomparable(xj, xi) and P.incomparable(xj, xk):
                mid.append(xj)
    left = [sig[p - 1] for p in range(1, i) if P.incomparable(sig[p - 1], xl)]
    right = [sig[p - 1] for p in range(l + 1, P.n + 1) if P.incomparable(sig[p - 1], xk)]
    return induced(P, mid)[0], induced(P, left)[0], induced(P, right)[0]


def delta1(P: Poset, sigma: Sequence[int], k: int, l: int) -> int:
    eng = _engine(P, sigma)
    _check_pos(eng.n, k)
    _check_pos(eng.n, l)
    return eng.tables()[0].get((k - 1, l - 1), 0)


def delta2(P: Poset, sigma: Sequence[int], k: int, l: int) -> int:
    eng = _engine(P, sigma)
    _check_pos(eng.n, k)
    _check_pos(eng.n, l)
    return eng.tables()[1].get((k - 1, l - 1), 0)


class LedBreakdown(NamedTuple):
    alpha: int
    beta: int
    gamma: int
    delta: int
    delta1: dict             # (k, l) 1-based sigma positions -> count
    delta2: dict
    led: int


def led_downset(P: Poset, sigma: Sequence[int] | None = None) -> LedBreakdown:
    """Linear extension diameter of the lattice of downsets of P.

    alpha counts ordered antichain pairs, beta the diagonal, gamma the
    pairs differing by one element, delta the ordered pairs whose symmetric
    difference is connected with more than one element; the diameter is a
    quarter of alpha - beta - gamma - delta.
    """
    if sigma is None:
        sigma = realizer(P).sigma
    eng = _engine(P, sigma)
    a_total = eng.a((1 << eng.n) - 1)
    alpha = a_total * a_total
    beta = a_total
    gam = gamma(P, sigma)
    d1_raw, d2_raw, dd = eng.tables()
    delta = 0
    for (k, l), v in dd.items():
        delta += v * eng.a(eng.right_mask(k, l))
    delta *= 2
    num = alpha - beta - gam - delta
    assert num % 4 == 0, "count must be divisible by 4"
    d1 = {(k + 1, l + 1): v for (k, l), v in d1_raw.items()}
    d2 = {(k + 1, l + 1): v for (k, l), v in d2_raw.items()}
    return LedBreakdown(alpha, beta, gam, delta, d1, d2, num // 4)


def led_upper_bound(P: Poset, cap: int = 1 << 10) -> int:
    """Quarter-count bound valid for any poset: each family of ordered
    antichain pairs sharing symmetric difference D and intersection I can
    contribute at most 2^(d-2) reversals to any pair of lattice extensions,
    d the number of components of the subposet on D.  Needs no realizer,
    so it also covers posets of dimension three and more."""
    from .poset import enumerate_antichains

    chains = enumerate_antichains(P, cap)
    masks = [sum(1 << (e - 1) for e in A) for A in chains]
    comp_count = {}

    def components_of(dmask: int) -> int:
        if dmask in comp_count:
            return comp_count[dmask]
        cnt = 0
        rest = dmask
        while rest:
            cnt += 1
            frontier = rest & -rest
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for j in _bits(frontier):
                    nxt |= (P.up_masks[j] | P.down_masks[j]) & dmask
                frontier = nxt & ~comp
            rest &= ~comp
        comp_count[dmask] = cnt
        return cnt

    seen = set()
    total = 0
    for x in range(len(masks)):
        for y in range(x + 1, len(masks)):
            d = masks[x] ^ masks[y]
            key = (d, masks[x] & masks[y])
            if key in seen:
                continue
            seen.add(key)
            dcnt = components_of(d)
            if dcnt >= 2:
                total += 1 << (dcnt - 2)
    return total
