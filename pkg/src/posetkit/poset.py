"""Finite strict partial orders on elements 1..n.

The relation is kept transitively closed at all times and is stored as
bitmask rows, bit j standing for element j+1.  All values are immutable
after construction, so everything in here is safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CapExceeded,
    CycleDetected,
    IndexOutOfRange,
    NotADownset,
    NotAnAntichain,
    PosetFormatError,
)

DEFAULT_CAP = 1 << 20


def _check_index(n: int, e: int) -> None:
    if not isinstance(e, int) or isinstance(e, bool) or not 1 <= e <= n:
        raise IndexOutOfRange(f"element {e!r} not in 1..{n}")


def _mask_of(n: int, elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        _check_index(n, e)
        m |= 1 << (e - 1)
    return m


def _bits(mask: int):
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Strict order on {1..n}; construct via poset_from_relations or the
    factory functions below rather than passing raw masks."""

    __slots__ = ("n", "_up", "_down", "_inc")

    def __init__(self, n: int, up_masks: Sequence[int]):
        if n < 0:
            raise IndexOutOfRange(f"negative size {n}")
        if len(up_masks) != n:
            raise IndexOutOfRange("relation size does not match n")
        full = (1 << n) - 1
        up = tuple(up_masks)
        for i, m in enumerate(up):
            if m & ~full:
                raise IndexOutOfRange("relation mentions element beyond n")
            if m >> i & 1:
                raise CycleDetected(f"element {i + 1} is below itself")
        down = [0] * n
        for i, m in enumerate(up):
            for j in _bits(m):
                if up[j] >> i & 1:
                    raise CycleDetected(f"{i + 1} and {j + 1} are below each other")
                # transitivity: everything above j must already be above i
                if up[j] & ~m:
                    raise ValueError("relation is not transitively closed")
                down[j] |= 1 << i
        self.n = n
        self._up = up
        self._down = tuple(down)
        self._inc = tuple(full & ~(up[i] | down[i] | (1 << i)) for i in range(n))

    # raw bitmask views, used heavily by the counting code
    @property
    def up_masks(self) -> tuple:
        return self._up

    @property
    def down_masks(self) -> tuple:
        return self._down

    @property
    def inc_masks(self) -> tuple:
        return self._inc

    def elements(self) -> range:
        return range(1, self.n + 1)

    def less(self, a: int, b: int) -> bool:
        _check_index(self.n, a)
        _check_index(self.n, b)
        return bool(self._up[a - 1] >> (b - 1) & 1)

    def incomparable(self, a: int, b: int) -> bool:
        _check_index(self.n, a)
        _check_index(self.n, b)
        return a != b and not self.less(a, b) and not self.less(b, a)

    def up_set(self, a: int) -> frozenset:
        _check_index(self.n, a)
        return frozenset(j + 1 for j in _bits(self._up[a - 1]))

    def down_set(self, a: int) -> frozenset:
        _check_index(self.n, a)
        return frozenset(j + 1 for j in _bits(self._down[a - 1]))

    def relation_pairs(self) -> list:
        """All ordered pairs (a, b) with a < b in the poset."""
        return [(i + 1, j + 1) for i in range(self.n) for j in _bits(self._up[i])]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.n == other.n and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.n, self._up))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, relations={self.relation_pairs()!r})"


def poset_from_relations(n: int, pairs: Iterable[tuple]) -> Poset:
    """Build the transitive closure of the given strict relations.

    Input pairs may be covers or arbitrary relations; cycles (including
    a < a) are rejected.
    """
    if n < 0:
        raise IndexOutOfRange(f"negative size {n}")
    succ = [0] * n
    for a, b in pairs:
        _check_index(n, a)
        _check_index(n, b)
        if a == b:
            raise CycleDetected(f"{a} < {a} is not irreflexive")
        succ[a - 1] |= 1 << (b - 1)
    # closure by iterating row expansion to a fixed point; n stays small
    # enough here that simplicity beats cleverness
    changed = True
    while changed:
        changed = False
        for i in range(n):
            m = succ[i]
            acc = m
            for j in _bits(m):
                acc |= succ[j]
            if acc != m:
                succ[i] = acc
                changed = True
    for i in range(n):
        if succ[i] >> i & 1:
            raise CycleDetected("relations contain a cycle")
    return Poset(n, succ)


def incomparable_pairs(P: Poset) -> list:
    """Unordered incomparable pairs as (a, b) tuples with a < b numerically."""
    out = []
    for i in range(P.n):
        m = P._inc[i] >> (i + 1) << (i + 1)
        out.extend((i + 1, j + 1) for j in _bits(m))
    return out


def induced(P: Poset, S: Iterable[int]) -> tuple:
    """Subposet on S.  Returns (Q, ids) where ids[k] is the original id of
    element k+1 of Q; ids is sorted so the remapping is stable."""
    mask = _mask_of(P.n, S)
    ids = tuple(j + 1 for j in _bits(mask))
    pos = {e: k for k, e in enumerate(ids)}
    up = [0] * len(ids)
    for k, e in enumerate(ids):
        for j in _bits(P._up[e - 1] & mask):
            up[k] |= 1 << pos[j + 1]
    return Poset(len(ids), up), ids


def components(P: Poset) -> list:
    """Connected components of the comparability graph, each a sorted tuple,
    ordered by smallest member."""
    seen = 0
    out = []
    for i in range(P.n):
        if seen >> i & 1:
            continue
        comp = 0
        frontier = 1 << i
        while frontier:
            comp |= frontier
            nxt = 0
            for j in _bits(frontier):
                nxt |= P._up[j] | P._down[j]
            frontier = nxt & ~comp
        seen |= comp
        out.append(tuple(j + 1 for j in _bits(comp)))
    return out


def max_of(P: Poset, S: Iterable[int]) -> tuple:
    """Maximal elements of the subposet induced by S, sorted."""
    mask = _mask_of(P.n, S)
    return tuple(j + 1 for j in _bits(mask) if not P._up[j] & mask)


def min_of(P: Poset, S: Iterable[int]) -> tuple:
    """Minimal elements of the subposet induced by S, sorted."""
    mask = _mask_of(P.n, S)
    return tuple(j + 1 for j in _bits(mask) if not P._down[j] & mask)


def is_antichain(P: Poset, A: Iterable[int]) -> bool:
    mask = _mask_of(P.n, A)
    return all(not P._up[j] & mask for j in _bits(mask))


def downset_of(P: Poset, A: Iterable[int]) -> tuple:
    """Downset generated by an antichain, as a sorted tuple."""
    mask = _mask_of(P.n, A)
    if any(P._up[j] & mask for j in _bits(mask)):
        raise NotAnAntichain(f"{tuple(sorted(A))} contains a comparable pair")
    closed = mask
    for j in _bits(mask):
        closed |= P._down[j]
    return tuple(j + 1 for j in _bits(closed))


def maxima_of_downset(P: Poset, S: Iterable[int]) -> tuple:
    """Inverse of downset_of: the antichain of maxima of a downset."""
    mask = _mask_of(P.n, S)
    for j in _bits(mask):
        if P._down[j] & ~mask:
            raise NotADownset(f"{j + 1} is included without all elements below it")
    return tuple(j + 1 for j in _bits(mask) if not P._up[j] & mask)


def enumerate_antichains(P: Poset, cap: int = DEFAULT_CAP) -> list:
    """All antichains (the empty one first) in lexicographic order of their
    sorted member tuples.  Raises CapExceeded past cap."""
    out = [()]
    full = (1 << P.n) - 1
    inc = P._inc

    def rec(prefix, first, allowed):
        m = allowed & ~((1 << first) - 1)
        for j in _bits(m):
            cur = prefix + (j + 1,)
            if len(out) >= cap:
                raise CapExceeded(f"more than {cap} antichains")
            out.append(cur)
            rec(cur, j + 1, allowed & inc[j])

    rec((), 0, full)
    return out


def count_antichains_brute(P: Poset, cap: int = DEFAULT_CAP) -> int:
    return len(enumerate_antichains(P, cap))


def all_downsets(P: Poset, cap: int = DEFAULT_CAP) -> list:
    """Every downset as a bitmask, sorted by numeric mask value."""
    seen = {0}
    stack = [0]
    while stack:
        s = stack.pop()
        # grow by any currently minimal element of the complement
        for j in range(P.n):
            if s >> j & 1 or P._down[j] & ~s:
                continue
            t = s | 1 << j
            if t not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"more than {cap} downsets")
                seen.add(t)
                stack.append(t)
    return sorted(seen)


class DownsetLattice(NamedTuple):
    lattice: Poset           # the downsets ordered by inclusion
    downsets: tuple          # lattice element i+1 <-> downsets[i], a sorted tuple
    index: dict              # downset tuple -> lattice element id


def downset_lattice(P: Poset, cap: int = DEFAULT_CAP) -> DownsetLattice:
    masks = all_downsets(P, cap)
    up = [0] * len(masks)
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if a != b and a & b == a:
                up[i] |= 1 << j
    downs = tuple(tuple(j + 1 for j in _bits(m)) for m in masks)
    index = {d: i + 1 for i, d in enumerate(downs)}
    return DownsetLattice(Poset(len(masks), up), downs, index)


def cover_pairs(P: Poset) -> list:
    """Covering relations (a, b): a < b with nothing strictly between."""
    out = []
    for i in range(P.n):
        m = P._up[i]
        for j in _bits(m):
            if not m & P._down[j]:
                out.append((i + 1, j + 1))
    return out


def chain(n: int) -> Poset:
    return poset_from_relations(n, [(i, i + 1) for i in range(1, n)])


def antichain_poset(n: int) -> Poset:
    return poset_from_relations(n, [])


def chain_union(lengths: Sequence[int]) -> Poset:
    """Disjoint union of chains, numbered consecutively chain by chain."""
    if any(l < 1 for l in lengths):
        raise ValueError("chain lengths must be at least 1")
    pairs = []
    base = 0
    for l in lengths:
        pairs.extend((base + i, base + i + 1) for i in range(1, l))
        base += l
    return poset_from_relations(base, pairs)


def chevron() -> Poset:
    """Two 3-chains 1<3<5 and 2<4<5 sharing their top, plus 6 above both
    feet.  Seven incomparable pairs, two maximal elements, dimension three,
    linear extension graph diameter six."""
    return poset_from_relations(
        6, [(1, 3), (2, 4), (3, 5), (4, 5), (1, 6), (2, 6)]
    )


def parse_poset(text: str) -> Poset:
    """Parse the line-based poset format.

    Comment lines start with '#'.  The first significant line is
    'poset <n>', every following line '<i> < <j>' with 1-based ids.
    """
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "poset":
                raise PosetFormatError(f"line {lineno}: expected 'poset <n>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise PosetFormatError(f"line {lineno}: bad element count {tokens[1]!r}")
            if n < 0:
                raise PosetFormatError(f"line {lineno}: negative element count")
            continue
        if len(tokens) != 3 or tokens[1] != "<":
            raise PosetFormatError(f"line {lineno}: expected '<i> < <j>'")
        try:
            a, b = int(tokens[0]), int(tokens[2])
        except ValueError:
            raise PosetFormatError(f"line {lineno}: non-integer element id")
        pairs.append((a, b))
    if n is None:
        raise PosetFormatError("missing 'poset <n>' header")
    return poset_from_relations(n, pairs)


def format_poset(P: Poset) -> str:
    """Canonical text form: header plus the covering relations."""
    lines = [f"poset {P.n}"]
    lines.extend(f"{a} < {b}" for a, b in cover_pairs(P))
    return "\n".join(lines) + "\n"


def load_poset(path) -> Poset:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_poset(fh.read())
