"""Bruhat order: comparison, lower intervals [e, w] with their cover graphs,
and parabolic machinery (quotients, BP decompositions, m(u, J)).

Everything here is generic over the two element kinds (Permutation and
SignedPermutation): elements expose length(), inverse(), multiplication,
times_simple_right/left, descent sets, support(), down_covers() and
simple_indices().
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

from .permutations import Permutation
from .signed import Element


# -- comparison ----------------------------------------------------------------


def _dominance_leq(u: Permutation, w: Permutation) -> bool:
    """Rank-matrix criterion for S_n: u <= w iff every prefix of u contains
    at least as many small values as the same prefix of w."""
    n = u.n
    uim, wim = u.images, w.images
    ucount = [0] * (n + 1)
    wcount = [0] * (n + 1)
    for i in range(n - 1):
        uv, wv = uim[i], wim[i]
        for j in range(uv, n + 1):
            ucount[j] += 1
        for j in range(wv, n + 1):
            wcount[j] += 1
        for j in range(1, n + 1):
            if ucount[j] < wcount[j]:
                return False
    return True


@functools.lru_cache(maxsize=4096)
def _downset(w: Element) -> frozenset[Element]:
    """All u <= w, by closure of the cover relation (used for signed elements,
    whose intervals stay small in this package)."""
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for x in frontier:
            for y in x.down_covers():
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def bruhat_leq(u: Element, w: Element) -> bool:
    """u <= w in Bruhat order.

    S_n uses the dominance criterion; signed permutations fall back to cover
    closure.  Both agree with the subword oracle (tested exhaustively).
    """
    if type(u) is not type(w) or u.n != w.n:
        raise ValueError(f"cannot compare {u!r} and {w!r}")
    if u.length() > w.length():
        return False
    if isinstance(u, Permutation):
        return _dominance_leq(u, w)
    return u in _downset(w)


def reduced_word(w: Element) -> tuple[int, ...]:
    """One reduced expression, built by stripping minimal left descents."""
    word = []
    x = w
    while not x.is_identity():
        i = min(x.left_descents())
        word.append(i)
        x = x.times_simple_left(i)
    return tuple(word)


def subword_downset(w: Element) -> frozenset[Element]:
    """All products of reduced subwords of one fixed reduced word for w,
    which by the subword property is exactly [e, w].

    Kept deliberately independent of bruhat_leq as the reference oracle.
    """
    reachable = {w.identity_like()}
    for i in reduced_word(w):
        new = set(reachable)
        for x in reachable:
            y = x.times_simple_right(i)
            if y.length() > x.length():
                new.add(y)
        reachable = new
    return frozenset(reachable)


def subword_leq(u: Element, w: Element) -> bool:
    """Subword-property oracle for u <= w."""
    if u.length() > w.length():
        return False
    return u in subword_downset(w)


# -- intervals -----------------------------------------------------------------


@dataclass
class BruhatInterval:
    """The lower interval [e, w] with dense integer ids in BFS discovery order
    (top first), rank = length, and both cover adjacencies.

    Immutable after construction; safe to share between threads.
    """

    top: Element
    elements: list[Element]
    index: dict[Element, int]
    rank: list[int]
    down: list[list[int]]  # ids covered by each id
    up: list[list[int]]  # ids covering each id

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def top_rank(self) -> int:
        return self.rank[0]

    def ids_at_rank(self, k: int) -> list[int]:
        return [i for i in range(self.size) if self.rank[i] == k]

    def contains(self, u: Element) -> bool:
        return u in self.index


def build_interval(w: Element) -> BruhatInterval:
    """Downward BFS from w along cover moves; every u <= w is reached because
    Bruhat order is graded with saturated chains."""
    top_rank = w.length()
    elements = [w]
    index = {w: 0}
    rank = [top_rank]
    down: list[list[int]] = [[]]
    frontier = [0]
    while frontier:
        nxt = []
        for xid in frontier:
            x = elements[xid]
            r = rank[xid]
            for y in x.down_covers():
                yid = index.get(y)
                if yid is None:
                    yid = len(elements)
                    index[y] = yid
                    elements.append(y)
                    rank.append(r - 1)
                    down.append([])
                    nxt.append(yid)
                down[xid].append(yid)
        frontier = nxt
    up: list[list[int]] = [[] for _ in elements]
    for xid, ys in enumerate(down):
        ys.sort()
        for yid in ys:
            up[yid].append(xid)
    for xs in up:
        xs.sort()
    bottoms = [i for i, r in enumerate(rank) if r == 0]
    if len(bottoms) != 1 or not elements[bottoms[0]].is_identity():
        raise AssertionError("interval lacks a unique identity minimum")
    return BruhatInterval(w, elements, index, rank, down, up)


def rank_profile(interval: BruhatInterval) -> tuple[int, ...]:
    counts = [0] * (interval.top_rank + 1)
    for r in interval.rank:
        counts[r] += 1
    return tuple(counts)


def degree_extremes(interval: BruhatInterval) -> tuple[int, int]:
    """(max up-degree over atoms, max down-degree over coatoms), the two cover
    statistics compared by the top-heaviness theorem."""
    top_rank = interval.top_rank
    if top_rank < 2:
        raise ValueError("degree extremes need an interval of rank >= 2")
    max_atom_up = max(len(interval.up[i]) for i in interval.ids_at_rank(1))
    max_coatom_down = max(len(interval.down[i]) for i in interval.ids_at_rank(top_rank - 1))
    return (max_atom_up, max_coatom_down)


# -- parabolic machinery ----------------------------------------------------------


@dataclass(frozen=True)
class ParabolicDecomposition:
    J: frozenset[int]
    quotient_part: Element  # no descents into J on the split side
    parabolic_part: Element  # lies in W_J
    side: str  # "right": w = quotient * parabolic; "left": w = parabolic * quotient


def parabolic_decompose(w: Element, J: Iterable[int], side: str = "right") -> ParabolicDecomposition:
    """The unique length-additive factorization across W^J x W_J.

    Right side strips right descents lying in J; the left side is the mirror
    through inverses.
    """
    Jset = frozenset(J)
    bad = [i for i in Jset if i not in w.simple_indices()]
    if bad:
        raise ValueError(f"generator indices {sorted(bad)} outside the group rank")
    if side == "right":
        quotient = w
        parabolic = w.identity_like()
        while True:
            ds = quotient.right_descents() & Jset
            if not ds:
                break
            i = min(ds)
            quotient = quotient.times_simple_right(i)
            parabolic = parabolic.times_simple_left(i)
        return ParabolicDecomposition(Jset, quotient, parabolic, "right")
    if side == "left":
        mirror = parabolic_decompose(w.inverse(), Jset, "right")
        return ParabolicDecomposition(
            Jset, mirror.quotient_part.inverse(), mirror.parabolic_part.inverse(), "left"
        )
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def longest_parabolic(identity_el: Element, J: Iterable[int]) -> Element:
    """w_0(J): greedy ascent in right weak order inside W_J."""
    Jset = frozenset(J)
    x = identity_el
    while True:
        ds = x.right_descents()
        free = [i for i in Jset if i not in ds]
        if not free:
            return x
        x = x.times_simple_right(min(free))


def enumerate_parabolic(identity_el: Element, J: Iterable[int]) -> list[Element]:
    """All of W_J, by BFS over the J-generators."""
    Jset = sorted(frozenset(J))
    seen = {identity_el}
    frontier = [identity_el]
    while frontier:
        nxt = []
        for x in frontier:
            for i in Jset:
                y = x.times_simple_right(i)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda e: (e.length(), e.images))


def is_bp_decomposition(w: Element, J: Iterable[int]) -> bool:
    """Billey-Postnikov condition on the right parabolic decomposition:
    supp(w^J) touches J only inside the left descents of w_J."""
    d = parabolic_decompose(w, J, "right")
    touching = d.quotient_part.support() & d.J
    return touching <= d.parabolic_part.left_descents()


def max_parabolic_below(u: Element, J: Iterable[int]) -> Element:
    """m(u, J): the maximum of [e, u] intersected with W_J.

    Existence is a theorem; uniqueness is verified here and a failure raises,
    since it would mean a bug in the order computations.
    """
    Jset = frozenset(J)
    candidates = [x for x in enumerate_parabolic(u.identity_like(), Jset) if bruhat_leq(x, u)]
    best = max(candidates, key=lambda x: x.length())
    for x in candidates:
        if not bruhat_leq(x, best):
            raise AssertionError(f"[e,u] also contains W_J element {x!r} above {best!r}")
    return best
