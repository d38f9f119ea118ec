"""Permutations of {1..n} in one-line notation, with the combinatorics needed
for Bruhat-order work: inversions, descents, pattern containment, minimal
inversions, and block (direct-sum) structure.

Conventions:
- One-line notation is 1-based: ``w.images[i-1] == w(i)``.
- Composition is functional, ``(u * v)(i) == u(v(i))``.
- Simple generators are the adjacent transpositions ``s_i = (i, i+1)`` for
  ``i = 1 .. n-1``; multiplying by ``s_i`` on the right swaps positions,
  on the left swaps values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


class ParseError(ValueError):
    """Malformed permutation text."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation.

    >>> w = Permutation((3, 4, 5, 2, 1))
    >>> w(1), w.n, w.length()
    (3, 5, 7)
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    # -- basic structure ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __repr__(self) -> str:
        return f"Permutation({self.images})"

    def one_line(self) -> str:
        """Compact one-line string, digits if n <= 9 else comma-separated."""
        if self.n <= 9:
            return "".join(str(v) for v in self.images)
        return ",".join(str(v) for v in self.images)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def identity_like(self) -> Permutation:
        return identity(self.n)

    def simple_indices(self) -> range:
        """Indices of the simple generators of the ambient group."""
        return range(1, self.n)

    # -- group operations ----------------------------------------------------

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        """
        >>> Permutation((3, 4, 5, 2, 1)).inverse().one_line()
        '54123'
        """
        inv = [0] * self.n
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def times_simple_right(self, i: int) -> Permutation:
        """Multiply by s_i on the right (swap positions i, i+1)."""
        im = list(self.images)
        im[i - 1], im[i] = im[i], im[i - 1]
        return Permutation(tuple(im))

    def times_simple_left(self, i: int) -> Permutation:
        """Multiply by s_i on the left (swap values i, i+1)."""
        im = list(self.images)
        p, q = im.index(i), im.index(i + 1)
        im[p], im[q] = im[q], im[p]
        return Permutation(tuple(im))

    def times_transposition_right(self, i: int, j: int) -> Permutation:
        im = list(self.images)
        im[i - 1], im[j - 1] = im[j - 1], im[i - 1]
        return Permutation(tuple(im))

    # -- length, descents, support -------------------------------------------

    def length(self) -> int:
        """Number of inversion pairs (i < j with w(i) > w(j)).

        >>> Permutation((4, 3, 2, 1)).length()
        6
        """
        im = self.images
        n = self.n
        return sum(1 for i in range(n) for j in range(i + 1, n) if im[i] > im[j])

    def right_descents(self) -> frozenset[int]:
        im = self.images
        return frozenset(i + 1 for i in range(self.n - 1) if im[i] > im[i + 1])

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    def support(self) -> frozenset[int]:
        """Simple generators appearing in any reduced expression.

        s_i lies in the support exactly when w does not stabilize {1..i}.
        """
        seen_max = 0
        out = []
        for i in range(1, self.n):
            seen_max = max(seen_max, self.images[i - 1])
            if seen_max != i:
                out.append(i)
        return frozenset(out)

    # -- cover moves -----------------------------------------------------------

    def minimal_inversions(self) -> list[tuple[int, int]]:
        """Inversions (i, j) with no straddling value in between; multiplying
        by t_ij on the right steps down one rank in Bruhat order.

        >>> Permutation((3, 4, 5, 2, 1)).minimal_inversions()
        [(1, 4), (2, 4), (3, 4), (4, 5)]
        """
        im = self.images
        n = self.n
        out = []
        for i in range(n):
            wi = im[i]
            best = 0  # largest value < wi seen strictly between i and j
            for j in range(i + 1, n):
                wj = im[j]
                if wj < wi:
                    if wj > best:
                        out.append((i + 1, j + 1))
                        best = wj
        out.sort()
        return out

    def down_covers(self) -> list[Permutation]:
        """All elements covered by this one in Bruhat order."""
        return [self.times_transposition_right(i, j) for i, j in self.minimal_inversions()]


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def simple_transposition(n: int, i: int) -> Permutation:
    return identity(n).times_simple_right(i)


def transposition(n: int, i: int, j: int) -> Permutation:
    return identity(n).times_transposition_right(i, j)


def longest_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    for im in itertools.permutations(range(1, n + 1)):
        yield Permutation(im)


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation, either a digit string (n <= 9) or
    comma-separated integers.

    >>> parse_permutation("34521").images
    (3, 4, 5, 2, 1)
    >>> parse_permutation("1,2,3").images
    (1, 2, 3)
    """
    text = text.strip()
    if not text:
        raise ParseError("empty permutation text")
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
        values = []
        for t in tokens:
            if not t or not (t.isdigit() or (t[0] == "-" and t[1:].isdigit())):
                raise ParseError(f"bad token {t!r} in permutation text")
            values.append(int(t))
    else:
        if not text.isdigit():
            raise ParseError(f"bad token {text!r}: expected digits or comma-separated integers")
        values = [int(c) for c in text]
    n = len(values)
    for v in values:
        if not 1 <= v <= n:
            raise ParseError(f"value {v} out of range 1..{n}")
    if len(set(values)) != n:
        dup = next(v for v in values if values.count(v) > 1)
        raise ParseError(f"repeated value {dup}: input is not a bijection")
    return Permutation(tuple(values))


# -- pattern containment -------------------------------------------------------


@dataclass(frozen=True)
class PatternOccurrence:
    """An occurrence of ``pattern`` in some permutation at ``indices``
    (strictly increasing positions)."""

    pattern: Permutation
    indices: tuple[int, ...]


def _matches(values: Sequence[int], pattern: tuple[int, ...]) -> bool:
    k = len(pattern)
    for a in range(k):
        for b in range(a + 1, k):
            if (values[a] < values[b]) != (pattern[a] < pattern[b]):
                return False
    return True


def occurrence_values_valid(w: Permutation, occ: PatternOccurrence) -> bool:
    ids = occ.indices
    if len(ids) != occ.pattern.n or any(ids[a] >= ids[a + 1] for a in range(len(ids) - 1)):
        return False
    if ids and not (1 <= ids[0] and ids[-1] <= w.n):
        return False
    return _matches([w(i) for i in ids], occ.pattern.images)


def contains_pattern(w: Permutation, p: Permutation) -> Optional[PatternOccurrence]:
    """Lexicographically least occurrence of p in w, or None if w avoids p.

    Plain DFS over index tuples with pruning by partial relative order;
    patterns here never exceed degree 5, so nothing fancier is warranted.
    """
    k = p.n
    if k > w.n:
        return None
    pat = p.images
    im = w.images
    n = w.n
    chosen: list[int] = []

    def extend(start: int) -> Optional[tuple[int, ...]]:
        depth = len(chosen)
        if depth == k:
            return tuple(i + 1 for i in chosen)
        for i in range(start, n - (k - depth) + 1):
            v = im[i]
            ok = all((im[c] < v) == (pat[d] < pat[depth]) for d, c in enumerate(chosen))
            if ok:
                chosen.append(i)
                hit = extend(i + 1)
                if hit is not None:
                    return hit
                chosen.pop()
        return None

    found = extend(0)
    if found is None:
        return None
    return PatternOccurrence(p, found)


def all_occurrences(w: Permutation, p: Permutation) -> Iterator[PatternOccurrence]:
    for ids in itertools.combinations(range(1, w.n + 1), p.n):
        if _matches([w(i) for i in ids], p.images):
            yield PatternOccurrence(p, ids)


def is_minimal_occurrence(w: Permutation, occ: PatternOccurrence) -> bool:
    """True when no competing occurrence fits weakly inside this one (in both
    position and value span) and strictly shrinks at least one of the four
    boundaries."""
    if not occurrence_values_valid(w, occ):
        raise ValueError(f"not an occurrence of {occ.pattern.one_line()} in {w.one_line()}: {occ.indices}")
    a1, ak = occ.indices[0], occ.indices[-1]
    vals = [w(i) for i in occ.indices]
    lo, hi = min(vals), max(vals)
    for other in all_occurrences(w, occ.pattern):
        if other.indices == occ.indices:
            continue
        b1, bk = other.indices[0], other.indices[-1]
        ovals = [w(i) for i in other.indices]
        olo, ohi = min(ovals), max(ovals)
        if b1 >= a1 and bk <= ak and olo >= lo and ohi <= hi:
            if b1 > a1 or bk < ak or olo > lo or ohi < hi:
                return False
    return True


def minimal_occurrence(w: Permutation, p: Permutation) -> Optional[PatternOccurrence]:
    """Some minimal occurrence of p in w (every containment admits one)."""
    found = False
    for o in all_occurrences(w, p):
        found = True
        if is_minimal_occurrence(w, o):
            return o
    if found:
        raise AssertionError("containment without a minimal occurrence")
    return None


# -- block (direct sum) structure ----------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    """Finest splitting of w into a direct sum over consecutive stabilized
    intervals of positions."""

    blocks: tuple[tuple[int, ...], ...]
    factors: tuple[Permutation, ...]

    @property
    def count(self) -> int:
        return len(self.blocks)


def block_decompose(w: Permutation) -> BlockDecomposition:
    """Split at every m with w({1..m}) = {1..m}.

    >>> d = block_decompose(Permutation((2, 1, 4, 3)))
    >>> d.blocks
    ((1, 2), (3, 4))
    >>> [f.one_line() for f in d.factors]
    ['21', '21']
    """
    blocks = []
    factors = []
    start = 1
    seen_max = 0
    for i in range(1, w.n + 1):
        seen_max = max(seen_max, w(i))
        if seen_max == i:
            blocks.append(tuple(range(start, i + 1)))
            factors.append(Permutation(tuple(w(j) - start + 1 for j in range(start, i + 1))))
            start = i + 1
    return BlockDecomposition(tuple(blocks), tuple(factors))


def block_count(w: Permutation) -> int:
    seen_max = 0
    b = 0
    for i in range(1, w.n + 1):
        seen_max = max(seen_max, w(i))
        if seen_max == i:
            b += 1
    return b
