"""Label lists and the cube paths they trace.

A list is a sequence of labels from {1..n} with no label repeated twice in a
row. Reading the labels as coordinate flips walks the vertices of the n-cube;
the list is *valid* when that walk never revisits a vertex. Valid lists of
length k encode chains of k+1 unfolded facets of the n-orthoplex.

Cube vertices are bitmasks: coordinate i lives at bit i-1, so label a flips
``1 << (a - 1)``. The string form writes coordinates x1..xn left to right
("101" is x1=1, x2=0, x3=1).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence


class InvalidListError(ValueError):
    """The label sequence is not a well-formed list."""


@dataclass(frozen=True)
class UnfoldList:
    """A label sequence with its dimension bound.

    Well-formedness (labels in range, no immediate repeats) is enforced at
    construction. Whether the generated cube path revisits a vertex is a
    separate question; see :func:`is_valid_list`.
    """

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidListError(f"dimension bound must be >= 1, got {self.n}")
        for i, a in enumerate(self.entries):
            if not 1 <= a <= self.n:
                raise InvalidListError(f"entry {a} at position {i} outside 1..{self.n}")
            if i > 0 and a == self.entries[i - 1]:
                raise InvalidListError(f"entry {a} repeated twice in a row at position {i}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def reversed(self) -> "UnfoldList":
        return UnfoldList(self.n, self.entries[::-1])


def make_list(n: int, entries: Sequence[int]) -> UnfoldList:
    return UnfoldList(n, tuple(entries))


@dataclass(frozen=True)
class CubePath:
    """A walk on the n-cube in which consecutive vertices differ in one bit."""

    n: int
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        top = 1 << self.n
        if not self.vertices:
            raise InvalidListError("a cube path has at least one vertex")
        for v in self.vertices:
            if not 0 <= v < top:
                raise InvalidListError(f"vertex {v} outside the {self.n}-cube")
        for u, v in zip(self.vertices, self.vertices[1:]):
            d = u ^ v
            if d == 0 or d & (d - 1):
                raise InvalidListError(f"step {u:b}->{v:b} does not flip exactly one bit")

    def is_self_avoiding(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)


def parse_vertex(s: str) -> int:
    """Vertex bitmask from a coordinate string like "101" (x1 first)."""
    v = 0
    for i, ch in enumerate(s):
        if ch == "1":
            v |= 1 << i
        elif ch != "0":
            raise InvalidListError(f"bad coordinate character {ch!r}")
    return v

def format_vertex(v: int, n: int) -> str:
    return "".join("1" if v >> i & 1 else "0" for i in range(n))


def list_to_path(lst: UnfoldList, start: int = 0) -> CubePath:
    """The cube walk from ``start`` flipping bit a_i at step i."""
    if not 0 <= start < 1 << lst.n:
        raise InvalidListError(f"start vertex {start} outside the {lst.n}-cube")
    verts = [start]
    v = start
    for a in lst.entries:
        v ^= 1 << (a - 1)
        verts.append(v)
    return CubePath(lst.n, tuple(verts))


def is_valid_list(lst: UnfoldList) -> bool:
    """True iff the generated cube path never revisits a vertex.

    Implemented as distinct running parity masks, O(k) expected. Equivalent
    to the quadratic scan for a consecutive sublist in which every entry
    occurs an even number of times (see :func:`shortest_even_window`).
    """
    mask = 0
    seen = {0}
    for a in lst.entries:
        mask ^= 1 << (a - 1)
        if mask in seen:
            return False
        seen.add(mask)
    return True


def shortest_even_window(lst: UnfoldList) -> tuple[int, int] | None:
    """Shortest consecutive window in which each entry occurs an even number
    of times, as 1-based inclusive positions, or None for a valid list.

    Ties prefer the earliest window. A window [i, j] with all-even
    multiplicities is exactly a pair of equal prefix parity masks P_{i-1} and
    P_j, so the scan compares prefixes pairwise.
    """
    prefixes = [0]
    mask = 0
    for a in lst.entries:
        mask ^= 1 << (a - 1)
        prefixes.append(mask)
    best: tuple[int, int] | None = None
    k = len(prefixes)
    for i in range(k):
        for j in range(i + 1, k):
            if prefixes[i] == prefixes[j]:
                if best is None or j - i < best[1] - best[0]:
                    best = (i + 1, j)
                break  # later j only lengthens the window for this i
    return best


def all_even_sublist_scan(lst: UnfoldList) -> bool:
    """Literal multiset scan over all consecutive sublists (test oracle).

    Counts multiplicities with a Counter per window; True iff some window has
    every entry even. Cubic and only used to cross-check the fast check.
    """
    entries = lst.entries
    k = len(entries)
    for i in range(k):
        counts: Counter[int] = Counter()
        for j in range(i, k):
            counts[entries[j]] += 1
            if all(c % 2 == 0 for c in counts.values()):
                return True
    return False


def relabel_first_occurrence(entries: Sequence[int]) -> tuple[int, ...]:
    """Rename labels so they first appear in increasing order 1, 2, 3, ..."""
    names: dict[int, int] = {}
    out = []
    for a in entries:
        if a not in names:
            names[a] = len(names) + 1
        out.append(names[a])
    return tuple(out)


def canonicalize_list(lst: UnfoldList) -> UnfoldList:
    """Canonical representative under relabeling and reversal.

    Both the list and its reverse are relabeled by first occurrence; the
    lexicographically smaller of the two is the representative.
    """
    fwd = relabel_first_occurrence(lst.entries)
    rev = relabel_first_occurrence(lst.entries[::-1])
    return UnfoldList(lst.n, min(fwd, rev))


def is_self_reverse(lst: UnfoldList) -> bool:
    """True when the list and its reverse are the same up to relabeling."""
    return relabel_first_occurrence(lst.entries) == relabel_first_occurrence(
        lst.entries[::-1]
    )


def enumerate_valid_lists(
    n: int,
    length: int,
    prefix: Sequence[int] = (),
    up_to_relabeling: bool = False,
) -> Iterator[UnfoldList]:
    """All valid lists of exactly ``length`` entries, depth-first lexicographic.

    ``prefix`` restricts the stream to lists extending it, which is how work
    is partitioned across processes: the streams for the prefixes of a fixed
    depth concatenate, in order, to the unrestricted stream.

    With ``up_to_relabeling`` only lists whose labels first appear in
    increasing order are emitted, one per relabeling class.
    """
    if length < 0:
        raise InvalidListError("length must be >= 0")
    pre = tuple(prefix)
    base = UnfoldList(n, pre)  # validates the prefix labels
    mask = 0
    seen = {0}
    for a in pre:
        mask ^= 1 << (a - 1)
        if mask in seen:
            return  # invalid prefix generates nothing
        seen.add(mask)
    max_used = max(pre, default=0)
    if up_to_relabeling and pre and relabel_first_occurrence(pre) != pre:
        return
    entries = list(pre)

    def rec(mask: int, last: int, max_used: int) -> Iterator[UnfoldList]:
        if len(entries) == length:
            yield UnfoldList(n, tuple(entries))
            return
        limit = min(max_used + 1, n) if up_to_relabeling else n
        for a in range(1, limit + 1):
            if a == last:
                continue
            m2 = mask ^ (1 << (a - 1))
            if m2 in seen:
                continue
            seen.add(m2)
            entries.append(a)
            yield from rec(m2, a, max(max_used, a))
            entries.pop()
            seen.remove(m2)

    if len(pre) > length:
        return
    yield from rec(mask, pre[-1] if pre else 0, max_used)


def count_valid_lists(n: int, length: int, up_to_relabeling: bool = False) -> int:
    """Number of valid lists of exactly ``length`` entries, without
    materializing them."""
    if length < 0:
        raise InvalidListError("length must be >= 0")
    total = 0
    seen = {0}

    def rec(mask: int, last: int, depth: int, max_used: int) -> None:
        nonlocal total
        if depth == length:
            total += 1
            return
        limit = min(max_used + 1, n) if up_to_relabeling else n
        for a in range(1, limit + 1):
            if a == last:
                continue
            m2 = mask ^ (1 << (a - 1))
            if m2 in seen:
                continue
            seen.add(m2)
            rec(m2, a, depth + 1, max(max_used, a))
            seen.remove(m2)

    rec(0, 0, 0, 0)
    return total
