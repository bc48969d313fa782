"""Dual 1-skeletons and their censuses up to symmetry.

Unfoldings of a polytope correspond to spanning trees of the dual
1-skeleton: the cube graph Q_n for the n-orthoplex, the complete graph
K_{n+1} for the n-simplex, and the cross-polytope graph (the dual of the
cube) for the n-cube. Graphs carry explicit automorphism generators so a
census can reduce modulo symmetry.

Symmetry reduction is streaming: a spanning tree or path is counted when it
is the lexicographic minimum of its orbit. No orbit table is stored, so the
large flag-gated censuses run in constant memory.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .lists import CubePath, count_valid_lists, enumerate_valid_lists

TREE_CENSUS_GATE = 1_000_000  # spanning trees; larger censuses need force=True


class ResourceLimitError(RuntimeError):
    """The request exceeds the default resource bounds; pass force to override."""


@dataclass(frozen=True)
class SkeletonGraph:
    """Vertex/edge graph with automorphism generators.

    Edges are sorted pairs in sorted order. Every generator must be a
    permutation of the vertices mapping edges to edges; this is checked at
    construction.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    automorphisms: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        eset = set()
        for a, b in self.edges:
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge ({a},{b}) endpoint out of range")
            if a >= b:
                raise ValueError(f"edge ({a},{b}) must be a sorted pair")
            eset.add((a, b))
        if len(eset) != len(self.edges):
            raise ValueError("duplicate edges")
        for g in self.automorphisms:
            if sorted(g) != list(range(self.vertex_count)):
                raise ValueError("generator is not a vertex permutation")
            for a, b in self.edges:
                x, y = g[a], g[b]
                if (min(x, y), max(x, y)) not in eset:
                    raise ValueError("generator does not map edges to edges")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def cube_graph(n: int) -> SkeletonGraph:
    """1-skeleton of the n-cube; vertices are bitmasks 0..2^n-1.

    Generators (swap of the first two coordinates, cyclic coordinate shift,
    flip of the first coordinate) generate the full hyperoctahedral group of
    order 2^n * n!.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    size = 1 << n
    edges = tuple(
        (v, v ^ (1 << b))
        for v in range(size)
        for b in range(n)
        if v < v ^ (1 << b)
    )
    gens = []
    if n >= 2:
        gens.append(
            tuple((v & ~3) | ((v & 1) << 1) | ((v >> 1) & 1) for v in range(size))
        )
        gens.append(
            tuple(((v << 1) | (v >> (n - 1))) & (size - 1) for v in range(size))
        )
    gens.append(tuple(v ^ 1 for v in range(size)))
    return SkeletonGraph(size, edges, tuple(gens))


def cross_polytope_graph(n: int) -> SkeletonGraph:
    """1-skeleton of the n-orthoplex: 2n vertices, all edges except the n
    antipodal pairs (i, i+n). This is the dual skeleton of the n-cube."""
    if n < 2:
        raise ValueError("n must be >= 2")
    size = 2 * n
    edges = tuple(
        (i, j) for i in range(size) for j in range(i + 1, size) if j - i != n
    )
    gens = []

    def pair_swap(v: int) -> int:
        table = {0: 1, 1: 0, n: n + 1, n + 1: n}
        return table.get(v, v)

    def pair_rotate(v: int) -> int:
        return (v + 1) % n if v < n else (v - n + 1) % n + n

    def antipode_flip(v: int) -> int:
        return n if v == 0 else (0 if v == n else v)

    gens.append(tuple(pair_swap(v) for v in range(size)))
    gens.append(tuple(pair_rotate(v) for v in range(size)))
    gens.append(tuple(antipode_flip(v) for v in range(size)))
    return SkeletonGraph(size, edges, tuple(gens))


def complete_graph(m: int) -> SkeletonGraph:
    """K_m with the full symmetric group; the dual skeleton of the
    (m-1)-simplex."""
    if m < 2:
        raise ValueError("m must be >= 2")
    edges = tuple((i, j) for i in range(m) for j in range(i + 1, m))
    transpose = tuple([1, 0] + list(range(2, m)))
    rotate = tuple((i + 1) % m for i in range(m))
    return SkeletonGraph(m, edges, (transpose, rotate))


@lru_cache(maxsize=32)
def group_elements(graph: SkeletonGraph) -> tuple[tuple[int, ...], ...]:
    """Closure of the automorphism generators (includes the identity)."""
    identity = tuple(range(graph.vertex_count))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in graph.automorphisms:
                q = tuple(g[p[i]] for i in range(graph.vertex_count))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return tuple(sorted(seen))


def kirchhoff_count(graph: SkeletonGraph) -> int:
    """Spanning-tree count via the Laplacian minor determinant.

    Fraction-free Bareiss elimination over Python integers, so the result is
    exact for any graph size we handle.
    """
    n = graph.vertex_count
    lap = [[0] * n for _ in range(n)]
    for a, b in graph.edges:
        lap[a][a] += 1
        lap[b][b] += 1
        lap[a][b] -= 1
        lap[b][a] -= 1
    a = [row[1:] for row in lap[1:]]
    m = n - 1
    if m == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(m - 1):
        if a[k][k] == 0:
            for r in range(k + 1, m):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[m - 1][m - 1]


def spanning_tree_masks(graph: SkeletonGraph) -> Iterator[int]:
    """All spanning trees as edge-index bitmasks.

    Contract/delete recursion: an edge is either contracted into the tree or
    deleted, and a branch is abandoned as soon as the remaining edges cannot
    connect the contracted components, so every leaf emits a tree.
    """
    nv = graph.vertex_count
    edges = graph.edges
    m = len(edges)

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def remaining_connects(parent: list[int], idx: int, components: int) -> bool:
        local: dict[int, int] = {}

        def f(x: int) -> int:
            local.setdefault(x, x)
            while local[x] != x:
                local[x] = local[local[x]]
                x = local[x]
            return x

        count = components
        for ei in range(idx, m):
            a, b = edges[ei]
            ra, rb = f(find(parent, a)), f(find(parent, b))
            if ra != rb:
                local[ra] = rb
                count -= 1
                if count == 1:
                    return True
        return count == 1

    def rec(idx: int, mask: int, components: int, parent: list[int]) -> Iterator[int]:
        if components == 1:
            yield mask
            return
        if idx == m:
            return
        a, b = edges[idx]
        ra, rb = find(parent, a), find(parent, b)
        if ra != rb:
            child = list(parent)
            child[ra] = rb
            yield from rec(idx + 1, mask | (1 << idx), components - 1, child)
        if remaining_connects(parent, idx + 1, components):
            yield from rec(idx + 1, mask, components, parent)

    yield from rec(0, 0, nv, list(range(nv)))


def _edge_permutation_tables(graph: SkeletonGraph) -> list[tuple[int, ...]]:
    index = {e: i for i, e in enumerate(graph.edges)}
    tables = []
    identity = tuple(range(graph.vertex_count))
    for p in group_elements(graph):
        if p == identity:
            continue
        tables.append(
            tuple(
                index[(p[a], p[b])] if p[a] < p[b] else index[(p[b], p[a])]
                for a, b in graph.edges
            )
        )
    return tables


def _mask_is_canonical(mask: int, tables: Sequence[tuple[int, ...]]) -> bool:
    bits = []
    m = mask
    while m:
        low = m & -m
        bits.append(low.bit_length() - 1)
        m ^= low
    for tab in tables:
        image = 0
        for e in bits:
            image |= 1 << tab[e]
        if image < mask:
            return False
    return True


@dataclass(frozen=True)
class TreeCensus:
    total: int    # spanning trees, unreduced
    classes: int  # orbits under the automorphism group


def count_spanning_trees_up_to_symmetry(
    graph: SkeletonGraph,
    force: bool = False,
    progress: Callable[[int, int], None] | None = None,
) -> TreeCensus:
    """Spanning-tree census reduced by the automorphism group.

    The unreduced total is cross-checked against the Laplacian determinant;
    a mismatch raises. Censuses beyond TREE_CENSUS_GATE trees are refused
    without ``force`` (the 16-vertex cube skeleton has 42,467,328 trees and
    takes on the order of an hour). ``progress`` receives (trees_seen,
    total_expected) every 2**17 trees.
    """
    expected = kirchhoff_count(graph)
    if expected > TREE_CENSUS_GATE and not force:
        raise ResourceLimitError(
            f"{expected} spanning trees exceeds the default gate; pass force=True"
        )
    tables = _edge_permutation_tables(graph)
    total = 0
    classes = 0
    for mask in spanning_tree_masks(graph):
        total += 1
        if _mask_is_canonical(mask, tables):
            classes += 1
        if progress is not None and total % (1 << 17) == 0:
            progress(total, expected)
    if total != expected:
        raise AssertionError(
            f"enumerated {total} spanning trees, determinant says {expected}"
        )
    return TreeCensus(total=total, classes=classes)


def spanning_tree_representatives(
    graph: SkeletonGraph, force: bool = False
) -> Iterator[tuple[tuple[int, int], ...]]:
    """One spanning tree per symmetry class, as tuples of vertex pairs."""
    expected = kirchhoff_count(graph)
    if expected > TREE_CENSUS_GATE and not force:
        raise ResourceLimitError(
            f"{expected} spanning trees exceeds the default gate; pass force=True"
        )
    tables = _edge_permutation_tables(graph)
    for mask in spanning_tree_masks(graph):
        if _mask_is_canonical(mask, tables):
            yield tuple(graph.edges[e] for e in range(graph.edge_count) if mask >> e & 1)


# ---------------------------------------------------------------------------
# Spanning paths of the cube skeleton
# ---------------------------------------------------------------------------
#
# The automorphism group acts freely on directed Hamiltonian paths (an
# automorphism fixing a vertex sequence fixes every vertex), so classes up to
# symmetry correspond one-to-one with paths from a fixed start whose labels
# first appear in increasing order. Counting those is a pruned DFS.

PATH_CENSUS_MAX_DEFAULT = 4  # Q5 takes ~80s compiled / hours interpreted


@dataclass(frozen=True)
class PathCensus:
    classes: int        # directed spanning paths up to the automorphism group
    self_reverse: int   # classes congruent to their own reverse
    length: int

    @property
    def reversal_merged(self) -> int:
        """Classes when reversal is additionally quotiented out."""
        return self.self_reverse + (self.classes - self.self_reverse) // 2


def count_spanning_paths_up_to_symmetry(n: int, force: bool = False) -> int:
    """Hamiltonian paths of Q_n up to the full automorphism group.

    Directed paths are counted; reversal is a separate quotient (see
    :func:`spanning_path_census`) because a path and its reverse are usually
    not related by an automorphism. The convention reproduces the published
    values 3 (Q3), 238 (Q4), and 48,828,036 (Q5).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 5:
        raise ResourceLimitError("path census beyond Q5 is out of reach")
    if n > PATH_CENSUS_MAX_DEFAULT and not force:
        raise ResourceLimitError(
            "the Q5 path census visits ~4.5e9 nodes; pass force=True"
        )
    length = (1 << n) - 1
    if n > PATH_CENSUS_MAX_DEFAULT:
        counter = _numba_canonical_counter()
        if counter is not None:
            return int(counter(n))
    return count_valid_lists(n, length, up_to_relabeling=True)


def spanning_path_census(n: int) -> PathCensus:
    """Full census with reversal analysis; materializes representatives, so
    limited to n <= 4."""
    if n > PATH_CENSUS_MAX_DEFAULT:
        raise ResourceLimitError("reversal analysis materializes representatives; n <= 4")
    length = (1 << n) - 1
    from .lists import is_self_reverse

    classes = 0
    self_rev = 0
    for lst in enumerate_valid_lists(n, length, up_to_relabeling=True):
        classes += 1
        if is_self_reverse(lst):
            self_rev += 1
    return PathCensus(classes=classes, self_reverse=self_rev, length=length)


def _numba_canonical_counter():
    """Compiled DFS for the Q5 census, or None when numba is unavailable."""
    try:
        from numba import njit
    except ImportError:
        return None

    import numpy as np

    @njit(cache=True)
    def kernel(n):
        target = (1 << n) - 1
        verts = np.zeros(target + 1, dtype=np.int64)
        labels = np.zeros(target + 1, dtype=np.int64)
        maxused = np.zeros(target + 1, dtype=np.int64)
        nxt = np.zeros(target + 2, dtype=np.int64)
        visited = np.zeros(1 << n, dtype=np.uint8)
        visited[0] = 1
        nxt[0] = 1
        depth = 0
        count = 0
        while depth >= 0:
            if depth == target:
                count += 1
                visited[verts[depth]] = 0
                depth -= 1
                continue
            a = nxt[depth]
            lim = maxused[depth] + 1
            if lim > n:
                lim = n
            advanced = False
            while a <= lim:
                if a != labels[depth] or depth == 0:
                    w = verts[depth] ^ (1 << (a - 1))
                    if visited[w] == 0:
                        nxt[depth] = a + 1
                        depth += 1
                        verts[depth] = w
                        labels[depth] = a
                        mu = maxused[depth - 1]
                        if a > mu:
                            mu = a
                        maxused[depth] = mu
                        nxt[depth] = 1
                        visited[w] = 1
                        advanced = True
                        break
                a += 1
            if not advanced:
                visited[verts[depth]] = 0
                depth -= 1
        return count

    return kernel


# ---------------------------------------------------------------------------
# Maximal path extensions
# ---------------------------------------------------------------------------

def maximal_extensions(path: CubePath) -> set[CubePath]:
    """All inextensible extensions of a self-avoiding path, at both ends.

    The head is grown first; at every head position the search may also
    freeze the head and grow the tail until it sticks, keeping the extension
    only if the frozen head is still stuck in the final vertex set. Each
    undirected maximal extension is produced once (paths are canonicalized
    against reversal).
    """
    if not path.is_self_avoiding():
        raise ValueError("path must be self-avoiding")
    n = path.n
    neighbor_bits = [1 << b for b in range(n)]
    out: set[CubePath] = set()
    visited = set(path.vertices)

    def emit(seq: tuple[int, ...]) -> None:
        rev = seq[::-1]
        out.add(CubePath(n, min(seq, rev)))

    def grow_tail(seq: list[int]) -> None:
        tail = seq[0]
        extended = False
        for bit in neighbor_bits:
            w = tail ^ bit
            if w not in visited:
                extended = True
                visited.add(w)
                seq.insert(0, w)
                grow_tail(seq)
                seq.pop(0)
                visited.remove(w)
        if not extended:
            head = seq[-1]
            if all(head ^ bit in visited for bit in neighbor_bits):
                emit(tuple(seq))

    def grow_head(seq: list[int]) -> None:
        grow_tail(seq)  # freeze the head here and finish the tail
        head = seq[-1]
        for bit in neighbor_bits:
            w = head ^ bit
            if w not in visited:
                visited.add(w)
                seq.append(w)
                grow_head(seq)
                seq.pop()
                visited.remove(w)

    grow_head(list(path.vertices))
    return out


def min_maximal_path_vertices(n: int) -> tuple[int, int]:
    """(fewest vertices over all inextensible paths of Q_n, number of
    directed inextensible paths). Exhaustive scan from every start vertex."""
    size = 1 << n
    neighbors = [[v ^ (1 << b) for b in range(n)] for v in range(size)]
    best = size + 1
    count = 0

    def rec(start: int, head: int, visited: int, length: int) -> None:
        nonlocal best, count
        extended = False
        for w in neighbors[head]:
            if not visited >> w & 1:
                extended = True
                rec(start, w, visited | (1 << w), length + 1)
        if not extended and all(visited >> w & 1 for w in neighbors[start]):
            count += 1
            if length < best:
                best = length

    for s in range(size):
        rec(s, s, 1 << s, 1)
    return best, count
