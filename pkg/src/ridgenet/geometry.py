"""Embedding facet chains and trees into the hyperplane sum(x) = 1.

The first facet is the convex hull of the standard basis vectors, recorded
as the identity matrix (column i is vertex i). Reflecting across the ridge
opposite vertex a is right-multiplication by the matrix that rewrites
column a; a chain or tree of facets is a product of such reflections, so
every placement matrix is exact and every column stays in the hyperplane.

Overlap of two placed facets is decided exactly: a fast centroid-distance
interval settles the clear cases, and the rest reduce to a rational LP
maximizing the smallest barycentric coordinate of a common point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import lp
from .exact import DimensionError, RatMatrix
from .lists import UnfoldList


def reflection_matrix(n: int, a: int) -> RatMatrix:
    """Reflection across the ridge opposite vertex a: the identity except
    column a, which is (2/(n-1), ..., -1, ..., 2/(n-1)) with -1 in row a."""
    if n < 2:
        raise DimensionError("reflections need n >= 2")
    if not 1 <= a <= n:
        raise ValueError(f"vertex label {a} outside 1..{n}")
    off = Fraction(2, n - 1)
    col = a - 1
    rows = []
    for i in range(n):
        row = [Fraction(1) if i == j else Fraction(0) for j in range(n)]
        row[col] = Fraction(-1) if i == col else off
        rows.append(tuple(row))
    return RatMatrix(tuple(rows))


@dataclass(frozen=True)
class FacetPlacement:
    """One placed facet: column i of ``coords`` is the vertex labeled i+1.

    Columns must sum to 1 (the facet lies in the hyperplane). Affine
    independence of the columns is guaranteed for anything built from
    reflections (the matrices are unimodular) and is not re-checked here.
    """

    n: int
    coords: RatMatrix

    def __post_init__(self) -> None:
        if self.coords.order != self.n:
            raise DimensionError("coordinate matrix order must equal n")
        for j, s in enumerate(self.coords.column_sums()):
            if s != 1:
                raise ValueError(f"column {j} sums to {s}, not 1")

    @staticmethod
    def initial(n: int) -> "FacetPlacement":
        return FacetPlacement(n, RatMatrix.identity(n))

    def vertex(self, label: int) -> tuple[Fraction, ...]:
        return self.coords.column(label - 1)

    def centroid(self) -> tuple[Fraction, ...]:
        return tuple(s / self.n for s in self.coords.row_sums())

    def reflect(self, a: int) -> "FacetPlacement":
        return FacetPlacement(self.n, self.coords @ reflection_matrix(self.n, a))


@dataclass(frozen=True)
class Unfolding:
    """A tree of placements; ``edges`` holds (parent, child, ridge label).

    The root placement (index 0) is the identity. Adjacent placements agree
    except in the column named by the ridge label.
    """

    n: int
    placements: tuple[FacetPlacement, ...]
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if not self.placements:
            raise ValueError("an unfolding has at least one facet")
        if self.placements[0].coords != RatMatrix.identity(self.n):
            raise ValueError("root placement must be the identity")
        if len(self.edges) != len(self.placements) - 1:
            raise ValueError("edge count must be facet count minus one")
        seen = {0}
        for parent, child, label in self.edges:
            if parent not in seen or child in seen:
                raise ValueError("edges must form a tree rooted at placement 0")
            if not 1 <= label <= self.n:
                raise ValueError(f"ridge label {label} outside 1..{self.n}")
            seen.add(child)

    @property
    def facet_count(self) -> int:
        return len(self.placements)

    def adjacent_pairs(self) -> set[tuple[int, int]]:
        return {(min(p, c), max(p, c)) for p, c, _ in self.edges}


def embed_chain(lst: UnfoldList) -> Unfolding:
    """The chain of len(lst)+1 placements generated by successive
    reflections; placement k differs from placement k-1 in column a_k."""
    placements = [FacetPlacement.initial(lst.n)]
    for a in lst.entries:
        placements.append(placements[-1].reflect(a))
    edges = tuple((k, k + 1, a) for k, a in enumerate(lst.entries))
    return Unfolding(lst.n, tuple(placements), edges)


def embed_tree(
    n: int, labeled_edges: Iterable[tuple[int, int, int]], node_count: int | None = None
) -> Unfolding:
    """Develop a labeled tree of facets: node 0 gets the identity, and each
    child is its parent reflected across the labeled ridge.

    ``labeled_edges`` is any ordering of (parent, child, label) with nodes
    0..m-1 forming a tree rooted at 0.
    """
    edge_list = list(labeled_edges)
    m = node_count if node_count is not None else len(edge_list) + 1
    if len(edge_list) != m - 1:
        raise ValueError("a tree on m nodes has m-1 edges")
    children: dict[int, list[tuple[int, int]]] = {}
    for parent, child, label in edge_list:
        if not (0 <= parent < m and 0 <= child < m):
            raise ValueError("edge endpoint out of range")
        children.setdefault(parent, []).append((child, label))
    placements: list[FacetPlacement | None] = [None] * m
    placements[0] = FacetPlacement.initial(n)
    ordered_edges = []
    stack = [0]
    placed = 1
    while stack:
        v = stack.pop()
        for child, label in sorted(children.get(v, [])):
            if placements[child] is not None:
                raise ValueError("edges do not form a tree rooted at 0")
            placements[child] = placements[v].reflect(label)
            ordered_edges.append((v, child, label))
            placed += 1
            stack.append(child)
    if placed != m:
        raise ValueError("edges do not reach every node")
    return Unfolding(n, tuple(placements), tuple(ordered_edges))  # type: ignore[arg-type]


def orthoplex_tree_unfolding(
    n: int, tree_edges: Iterable[tuple[int, int]]
) -> Unfolding:
    """Unfolding of the n-orthoplex from a spanning tree of the cube graph.

    Facets of the orthoplex are cube vertices (bitmasks); the ridge between
    two adjacent facets is labeled by the coordinate in which they differ,
    so the reflection label is the index of the flipped bit plus one. The
    lowest cube vertex in the tree is the root facet.
    """
    edges = [tuple(e) for e in tree_edges]
    verts = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(verts)}
    root = verts[0]
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for a, b in edges:
        d = a ^ b
        if d == 0 or d & (d - 1):
            raise ValueError(f"tree edge ({a},{b}) is not a cube edge")
        adj[a].append(b)
        adj[b].append(a)
    labeled: list[tuple[int, int, int]] = []
    stack = [root]
    seen = {root}
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                label = (v ^ w).bit_length()  # flipped bit, 1-based
                labeled.append((index[v], index[w], label))
                stack.append(w)
    if len(seen) != len(verts):
        raise ValueError("edges do not form a tree")
    return embed_tree(n, labeled, node_count=len(verts))


def simplex_tree_unfolding(n: int, tree_edges: Iterable[tuple[int, int]]) -> Unfolding:
    """Unfolding of the n-simplex from a spanning tree of K_{n+1}.

    Facet i of the simplex is opposite polytope vertex i; facets i and j
    share the ridge avoiding both vertices, and unfolding facet j from facet
    i reflects across the ridge of facet i opposite vertex j. Each facet
    keeps a map from polytope vertices to placement columns; the new vertex
    of the child (vertex i) inherits the column freed by vertex j.
    """
    edges = [tuple(e) for e in tree_edges]
    verts = sorted({v for e in edges for v in e})
    if verts and (verts[0] < 0 or verts[-1] > n):
        raise ValueError("facet ids must lie in 0..n")
    index = {v: i for i, v in enumerate(verts)}
    root = verts[0]
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for a, b in edges:
        if a == b:
            raise ValueError("self-loop")
        adj[a].append(b)
        adj[b].append(a)
    # column assignment for the root facet: its vertices in increasing order
    col_of: dict[int, dict[int, int]] = {
        root: {v: c + 1 for c, v in enumerate(sorted(set(range(n + 1)) - {root}))}
    }
    labeled: list[tuple[int, int, int]] = []
    stack = [root]
    seen = {root}
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            label = col_of[i][j]
            mapping = dict(col_of[i])
            del mapping[j]
            mapping[i] = label
            col_of[j] = mapping
            labeled.append((index[i], index[j], label))
            stack.append(j)
    if len(seen) != len(verts):
        raise ValueError("edges do not form a tree")
    return embed_tree(n, labeled, node_count=len(verts))


# ---------------------------------------------------------------------------
# Overlap decisions
# ---------------------------------------------------------------------------

class OverlapKind(enum.Enum):
    MUST_OVERLAP_BY_CENTROID = "MustOverlapByCentroid"
    CANNOT_OVERLAP_BY_CENTROID = "CannotOverlapByCentroid"
    EXACT_OVERLAP = "ExactOverlap"
    EXACT_DISJOINT = "ExactDisjoint"


@dataclass(frozen=True)
class OverlapVerdict:
    kind: OverlapKind
    centroid_distance_sq: Fraction

    @property
    def overlaps(self) -> bool:
        return self.kind in (
            OverlapKind.MUST_OVERLAP_BY_CENTROID,
            OverlapKind.EXACT_OVERLAP,
        )


def centroid_thresholds(n: int) -> tuple[Fraction, Fraction]:
    """Squared centroid-distance bounds (must-overlap, cannot-overlap).

    Centroids closer than 2/sqrt(n(n-1)) force interior overlap (each facet
    contains the open ball of its inradius); centroids farther than
    2*sqrt((n-1)/n) (twice the circumradius) forbid any contact. Squares
    keep everything rational.
    """
    if n < 2:
        raise DimensionError("thresholds need n >= 2")
    return Fraction(4, n * (n - 1)), Fraction(4 * (n - 1), n)


def squared_distance(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError("vector lengths differ")
    return sum((a - b) ** 2 for a, b in zip(u, v))


def _overlap_lp(f: FacetPlacement, g: FacetPlacement) -> lp.LPResult:
    """LP deciding how deeply the two facets can interpenetrate.

    A common point is f@lam = g@mu with lam, mu barycentric. Writing
    lam = t + s and mu = t + r with s, r >= 0 and eliminating t via
    sum(lam) = 1 leaves: minimize sum(s) subject to
        [n f - (f1 - g1) 1^T] s - n g r = g1 - f1,   sum(s) = sum(r),
    where f1, g1 are the facet coordinate sums. Feasible iff the closed
    facets meet; the best common margin is t* = (1 - sum(s*))/n.
    """
    n = f.n
    if g.n != n:
        raise DimensionError("facets live in different dimensions")
    frows, grows = f.coords.rows, g.coords.rows
    f1 = f.coords.row_sums()
    g1 = g.coords.row_sums()
    a_rows = []
    b = []
    for r in range(n):
        delta = f1[r] - g1[r]
        row = [n * frows[r][c] - delta for c in range(n)]
        row += [-n * grows[r][c] for c in range(n)]
        a_rows.append(row)
        b.append(g1[r] - f1[r])
    a_rows.append([Fraction(1)] * n + [Fraction(-1)] * n)
    b.append(Fraction(0))
    cost = [Fraction(1)] * n + [Fraction(0)] * n
    return lp.solve_min(cost, a_rows, b)


def interiors_overlap(f: FacetPlacement, g: FacetPlacement) -> bool:
    """True iff the open interiors of the two facets intersect.

    Decided exactly: the LP above is infeasible when even the closed facets
    are disjoint, and otherwise the interiors meet iff the optimal common
    margin t* is strictly positive (sum(s*) < 1).
    """
    result = _overlap_lp(f, g)
    if result.status == lp.INFEASIBLE:
        return False
    if result.status != lp.OPTIMAL:  # minimizing a sum of nonnegatives
        raise AssertionError(f"unexpected LP status {result.status}")
    return result.objective < 1


def common_interior_point(
    f: FacetPlacement, g: FacetPlacement
) -> tuple[Fraction, ...] | None:
    """A rational point interior to both facets, or None when the interiors
    are disjoint. The point maximizes the smallest barycentric coordinate."""
    result = _overlap_lp(f, g)
    if result.status != lp.OPTIMAL or result.objective >= 1:
        return None
    n = f.n
    t_star = (1 - result.objective) / n
    lam = [t_star + result.x[c] for c in range(n)]
    rows = f.coords.rows
    return tuple(sum(rows[r][c] * lam[c] for c in range(n)) for r in range(n))


def classify_overlap(f: FacetPlacement, g: FacetPlacement) -> OverlapVerdict:
    """Centroid fast path, falling through to the exact LP when the distance
    lands between the two thresholds (boundary values included)."""
    if f.n != g.n:
        raise DimensionError("facets live in different dimensions")
    low_sq, high_sq = centroid_thresholds(f.n)
    d_sq = squared_distance(f.centroid(), g.centroid())
    if d_sq < low_sq:
        return OverlapVerdict(OverlapKind.MUST_OVERLAP_BY_CENTROID, d_sq)
    if d_sq > high_sq:
        return OverlapVerdict(OverlapKind.CANNOT_OVERLAP_BY_CENTROID, d_sq)
    if interiors_overlap(f, g):
        return OverlapVerdict(OverlapKind.EXACT_OVERLAP, d_sq)
    return OverlapVerdict(OverlapKind.EXACT_DISJOINT, d_sq)


def is_net(u: Unfolding) -> bool:
    """True iff no two facets of the unfolding have intersecting interiors.

    Pairs adjacent in the unfolding tree share a ridge by construction and
    lie on opposite sides of it, so they are skipped; every other unordered
    pair goes through the centroid fast path and, if needed, the exact LP.
    """
    adjacent = u.adjacent_pairs()
    k = u.facet_count
    for i in range(k):
        for j in range(i + 1, k):
            if (i, j) in adjacent:
                continue
            if classify_overlap(u.placements[i], u.placements[j]).overlaps:
                return False
    return True


def overlapping_pairs(u: Unfolding) -> list[tuple[int, int]]:
    """All non-adjacent facet pairs with intersecting interiors."""
    adjacent = u.adjacent_pairs()
    out = []
    k = u.facet_count
    for i in range(k):
        for j in range(i + 1, k):
            if (i, j) in adjacent:
                continue
            if classify_overlap(u.placements[i], u.placements[j]).overlaps:
                out.append((i, j))
    return out
