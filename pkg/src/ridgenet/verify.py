"""Runners that mechanically verify the unfolding results, one per claim.

Each runner returns a :class:`TheoremReport` whose stats are plain JSON
types (rationals serialized as "p/q" strings, with float mirrors where a
human wants magnitude). A ``CounterexampleFound`` report always carries at
least one witness that re-checks under the exact geometry.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exact import RatPoly, poly_eval, poly_interpolate, rational_str
from .geometry import (
    FacetPlacement,
    OverlapKind,
    Unfolding,
    centroid_thresholds,
    classify_overlap,
    common_interior_point,
    embed_chain,
    interiors_overlap,
    is_net,
    orthoplex_tree_unfolding,
    reflection_matrix,
    simplex_tree_unfolding,
    squared_distance,
)
from .lists import (
    UnfoldList,
    canonicalize_list,
    count_valid_lists,
    enumerate_valid_lists,
    is_self_reverse,
    is_valid_list,
    make_list,
)
from .skeleton import (
    ResourceLimitError,
    complete_graph,
    count_spanning_paths_up_to_symmetry,
    count_spanning_trees_up_to_symmetry,
    cross_polytope_graph,
    cube_graph,
    kirchhoff_count,
    min_maximal_path_vertices,
    spanning_tree_representatives,
)

VERIFIED = "Verified"
COUNTEREXAMPLE = "CounterexampleFound"
FAILED = "Failed"


@dataclass(frozen=True)
class OverlapWitness:
    """Evidence that one chain self-intersects: the pair of facet indices,
    the exact squared centroid distance, and (when the interiors meet) a
    rational point interior to both facets."""

    labels: tuple[int, ...]
    facet_pair: tuple[int, int]
    centroid_distance_sq: Fraction
    point: tuple[Fraction, ...] | None

    def as_json(self) -> dict:
        return {
            "list": list(self.labels),
            "facetPair": list(self.facet_pair),
            "centroidDistanceSquared": rational_str(self.centroid_distance_sq),
            "approxCentroidDistance": math.sqrt(float(self.centroid_distance_sq)),
            "point": None if self.point is None else [rational_str(c) for c in self.point],
        }


@dataclass
class TheoremReport:
    theorem_id: str
    status: str
    stats: dict = field(default_factory=dict)
    witnesses: list[OverlapWitness] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == VERIFIED

    def as_json(self, include_elapsed: bool = True) -> dict:
        out = {
            "theoremId": self.theorem_id,
            "status": self.status,
            "stats": self.stats,
            "witnesses": [w.as_json() for w in self.witnesses],
        }
        if include_elapsed:
            out["elapsedSeconds"] = round(self.elapsed, 3)
        return out


def _timed(fn: Callable[[], TheoremReport]) -> TheoremReport:
    start = time.perf_counter()
    report = fn()
    report.elapsed = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# Built-in overlapping chains
# ---------------------------------------------------------------------------

DIM5_SPANNING_CHAIN = (
    1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 3, 5, 1, 2, 3, 2,
    5, 3, 2, 1, 5, 4, 3, 4, 2, 4, 1, 2, 3, 2, 1,
)
DIM5_SHORTEST_CENTROID_FAIL = (1, 2, 3, 4, 2, 1, 5, 4, 2, 4, 5, 4, 2, 1, 5, 4, 3, 1, 5)
DIM6_CHAIN = (1, 2, 3, 1, 4, 5, 4, 3, 5, 4, 1, 3, 2, 1, 4)
DIM7_DIM8_CHAIN = (1, 2, 3, 4, 1, 5, 3, 5, 4, 3, 2, 1)
TEN_FACET_CHAIN = (1, 2, 3, 4, 2, 4, 1, 2, 3)


def builtin_counterexamples() -> tuple[tuple[int, UnfoldList], ...]:
    """Overlapping chains for each dimension above four, tagged with the
    dimension they are meant for. The ten-facet chain works in every
    dimension above nine."""
    return (
        (5, make_list(5, DIM5_SPANNING_CHAIN)),
        (5, make_list(5, DIM5_SHORTEST_CENTROID_FAIL)),
        (6, make_list(6, DIM6_CHAIN)),
        (7, make_list(7, DIM7_DIM8_CHAIN)),
        (8, make_list(8, DIM7_DIM8_CHAIN)),
        (9, make_list(9, TEN_FACET_CHAIN)),
    )


# ---------------------------------------------------------------------------
# Simplex
# ---------------------------------------------------------------------------

def _ladder_labels(n: int, k: int) -> tuple[int, ...]:
    """The chain 1, 2, 3, ... with labels wrapping modulo n past k = n."""
    return tuple((t - 1) % n + 1 for t in range(1, k + 1))


def verify_simplex_sign_structure(n: int, k_max: int) -> TheoremReport:
    """First-row sign pattern of the ladder chain: after k reflections the
    first row is strictly negative in columns <= k and zero beyond.

    This is the engine of the simplex all-net argument: interior points of
    the first facet have a positive first coordinate, interior points of any
    later facet in the chain a negative one.
    """

    def run() -> TheoremReport:
        if n < 2 or k_max < 1:
            raise ValueError("need n >= 2 and k_max >= 1")
        checked = 0
        placement = FacetPlacement.initial(n)
        for k, a in enumerate(_ladder_labels(n, k_max), start=1):
            placement = placement.reflect(a)
            first_row = placement.coords.rows[0]
            for col in range(n):
                value = first_row[col]
                good = value < 0 if col + 1 <= k else value == 0
                if not good:
                    return TheoremReport(
                        "simplex-sign-structure",
                        FAILED,
                        {"n": n, "k": k, "column": col + 1, "entry": rational_str(value)},
                    )
                checked += 1
        return TheoremReport(
            "simplex-sign-structure",
            VERIFIED,
            {"n": n, "kMax": k_max, "entriesChecked": checked},
        )

    return _timed(run)


def verify_simplex_allnet(n: int) -> TheoremReport:
    """Exhaustively embed every spanning tree of the simplex dual skeleton
    (the complete graph on n+1 facets) and test each for overlap, alongside
    the sign-structure argument that proves the general case."""

    def run() -> TheoremReport:
        if n < 2:
            raise ValueError("n must be >= 2")
        if n > 7:
            raise ResourceLimitError("exhaustive simplex census is bounded at n = 7")
        signs = verify_simplex_sign_structure(n, 2 * n)
        graph = complete_graph(n + 1)
        trees = 0
        nets = 0
        from .skeleton import spanning_tree_masks

        for mask in spanning_tree_masks(graph):
            edges = [graph.edges[e] for e in range(graph.edge_count) if mask >> e & 1]
            unfolding = simplex_tree_unfolding(n, edges)
            trees += 1
            if is_net(unfolding):
                nets += 1
        status = VERIFIED if nets == trees and signs.ok else FAILED
        return TheoremReport(
            "simplex-allnet",
            status,
            {
                "n": n,
                "spanningTrees": trees,
                "nets": nets,
                "signStructure": signs.status,
            },
        )

    return _timed(run)


# ---------------------------------------------------------------------------
# 4-orthoplex
# ---------------------------------------------------------------------------

def length8_class_representatives() -> list[UnfoldList]:
    """One valid eight-entry list per congruence class (reversal and
    relabeling), lexicographically smallest first."""
    reps = set()
    for lst in enumerate_valid_lists(4, 8, up_to_relabeling=True):
        reps.add(canonicalize_list(lst).entries)
    return [make_list(4, r) for r in sorted(reps)]


def verify_orthoplex4_length8() -> TheoremReport:
    """Every valid eight-entry list unfolds to nine facets without overlap.

    Counts: 128 valid lists up to relabeling (3072 raw, 24 relabelings
    each), 66 classes once reversal is folded in, 4 of them self-reverse.
    """

    def run() -> TheoremReport:
        canonical = list(enumerate_valid_lists(4, 8, up_to_relabeling=True))
        raw_count = count_valid_lists(4, 8)
        classes: dict[tuple[int, ...], UnfoldList] = {}
        for lst in canonical:
            classes.setdefault(canonicalize_list(lst).entries, lst)
        self_reverse = sum(1 for key in classes if is_self_reverse(make_list(4, key)))
        failures = []
        for key in sorted(classes):
            unfolding = embed_chain(make_list(4, key))
            if not is_net(unfolding):
                failures.append(list(key))
        status = VERIFIED if not failures and (
            len(canonical), len(classes), self_reverse
        ) == (128, 66, 4) else FAILED
        return TheoremReport(
            "orthoplex4-length8",
            status,
            {
                "validLists8": len(canonical),
                "rawValidLists8": raw_count,
                "classes": len(classes),
                "selfReverse": self_reverse,
                "overlappingClasses": failures,
            },
        )

    return _timed(run)


def _scaled_reflections(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """(n-1) times the reflection matrices, as integer tuples."""
    scale = n - 1
    out = []
    for a in range(1, n + 1):
        rows = []
        for i in range(n):
            row = [scale if i == j else 0 for j in range(n)]
            row[a - 1] = -scale if i == a - 1 else 2
            rows.append(tuple(row))
        out.append(tuple(rows))
    return out


def _distance_census_branch(prefix: tuple[int, ...]) -> dict:
    """Centroid-distance census over all valid lists of length 9..15 that
    extend ``prefix``, for the 4-orthoplex.

    Enumeration kernel: placement k is an integer matrix over 3^k, so the
    squared centroid separation of facets i < j is an integer divided by
    16 * 9^j and the threshold test d^2 > 3 is integer arithmetic. Every
    pair separated by at least eight intermediate facets is tested the
    moment the later facet is placed, which covers every qualifying pair of
    every valid list because valid lists are closed under truncation.
    """
    n = 4
    max_len = 15
    first_checked = 9
    refl = _scaled_reflections(n)
    identity = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    mats = [identity]
    rsums = [tuple(sum(row) for row in identity)]
    mask = 0
    seen = {0}
    for a in prefix:
        mask ^= 1 << (a - 1)
        if mask in seen:
            return {"listsByLength": {}, "pairsChecked": 0, "violations": [],
                    "minDistanceSq": None}
        seen.add(mask)
        t = refl[a - 1]
        prev = mats[-1]
        nxt = tuple(
            tuple(sum(prev[i][k] * t[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        mats.append(nxt)
        rsums.append(tuple(sum(row) for row in nxt))

    lists_by_length = {length: 0 for length in range(first_checked, max_len + 1)}
    pairs = 0
    min_num: int | None = None
    min_den = 1
    violations: list[dict] = []
    labels = list(prefix)

    pow3 = [3**e for e in range(max_len + 1)]
    pow9_scaled = [48 * 9**e for e in range(max_len + 1)]  # 3 * 16 * 9^j

    def rec(mask: int, last: int) -> None:
        nonlocal pairs, min_num, min_den
        depth = len(mats) - 1
        if depth == max_len:
            return
        current = mats[-1]
        for a in range(1, n + 1):
            if a == last:
                continue
            m2 = mask ^ (1 << (a - 1))
            if m2 in seen:
                continue
            t = refl[a - 1]
            nxt = tuple(
                tuple(sum(current[i][k] * t[k][j] for k in range(n)) for j in range(n))
                for i in range(n)
            )
            d = depth + 1
            rs = tuple(sum(row) for row in nxt)
            if d >= first_checked:
                lists_by_length[d] += 1
                for i in range(d - 8):
                    pairs += 1
                    f = pow3[d - i]
                    ri = rsums[i]
                    s = 0
                    for c in range(n):
                        diff = ri[c] * f - rs[c]
                        s += diff * diff
                    if s <= pow9_scaled[d]:
                        violations.append(
                            {"list": labels + [a], "pair": [i, d],
                             "distanceSq": rational_str(Fraction(s, 16 * 9**d))}
                        )
                    if min_num is None or s * min_den < min_num * (16 * 9**d):
                        min_num, min_den = s, 16 * 9**d
            seen.add(m2)
            mats.append(nxt)
            rsums.append(rs)
            labels.append(a)
            rec(m2, a)
            labels.pop()
            rsums.pop()
            mats.pop()
            seen.remove(m2)

    rec(mask, prefix[-1] if prefix else 0)
    return {
        "listsByLength": lists_by_length,
        "pairsChecked": pairs,
        "violations": violations,
        "minDistanceSq": None if min_num is None else Fraction(min_num, min_den),
    }


def verify_orthoplex4_distance(jobs: int = 1) -> TheoremReport:
    """Across every valid list of length 9 through 15 (15 is the longest a
    self-avoiding dual path can get), every facet pair with at least eight
    facets strictly between has squared centroid separation above 3, i.e.
    separation above sqrt(3), so such facets can never touch."""

    def run() -> TheoremReport:
        prefixes: list[tuple[int, ...]]
        if jobs > 1:
            prefixes = [(a, b) for a in range(1, 5) for b in range(1, 5) if a != b]
            import multiprocessing

            with multiprocessing.Pool(jobs) as pool:
                branches = pool.map(_distance_census_branch, prefixes)
        else:
            branches = [_distance_census_branch(())]
        lists_by_length: dict[int, int] = {}
        pairs = 0
        violations: list[dict] = []
        min_d2: Fraction | None = None
        for br in branches:
            for length, cnt in br["listsByLength"].items():
                lists_by_length[length] = lists_by_length.get(length, 0) + cnt
            pairs += br["pairsChecked"]
            violations.extend(br["violations"])
            if br["minDistanceSq"] is not None:
                if min_d2 is None or br["minDistanceSq"] < min_d2:
                    min_d2 = br["minDistanceSq"]
        status = VERIFIED if not violations else FAILED
        return TheoremReport(
            "orthoplex4-distance",
            status,
            {
                "listsByLength": {str(k): v for k, v in sorted(lists_by_length.items())},
                "qualifyingPairs": pairs,
                "violations": violations,
                "minDistanceSq": rational_str(min_d2) if min_d2 is not None else None,
                "approxMinDistance": math.sqrt(float(min_d2)) if min_d2 is not None else None,
                "thresholdSq": 3,
            },
        )

    return _timed(run)


def verify_orthoplex4_maximal_paths() -> TheoremReport:
    """Every inextensible path on the 4-cube skeleton reaches at least nine
    vertices (brute force finds the true minimum, which is ten)."""

    def run() -> TheoremReport:
        fewest, directed = min_maximal_path_vertices(4)
        status = VERIFIED if fewest >= 9 else FAILED
        return TheoremReport(
            "orthoplex4-maximal-paths",
            status,
            {"fewestVertices": fewest, "directedMaximalPaths": directed, "bound": 9},
        )

    return _timed(run)


def verify_orthoplex4_allnet(
    direct_census: bool = False,
    jobs: int = 1,
    progress: Callable[[str, int, int], None] | None = None,
) -> TheoremReport:
    """The 4-orthoplex is all-net.

    Proof route: any overlap inside an unfolding would live on a facet chain
    of at most eight reflections (longer separations are excluded by the
    distance census), every shorter chain extends to a valid eight-entry
    list (maximal paths reach nine facets), and none of the eight-entry
    chains overlap. The optional direct census additionally embeds all
    110,912 unfoldings and tests each one.
    """

    def run() -> TheoremReport:
        paths = verify_orthoplex4_maximal_paths()
        length8 = verify_orthoplex4_length8()
        distance = verify_orthoplex4_distance(jobs=jobs)
        stats = {
            "maximalPaths": paths.stats | {"status": paths.status},
            "length8": length8.stats | {"status": length8.status},
            "distance": {
                k: v for k, v in distance.stats.items() if k != "violations"
            } | {"status": distance.status},
        }
        ok = paths.ok and length8.ok and distance.ok
        if direct_census:
            census = verify_orthoplex4_census(progress=progress)
            stats["directCensus"] = census.stats | {"status": census.status}
            ok = ok and census.ok
        return TheoremReport(
            "orthoplex4-allnet", VERIFIED if ok else FAILED, stats
        )

    return _timed(run)


def verify_orthoplex4_census(
    progress: Callable[[str, int, int], None] | None = None,
) -> TheoremReport:
    """Flag-gated direct confirmation: embed one representative of each of
    the 110,912 unfolding classes of the 4-orthoplex and check every one is
    a net. Runs for a long time (the 4-cube skeleton has 42,467,328
    spanning trees to sift for canonical representatives).

    Overlap verdicts are memoized on the relative placement of each facet
    pair, which collapses the work because subtrees recur across
    unfoldings.
    """

    def run() -> TheoremReport:
        graph = cube_graph(4)
        expected_total = kirchhoff_count(graph)
        reflections = [reflection_matrix(4, a) for a in range(1, 5)]
        memo: dict[tuple, bool] = {}
        low_sq, high_sq = centroid_thresholds(4)
        classes = 0
        nets = 0
        failures: list[list[list[int]]] = []
        lp_calls = 0
        for edges in spanning_tree_representatives(graph, force=True):
            unfolding = orthoplex_tree_unfolding(4, edges)
            classes += 1
            # inverses alongside the tree walk: reflections are involutions
            inverses = [None] * unfolding.facet_count
            inverses[0] = unfolding.placements[0].coords
            for parent, child, label in unfolding.edges:
                inverses[child] = reflections[label - 1] @ inverses[parent]
            adjacent = unfolding.adjacent_pairs()
            cents = [p.centroid() for p in unfolding.placements]
            good = True
            k = unfolding.facet_count
            for i in range(k):
                if not good:
                    break
                for j in range(i + 1, k):
                    if (i, j) in adjacent:
                        continue
                    d_sq = squared_distance(cents[i], cents[j])
                    if d_sq > high_sq:
                        continue
                    if d_sq < low_sq:
                        good = False
                        break
                    key = (inverses[i] @ unfolding.placements[j].coords).rows
                    hit = memo.get(key)
                    if hit is None:
                        lp_calls += 1
                        hit = interiors_overlap(
                            unfolding.placements[i], unfolding.placements[j]
                        )
                        memo[key] = hit
                    if hit:
                        good = False
                        break
            if good:
                nets += 1
            else:
                failures.append([list(e) for e in edges])
            if progress is not None and classes % 1024 == 0:
                progress("orthoplex4-census", classes, 110912)
        status = VERIFIED if nets == classes == 110912 and not failures else FAILED
        return TheoremReport(
            "orthoplex4-census",
            status,
            {
                "spanningTreesTotal": expected_total,
                "classes": classes,
                "nets": nets,
                "distinctRelativePlacements": len(memo),
                "lpCalls": lp_calls,
                "failures": failures[:10],
            },
        )

    return _timed(run)


# ---------------------------------------------------------------------------
# Counterexamples in dimension five and up
# ---------------------------------------------------------------------------

def check_counterexample(
    n: int, lst: UnfoldList, all_pairs: bool = False
) -> TheoremReport:
    """Embed a chain and decide overlap for the first/last facet pair (or
    every pair). CounterexampleFound means the chain is not a net, which is
    the expected outcome for the built-in lists."""

    def run() -> TheoremReport:
        if lst.n != n:
            raise ValueError("list dimension bound does not match n")
        if not is_valid_list(lst):
            raise ValueError("list is not valid (its dual path revisits a facet)")
        unfolding = embed_chain(lst)
        k = unfolding.facet_count - 1
        candidate_pairs: Iterable[tuple[int, int]]
        if all_pairs:
            adjacent = unfolding.adjacent_pairs()
            candidate_pairs = (
                (i, j) for i in range(k + 1) for j in range(i + 1, k + 1)
                if (i, j) not in adjacent
            )
        else:
            candidate_pairs = [(0, k)]
        witnesses = []
        verdict_kinds = {}
        for i, j in candidate_pairs:
            verdict = classify_overlap(unfolding.placements[i], unfolding.placements[j])
            if verdict.overlaps:
                point = common_interior_point(
                    unfolding.placements[i], unfolding.placements[j]
                )
                witnesses.append(
                    OverlapWitness(lst.entries, (i, j), verdict.centroid_distance_sq, point)
                )
                verdict_kinds[(i, j)] = verdict.kind.value
        low_sq, high_sq = centroid_thresholds(n)
        status = COUNTEREXAMPLE if witnesses else VERIFIED
        stats = {
            "n": n,
            "facets": k + 1,
            "designatedPair": [0, k],
            "overlappingPairs": [list(w.facet_pair) for w in witnesses],
            "verdicts": {f"{i},{j}": v for (i, j), v in verdict_kinds.items()},
            "mustOverlapThresholdSq": rational_str(low_sq),
        }
        return TheoremReport("orthoplex-counterexample", status, stats, witnesses)

    return _timed(run)


def verify_orthoplex_counterexamples(dim: int | None = None) -> TheoremReport:
    """Run the built-in overlapping chains (dimension 5 through 9); every
    one must fail the centroid test on its first/last pair and confirm
    under the exact overlap test."""

    def run() -> TheoremReport:
        cases = [
            (d, lst) for d, lst in builtin_counterexamples() if dim is None or d == dim
        ]
        if not cases:
            raise ValueError(f"no built-in counterexample for dimension {dim}")
        results = []
        witnesses = []
        all_found = True
        for d, lst in cases:
            report = check_counterexample(d, lst)
            found = report.status == COUNTEREXAMPLE
            must = any(
                v == OverlapKind.MUST_OVERLAP_BY_CENTROID.value
                for v in report.stats["verdicts"].values()
            )
            all_found = all_found and found and must
            witnesses.extend(report.witnesses)
            results.append(
                {
                    "n": d,
                    "facets": report.stats["facets"],
                    "status": report.status,
                    "centroidTestFails": must,
                }
            )
        status = COUNTEREXAMPLE if all_found else FAILED
        return TheoremReport(
            "orthoplex-counterexamples", status, {"cases": results}, witnesses
        )

    return _timed(run)


# ---------------------------------------------------------------------------
# The ten-facet chain as polynomials in x = 2/(n-1)
# ---------------------------------------------------------------------------

def ridge_midpoint_image(n: int, lst: UnfoldList) -> tuple[Fraction, ...]:
    """Image of the midpoint of the first facet's ridge opposite vertex 2
    under the chain's reflections, applied in list order to the vector
    (1/(n-1), 0, 1/(n-1), ..., 1/(n-1)).

    All coordinates positive means the point is interior to the first facet
    and on the last facet, so the chain self-intersects.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if lst.n > n:
        raise ValueError("list labels exceed n")
    v = tuple(Fraction(0) if i == 1 else Fraction(1, n - 1) for i in range(n))
    for a in reversed(lst.entries):
        v = reflection_matrix(n, a).mat_vec(v)
    return v


def image_polynomials_direct(labels: Sequence[int] = TEN_FACET_CHAIN) -> list[RatPoly]:
    """Coordinates of the ridge-midpoint image as polynomials in x = 2/(n-1),
    by evolving the coordinate vector symbolically.

    Reflecting in label a sends w_a to -w_a and adds x*w_a to every other
    coordinate, so coordinates above max(labels) stay equal to one shared
    tail polynomial and the result is dimension-independent. Returns
    [p_1 .. p_m, p_tail] for m = max(labels).
    """
    m = max(labels)
    if min(labels) < 1 or m < 2:
        raise ValueError("labels must be >= 1 with at least one label >= 2")
    half_x = RatPoly.from_coefficients([0, Fraction(1, 2)])
    coords = [half_x if i != 1 else RatPoly.zero() for i in range(m)]
    tail = half_x
    for a in reversed(labels):
        acted = coords[a - 1]
        bump = acted.shift_up()  # x * w_a
        coords = [
            -acted if i == a - 1 else coords[i] + bump for i in range(m)
        ]
        tail = tail + bump
    return coords + [tail]


def image_polynomials_interpolated(
    dims: Sequence[int] = tuple(range(12, 24)),
    check_dim: int = 30,
    labels: Sequence[int] = TEN_FACET_CHAIN,
) -> list[RatPoly]:
    """Reconstruct the image polynomials from exact samples at x = 2/(n-1).

    Uses the tracked coordinates 1..max(labels) plus the shared tail
    coordinate. Raises if the samples do not interpolate to degree <= 10,
    if the tail coordinates of any sample disagree, or if the extra check
    dimension misses any interpolant (all of which would refute the
    dimension-independence of the image).
    """
    m = max(labels)
    if len(dims) < 12:
        raise ValueError("need at least 12 sample dimensions")
    lst_cache = {}
    samples = []
    for n in dims:
        lst = lst_cache.setdefault(n, make_list(n, tuple(labels)))
        img = ridge_midpoint_image(n, lst)
        if len(set(img[m:])) != 1:
            raise ValueError(f"tail coordinates disagree at n={n}")
        samples.append((Fraction(2, n - 1), img))
    polys = []
    for coord in range(m + 1):
        pts = [
            (x, img[coord] if coord < m else img[m]) for x, img in samples
        ]
        poly = poly_interpolate(pts)
        if poly.degree > 10:
            raise ValueError(f"coordinate {coord + 1} interpolates above degree 10")
        polys.append(poly)
    check = ridge_midpoint_image(check_dim, make_list(check_dim, tuple(labels)))
    x = Fraction(2, check_dim - 1)
    for coord, poly in enumerate(polys):
        want = check[coord] if coord < m else check[m]
        if poly_eval(poly, x) != want:
            raise ValueError(f"check dimension {check_dim} misses interpolant {coord + 1}")
    return polys


def verify_positivity_range(
    polys: Sequence[RatPoly],
    x_max: Fraction = Fraction(2278, 10000),
    grid_step: Fraction = Fraction(1, 10000),
    max_dim: int = 1000,
) -> TheoremReport:
    """Positivity of the image polynomials on (0, x_max].

    Three checks, all exact: the lowest-degree coefficient of each
    polynomial is positive (controls behavior near zero), each polynomial is
    positive at every dimensional sample x = 2/(n-1) <= x_max up to
    ``max_dim``, and each is positive on the rational grid of spacing
    ``grid_step``. A nonpositive value anywhere is decisive and reported as
    a counterexample; success means verified at grid resolution.
    """

    def run() -> TheoremReport:
        lowest = []
        for idx, p in enumerate(polys):
            d, c = p.lowest_term()
            lowest.append({"poly": idx + 1, "degree": d, "coefficient": rational_str(c)})
            if c <= 0:
                return TheoremReport(
                    "image-positivity",
                    COUNTEREXAMPLE,
                    {"lowestTerms": lowest, "offender": idx + 1},
                )
        dim_samples = 0
        for n in range(3, max_dim + 1):
            x = Fraction(2, n - 1)
            if x > x_max:
                continue
            dim_samples += 1
            for idx, p in enumerate(polys):
                if poly_eval(p, x) <= 0:
                    return TheoremReport(
                        "image-positivity",
                        COUNTEREXAMPLE,
                        {"offender": idx + 1, "x": rational_str(x), "n": n,
                         "value": rational_str(poly_eval(p, x))},
                    )
        grid_points = 0
        x = grid_step
        while x <= x_max:
            grid_points += 1
            for idx, p in enumerate(polys):
                value = poly_eval(p, x)
                if value <= 0:
                    return TheoremReport(
                        "image-positivity",
                        COUNTEREXAMPLE,
                        {
                            "offender": idx + 1,
                            "x": rational_str(x),
                            "value": rational_str(value),
                            "approxValue": float(value),
                            "gridPointsChecked": grid_points,
                        },
                    )
            x += grid_step
        return TheoremReport(
            "image-positivity",
            VERIFIED,
            {
                "xMax": rational_str(x_max),
                "gridStep": rational_str(grid_step),
                "gridPoints": grid_points,
                "dimensionalSamples": dim_samples,
                "lowestTerms": lowest,
            },
        )

    return _timed(run)


def verify_polynomials() -> TheoremReport:
    """The ten-facet chain overlaps in every dimension above nine.

    The ridge-midpoint image is computed two independent ways (direct
    symbolic evolution and interpolation through twelve dimensions plus a
    consistency dimension); the routes must agree exactly. Positivity is
    verified at every actually occurring sample x = 2/(n-1) <= 2/9, and the
    wider interval (0, 0.2278] is scanned at grid resolution 1/10000 with
    the outcome reported either way (the scan finds a boundary sign change
    at the last grid point; the largest sample used by the theorem is 2/9,
    well inside the safe range).
    """

    def run() -> TheoremReport:
        direct = image_polynomials_direct()
        interpolated = image_polynomials_interpolated()
        if direct != interpolated:
            return TheoremReport(
                "ten-facet-chain-polynomials",
                FAILED,
                {"reason": "symbolic and interpolated polynomials disagree"},
            )
        theorem_range = verify_positivity_range(direct, x_max=Fraction(2, 9))
        literal_range = verify_positivity_range(direct)
        image_ok = True
        for n in range(10, 65):
            img = ridge_midpoint_image(n, make_list(n, TEN_FACET_CHAIN))
            if not all(c > 0 for c in img) or sum(img) != 1:
                image_ok = False
                break
        coeffs = {
            f"p{idx + 1}" if idx < 4 else "pTail": [rational_str(c) for c in p.coefficients]
            for idx, p in enumerate(direct)
        }
        status = VERIFIED if theorem_range.ok and image_ok else FAILED
        return TheoremReport(
            "ten-facet-chain-polynomials",
            status,
            {
                "coefficientsAscending": coeffs,
                "routesAgree": True,
                "positivityOnUsedRange": theorem_range.stats | {"status": theorem_range.status},
                "positivityOnLiteralRange": literal_range.stats | {"status": literal_range.status},
                "imagePositiveForDims": "10..64" if image_ok else "violated",
            },
        )

    return _timed(run)


# ---------------------------------------------------------------------------
# Census counts
# ---------------------------------------------------------------------------

EXPECTED_COUNTS = {
    "octahedron-nets": 11,
    "cube4-unfoldings": 261,
    "orthoplex4-unfoldings": 110912,
    "q3-spanning-paths": 3,
    "q4-spanning-paths": 238,
    "q5-spanning-paths": 48828036,
    "q3-spanning-trees-total": 384,
    "q4-spanning-trees-total": 42467328,
}

_GATED_TARGETS = {"orthoplex4-unfoldings", "q5-spanning-paths"}


def compute_count(target: str, force: bool = False,
                  progress: Callable[[int, int], None] | None = None) -> int:
    if target == "octahedron-nets":
        return count_spanning_trees_up_to_symmetry(cube_graph(3)).classes
    if target == "cube4-unfoldings":
        return count_spanning_trees_up_to_symmetry(cross_polytope_graph(4)).classes
    if target == "orthoplex4-unfoldings":
        return count_spanning_trees_up_to_symmetry(
            cube_graph(4), force=force, progress=progress
        ).classes
    if target == "q3-spanning-paths":
        return count_spanning_paths_up_to_symmetry(3)
    if target == "q4-spanning-paths":
        return count_spanning_paths_up_to_symmetry(4)
    if target == "q5-spanning-paths":
        return count_spanning_paths_up_to_symmetry(5, force=force)
    if target == "q3-spanning-trees-total":
        return kirchhoff_count(cube_graph(3))
    if target == "q4-spanning-trees-total":
        return kirchhoff_count(cube_graph(4))
    raise ValueError(f"unknown count target {target!r}")


def verify_counts(
    target: str | None = None,
    force: bool = False,
    progress: Callable[[int, int], None] | None = None,
) -> TheoremReport:
    """Recompute the published census numbers and compare."""

    def run() -> TheoremReport:
        if target is not None:
            targets = [target]
        else:
            targets = [t for t in EXPECTED_COUNTS if t not in _GATED_TARGETS]
        rows = {}
        ok = True
        for t in targets:
            value = compute_count(t, force=force, progress=progress)
            rows[t] = {"computed": value, "expected": EXPECTED_COUNTS[t]}
            ok = ok and value == EXPECTED_COUNTS[t]
        return TheoremReport(
            "census-counts", VERIFIED if ok else FAILED, {"counts": rows}
        )

    return _timed(run)
