"""Presentation layer: SVG strips for planar chains and matplotlib figures.

Everything here converts exact coordinates to floats at the last moment;
nothing rendered ever feeds back into a decision.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .exact import DimensionError
from .geometry import Unfolding, embed_chain
from .lists import UnfoldList

# orthonormal frame for the plane x+y+z = 1, so 2D drawings are isometric
_U = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
_V = (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6))


def project_point(col: Sequence[Fraction]) -> tuple[float, float]:
    c = [float(x) for x in col]
    return (
        c[0] * _U[0] + c[1] * _U[1] + c[2] * _U[2],
        c[0] * _V[0] + c[1] * _V[1] + c[2] * _V[2],
    )


def unfolding_triangles(u: Unfolding) -> list[list[tuple[float, float]]]:
    if u.n != 3:
        raise DimensionError("only chains of triangles (n = 3) can be drawn")
    return [
        [project_point(p.coords.column(j)) for j in range(3)] for p in u.placements
    ]


def svg_unfolding(u: Unfolding, scale: float = 120.0, margin: float = 12.0) -> str:
    """SVG 1.1 document showing the triangles of an n = 3 unfolding."""
    tris = unfolding_triangles(u)
    xs = [x for t in tris for x, _ in t]
    ys = [y for t in tris for _, y in t]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    width = (maxx - minx) * scale + 2 * margin
    height = (maxy - miny) * scale + 2 * margin

    def to_px(p: tuple[float, float]) -> tuple[float, float]:
        return (
            margin + (p[0] - minx) * scale,
            margin + (maxy - p[1]) * scale,  # flip y for screen coordinates
        )

    polys = []
    for i, tri in enumerate(tris):
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in (to_px(p) for p in tri))
        shade = "#cfe2f3" if i % 2 == 0 else "#f3d4cf"
        polys.append(
            f'  <polygon points="{pts}" fill="{shade}" stroke="#222" stroke-width="1"/>'
        )
        cx = sum(x for x, _ in tri) / 3
        cy = sum(y for _, y in tri) / 3
        px, py = to_px((cx, cy))
        polys.append(
            f'  <text x="{px:.2f}" y="{py:.2f}" font-size="10" text-anchor="middle" '
            f'dominant-baseline="middle" fill="#333">{i}</text>'
        )
    body = "\n".join(polys)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">\n'
        f"{body}\n</svg>\n"
    )


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_octahedron_nets_figure(path: str) -> int:
    """Draw one net per symmetry class of octahedron unfolding (there are
    eleven); returns the number drawn."""
    from .geometry import orthoplex_tree_unfolding
    from .skeleton import cube_graph, spanning_tree_representatives

    plt = _pyplot()
    nets = [
        unfolding_triangles(orthoplex_tree_unfolding(3, edges))
        for edges in spanning_tree_representatives(cube_graph(3))
    ]
    cols = 4
    rows = (len(nets) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(3 * cols, 3 * rows))
    flat = axes.ravel()
    for ax in flat:
        ax.set_axis_off()
    for ax, tris in zip(flat, nets):
        for tri in tris:
            xs = [p[0] for p in tri] + [tri[0][0]]
            ys = [p[1] for p in tri] + [tri[0][1]]
            ax.fill(xs, ys, facecolor="#cfe2f3", edgecolor="#222", linewidth=0.8)
        ax.set_aspect("equal")
    fig.suptitle(f"The {len(nets)} octahedron nets, one per symmetry class")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return len(nets)


def save_polynomial_figure(path: str) -> None:
    """The five image-coordinate polynomials of the ten-facet chain on
    (0, 0.25], with the sample values x = 2/(n-1) marked."""
    from .verify import image_polynomials_direct

    plt = _pyplot()
    polys = image_polynomials_direct()
    names = ["p1", "p2", "p3", "p4", "p5.."]
    xs = [i / 2000 for i in range(1, 501)]
    fig, ax = plt.subplots(figsize=(7, 5))
    for name, poly in zip(names, polys):
        cs = [float(c) for c in poly.coefficients]
        ys = [sum(c * x**d for d, c in enumerate(cs)) for x in xs]
        ax.plot(xs, ys, label=name, linewidth=1.4)
    ax.axhline(0.0, color="#444", linewidth=0.8)
    ax.axvline(2 / 9, color="#888", linestyle="--", linewidth=0.8)
    ax.annotate("x = 2/9 (n = 10)", (2 / 9, 0.0), textcoords="offset points",
                xytext=(4, -14), fontsize=8, color="#555")
    ax.axvline(0.2278, color="#b44", linestyle=":", linewidth=0.8)
    ax.annotate("0.2278", (0.2278, 0.0), textcoords="offset points",
                xytext=(4, 10), fontsize=8, color="#b44")
    ax.set_xlabel("x = 2/(n-1)")
    ax.set_ylabel("coordinate value")
    ax.set_title("Ridge-midpoint image coordinates of the ten-facet chain")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_length8_distance_figure(path: str) -> int:
    """Squared centroid separations across the 66 eight-entry chains, by
    index separation, against the overlap thresholds 1/3 and 3. Returns the
    number of pairs plotted."""
    from .geometry import squared_distance
    from .verify import length8_class_representatives

    plt = _pyplot()
    xs: list[int] = []
    ys: list[float] = []
    for lst in length8_class_representatives():
        unfolding = embed_chain(lst)
        cents = [p.centroid() for p in unfolding.placements]
        k = len(cents)
        for i in range(k):
            for j in range(i + 2, k):  # adjacent pairs share a ridge; skip
                xs.append(j - i)
                ys.append(float(squared_distance(cents[i], cents[j])))
    fig, ax = plt.subplots(figsize=(7, 5))
    jitter = [x + 0.12 * math.sin(7.3 * i) for i, x in enumerate(xs)]
    ax.scatter(jitter, ys, s=6, alpha=0.35, linewidths=0)
    ax.axhline(1 / 3, color="#b44", linestyle="--", linewidth=1.0,
               label="must overlap below 1/3")
    ax.axhline(3.0, color="#484", linestyle="--", linewidth=1.0,
               label="cannot overlap above 3")
    ax.set_yscale("log")
    ax.set_xlabel("separation along the chain (facet index difference)")
    ax.set_ylabel("squared centroid distance")
    ax.set_title("Centroid separations in the 66 eight-entry chains")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return len(xs)


def svg_for_list(lst: UnfoldList) -> str:
    return svg_unfolding(embed_chain(lst))
