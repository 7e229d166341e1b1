"""Two-dimensional section polylines of bodies and Lagrangian products.

emit_section_plot writes a closed polyline of a 2-D section boundary in a
plain text format:

    # section: <label>
    # plane: <i> <j>
    # area: <shoelace area of the emitted polygon>
    # points: <number of distinct points>
    x0 y0
    ...
    x0 y0          <- first point repeated to close the polyline

Curved boundaries (ellipsoid sections) are sampled at 256 boundary points;
polygonal sections emit their exact vertices. The annotated area is always
the polygonal (shoelace) area of what is drawn.
"""

from __future__ import annotations

import numpy as np

from .bodies import ConvexBody, Ellipsoid, HPolytope, VPolytope, gauge, hpolytope_vertices
from .errors import DegenerateBodyError, DimensionError

CURVE_POINTS = 256


def _shoelace(points: np.ndarray) -> float:
    x, y = points[:, 0], points[:, 1]
    return 0.5 * abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def _order_by_angle(points: np.ndarray) -> np.ndarray:
    angles = np.arctan2(points[:, 1], points[:, 0])
    return points[np.argsort(angles)]


def _ellipse_polyline(q2: np.ndarray, count: int = CURVE_POINTS) -> np.ndarray:
    """Boundary of {w : w^T Q2 w <= 1} sampled at `count` parameter values."""
    w, v = np.linalg.eigh(q2)
    if w[0] <= 0:
        raise DegenerateBodyError("section is unbounded on the requested plane")
    t = np.linspace(0.0, 2.0 * np.pi, count, endpoint=False)
    circle = np.column_stack([np.cos(t), np.sin(t)])
    return circle @ np.diag(1.0 / np.sqrt(w)) @ v.T


def _vpoly_facet_rows(body: VPolytope) -> np.ndarray:
    """H-representation rows of a V-polytope via its convex hull facets."""
    from scipy.spatial import ConvexHull

    pts = np.vstack([body.vertices, -body.vertices])
    if body.dim == 1:
        return np.array([[1.0 / np.max(np.abs(pts))]])
    hull = ConvexHull(pts)
    # Facets satisfy a . x + b <= 0 with b < 0 for a body containing 0.
    rows = -hull.equations[:, :-1] / hull.equations[:, -1:]
    return rows


def section_polygon(body: ConvexBody, plane: tuple[int, int]) -> np.ndarray:
    """Points outlining the section of a body by the coordinate plane (i, j).

    The section is {(s, t) : s e_i + t e_j in body}. Indices are 0-based
    coordinates of the body's own space.
    """
    i, j = plane
    if not (0 <= i < body.dim and 0 <= j < body.dim) or i == j:
        raise IndexError(f"plane indices must be distinct and within 0..{body.dim - 1}, got {plane}")
    if isinstance(body, Ellipsoid):
        sub = body.matrix[np.ix_([i, j], [i, j])]
        return _ellipse_polyline(sub)
    rows = _vpoly_facet_rows(body) if isinstance(body, VPolytope) else body.rows
    restricted = rows[:, [i, j]]
    # Rows orthogonal to the plane constrain nothing once the other
    # coordinates are pinned to zero.
    restricted = restricted[np.linalg.norm(restricted, axis=1) > 1e-14 * max(1.0, np.abs(rows).max())]
    if restricted.size == 0 or np.linalg.matrix_rank(restricted) < 2:
        raise DegenerateBodyError("section is unbounded on the requested plane")
    verts = hpolytope_vertices(HPolytope(restricted))
    return _order_by_angle(verts)


def product_section_rectangle(x_body: ConvexBody, p_body: ConvexBody,
                              plane: tuple[int, int]) -> np.ndarray:
    """Section of X x P by a plane of product coordinates (x_1..x_n, p_1..p_n).

    Both-position or both-momentum planes reduce to a section of the single
    factor; a conjugate plane (x_i, p_j) gives the rectangle spanned by the
    axis sections of X and P.
    """
    n = x_body.dim
    if p_body.dim != n:
        raise DimensionError(f"dimension mismatch: X is {n}-dim, P is {p_body.dim}-dim")
    i, j = plane
    if not (0 <= i < 2 * n and 0 <= j < 2 * n) or i == j:
        raise IndexError(f"plane indices must be distinct and within 0..{2 * n - 1}, got {plane}")
    if i > j:
        i, j = j, i
    if j < n:
        return section_polygon(x_body, (i, j))
    if i >= n:
        return section_polygon(p_body, (i - n, j - n))
    # Conjugate-plane rectangle from the axis sections 1/gauge(e_k).
    ex = np.zeros(n)
    ex[i] = 1.0
    ep = np.zeros(n)
    ep[j - n] = 1.0
    alpha = 1.0 / gauge(x_body, ex)
    beta = 1.0 / gauge(p_body, ep)
    return _order_by_angle(
        np.array([[alpha, beta], [-alpha, beta], [-alpha, -beta], [alpha, -beta]])
    )


def render_polyline(points: np.ndarray, plane: tuple[int, int], label: str = "section") -> str:
    """Serialize a section polygon in the documented closed-polyline text format."""
    area = _shoelace(points)
    lines = [
        f"# section: {label}",
        f"# plane: {plane[0]} {plane[1]}",
        f"# area: {area:.12g}",
        f"# points: {len(points)}",
    ]
    closed = np.vstack([points, points[:1]])
    lines += [f"{px:.12g} {py:.12g}" for px, py in closed]
    return "\n".join(lines) + "\n"


def emit_section_plot(body_or_product, plane: tuple[int, int], label: str = "section") -> str:
    """Text polyline of a 2-D section of a body or a product (X, P) pair."""
    if isinstance(body_or_product, tuple):
        x_body, p_body = body_or_product
        points = product_section_rectangle(x_body, p_body, plane)
    else:
        points = section_polygon(body_or_product, plane)
    return render_polyline(points, plane, label)
