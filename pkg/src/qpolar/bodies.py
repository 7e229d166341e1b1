"""Centrally symmetric convex bodies: ellipsoids, H-polytopes, V-polytopes.

All bodies are origin-centered (body = -body by construction):

* ``Ellipsoid(matrix=Q)``      is {x : x^T Q x <= 1} with Q symmetric positive definite;
* ``HPolytope(rows=A)``        is {x : |a_i^T x| <= 1 for every row a_i};
* ``VPolytope(vertices=V)``    is conv{+-v_j} over the listed vertices.

Operations are pure functions over these immutable values. Support and gauge
are exact for every representation; V-polytope gauges and H-polytope supports
are solved as small linear programs (HiGHS).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import HalfspaceIntersection
from scipy.stats import norm, qmc

from .errors import (
    ConvergenceError,
    DegenerateBodyError,
    DimensionError,
    NotPositiveDefiniteError,
    SingularMatrixError,
)
from .symplectic import require_symmetric

# H-polytope vertex enumeration is attempted up to this dimension; beyond it
# containment falls back to sampled support ratios (flagged approximate).
ENUMERATION_MAX_DIM = 8
DEFAULT_DIRECTIONS = 4096


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Ellipsoid:
    """The ellipsoid {x : x^T Q x <= 1} for a symmetric positive definite Q."""

    matrix: np.ndarray

    def __post_init__(self):
        q = require_symmetric(self.matrix)
        try:
            np.linalg.cholesky(q)
        except np.linalg.LinAlgError:
            raise NotPositiveDefiniteError("ellipsoid matrix must be positive definite") from None
        object.__setattr__(self, "matrix", _freeze(q))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def ball(cls, dim: int, radius: float = 1.0) -> "Ellipsoid":
        """The Euclidean ball |x| <= radius."""
        if radius <= 0:
            raise ValueError(f"radius must be positive, got {radius}")
        return cls(np.eye(dim) / radius**2)


@dataclass(frozen=True)
class HPolytope:
    """The symmetric polytope {x : |a_i^T x| <= 1} over the rows a_i."""

    rows: np.ndarray

    def __post_init__(self):
        rows = np.atleast_2d(np.asarray(self.rows, dtype=float))
        if not np.all(np.isfinite(rows)):
            raise ValueError("polytope rows must be finite")
        norms = np.linalg.norm(rows, axis=1)
        if rows.shape[0] == 0 or np.any(norms == 0):
            raise DegenerateBodyError("H-polytope rows must be non-empty and nonzero")
        if np.linalg.matrix_rank(rows) < rows.shape[1]:
            raise DegenerateBodyError("H-polytope rows must span the space (bounded body)")
        object.__setattr__(self, "rows", _freeze(rows))

    @property
    def dim(self) -> int:
        return self.rows.shape[1]

    @classmethod
    def box(cls, halfwidths) -> "HPolytope":
        """The axis-aligned box { |x_i| <= halfwidths[i] }."""
        h = np.atleast_1d(np.asarray(halfwidths, dtype=float))
        if np.any(h <= 0):
            raise ValueError("box halfwidths must be positive")
        return cls(np.diag(1.0 / h))


@dataclass(frozen=True)
class VPolytope:
    """The symmetric polytope conv{+-v_j} over the listed vertices v_j."""

    vertices: np.ndarray

    def __post_init__(self):
        verts = np.atleast_2d(np.asarray(self.vertices, dtype=float))
        if not np.all(np.isfinite(verts)):
            raise ValueError("polytope vertices must be finite")
        if verts.shape[0] == 0 or np.any(np.linalg.norm(verts, axis=1) == 0):
            raise DegenerateBodyError("V-polytope vertices must be non-empty and nonzero")
        if np.linalg.matrix_rank(verts) < verts.shape[1]:
            raise DegenerateBodyError("V-polytope vertices must span the space (full-dimensional body)")
        object.__setattr__(self, "vertices", _freeze(verts))

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]


ConvexBody = Union[Ellipsoid, HPolytope, VPolytope]


@dataclass(frozen=True)
class ContainmentResult:
    """Outcome of a containment query; truthy iff inner is contained in outer.

    ``exact`` is False when the verdict came from sampled support ratios
    rather than a closed-form or vertex-complete test.
    """

    contained: bool
    exact: bool

    def __bool__(self) -> bool:
        return self.contained


def _check_vector(body: ConvexBody, u) -> np.ndarray:
    u = np.atleast_1d(np.asarray(u, dtype=float))
    if u.shape != (body.dim,):
        raise DimensionError(f"expected a vector of length {body.dim}, got shape {u.shape}")
    if not np.all(np.isfinite(u)):
        raise ValueError("vector entries must be finite")
    return u


def support(body: ConvexBody, u) -> float:
    """Support function h_body(u) = max{u . x : x in body}."""
    u = _check_vector(body, u)
    if isinstance(body, Ellipsoid):
        return float(np.sqrt(u @ np.linalg.solve(body.matrix, u)))
    if isinstance(body, VPolytope):
        return float(np.max(np.abs(body.vertices @ u)))
    if body.dim == 1:
        return float(abs(u[0]) / np.max(np.abs(body.rows)))
    # H-polytope: LP  max u.x  s.t.  |rows x| <= 1.
    a_ub = np.vstack([body.rows, -body.rows])
    res = linprog(
        -u,
        A_ub=a_ub,
        b_ub=np.ones(a_ub.shape[0]),
        bounds=[(None, None)] * body.dim,
        method="highs",
    )
    if not res.success:
        raise DegenerateBodyError(f"support LP failed: {res.message}")
    return float(-res.fun)


def gauge(body: ConvexBody, x) -> float:
    """Minkowski gauge ||x||_body = inf{t > 0 : x/t in body}; 0 at the origin."""
    x = _check_vector(body, x)
    if not np.any(x):
        return 0.0
    if isinstance(body, Ellipsoid):
        return float(np.sqrt(x @ body.matrix @ x))
    if isinstance(body, HPolytope):
        return float(np.max(np.abs(body.rows @ x)))
    if body.dim == 1:
        return float(abs(x[0]) / np.max(np.abs(body.vertices)))
    # V-polytope: min sum(c+ + c-)  s.t.  V^T (c+ - c-) = x, c+- >= 0.
    w = body.vertices.T  # n x m
    m = w.shape[1]
    res = linprog(
        np.ones(2 * m),
        A_eq=np.hstack([w, -w]),
        b_eq=x,
        bounds=[(0, None)] * (2 * m),
        method="highs",
    )
    if not res.success:
        raise DegenerateBodyError(f"gauge LP failed: {res.message}")
    return float(res.fun)


def linear_image(body: ConvexBody, l: np.ndarray) -> ConvexBody:
    """The image L.body = {L x : x in body} under an invertible matrix L."""
    l = np.asarray(l, dtype=float)
    if l.shape != (body.dim, body.dim):
        raise DimensionError(f"expected a {body.dim}x{body.dim} matrix, got {l.shape}")
    svals = np.linalg.svd(l, compute_uv=False)
    if svals[-1] <= 1e-12 * svals[0]:
        raise SingularMatrixError("linear image requires an invertible matrix")
    if isinstance(body, Ellipsoid):
        l_inv = np.linalg.inv(l)
        return Ellipsoid(l_inv.T @ body.matrix @ l_inv)
    if isinstance(body, VPolytope):
        return VPolytope(body.vertices @ l.T)
    return HPolytope(np.linalg.solve(l.T, body.rows.T).T)


def scale(body: ConvexBody, factor: float) -> ConvexBody:
    """The dilate factor * body for factor > 0."""
    if factor <= 0:
        raise ValueError(f"scale factor must be positive, got {factor}")
    if isinstance(body, Ellipsoid):
        return Ellipsoid(body.matrix / factor**2)
    if isinstance(body, VPolytope):
        return VPolytope(body.vertices * factor)
    return HPolytope(body.rows / factor)


def hpolytope_vertices(body: HPolytope) -> np.ndarray:
    """All vertices of an H-polytope (both sign classes), via Qhull for dim >= 2."""
    n = body.dim
    if n == 1:
        a = 1.0 / np.max(np.abs(body.rows))
        return np.array([[a], [-a]])
    if n > ENUMERATION_MAX_DIM:
        raise DegenerateBodyError(f"vertex enumeration not attempted for dim {n} > {ENUMERATION_MAX_DIM}")
    stacked = np.vstack([body.rows, -body.rows])
    halfspaces = np.hstack([stacked, -np.ones((stacked.shape[0], 1))])
    hs = HalfspaceIntersection(halfspaces, np.zeros(n))
    verts = hs.intersections
    # Qhull reports one point per facet intersection; dedupe to working precision.
    scale_ = max(np.max(np.abs(verts)), 1.0)
    _, idx = np.unique(np.round(verts / scale_, 9), axis=0, return_index=True)
    return verts[np.sort(idx)]


def sphere_directions(n: int, count: int = DEFAULT_DIRECTIONS, seed: int = 0) -> np.ndarray:
    """Low-discrepancy unit directions (Sobol points mapped through the normal CDF)."""
    if n == 1:
        return np.array([[1.0], [-1.0]])
    sob = qmc.Sobol(d=n, scramble=True, seed=seed)
    u = sob.random(count)
    z = norm.ppf(np.clip(u, 1e-12, 1 - 1e-12))
    norms = np.linalg.norm(z, axis=1, keepdims=True)
    norms[norms == 0] = 1.0
    return z / norms


def _extreme_points(body: ConvexBody) -> np.ndarray | None:
    """A finite set of points whose symmetric hull is the body, or None for ellipsoids."""
    if isinstance(body, VPolytope):
        return body.vertices
    if isinstance(body, HPolytope):
        return hpolytope_vertices(body)
    return None


def contains(outer: ConvexBody, inner: ConvexBody, tol: float = 1e-9,
             directions: int = DEFAULT_DIRECTIONS) -> ContainmentResult:
    """Test inner subset-of (1 + tol) * outer.

    Exact paths cover every pairing of the three representations (vertex
    checks, generalized eigenvalues, support rows, LP gauges, polar flips);
    the sampled support-ratio fallback only triggers when vertex enumeration
    of an H-polytope source is infeasible (dim > 8) and is flagged
    ``exact=False``. `directions` sizes that fallback's direction set.
    """
    if outer.dim != inner.dim:
        raise DimensionError(f"dimension mismatch: outer {outer.dim}, inner {inner.dim}")
    one = 1.0 + tol

    if isinstance(inner, Ellipsoid):
        if isinstance(outer, Ellipsoid):
            from scipy.linalg import eigh as gen_eigh

            mu_max = gen_eigh(outer.matrix, inner.matrix, eigvals_only=True)[-1]
            return ContainmentResult(bool(mu_max <= one**2), True)
        if isinstance(outer, HPolytope):
            worst = max(support(inner, row) for row in outer.rows)
            return ContainmentResult(bool(worst <= one), True)
        # inner E in outer V: flip through unit polarity, E(Q) in V(W) iff H(W) in E(Q^-1).
        return contains(
            Ellipsoid(np.linalg.inv(inner.matrix)),
            HPolytope(outer.vertices),
            tol,
            directions,
        )

    try:
        pts = _extreme_points(inner)
    except DegenerateBodyError:
        pts = None
    if pts is not None:
        worst = max(gauge(outer, p) for p in pts)
        return ContainmentResult(bool(worst <= one), True)

    # Sampled fallback: necessary condition h_inner(u) <= (1+tol) h_outer(u)
    # on a fixed low-discrepancy direction set.
    dirs = sphere_directions(inner.dim, directions)
    ok = all(support(inner, u) <= one * support(outer, u) for u in dirs)
    return ContainmentResult(ok, False)


def enclosing_ellipsoid(points, mode: str = "ball", vol_tol: float = 0.01,
                        max_iter: int = 100_000) -> Ellipsoid:
    """Origin-centered ellipsoid enclosing every point of a centered sample.

    mode="ball" gives the smallest origin-centered Euclidean ball.
    mode="mvee" gives a minimum-volume enclosing ellipsoid of {+-p_i}, within
    a (1 + vol_tol) volume factor of optimal, by Frank-Wolfe ascent on the
    determinant (the symmetric Khachiyan iteration).
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.size == 0:
        raise DegenerateBodyError("empty point set")
    n = pts.shape[1]
    if np.linalg.matrix_rank(pts) < n:
        raise DegenerateBodyError("points do not span the space; enclosing body is degenerate")

    if mode == "ball":
        r = np.max(np.linalg.norm(pts, axis=1))
        return Ellipsoid(np.eye(n) / r**2)
    if mode != "mvee":
        raise ValueError(f"unknown mode {mode!r}; expected 'ball' or 'mvee'")

    m = pts.shape[0]
    u = np.full(m, 1.0 / m)
    # (1 + eps)^(n/2) <= 1 + vol_tol  maps the volume gap to the duality gap.
    eps = (1.0 + vol_tol) ** (2.0 / n) - 1.0
    kappa = n
    for _ in range(max_iter):
        mat = pts.T @ (pts * u[:, None])
        g = np.einsum("ij,ij->i", pts @ np.linalg.inv(mat), pts)
        j = int(np.argmax(g))
        kappa = g[j]
        if kappa <= n * (1.0 + eps):
            break
        step = (kappa - n) / (n * (kappa - 1.0))
        u *= 1.0 - step
        u[j] += step
    else:
        raise ConvergenceError(
            f"enclosing ellipsoid did not reach the {vol_tol:.0%} volume gap in {max_iter} iterations"
        )
    mat = pts.T @ (pts * u[:, None])
    g = np.einsum("ij,ij->i", pts @ np.linalg.inv(mat), pts)
    # Scale by the worst gauge so containment of every input point is exact.
    q = np.linalg.inv(mat) / np.max(g)
    return Ellipsoid(0.5 * (q + q.T))
