"""Symplectic capacities: exact ellipsoid values, the Lagrangian-product formula,
conjugate-plane section areas, and the one-degree-of-freedom area oracle.

On a phase-space ellipsoid {z : z^T Q z <= 1} every symplectic capacity equals
pi / mu_max with mu_max the largest Williamson eigenvalue of Q (normalized so a
ball of radius R has capacity pi R^2). On a Lagrangian product X x P of a
position body and a momentum body the capacity is 4 * hbar * lambda_max with
lambda_max the polar inclusion scale; for intervals this reduces to the
rectangle area 4ab, which area_oracle_1d computes independently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bodies import ConvexBody, Ellipsoid, HPolytope, support
from .errors import DimensionError
from .polarity import _inclusion_scale_detail
from .symplectic import symplectic_eigenvalues


@dataclass(frozen=True)
class CapacityReport:
    """A capacity value plus the quantum-pair bookkeeping around it.

    For kind="product", value = 4 * hbar * lambda_max and
    lower_bound_4hbar_met records value >= 4*hbar (the quantum-pair
    threshold); equality_case flags the minimal pair lambda_max = 1.
    """

    value: float
    kind: str
    lower_bound_4hbar_met: bool | None = None
    equality_case: bool | None = None
    lambda_max: float | None = None
    exact: bool = True


def ellipsoid_capacity(ell: Ellipsoid, hbar: float = 1.0) -> float:
    """Symplectic capacity of a phase-space ellipsoid {z : z^T Q z <= 1}.

    Returns pi / mu_max, mu_max the largest Williamson eigenvalue of Q.
    Monotone, conformal of degree 2, and invariant under linear symplectic
    images. The value does not depend on hbar; the parameter only fixes the
    unit convention shared with the other capacity functions.
    """
    del hbar
    if ell.dim % 2:
        raise DimensionError(f"phase-space ellipsoids have even dimension, got {ell.dim}")
    mu = symplectic_eigenvalues(ell.matrix)
    return float(np.pi / mu[-1])


def product_capacity(x: ConvexBody, p: ConvexBody, hbar: float = 1.0,
                     tol: float = 1e-9) -> CapacityReport:
    """Capacity of the Lagrangian product X x P: 4 * hbar * lambda_max.

    lambda_max is the polar inclusion scale max{lambda : lambda P^hbar in X},
    so the report is consistent with the quantum-pair verdict on (X, P) by
    construction: the 4*hbar lower bound holds iff the pair does.
    """
    if hbar <= 0:
        raise ValueError(f"hbar must be positive, got {hbar}")
    lam, exact = _inclusion_scale_detail(x, p, hbar)
    value = 4.0 * hbar * lam
    return CapacityReport(
        value=value,
        kind="product",
        lower_bound_4hbar_met=bool(lam >= 1.0 - tol),
        equality_case=bool(abs(lam - 1.0) <= tol),
        lambda_max=lam,
        exact=exact,
    )


def section_area(sigma, j: int, hbar: float = 1.0) -> float:
    """Area of the covariance ellipsoid's section by the j-th conjugate plane.

    sigma is a 2n x 2n covariance matrix (or a CovarianceMatrix); the region
    is {z : z^T Sigma^{-1} z / 2 <= 1} and the section sets every coordinate
    except (x_j, p_j) to zero. j is 1-based. For a valid quantum covariance
    matrix the area is at least pi * hbar; hbar itself does not enter the
    value.
    """
    del hbar
    mat = np.asarray(getattr(sigma, "sigma", sigma), dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] % 2:
        raise DimensionError(f"expected a 2n x 2n matrix, got shape {mat.shape}")
    n = mat.shape[0] // 2
    if not 1 <= j <= n:
        raise IndexError(f"mode index must satisfy 1 <= j <= {n}, got {j}")
    inv = np.linalg.inv(mat)
    idx = [j - 1, n + j - 1]
    sub = inv[np.ix_(idx, idx)] / 2.0
    det = np.linalg.det(sub)
    if det <= 0:
        raise DimensionError("covariance matrix is singular on the requested plane")
    return float(np.pi / np.sqrt(det))


def _interval_halfwidth(body: ConvexBody) -> float:
    if body.dim != 1:
        raise DimensionError(f"expected a one-dimensional interval body, got dim {body.dim}")
    if isinstance(body, Ellipsoid):
        return float(1.0 / np.sqrt(body.matrix[0, 0]))
    if isinstance(body, HPolytope):
        return float(1.0 / np.max(np.abs(body.rows)))
    return float(np.max(np.abs(body.vertices)))


def area_oracle_1d(x: ConvexBody, p: ConvexBody) -> float:
    """Area of the rectangle X x P for symmetric intervals X = [-a,a], P = [-b,b].

    Computed straight from the representations (no polarity involved); on one
    degree of freedom this must coincide with product_capacity.
    """
    return 4.0 * _interval_halfwidth(x) * _interval_halfwidth(p)


def product_projection_area(x: ConvexBody, p: ConvexBody, j: int) -> float:
    """Area of the projection of X x P onto the j-th conjugate plane (1-based).

    The projection is the rectangle [-h_X(e_j), h_X(e_j)] x [-h_P(e_j), h_P(e_j)];
    for a quantum pair it is at least 4 * hbar.
    """
    if x.dim != p.dim:
        raise DimensionError(f"dimension mismatch: X is {x.dim}-dim, P is {p.dim}-dim")
    if not 1 <= j <= x.dim:
        raise IndexError(f"mode index must satisfy 1 <= j <= {x.dim}, got {j}")
    e = np.zeros(x.dim)
    e[j - 1] = 1.0
    return 4.0 * support(x, e) * support(p, e)
