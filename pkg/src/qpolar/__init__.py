"""qpolar: hbar-polar duality, symplectic capacities, and quantum covariance analysis."""

from .bodies import (
    ContainmentResult,
    ConvexBody,
    Ellipsoid,
    HPolytope,
    VPolytope,
    contains,
    enclosing_ellipsoid,
    gauge,
    linear_image,
    scale,
    support,
)
from .capacities import (
    CapacityReport,
    area_oracle_1d,
    ellipsoid_capacity,
    product_capacity,
    product_projection_area,
    section_area,
)
from .cloud import (
    AnalysisReport,
    DiskDemoReport,
    MeasurementCloud,
    cloud_analyze,
    cloud_generate_disk,
    disk_demo,
)
from .errors import (
    BoundaryDecayWarning,
    ConvergenceError,
    DegenerateBodyError,
    DimensionError,
    GridError,
    HardyInconsistencyWarning,
    InvalidCovarianceError,
    NotPositiveDefiniteError,
    NotSymmetricError,
    QPolarError,
    SingularMatrixError,
)
from .hardy import (
    MinkowskiExperiment,
    hardy_envelope_verify,
    hbar_fourier_1d,
    minkowski_envelope_experiment,
)
from .polarity import PairVerdict, inclusion_scale, is_quantum_pair, polar_dual
from .quantum import (
    CovarianceMatrix,
    HardyInput,
    HardyVerdict,
    capacity_criterion,
    covariance_ellipsoid,
    hardy_check,
    heisenberg_eigen_check,
    is_quantum_covariance,
    project_xp,
    random_quantum_covariance,
    rs_check,
    theorem2_check,
)
from .sections import emit_section_plot
from .symplectic import (
    block_diagonalize,
    is_symplectic,
    random_symplectic,
    standard_symplectic_matrix,
    symplectic_eigenvalues,
    symplectic_form,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BoundaryDecayWarning",
    "CapacityReport",
    "ContainmentResult",
    "ConvergenceError",
    "ConvexBody",
    "CovarianceMatrix",
    "DegenerateBodyError",
    "DimensionError",
    "DiskDemoReport",
    "Ellipsoid",
    "GridError",
    "HPolytope",
    "HardyInconsistencyWarning",
    "HardyInput",
    "HardyVerdict",
    "InvalidCovarianceError",
    "MeasurementCloud",
    "MinkowskiExperiment",
    "NotPositiveDefiniteError",
    "NotSymmetricError",
    "PairVerdict",
    "QPolarError",
    "SingularMatrixError",
    "VPolytope",
    "area_oracle_1d",
    "block_diagonalize",
    "capacity_criterion",
    "cloud_analyze",
    "cloud_generate_disk",
    "contains",
    "covariance_ellipsoid",
    "disk_demo",
    "ellipsoid_capacity",
    "emit_section_plot",
    "enclosing_ellipsoid",
    "gauge",
    "hardy_check",
    "hardy_envelope_verify",
    "hbar_fourier_1d",
    "heisenberg_eigen_check",
    "inclusion_scale",
    "is_quantum_covariance",
    "is_quantum_pair",
    "is_symplectic",
    "linear_image",
    "minkowski_envelope_experiment",
    "polar_dual",
    "product_capacity",
    "product_projection_area",
    "project_xp",
    "random_quantum_covariance",
    "random_symplectic",
    "rs_check",
    "scale",
    "section_area",
    "standard_symplectic_matrix",
    "support",
    "symplectic_eigenvalues",
    "symplectic_form",
    "theorem2_check",
]
