"""Exact cohomology of finite-dimensional Lie algebras over the rationals,
with a catalog of conformal Galilei algebras and their central extensions."""

from .catalog import (
    CatalogError,
    CatalogSpec,
    build,
    build_abelian,
    build_cga,
    build_d1_cga,
    build_exotic_extension,
    build_heisenberg,
    build_mass_extension,
    build_schrodinger,
    build_sl2,
    build_so,
    exotic_coefficient,
    mass_coefficient,
)
from .cochains import (
    CochainIndexing,
    CohomologyReport,
    DegreeReport,
    cohomology,
    d_squared_is_zero,
    derivation_space,
    differential_matrix,
)
from .equivariance import (
    HSReport,
    InvariantReport,
    action_matrix,
    hochschild_serre_check,
    hom_invariants_dim,
    invariant_cohomology,
)
from .lie import (
    JacobiError,
    LeviData,
    LeviReport,
    LieAlgebra,
    LieValidationError,
    Representation,
    adjoint_rep,
    bracket,
    check_levi,
    jacobi_violations,
    lie_algebra_from_json,
    lie_algebra_to_json,
    make_lie_algebra,
    make_representation,
    restrict_rep,
    subalgebra,
    trivial_rep,
)
from .linalg import (
    DimensionError,
    SparseMatrix,
    SubspaceBasis,
    apply,
    image_basis,
    intersect,
    kernel_basis,
    rank,
    span,
)

__version__ = "0.1.0"
