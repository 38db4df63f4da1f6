"""Exact-arithmetic toolkit for root systems, Weyl groups, toric fans and
the colored-cone calculus of spherical embeddings.

Everything is computed over arbitrary-precision rationals; all values are
immutable after construction and every operation is a pure function, so the
whole API is safe to call from concurrent threads.
"""

from .errors import (
    BasisChangeError,
    BoundExceeded,
    InvalidInput,
    InvariantViolation,
    WeylfansError,
)
from .rootsys import (
    RootSystem,
    WeylElement,
    build_root_system,
    coordinate_swap,
    highest_root,
    longest_element,
    orbit,
    positive_roots,
    sign_flip,
    simple_reflection,
    subgroup_closure,
    weyl_enumerate,
    weyl_order,
)
from .lattice import (
    LatticeVector,
    anticanonical_weight,
    cartan_matrix,
    is_primitive_in_weight_lattice,
    minimal_curve_degree,
    pair,
    to_basis,
    weight_root_index,
)
from .polyhedra import (
    Fan,
    RationalCone,
    cone,
    contains,
    covered_by,
    faces,
    fan,
    is_complete,
    is_smooth,
    star_subdivision,
    zero_cone,
)
from .toric import (
    SurfaceBlowupLedger,
    ToricSurface,
    blowup_boundary_point,
    coefficient_spectrum,
    invariant_picard_rank,
    picard_number,
    ray_orbit_partition,
    subtorus_closure_fan,
    toric_surface,
    weyl_chamber_fan,
)
from .spherical import (
    ColoredCone,
    ColoredFan,
    DivisorLedger,
    anticanonical_divisor,
    blowup_chain_fans,
    closed_orbit_restriction,
    extends_to_morphism,
    is_complete_embedding,
    orbit_poset,
    picard_presentation,
    wonderful_colored_fan,
    z_colored_fan,
)
from .isotropic import (
    DoubledSpace,
    IsotropicSubspace,
    intersection_invariant,
    lg_orbit_dim,
    og_orbit_data,
    orthogonal_doubled,
    random_maximal_isotropic,
    symplectic_doubled,
    tau_fixed_locus_check,
)
from .casebook import CaseReport, list_cases, run_all, run_case

__version__ = "0.1.0"
