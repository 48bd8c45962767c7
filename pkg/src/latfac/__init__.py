"""Factorization and transfer systems on finite lattices.

Enumerate transfer and factorization systems, compute characteristic and
cocharacteristic operators, realize the bijections with submonoids, monads,
Moore families, saturated covers and model structures, and reconcile the
counts against poly-Bernoulli numbers.
"""

from ._kernels import available_backends, compiled_available, default_backend
from .bijections import (
    ModelStructure,
    Submonoid,
    enumerate_closure_operators,
    enumerate_interior_operators,
    enumerate_submonoids,
    fac_to_submonoid,
    galois_check,
    is_comonad,
    is_model_structure,
    is_monad,
    make_cofibrant,
    make_fibrant,
    maximal_fs,
    minimal_fs,
    submonoid_to_fac,
    weak_composite,
)
from .counting import (
    CountReport,
    count_report,
    count_saturated_grid,
    grid_dims,
    poly_bernoulli,
    stirling2,
)
from .errors import LatfacError
from .factorization import (
    FactorizationSystem,
    FSViolation,
    bottom_slice,
    dual_fs,
    enumerate_fac,
    factor,
    from_transfer,
    is_coreflective,
    is_reflective,
    left_complement,
    lifts,
    right_complement,
    to_transfer,
    validate_fs,
)
from .lattice import (
    Lattice,
    build_lattice,
    covering_diamonds,
    dual_lattice,
    hasse_dot,
    is_modular,
    make_standard,
    max_elements,
)
from .operators import (
    Endo,
    Fiber,
    OperatorClass,
    characteristic,
    classify,
    closure_from_submonoid,
    cocharacteristic,
    enumerate_monotone_endos,
    fiber,
    fixed_points,
    interior_from_submonoid,
    verify_duality,
)
from .relations import Relation, covering_relations, pair_space, three_for_two
from .suites import SUITE_NAMES, SuiteReport, verify_suite
from .transfer import (
    SaturatedCover,
    TransferSystem,
    Violation,
    cover_of,
    enumerate_saturated,
    enumerate_saturated_covers,
    enumerate_transfer,
    generate,
    is_disklike,
    is_saturated,
    is_saturated_cover,
    overlay_dot,
    slice_top,
    ts_join,
    ts_meet,
    ts_of,
    validate_transfer,
)

__version__ = "0.1.0"
