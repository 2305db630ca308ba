"""Certified interleaving calculus for finite-grid persistent objects over
finite sets, GF(2)-vector spaces, and simplicial complexes, with filtration
builders, persistent invariants, exact bottleneck distance, and a CLI.
"""

from .errors import (
    BudgetExceededError,
    CategoryError,
    DimensionError,
    InvalidScaleError,
    OrderError,
    PerscertError,
    SchemaError,
    ShiftError,
    ValidationError,
)
from .grades import (
    Grade,
    Rational,
    even_reindex,
    floor_int,
    grade,
    odd_reindex,
    rat,
    rat_to_str,
    scale,
    zero_grade,
)
from .persist import (
    DeltaMorphism,
    Grid,
    InterleavingCert,
    InterleavingReport,
    PersistentObject,
    PullbackResult,
    SearchResult,
    canonical_grid,
    check_interleaving,
    compose,
    compose_interleavings,
    constant_object,
    extend_floor,
    find_partner,
    floor_roundtrip_cert,
    identity_shift,
    integer_object,
    interleaving_distance_search,
    pullback_interleaving,
    rescale,
    rescale_cert,
    rescale_morphism,
    restrict_to_Z,
    self_interleaving,
    shift_morphism,
)
from .complexes import (
    FilteredComplex,
    MetricInput,
    SquareDiagram,
    cofibrant_dimension,
    degree_rips,
    dimension,
    function_rips,
    is_filtered,
    is_n_skeletal,
    metric_from_coordinates,
    skeleton,
    sq_gadget,
    to_persistent,
    validate,
    vietoris_rips,
)
from .invariants import (
    Bar,
    Barcode,
    barcode,
    homology,
    homology_cert,
    homology_induced,
    induces_interleaving_in_pi0,
    pi0,
    pi0_induced,
    slice_axis,
)
from .rectify import (
    ZigzagResult,
    even_odd_restrict,
    reindex,
    three_halves_check,
    zigzag,
)
from .distances import (
    Matching,
    bottleneck,
    module_distance_crosscheck,
    stability_audit,
)

__version__ = "0.1.0"
