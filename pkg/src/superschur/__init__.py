"""Exact computations with finite-dimensional Lie superalgebras: multipliers,
covers and stem extensions, by graded second cohomology and by a Hopf-type
formula over free nilpotent presentations."""

from .algebra import (
    HomSpec,
    LieSuperalgebra,
    NotAnIdeal,
    StructureError,
    abelian,
    bracket,
    center,
    derived,
    direct_sum,
    is_ideal,
    lower_central_series,
    nilpotency_class,
    quotient,
    super_nilindex,
    validate,
    verify_hom,
    verify_iso,
)
from .cohomology import coboundary_sdim, cocycle_sdim, kernel_bound, multiplier_sdim
from .core import RATIONAL, Field, GradedSubspace, Mod, SuperDim, echelonize
from .extensions import (
    ExtensionSpec,
    PreconditionError,
    is_central,
    is_maximal_stem,
    is_stem,
    is_stem_denominator,
    stem_deformation,
    stem_denominator,
    verify_extension,
)
from .families import (
    FamilyId,
    build,
    build_cover,
    cover_filiform,
    cover_heisenberg_odd,
    heisenberg_even,
    heisenberg_odd,
    model_filiform,
    multiplier_formula,
)
from .freepres import ClassBoundError, cover_from_free, free_nilpotent, hopf, hopf_multiplier

__version__ = "0.1.0"
