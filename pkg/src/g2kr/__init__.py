"""Exact characters and graded Kirillov-Reshetikhin characters for G2."""

from .characters import (
    Character,
    decompose,
    irreducible_character,
    multiply,
    tensor,
    weyl_dim,
)
from .equivalence import (
    class_keys,
    class_members,
    class_size_formula,
    rebuild_graded_character,
    representative,
    shift_vector,
    verify_partition,
)
from .kr import (
    Family,
    GradedDecomposition,
    compare,
    conjecture_coefficient,
    conjecture_graded_character,
    enumerate_region,
    expand_weights,
    graded_dimensions,
    in_region,
    kr_graded_character,
    wt_gr,
)
from .weights import (
    ALL_ROOTS,
    ALPHA1,
    ALPHA2,
    LONG_ROOTS,
    OMEGA1,
    OMEGA2,
    POSITIVE_ROOTS,
    RHO,
    SHORT_ROOTS,
    Weight,
    dominant_representative,
    from_root_coords,
    in_root_cone,
    inner,
    is_dominant,
    simple_reflection,
    to_root_coords,
    weyl_orbit,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_ROOTS",
    "ALPHA1",
    "ALPHA2",
    "Character",
    "Family",
    "GradedDecomposition",
    "LONG_ROOTS",
    "OMEGA1",
    "OMEGA2",
    "POSITIVE_ROOTS",
    "RHO",
    "SHORT_ROOTS",
    "Weight",
    "class_keys",
    "class_members",
    "class_size_formula",
    "compare",
    "conjecture_coefficient",
    "conjecture_graded_character",
    "decompose",
    "dominant_representative",
    "enumerate_region",
    "expand_weights",
    "from_root_coords",
    "graded_dimensions",
    "in_region",
    "in_root_cone",
    "inner",
    "irreducible_character",
    "is_dominant",
    "kr_graded_character",
    "multiply",
    "rebuild_graded_character",
    "representative",
    "shift_vector",
    "simple_reflection",
    "tensor",
    "to_root_coords",
    "verify_partition",
    "weyl_dim",
    "weyl_orbit",
    "wt_gr",
]
