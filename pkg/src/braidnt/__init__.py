"""Garside structure of braid groups and Nielsen-Thurston type of 4-braids."""

from .conjugacy import (
    TubeDecomposition,
    cable,
    conjugate_nonpa,
    conjugate_periodic,
    conjugate_reducible2,
    conjugate_reducible3,
    tube2_braid,
    tube3_braid,
    tube_decompose,
)
from .curves import (
    Curve,
    CurveCatalogue,
    act,
    complexity_upto,
    is_almost_round,
    is_round,
    round_curve,
    standardizer,
    three_puncture_catalogue,
    track_through_factors,
)
from .garside import NormalForm, SimpleBraid, left_weighted, normal_form, tau
from .reducibility import (
    NTType,
    ReductionWitness,
    blow_up,
    has_3puncture_reduction,
    is_periodic,
    nt_type,
    pure_power,
    reduction_to_round,
)
from .summit import (
    ConjugacyAnswer,
    b3_conjugacy,
    b3_sss_enumerate,
    cyclic_sliding,
    cycling,
    is_rigid,
    preferred_prefix,
    sss_enumerate_bounded,
    sss_representative,
)
from .words import (
    BraidError,
    BraidWord,
    StrandMismatch,
    delta_word,
    exponent_sum,
    is_pure,
    linking_number,
    outer_crossing_count,
    parse_word,
    underlying_permutation,
    word_concat,
    word_inverse,
    word_power,
)

__version__ = "0.1.0"
