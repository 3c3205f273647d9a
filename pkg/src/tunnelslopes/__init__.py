"""Exact-arithmetic slope invariants of tunnel-number-one knot and link tunnels."""

from .contfrac import EvenCF, cf_eval, even_cf_expand, negate_cf, sum_a
from .convert import conversion_word, convert_range, st_convert, st_convert_via_matrix
from .oracle import (
    OracleReport,
    check_uniqueness,
    enumerate_even_cfs,
    random_word_dictionary_check,
    selfcheck,
)
from .rationals import (
    INFINITY,
    DegenerateFractionError,
    IndeterminateFormError,
    NotFiniteError,
    ProjectiveRational,
    ResidueSlope,
    SlopePair,
    parse_rational,
    projective_add_invert,
    reduce,
    render,
    residue_of,
    slope_of_pair,
)
from .sl2 import (
    IDENTITY,
    ParityError,
    SL2Matrix,
    cf_entries_from_word,
    change_of_basis,
    generator_power,
    word_product,
)
from .tunnels import (
    ParseError,
    Target,
    TunnelClass,
    TunnelKind,
    TunnelParams,
    ValidationError,
    is_amphichiral,
    linking_number,
    mirror,
    parse,
    serialize,
    to_export,
    validate,
)
from .twobridge import (
    CablingContradictionError,
    CablingStep,
    LinkInvariantError,
    TrivialKnotError,
    TwoBridgeForm,
    cabling_steps,
    make_form,
    normalize_input,
    two_bridge_slopes,
    unit_rewrite,
)

__version__ = "0.1.0"

__all__ = [
    "CablingContradictionError",
    "CablingStep",
    "DegenerateFractionError",
    "EvenCF",
    "IDENTITY",
    "INFINITY",
    "IndeterminateFormError",
    "LinkInvariantError",
    "NotFiniteError",
    "OracleReport",
    "ParityError",
    "ParseError",
    "ProjectiveRational",
    "ResidueSlope",
    "SL2Matrix",
    "SlopePair",
    "Target",
    "TrivialKnotError",
    "TunnelClass",
    "TunnelKind",
    "TunnelParams",
    "TwoBridgeForm",
    "ValidationError",
    "cabling_steps",
    "cf_entries_from_word",
    "cf_eval",
    "change_of_basis",
    "check_uniqueness",
    "conversion_word",
    "convert_range",
    "enumerate_even_cfs",
    "even_cf_expand",
    "generator_power",
    "is_amphichiral",
    "linking_number",
    "make_form",
    "mirror",
    "negate_cf",
    "normalize_input",
    "parse",
    "parse_rational",
    "projective_add_invert",
    "random_word_dictionary_check",
    "reduce",
    "render",
    "residue_of",
    "selfcheck",
    "serialize",
    "slope_of_pair",
    "st_convert",
    "st_convert_via_matrix",
    "sum_a",
    "to_export",
    "two_bridge_slopes",
    "unit_rewrite",
    "validate",
    "word_product",
]
