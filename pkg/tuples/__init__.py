from .dioph_tuple import DiophTuple, canonical_witness, check_witnesses, is_diophantine_pair, make_tuple
from .regular_triples import (
    ExtensionCandidates,
    FactorCase,
    c_plus_minus,
    c_plus_minus_product,
    double_regular_census,
    double_regular_factor_cases,
    forbidden_double_regular,
    is_regular_triple,
    products_not_squares,
    quadruple_extension_candidates,
    regular_extensions,
)
from .tuple_errors import (
    DuplicateElement,
    EqualElements,
    NotAPair,
    NotAQuadruple,
    NotATriple,
    NotDiophantine,
    TupleError,
    ZeroElement,
)

__all__ = [
    "DiophTuple",
    "DuplicateElement",
    "EqualElements",
    "ExtensionCandidates",
    "FactorCase",
    "NotAPair",
    "NotAQuadruple",
    "NotATriple",
    "NotDiophantine",
    "TupleError",
    "ZeroElement",
    "c_plus_minus",
    "c_plus_minus_product",
    "canonical_witness",
    "check_witnesses",
    "double_regular_census",
    "double_regular_factor_cases",
    "forbidden_double_regular",
    "is_diophantine_pair",
    "is_regular_triple",
    "make_tuple",
    "products_not_squares",
    "quadruple_extension_candidates",
    "regular_extensions",
]
