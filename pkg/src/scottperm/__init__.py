"""Exact permanents of reciprocal-difference matrices over polynomial root sets.

Given polynomials P (roots X, the rows) and Q (roots Y, the columns), the
package evaluates per(1/(x_i - y_j)) through four independent routes:

* a polynomial-time exact determinant identity (`scott_permanent`),
* banded-determinant specializations for the row families x^n - 1 and
  1 + x + ... + x^(n-1) (`fes_engine`),
* a catalog of closed forms for named (P, Q) families (`closed_catalog`),
* a brute-force numeric oracle plus an involution-sum expansion
  (`numeric_oracle`),

and cross-validates them (`verify`).  A gallery of structured integer
determinant identities and involution-sum identities rounds it out.
"""
from .closed_catalog import (
    CatalogEntry,
    InvolutionIdentityReport,
    ShiftedFactorial,
    catalog_entries,
    catalog_eval,
    catalog_family,
    catalog_ids,
    find_matching,
    involution_identity_check,
    poch,
)
from .det_gallery import GALLERY_IDS, GalleryCase, gallery_closed_form, gallery_matrix
from .errors import (
    BadParams,
    BothZero,
    DidNotConverge,
    NonSquare,
    OutOfDomain,
    ParseError,
    RepeatedXRoot,
    ScottPermError,
    SharedRoot,
    SingularEntry,
    ZeroConstantTerm,
    ZeroDegree,
    ZeroLeadingCoefficient,
    ZeroPolynomial,
)
from .exact_core import (
    Polynomial,
    Rational,
    RationalMatrix,
    exact_det,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
    resultant,
    series_inverse,
    sylvester_matrix,
)
from .fes_engine import (
    RowFamily,
    classify_row_polynomial,
    fes,
    fes_matrix,
    fes_tilde,
    fes_tilde_matrix,
    per_via_fes,
    special_resultant,
)
from .numeric_oracle import (
    Involution,
    borchardt_matrix_det,
    brute_permanent,
    cauchy_matrix_det,
    enumerate_involutions,
    find_roots,
    involution_sum,
    involution_weighted_sum,
    random_coprime_pair,
    ryser_permanent,
    unit_roots,
)
from .scott_engine import (
    EvalResult,
    RouteOutcome,
    VerifyReport,
    build_E,
    build_H,
    relative_gap,
    scott_permanent,
    verify,
)

__all__ = [
    "BadParams",
    "BothZero",
    "CatalogEntry",
    "DidNotConverge",
    "EvalResult",
    "GALLERY_IDS",
    "GalleryCase",
    "Involution",
    "InvolutionIdentityReport",
    "NonSquare",
    "OutOfDomain",
    "ParseError",
    "Polynomial",
    "Rational",
    "RationalMatrix",
    "RepeatedXRoot",
    "RouteOutcome",
    "RowFamily",
    "ScottPermError",
    "SharedRoot",
    "ShiftedFactorial",
    "SingularEntry",
    "VerifyReport",
    "ZeroConstantTerm",
    "ZeroDegree",
    "ZeroLeadingCoefficient",
    "ZeroPolynomial",
    "borchardt_matrix_det",
    "brute_permanent",
    "build_E",
    "build_H",
    "catalog_entries",
    "catalog_eval",
    "catalog_family",
    "catalog_ids",
    "cauchy_matrix_det",
    "classify_row_polynomial",
    "enumerate_involutions",
    "exact_det",
    "fes",
    "fes_matrix",
    "fes_tilde",
    "fes_tilde_matrix",
    "find_matching",
    "find_roots",
    "gallery_closed_form",
    "gallery_matrix",
    "involution_identity_check",
    "involution_sum",
    "involution_weighted_sum",
    "per_via_fes",
    "poch",
    "poly_divmod",
    "poly_eval",
    "poly_gcd",
    "poly_mul",
    "random_coprime_pair",
    "relative_gap",
    "resultant",
    "ryser_permanent",
    "scott_permanent",
    "series_inverse",
    "special_resultant",
    "sylvester_matrix",
    "unit_roots",
    "verify",
]

__version__ = "1.0.0"
