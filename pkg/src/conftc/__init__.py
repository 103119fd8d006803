"""Certified cup-length bounds for configuration spaces of surfaces.

Exact symbolic computation in the cohomology of cartesian powers of
orientable surfaces and the quotients that carry zero-divisor
certificates, machine-verifying the lower bounds behind the higher
topological complexity table of their configuration spaces.
"""

from .algebra import (
    Element,
    TensorElement,
    TruncatedPolynomialAlgebra,
    poincare_polynomial,
)
from .certificates import (
    Certificate,
    bar,
    bar_product_xs,
    c_d_factors,
    evaluate_certificate,
    rp3_zcl_check,
    tc_upper_bound,
    tc_value,
    tilde_product_ys,
    verify_lemma_identities,
    y1i_product,
    zcl_search,
)
from .errors import ConftcError, SizeGuardError, VerificationError
from .fields import GF2, RATIONALS
from .linalg import GradedSubspace
from .quotients import (
    QuotientAlgebra,
    cached_quotient,
    cached_surface,
    ideal_span,
    quotient,
    verify_subalgebra_chain,
)
from .surfaces import (
    RelationSet,
    SurfacePowerAlgebra,
    reduced_letter_basis,
    reduced_shifted_basis,
    cross_handle_relations,
    xy_pair_relations,
    surface_power,
    totaro_relations,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "ConftcError",
    "Element",
    "GF2",
    "GradedSubspace",
    "QuotientAlgebra",
    "RATIONALS",
    "RelationSet",
    "SizeGuardError",
    "SurfacePowerAlgebra",
    "TensorElement",
    "TruncatedPolynomialAlgebra",
    "VerificationError",
    "bar",
    "bar_product_xs",
    "reduced_letter_basis",
    "reduced_shifted_basis",
    "cross_handle_relations",
    "c_d_factors",
    "cached_quotient",
    "cached_surface",
    "evaluate_certificate",
    "ideal_span",
    "xy_pair_relations",
    "poincare_polynomial",
    "quotient",
    "rp3_zcl_check",
    "surface_power",
    "tc_upper_bound",
    "tc_value",
    "tilde_product_ys",
    "totaro_relations",
    "verify_lemma_identities",
    "verify_subalgebra_chain",
    "y1i_product",
    "zcl_search",
]
