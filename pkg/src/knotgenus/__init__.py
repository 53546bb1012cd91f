"""Exact-arithmetic knot concordance toolkit.

Seifert-matrix invariants (Alexander polynomials, certified Tristram-Levine
signatures), double-branched-cover character analysis, satellite corrections
to Casson-Gordon signatures, and machine-checkable 4-genus lower-bound
certificates, with a JSON-emitting command line interface.
"""

from .errors import (
    CapExceededError,
    ExprSyntaxError,
    InputError,
    KnotgenusError,
    SingularOmegaError,
    UnsupportedTorusKnotError,
)
from .intmatrix import (
    IntMatrix,
    ModKernel,
    SNFResult,
    det_linear_pencil,
    invariant_factors,
    kernel_mod_q,
    smith_normal_form,
)
from .knots import (
    ConnectedSum,
    KnotExpr,
    Literal,
    Mirror,
    Multiple,
    RationalAngle,
    SeifertKnot,
    TorusKnot,
    UNKNOT,
    alexander_polynomial,
    g4_signature_bound,
    parse_knot_expr,
    seifert_matrix,
    tl_signature,
    unit_circle_root_count,
)
from .cover import (
    Character,
    CoverPresentation,
    HomologyClass,
    double_cover_presentation,
    enumerate_characters,
    is_surjective,
    rescaling_classes,
)
from .infection import (
    InfectionConfig,
    InfectionSite,
    LinearInC,
    cg_correction,
    conditions_satisfied,
    signature_profile,
    small_character_set,
    verify_separation_profile,
)
from .obstruction import (
    GenusCertificate,
    certify_genus_lower_bound,
    gilmer_contradiction_check,
    min_annihilator_order,
    product_small_set,
    subgroups_of_order,
)
from .hopflink import g4_bound_banded, ind, sigma_col_hopf_cable, signature_Lm
from .baseknot import bundled_dataset, load_base_knot_dataset, load_infection_config

__version__ = "0.1.0"

__all__ = [
    "CapExceededError", "ExprSyntaxError", "InputError", "KnotgenusError",
    "SingularOmegaError", "UnsupportedTorusKnotError",
    "IntMatrix", "ModKernel", "SNFResult", "det_linear_pencil",
    "invariant_factors", "kernel_mod_q", "smith_normal_form",
    "ConnectedSum", "KnotExpr", "Literal", "Mirror", "Multiple",
    "RationalAngle", "SeifertKnot", "TorusKnot", "UNKNOT",
    "alexander_polynomial", "g4_signature_bound", "parse_knot_expr",
    "seifert_matrix", "tl_signature", "unit_circle_root_count",
    "Character", "CoverPresentation", "HomologyClass",
    "double_cover_presentation", "enumerate_characters", "is_surjective",
    "rescaling_classes",
    "InfectionConfig", "InfectionSite", "LinearInC", "cg_correction",
    "conditions_satisfied", "signature_profile", "small_character_set",
    "verify_separation_profile",
    "GenusCertificate", "certify_genus_lower_bound",
    "gilmer_contradiction_check", "min_annihilator_order",
    "product_small_set", "subgroups_of_order",
    "g4_bound_banded", "ind", "sigma_col_hopf_cable", "signature_Lm",
    "bundled_dataset", "load_base_knot_dataset", "load_infection_config",
    "__version__",
]
