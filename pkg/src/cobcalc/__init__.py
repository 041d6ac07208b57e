"""cobcalc: exact formal-group-law and characteristic-class calculator with
fixed-point congruence verifiers for involutions on smooth projective
varieties."""

from .core_algebra import (
    ZZ,
    ZHALF,
    TRING,
    TEPS,
    IntegerLattice,
    LaurentSeries,
    TruncatedSeries,
    b_ring,
    hnf_rows,
    int_mod,
    partitions,
)
from .fgl import (
    FormalGroupLaw,
    additive_fgl,
    b_transport,
    cha_b_image,
    cha_fgl,
    chx_b_image,
    chx_fgl,
    formal_inverse,
    formal_mult,
    specialize,
    universal_fgl,
    universal_fgl_mod_p,
)
from .symmfunc import (
    cf_class,
    lambda_coeffs,
    m_product,
    msym,
    q_alpha,
    total_P,
    total_P_deformed,
)
from .chow_models import (
    ChowModel,
    VarietySpec,
    VirtualSplitBundle,
    additive_chern_number,
    build_model,
    chern_class,
    chern_number,
    chern_total,
    euler_number,
    fundamental_class,
    pushforward_projbundle,
    quillen_pushforward,
    tangent_bundle,
)
from .cobordism import (
    LazardDegreePiece,
    binomial_middle_gcd,
    decomposable_test,
    lattice_member_mod,
    lazard_basis,
    lazard_piece,
    mod2_theory_member,
    mod2_theory_piece,
    p_typical_chern_check,
    p_typical_kernel_check,
    prime_power_root,
)
from .fixedpoint import (
    BUILTIN_CATALOG,
    VERIFIERS,
    FixedComponent,
    MuTwoActionModel,
    builtin_action,
    verify_L2_relations,
    verify_additive,
    verify_all,
    verify_decomposable,
    verify_euler,
    verify_ks,
    verify_lmod2,
    verify_trivial_normal,
)
from .report import Check, Report

__version__ = "0.1.0"

__all__ = [
    "ZZ", "ZHALF", "TRING", "TEPS", "IntegerLattice", "LaurentSeries",
    "TruncatedSeries", "b_ring", "hnf_rows", "int_mod", "partitions",
    "FormalGroupLaw", "additive_fgl", "b_transport", "cha_b_image", "cha_fgl",
    "chx_b_image", "chx_fgl", "formal_inverse", "formal_mult", "specialize",
    "universal_fgl", "universal_fgl_mod_p",
    "cf_class", "lambda_coeffs", "m_product", "msym", "q_alpha", "total_P",
    "total_P_deformed",
    "ChowModel", "VarietySpec", "VirtualSplitBundle", "additive_chern_number",
    "build_model", "chern_class", "chern_number", "chern_total",
    "euler_number", "fundamental_class", "pushforward_projbundle",
    "quillen_pushforward", "tangent_bundle",
    "LazardDegreePiece", "binomial_middle_gcd", "decomposable_test",
    "lattice_member_mod", "lazard_basis", "lazard_piece",
    "mod2_theory_member", "mod2_theory_piece", "p_typical_chern_check",
    "p_typical_kernel_check", "prime_power_root",
    "BUILTIN_CATALOG", "VERIFIERS", "FixedComponent", "MuTwoActionModel",
    "builtin_action", "verify_L2_relations", "verify_additive", "verify_all",
    "verify_decomposable", "verify_euler", "verify_ks", "verify_lmod2",
    "verify_trivial_normal",
    "Check", "Report",
    "__version__",
]
