"""Exact computations for reductive symmetric superpairs of even type."""

from .config import SHIPPED, CheckConfig, FamilySpec
from .invariants import (
    InvariantBasis,
    VerificationReport,
    c_special_generators,
    check_generator_properties,
    invariants_degree,
    restriction_image_degree,
    theoremB_subspace,
    verify_chevalley,
)
from .linalg import Subspace, nullspace, rank, rref, simultaneous_weight_spaces
from .radial import (
    RadialOperator,
    apply_radial,
    bessel_theta,
    coeff_a,
    coeff_b,
    gamma_z,
    radial_closed_form,
    radial_rank1_formula,
    u_z,
)
from .roots import RootDatum, restricted_roots, symplectic_basis, weyl_group
from .superlie import LieSuperalgebra, build_gl, build_osp
from .superpoly import SuperPolynomial, adapted_basis, ad_star, pair, realize
from .sympair import SymmetricSuperpair, build_family, build_pair, validate_cartan

__all__ = [
    "SHIPPED", "CheckConfig", "FamilySpec",
    "InvariantBasis", "VerificationReport", "c_special_generators", "check_generator_properties",
    "invariants_degree", "restriction_image_degree", "theoremB_subspace", "verify_chevalley",
    "Subspace", "nullspace", "rank", "rref", "simultaneous_weight_spaces",
    "RadialOperator", "apply_radial", "bessel_theta", "coeff_a", "coeff_b", "gamma_z",
    "radial_closed_form", "radial_rank1_formula", "u_z",
    "RootDatum", "restricted_roots", "symplectic_basis", "weyl_group",
    "LieSuperalgebra", "build_gl", "build_osp",
    "SuperPolynomial", "adapted_basis", "ad_star", "pair", "realize",
    "SymmetricSuperpair", "build_family", "build_pair", "validate_cartan",
]
