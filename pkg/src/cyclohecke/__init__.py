"""Exact seminormal forms for cyclotomic Hecke algebras of types G(r,1,n) and G(r,p,n)."""

from .exactfield import (
    CycloRational,
    HeckeParams,
    SemisimplicityError,
    check_semisimple,
    cyclotomic_polynomial,
    default_params,
    eps_power,
    make_params,
)
from .gprn import GrpnLayer, grpn_basis, grpn_central_idempotents, twisted_center_basis
from .seminormal import SeminormalForm, gamma_table, sigma_apply, word_basis_expand
from .tableaux import Multipartition, StandardTableau, enumerate_multipartitions, enumerate_standard_tableaux
from .verify import brute_force_center_dims, dim_audit, run_suite

__version__ = "0.1.0"

__all__ = [
    "CycloRational",
    "HeckeParams",
    "SemisimplicityError",
    "check_semisimple",
    "cyclotomic_polynomial",
    "default_params",
    "eps_power",
    "make_params",
    "GrpnLayer",
    "grpn_basis",
    "grpn_central_idempotents",
    "twisted_center_basis",
    "SeminormalForm",
    "gamma_table",
    "sigma_apply",
    "word_basis_expand",
    "Multipartition",
    "StandardTableau",
    "enumerate_multipartitions",
    "enumerate_standard_tableaux",
    "brute_force_center_dims",
    "dim_audit",
    "run_suite",
]
