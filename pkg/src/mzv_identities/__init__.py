"""Exact generation and numeric verification of multiple zeta value identities of maximal height."""
from .combo import FINITE, REAL, ZetaCombo
from .identities import (
    IdentityInstance,
    gen_derivation,
    gen_derivation_finite,
    gen_finite,
    gen_finite_algebraic,
    gen_height_one,
    gen_main,
    gen_main_algebraic,
    gen_ohno,
    gen_ohno_finite,
    make_instance,
    sym_mzv_star,
)
from .finite import PrimeSet, eval_fmzv, eval_fmzv_mod_p, verify_finite
from .index import dual, hoffman_dual, parse_index, refinements
from .real import eval_combo, eval_mzv, verify_real
from .report import VerificationReport

__all__ = [
    "FINITE",
    "REAL",
    "IdentityInstance",
    "PrimeSet",
    "VerificationReport",
    "ZetaCombo",
    "dual",
    "eval_combo",
    "eval_fmzv",
    "eval_fmzv_mod_p",
    "eval_mzv",
    "gen_derivation",
    "gen_derivation_finite",
    "gen_finite",
    "gen_finite_algebraic",
    "gen_height_one",
    "gen_main",
    "gen_main_algebraic",
    "gen_ohno",
    "gen_ohno_finite",
    "hoffman_dual",
    "make_instance",
    "parse_index",
    "refinements",
    "sym_mzv_star",
    "verify_finite",
    "verify_real",
]
