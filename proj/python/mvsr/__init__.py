"""Finite MV-algebras, idempotent semirings and their semimodules."""

import json

from ._mvsr import (
    MvAlgebra,
    MvsrError,
    Semimodule,
    Semiring,
    free_module,
    lukasiewicz_chain,
    product,
    reduct_vee_odot,
    reduct_wedge_oplus,
    regular_module,
    run_cli,
    star_is_reduct_isomorphism,
)
from . import _mvsr


def check(algebra):
    """Law report of a semiring, MV-algebra or semimodule as a dict."""
    return json.loads(algebra.check_axioms())


def tensor(left, right, method="quotient"):
    return json.loads(_mvsr.tensor_report(left, right, method))


def k0(semiring, n_max=2):
    return json.loads(_mvsr.k0_report(semiring, n_max))


def projective(module):
    return json.loads(_mvsr.projective_report(module))


def gamma(unit="1", samples=10000, seed=42, nonnegative=False):
    return json.loads(_mvsr.gamma_report(unit, samples, seed, nonnegative))


__all__ = [
    "MvAlgebra",
    "MvsrError",
    "Semimodule",
    "Semiring",
    "check",
    "free_module",
    "gamma",
    "k0",
    "lukasiewicz_chain",
    "product",
    "projective",
    "reduct_vee_odot",
    "reduct_wedge_oplus",
    "regular_module",
    "run_cli",
    "star_is_reduct_isomorphism",
    "tensor",
]
