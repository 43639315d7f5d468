"""Exact trace ideals, residues and Gorenstein-type classification.

Artinian local algebras are handled over GF(p), GF(p^s) and QQ; numerical
semigroup rings through value ideals and their artinian reductions.
"""

from .algebra import ArtinianAlgebra, algebra_from_monomial_quotient, algebra_from_table, quotient_algebra
from .classify import ClassificationRecord, classify, trace_ideal_and_residue, wag_search
from .fields import GF, QQ, Field
from .kernels import BACKEND
from .linalg import CapacityError, Subspace
from .modules import ModuleRep, canonical_module, ext1, hom_module, minimal_presentation, tor1
from .numsgp import NumericalSemigroup, artinian_reduction, classify_ns, trace_and_residue_ns
from .specio import AlgebraSpec, parse_spec, print_spec
from .verifier import SuiteConfig, run_check, run_suite

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec", "ArtinianAlgebra", "BACKEND", "CapacityError", "ClassificationRecord", "Field", "GF",
    "ModuleRep", "NumericalSemigroup", "QQ", "Subspace", "SuiteConfig", "algebra_from_monomial_quotient",
    "algebra_from_table", "artinian_reduction", "canonical_module", "classify", "classify_ns", "ext1",
    "hom_module", "minimal_presentation", "parse_spec", "print_spec", "quotient_algebra", "run_check",
    "run_suite", "tor1", "trace_and_residue_ns", "trace_ideal_and_residue", "wag_search",
]
