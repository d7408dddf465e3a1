"""Weyl-group and root-datum combinatorics for parabolic induction.

The package computes minimal (double) coset representatives and their
decompositions, Bruhat order, lower-set filtrations, the inversion invariants
d_w and delta_w, symbolic graded pieces of derived ordinary parts and derived
coinvariants, and a decision tree for extensions between parabolically
induced representations.
"""

from .errors import DomainError, InputError, WeylordError
from .ext import ExtVerdict, Scenario, check_consistency, ext1_verdict, extn_mode
from .grading import (
    GradedTerm,
    GradingReport,
    SigmaDescriptor,
    full_profile,
    graded_terms,
    hj_graded_pieces,
    hord_graded_pieces,
    surviving,
)
from .posets import FinitePoset, LowerSet, check_lin_identity, lattice_ops, principal_lower_set
from .rootdata import IsogenyFlags, RootDatum, build_datum, explicit_datum, preset_datum
from .weyl import (
    CrossSection,
    DoubleCosetTable,
    WeylElement,
    WeylGroup,
    bruhat_poset,
    cross_section,
    double_coset_table,
    opposition_map,
    weyl_group,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "InputError",
    "WeylordError",
    "ExtVerdict",
    "Scenario",
    "check_consistency",
    "ext1_verdict",
    "extn_mode",
    "GradedTerm",
    "GradingReport",
    "SigmaDescriptor",
    "full_profile",
    "graded_terms",
    "hj_graded_pieces",
    "hord_graded_pieces",
    "surviving",
    "FinitePoset",
    "LowerSet",
    "check_lin_identity",
    "lattice_ops",
    "principal_lower_set",
    "IsogenyFlags",
    "RootDatum",
    "build_datum",
    "explicit_datum",
    "preset_datum",
    "CrossSection",
    "DoubleCosetTable",
    "WeylElement",
    "WeylGroup",
    "bruhat_poset",
    "cross_section",
    "double_coset_table",
    "opposition_map",
    "weyl_group",
]
