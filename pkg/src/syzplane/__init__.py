"""Exact computation of Jacobian syzygy invariants for plane curves.

The package computes, over the rationals with no floating point anywhere,
the graded module of Jacobian syzygies of a reduced plane curve, its
minimal resolution data (generator and second syzygy degrees, Tjurina
number, classification into free, nearly free, plus-one generated and
general m-syzygy shapes), combinatorial admissibility tests for conic
arrangements, and a catalog of named arrangements with expected values
wired to a command line interface.
"""

from syzplane.poly import (
    HomogeneousPolynomial,
    Monomial,
    NotHomogeneousError,
    ParseError,
    ZeroPolynomialError,
    monomial_basis,
    multiply,
    parse,
    partial,
)
from syzplane.engine import (
    CurveAnalysis,
    SyzygyProfile,
    analyze,
    mdr,
    tjurina,
    verify_dimca_sticlaru,
)
from syzplane.combinatorics import (
    WeakCombinatorics,
    parse_census,
    total_tjurina,
)
from syzplane.classifier import (
    enumerate_nodal_tacnodal,
    nodal_tacnodal_classification_report,
    pog_filter,
)

__all__ = [
    "HomogeneousPolynomial",
    "Monomial",
    "NotHomogeneousError",
    "ParseError",
    "ZeroPolynomialError",
    "monomial_basis",
    "multiply",
    "parse",
    "partial",
    "CurveAnalysis",
    "SyzygyProfile",
    "analyze",
    "mdr",
    "tjurina",
    "verify_dimca_sticlaru",
    "WeakCombinatorics",
    "parse_census",
    "total_tjurina",
    "enumerate_nodal_tacnodal",
    "nodal_tacnodal_classification_report",
    "pog_filter",
]

__version__ = "0.1.0"
