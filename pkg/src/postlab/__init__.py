"""Workbench for the monotone circuit complexity of Boolean CSP-SAT functions.

Classifies relation sets through their polymorphisms and Post's lattice,
executes the monotone reductions between CSP-SAT functions, and builds the
explicit circuit constructions, with every claim checked against brute-force
oracles at desk scale.
"""

from .boolfun import BoolFun, Relation, RelationSet
from .circuit import Circuit
from .clone_lattice import Verdict, classify, hardness_consequences, validate_catalog
from .csp import CspInstance, XorSystem, csp_sat_value
from .graphlab import BipGraph, Graph

__all__ = [
    "BipGraph",
    "BoolFun",
    "Circuit",
    "CspInstance",
    "Graph",
    "Relation",
    "RelationSet",
    "Verdict",
    "XorSystem",
    "classify",
    "csp_sat_value",
    "hardness_consequences",
    "validate_catalog",
]
