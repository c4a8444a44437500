"""Executable theory of experimental verification on finite contexts.

Statements are truth sets over a finite constraint context; a basis of
verifiable statements closes into experimental and theoretical domains,
whose possibilities carry a natural topology and sigma-algebra.
"""

__version__ = "0.1.0"

from .domains import (Basis, ExperimentalDomain, PossibilitySpace, StatementClass, TheoreticalDomain,
                      build_domain, classify, dnf, label, possibilities, possibility_oracle)
from .errors import ExpDomainError
from .spaces import (PossibilitySubset, PropertyReport, SigmaAlgebra, Topology, borel_of,
                     check_properties, correspondence_check, natural_sigma_algebra, natural_topology,
                     theoretical_set, verifiable_set)
from .statements import (AND, NOT, OR, XOR, Context, PossibilitySet, RelationReport, Statement,
                         TruthTable, build_context, combine, eval_statement, independent, poss_of,
                         relation)
from .simulation import (DecidableTest, Outcome, TestProcess, conj_test, dovetail_disj,
                         negation_gap_demo, run)

__all__ = [
    "AND", "Basis", "Context", "DecidableTest", "ExpDomainError", "ExperimentalDomain", "NOT", "OR",
    "Outcome", "PossibilitySet", "PossibilitySpace", "PossibilitySubset", "PropertyReport",
    "RelationReport", "SigmaAlgebra", "Statement", "StatementClass", "TestProcess",
    "TheoreticalDomain", "Topology", "TruthTable", "XOR", "borel_of", "build_context", "build_domain",
    "check_properties", "classify", "combine", "conj_test", "correspondence_check", "dnf",
    "dovetail_disj", "eval_statement", "independent", "label", "natural_sigma_algebra",
    "natural_topology", "negation_gap_demo", "poss_of", "possibilities", "possibility_oracle",
    "relation", "run", "theoretical_set", "verifiable_set",
]
