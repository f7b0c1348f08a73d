"""Graph families: figure catalogue, glue, complement patterns, unicyclic invariants, SAT reduction."""

from .catalogue import CATALOGUE, named_graph
from .glue import GluePart, GlueResult, GlueSpec, glue, glue_chain, glue_clique, glue_dim_formula
from .patterns import (
    C4, H7, K1_4, K2, K3, P4, P5, IsolatedBlock, K1n, Kn, Piece, SpecialG, SpecialJ,
    from_complement_pattern, h_family, lemma_family, parse_pattern, pattern_union,
)
from .sat import (
    CnfFormula, ReductionGraph, audit_reduction, parse_dimacs, random_formula,
    sat_reduction, satisfiable_side_certificate, universal_certificate,
)
from .unicyclic import UnicyclicInvariants, unicyclic_invariants, unique_cycle

__all__ = [
    "CATALOGUE", "named_graph",
    "GluePart", "GlueResult", "GlueSpec", "glue", "glue_chain", "glue_clique", "glue_dim_formula",
    "C4", "H7", "K1_4", "K2", "K3", "P4", "P5", "IsolatedBlock", "K1n", "Kn", "Piece",
    "SpecialG", "SpecialJ", "from_complement_pattern", "h_family", "lemma_family",
    "parse_pattern", "pattern_union",
    "CnfFormula", "ReductionGraph", "audit_reduction", "parse_dimacs", "random_formula",
    "sat_reduction", "satisfiable_side_certificate", "universal_certificate",
    "UnicyclicInvariants", "unicyclic_invariants", "unique_cycle",
]
