"""Rough sets, three-valued Lukasiewicz algebras, and exhaustive finite-model checks."""

from .approximation import ObjectSet, check_monadic_axioms, closed_elements, complement, lower, upper
from .finite_lukasiewicz import FiniteAlgebra, check_axioms, import_rough_algebra, prime_filters, represent
from .info_table import InformationTable, Partition, indiscernibility_partition, parse_table
from .monteiro import ThreeValue, cap_dot, congruent, membership, quotient_algebra, uplus
from .report import Check, Report
from .rough_algebra import MoisilPair, RoughSet, enumerate_b_star, moisil_pairs, rough_of

__all__ = [
    "Check", "FiniteAlgebra", "InformationTable", "MoisilPair", "ObjectSet", "Partition", "Report",
    "RoughSet", "ThreeValue", "cap_dot", "check_axioms", "check_monadic_axioms", "closed_elements",
    "complement", "congruent", "enumerate_b_star", "import_rough_algebra", "indiscernibility_partition",
    "lower", "membership", "moisil_pairs", "parse_table", "prime_filters", "quotient_algebra",
    "represent", "rough_of", "upper", "uplus",
]
