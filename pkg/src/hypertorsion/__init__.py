"""Hypertrees, trinities and the Turaev torsion of special alternating link complements."""

from .freegroup import Word, fox_derivative, fox_jacobian, torsion_determinant
from .hypertree import (Hypergraph, HypertreeSet, enumerate_hypertrees_bruteforce,
                        enumerate_hypertrees_polytope, planar_dual)
from .lattice import is_convex_lattice_set
from .planar import (CombMap, Trinity, adjacency_matrix, build_trinity, enhanced_matrix,
                     trinity_from_json_file)
from .polyring import LaurentPoly, PolyMatrix, canonical_form, det, equal_up_to_monomial, parse_poly
from .torsion import (build_loops, deconstruction_order, dual_tree_pair, replay_elimination,
                      support_from_torsion, torsion)

__version__ = "0.1.0"

__all__ = [
    "Word", "fox_derivative", "fox_jacobian", "torsion_determinant",
    "Hypergraph", "HypertreeSet", "enumerate_hypertrees_bruteforce", "enumerate_hypertrees_polytope",
    "planar_dual", "is_convex_lattice_set", "CombMap", "Trinity", "adjacency_matrix", "build_trinity",
    "enhanced_matrix", "trinity_from_json_file", "LaurentPoly", "PolyMatrix", "canonical_form", "det", "equal_up_to_monomial",
    "parse_poly", "build_loops", "deconstruction_order", "dual_tree_pair", "replay_elimination",
    "support_from_torsion", "torsion",
]
