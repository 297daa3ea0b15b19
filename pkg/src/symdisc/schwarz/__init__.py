"""Boundary Schwarz lemma checks on the symmetrized bidisc."""
from .checks import (DiscBoundaryResult, RemarkResult, check_corollary, check_theorem_3_1,
                     check_theorem_3_2, check_theorem_3_2_remark, check_theorem_3_3,
                     disc_boundary_schwarz, disc_schwarz_check, interior_schwarz_check,
                     self_map_spot_check)
from .eig import Eigenpair2, eig2x2
from .report import CheckReport, Clause, TheoremId

__all__ = [
    "CheckReport", "Clause", "DiscBoundaryResult", "Eigenpair2", "RemarkResult", "TheoremId",
    "check_corollary", "check_theorem_3_1", "check_theorem_3_2", "check_theorem_3_2_remark",
    "check_theorem_3_3", "disc_boundary_schwarz", "disc_schwarz_check", "eig2x2",
    "interior_schwarz_check", "self_map_spot_check",
]
