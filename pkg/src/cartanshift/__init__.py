"""Cartan-Betti numbers, generic initial ideals and algebraic shifting over F_q."""

from .cartan import (CartanBettiTable, QuotientModule, boundary_matrix, cartan_betti_closed,
                     cartan_betti_closed_table, cartan_betti_direct, connecting_map_rank,
                     is_proper_sequence)
from .errors import CartanShiftError, GenericityFailure
from .exterior import DEGLEX, DEGREVLEX, ExtIdeal, generated_degrees, lex, minimal_generators
from .gin import gin_exterior, gin_symmetric, initial_ideal
from .linalg import DEFAULT_PRIME, Matrix
from .shifting import (DELTA_E, DELTA_LEX, DELTA_S, ShiftOperator, adeg, adeg_i, deg,
                       degree_report, is_cm, is_componentwise_linear, is_gotzmann,
                       is_sequentially_cm, iterated_betti, sdeg, verify_axioms)
from .simplicial import SimplicialComplex, alexander_dual, f_vector, h_triangle, socle_dims
from .symmetric import SymIdeal
from .verify import RunConfig, VerifyReport, run, run_suite

__all__ = [
    "CartanBettiTable", "QuotientModule", "boundary_matrix", "cartan_betti_closed",
    "cartan_betti_closed_table", "cartan_betti_direct", "connecting_map_rank",
    "is_proper_sequence", "CartanShiftError", "GenericityFailure", "DEGLEX", "DEGREVLEX",
    "ExtIdeal", "generated_degrees", "lex", "minimal_generators", "gin_exterior",
    "gin_symmetric", "initial_ideal", "DEFAULT_PRIME", "Matrix", "DELTA_E", "DELTA_LEX",
    "DELTA_S", "ShiftOperator", "adeg", "adeg_i", "deg", "degree_report", "is_cm",
    "is_componentwise_linear", "is_gotzmann", "is_sequentially_cm", "iterated_betti", "sdeg",
    "verify_axioms", "SimplicialComplex", "alexander_dual", "f_vector", "h_triangle",
    "socle_dims", "SymIdeal", "RunConfig", "VerifyReport", "run", "run_suite",
]
