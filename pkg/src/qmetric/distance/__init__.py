"""State-space distance induced by a Lip-norm, with exact diagonal oracles."""
from .oracle import diagonal_constraints, grid_search_oracle, mk_diagonal_oracle
from .projection import LiftedSolution, clip_zero_sum, project_lip_ball, solve_lifted
from .solver import MKOptions, STEP_RULES, mk_distance, pairing

__all__ = [
    "LiftedSolution",
    "MKOptions",
    "STEP_RULES",
    "clip_zero_sum",
    "diagonal_constraints",
    "grid_search_oracle",
    "mk_diagonal_oracle",
    "mk_distance",
    "pairing",
    "project_lip_ball",
    "solve_lifted",
]
