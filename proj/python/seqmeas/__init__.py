"""Sequential unsharp measurements on an entangled qubit pair.

Thin Python layer over the C++ core: analytic parameter recursion, CHSH and
entanglement-witness certification, and seeded Poissonian coincidence-count
simulation.
"""

from ._core import (
    DegenerateStateError,
    ImpossibleOutcomeError,
    InvalidScheduleError,
    InvalidSharpnessError,
    StepParams,
    amplification_condition,
    chsh_closed_form,
    chsh_exact,
    enumerate_tree,
    exact_table,
    format_history,
    initial_params,
    max_sharpness,
    min_entropy_bound,
    run_branch,
    schmidt_decompose,
    simulate_chsh,
    simulate_table,
    simulate_witness,
    tree_table,
    update_params,
    witness_expectation,
)

__all__ = [
    "DegenerateStateError",
    "ImpossibleOutcomeError",
    "InvalidScheduleError",
    "InvalidSharpnessError",
    "StepParams",
    "amplification_condition",
    "chsh_closed_form",
    "chsh_exact",
    "enumerate_tree",
    "exact_table",
    "format_history",
    "initial_params",
    "max_sharpness",
    "min_entropy_bound",
    "run_branch",
    "schmidt_decompose",
    "simulate_chsh",
    "simulate_table",
    "simulate_witness",
    "tree_table",
    "update_params",
    "witness_expectation",
]
