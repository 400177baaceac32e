"""Sequential variable-strength qubit measurement toolkit (C++ core)."""

from seqmeas._core import (  # noqa: F401
    DEFAULT_INPUT_ANGLE,
    DEFAULT_V_HV,
    DEFAULT_V_PM,
    SWEEP_COLUMNS,
    CountRecord,
    DegenerateBranch,
    InvalidInput,
    SetupParams,
    UnresolvableOutcome,
    analytic_row,
    classical_conditional_average,
    conditional_average,
    estimate_from_counts,
    find_crossings,
    monte_carlo_counts,
    outcome_probabilities,
    pm_error_probability,
    quasi_probability,
    reconstruct_correlation,
    run_sweep,
    sequential_conditional_average,
    sweep_csv,
)

__version__ = "0.1.0"
