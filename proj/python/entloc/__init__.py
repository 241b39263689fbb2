"""Separability classifiers and factorization checks for two bosons."""

from ._entloc import (
    ConsistencyError,
    ConvergenceError,
    DimensionError,
    InputError,
    ZeroNormError,
    __version__,
    audit,
    classify,
    construct_sep_I_preserver,
    find_witness,
    fit_sep_I_preserver,
    is_sep_II_preserver,
    pauli,
    positive_control,
    reduced_purity,
    residual,
    run_cli,
    sep_I_discriminant,
    sep_I_state,
    sep_II_orthogonal_state,
)

__all__ = [
    "ConsistencyError",
    "ConvergenceError",
    "DimensionError",
    "InputError",
    "ZeroNormError",
    "__version__",
    "audit",
    "classify",
    "construct_sep_I_preserver",
    "find_witness",
    "fit_sep_I_preserver",
    "is_sep_II_preserver",
    "pauli",
    "positive_control",
    "reduced_purity",
    "residual",
    "run_cli",
    "sep_I_discriminant",
    "sep_I_state",
    "sep_II_orthogonal_state",
]
