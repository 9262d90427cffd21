"""Python bindings for the painlab C++ core."""

from ._core import (
    InputError,
    NumericalError,
    __version__,
    bound_states,
    centrifugal_approx,
    compare_spectra,
    find_consistent_lambda,
    hulthen_analytic_s,
    integrate_pii,
    lax_residual,
    parameter_map,
    riccati_residual,
    schrodinger_ansatz_check,
    verify_riccati,
    yukawa_error,
)

__all__ = [
    "InputError",
    "NumericalError",
    "__version__",
    "bound_states",
    "centrifugal_approx",
    "compare_spectra",
    "find_consistent_lambda",
    "hulthen_analytic_s",
    "integrate_pii",
    "lax_residual",
    "parameter_map",
    "riccati_residual",
    "schrodinger_ansatz_check",
    "verify_riccati",
    "yukawa_error",
]
