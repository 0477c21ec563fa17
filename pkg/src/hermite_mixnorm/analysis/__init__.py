"""Norms, weights, maximal functions, g-functions, kernel estimates and probes."""

from .estimates import (aux_integral, aux_integral_closed_form, aux_integral_sweep, cz_grid,
                        heat_component_kernel, heat_component_kernel_dt, heat_dt_decay_check,
                        uniformity_spread, verify_cz_estimates)
from .gfunctions import (GFunctionResult, component_coefficients, g_constant, g_k,
                         g_k_component, g_norm, g_on_grid, g_star, g_star_component,
                         maximal_domination)
from .norms import (Weight, a1_weight, ap_constant, interval_family, maximal_fn,
                    maximal_radii, mixed_norm, weighted_mixed_norm)
from .probes import ProbeResult, Trial, conjecture_window, default_trials, operator_norm_probe

__all__ = [
    "Weight", "a1_weight", "ap_constant", "interval_family", "maximal_fn", "maximal_radii",
    "mixed_norm", "weighted_mixed_norm", "GFunctionResult", "component_coefficients",
    "g_constant", "g_k", "g_norm", "g_on_grid", "g_k_component", "g_star",
    "g_star_component", "maximal_domination",
    "cz_grid", "heat_component_kernel", "heat_component_kernel_dt", "aux_integral_closed_form",
    "aux_integral", "aux_integral_sweep", "heat_dt_decay_check", "uniformity_spread",
    "verify_cz_estimates", "ProbeResult", "Trial", "conjecture_window", "default_trials",
    "operator_norm_probe",
]
