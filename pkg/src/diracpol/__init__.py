"""Static dipole polarizabilities of relativistic (Dirac) hydrogen-like
atoms in two and three dimensions: closed-form hypergeometric evaluation,
an independent Sturmian-series oracle, and reference-table generation with
uncertainty propagation."""

from .atom import (
    ALPHA_INV_CODATA2014,
    ALPHA_INV_SIGMA_CODATA2014,
    AtomSpec,
    ChannelIndex,
    GroundStateRadial,
    SupercriticalError,
    axial_spinor,
    cos_matrix_element,
    critical_charge,
    first_order_shift,
    gamma_half,
    gamma_kappa,
    ground_energy,
    radial_PQ,
)
from .polarizability import (
    ExtrapolationError,
    PolarizabilityResult,
    nonrel_limit,
    polarizability_planar,
    polarizability_spatial,
    polarizability_sturmian,
    quasirel_coefficient,
    r_channel_closed,
    r_channel_two_term,
    second_order_energy,
)
from .specfun import (
    ConvergenceError,
    Hyp3F2Params,
    SeriesDiagnostics,
    gamma_ratio,
    hyp3f2_contiguous_rhs,
    hyp3f2_unit,
    laguerre,
    log_gamma,
)
from .sturmian import (
    RadialIntegralPair,
    SturmianIndex,
    first_order_integral,
    first_order_integral_quadrature,
    gauss_laguerre_integral,
    mu,
    n_cap,
    r_channel_series,
    sturmian_ST,
)
from .tablegen import (
    ConstantSet,
    PropagationError,
    TableRow,
    generate_table,
    propagate_uncertainty,
    rows_to_csv,
    rows_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_INV_CODATA2014",
    "ALPHA_INV_SIGMA_CODATA2014",
    "AtomSpec",
    "ChannelIndex",
    "ConstantSet",
    "ConvergenceError",
    "ExtrapolationError",
    "GroundStateRadial",
    "Hyp3F2Params",
    "PolarizabilityResult",
    "PropagationError",
    "RadialIntegralPair",
    "SeriesDiagnostics",
    "SturmianIndex",
    "SupercriticalError",
    "TableRow",
    "axial_spinor",
    "cos_matrix_element",
    "critical_charge",
    "first_order_integral",
    "first_order_integral_quadrature",
    "first_order_shift",
    "gamma_half",
    "gamma_kappa",
    "gamma_ratio",
    "gauss_laguerre_integral",
    "generate_table",
    "ground_energy",
    "hyp3f2_contiguous_rhs",
    "hyp3f2_unit",
    "laguerre",
    "log_gamma",
    "mu",
    "n_cap",
    "nonrel_limit",
    "polarizability_planar",
    "polarizability_spatial",
    "polarizability_sturmian",
    "propagate_uncertainty",
    "quasirel_coefficient",
    "r_channel_closed",
    "r_channel_series",
    "r_channel_two_term",
    "radial_PQ",
    "rows_to_csv",
    "rows_to_json",
    "second_order_energy",
    "sturmian_ST",
]
