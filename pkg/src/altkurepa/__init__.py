"""Alternating Kurepa function A(z), its companion A1(z), and supporting
special functions (complex gamma, incomplete gamma, Ei) with consistency
checks."""

from .alt_kurepa import (
    EvalOutcome,
    Representation,
    a1_closed,
    a1_eval,
    a1_series,
    a_closed,
    a_eval,
    a_integer_oracle,
    a_integral,
    a_recurrence,
    a_slavic,
)
from .complex_core import DEFAULT_CONFIG, EvalConfig, pow_neg_one
from .errors import AltKurepaError, DomainError, GammaOverflow, NoConvergence, PoleProximity
from .gamma_family import EULER_GAMMA, gamma, gamma_ratio, harmonic, log_gamma
from .special_aux import (
    constant_gompertz,
    constant_L2,
    ei_negative,
    lower_incomplete_gamma,
    upper_incomplete_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "AltKurepaError",
    "DEFAULT_CONFIG",
    "DomainError",
    "EULER_GAMMA",
    "EvalConfig",
    "EvalOutcome",
    "GammaOverflow",
    "NoConvergence",
    "PoleProximity",
    "Representation",
    "a1_closed",
    "a1_eval",
    "a1_series",
    "a_closed",
    "a_eval",
    "a_integer_oracle",
    "a_integral",
    "a_recurrence",
    "a_slavic",
    "constant_L2",
    "constant_gompertz",
    "ei_negative",
    "gamma",
    "gamma_ratio",
    "harmonic",
    "log_gamma",
    "lower_incomplete_gamma",
    "pow_neg_one",
    "upper_incomplete_gamma",
]
