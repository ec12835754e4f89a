"""Exact-arithmetic analysis of the Takagi function.

Core layers: :mod:`takagi.digits` (eventually periodic binary
expansions), :mod:`takagi.evaluator` (exact and certified values),
:mod:`takagi.differentials` (slope limits, superdifferential
classification, difference-quotient identities, Dini estimates),
:mod:`takagi.sets` (maximum set and superdifferentiability sets).
:mod:`takagi.service` exposes everything over HTTP and
:mod:`takagi.cli` is a thin client for it.
"""

from .differentials import (
    CaseTag,
    Classification,
    DiniEstimate,
    SlopeLimits,
    Subdifferential,
    Superdifferential,
    SuperdiffKind,
    G_prime_n,
    classify,
    dini_estimate,
    dyadic_level,
    dyadic_quotient,
    g_prime,
    is_local_max,
    mirror_quotient,
    predicted_dyadic_slope,
    predicted_mirror_slope,
    slope_limits,
    subdifferential,
    superdifferential,
    superdifferential_at_witness,
)
from .digits import (
    DigitExpansion,
    NeighborBracket,
    Rational,
    digit,
    expansion_to_rational,
    neighbor_bracket,
    rational_to_expansion,
    reduce_to_unit,
)
from .errors import DomainError, ParseError, TakagiError
from .evaluator import (
    CertifiedValue,
    TailSplit,
    G_n,
    g_k,
    g_k_digit_formula,
    phi,
    split_tail,
    takagi_certified,
    takagi_exact,
    takagi_max_value,
)
from .sets import SetWitness, a_identity_member, in_A, in_M, in_script_A, max_value_check

__version__ = "0.1.0"

__all__ = [
    "CaseTag",
    "CertifiedValue",
    "Classification",
    "DigitExpansion",
    "DiniEstimate",
    "DomainError",
    "G_n",
    "G_prime_n",
    "NeighborBracket",
    "ParseError",
    "Rational",
    "SetWitness",
    "SlopeLimits",
    "Subdifferential",
    "Superdifferential",
    "SuperdiffKind",
    "TailSplit",
    "TakagiError",
    "a_identity_member",
    "classify",
    "digit",
    "dini_estimate",
    "dyadic_level",
    "dyadic_quotient",
    "expansion_to_rational",
    "g_k",
    "g_k_digit_formula",
    "g_prime",
    "in_A",
    "in_M",
    "in_script_A",
    "is_local_max",
    "max_value_check",
    "mirror_quotient",
    "neighbor_bracket",
    "phi",
    "predicted_dyadic_slope",
    "predicted_mirror_slope",
    "rational_to_expansion",
    "reduce_to_unit",
    "slope_limits",
    "split_tail",
    "subdifferential",
    "superdifferential",
    "superdifferential_at_witness",
    "takagi_certified",
    "takagi_exact",
    "takagi_max_value",
]
