from .objective import (
    assignment_matrix,
    decode_random_keys,
    qap_cost,
    qap_cost_indicator,
    qap_objective,
    validate_permutation,
)
from .qaplib import QapInstance, QaplibFormatError, load_qaplib, parse_qaplib

__all__ = [
    "QapInstance",
    "QaplibFormatError",
    "assignment_matrix",
    "decode_random_keys",
    "load_qaplib",
    "parse_qaplib",
    "qap_cost",
    "qap_cost_indicator",
    "qap_objective",
    "validate_permutation",
]
