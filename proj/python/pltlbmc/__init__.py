"""Bounded model checking for linear temporal logic with past."""

from ._core import (
    BudgetExceeded,
    ParseError,
    Model,
    ModelError,
    SchemeError,
    WitnessValidationError,
    check,
    encode_dimacs,
    l2s,
    load_model,
    negated_pnf,
    oracle_min_k,
    parse_model,
    past_depth,
    pnf,
    tightba,
)

__all__ = [
    "BudgetExceeded",
    "ParseError",
    "Model",
    "ModelError",
    "SchemeError",
    "WitnessValidationError",
    "check",
    "encode_dimacs",
    "l2s",
    "load_model",
    "negated_pnf",
    "oracle_min_k",
    "parse_model",
    "past_depth",
    "pnf",
    "tightba",
]
