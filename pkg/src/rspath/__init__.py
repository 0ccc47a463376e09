"""Randomized algebraic decision procedure for the r-SIMPLE k-PATH problem,
with an exact oracle and instance generators."""

from .field import ExtField, PrimeField
from .graph import Digraph, Instance, emit_instance, parse_instance
from .oracle import exists_r_simple_path, longest_simple_path
from .params import SolverParams, make_params, select_field
from .solver import Verdict, solve, verify_certificate

__all__ = [
    "Digraph",
    "ExtField",
    "Instance",
    "PrimeField",
    "SolverParams",
    "Verdict",
    "emit_instance",
    "exists_r_simple_path",
    "longest_simple_path",
    "make_params",
    "parse_instance",
    "select_field",
    "solve",
    "verify_certificate",
]
