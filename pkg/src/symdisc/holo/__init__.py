"""Holomorphic maps: expression language, evaluation and differentiation."""
from .diff import (SecondDerivatives, derivative, exact_jacobian, exact_second_derivatives,
                   jacobian, jacobian_with_residual, mixed_partial, second_derivatives)
from .expr import parse, serialize
from .maps import (Arity, HoloMap, compose, disc_pair, eval, format_map_file, from_exprs,
                   identity, load_map_file, pair_lift, parse_map_file, royal_lift,
                   symmetrized_lift)

__all__ = [
    "Arity", "HoloMap", "SecondDerivatives", "compose", "derivative", "disc_pair", "eval", "exact_jacobian",
    "exact_second_derivatives", "format_map_file", "from_exprs", "identity", "jacobian", "jacobian_with_residual",
    "load_map_file", "mixed_partial", "pair_lift", "parse", "parse_map_file", "royal_lift",
    "second_derivatives", "serialize", "symmetrized_lift",
]
