"""Semi-centralized multi-robot formation toolkit."""

from ._core import (
    InvalidInput,
    accuracy_floor,
    assign_center,
    assign_leader,
    bias_sweep,
    convert,
    cost_comparison,
    hungarian,
    info_upper,
    leading_slot,
    make_formation,
    optimal_center,
    parse_scenario,
    quant_bits,
    simulate,
)

__all__ = [
    "InvalidInput",
    "accuracy_floor",
    "assign_center",
    "assign_leader",
    "bias_sweep",
    "convert",
    "cost_comparison",
    "hungarian",
    "info_upper",
    "leading_slot",
    "make_formation",
    "optimal_center",
    "parse_scenario",
    "quant_bits",
    "simulate",
]
