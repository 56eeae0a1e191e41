"""Lottery prize mechanisms compared under prospect theory."""

from ._core import (
    DomainError,
    GameConfig,
    GameTerminated,
    Mechanism,
    MechanismKind,
    ShapeError,
    UnsupportedMechanism,
    ValueFunction,
    WeightingFunction,
    WeightingKind,
    break_even_n,
    build_schedule,
    cpt_utility,
    eut_utility,
    operator_profit,
    optimal_k,
    prize_pool,
    profit_frontier,
    to_prospects,
    utility_at,
    utility_curve,
    value,
    weight,
    winners_count,
)

__all__ = [
    "DomainError",
    "GameConfig",
    "GameTerminated",
    "Mechanism",
    "MechanismKind",
    "ShapeError",
    "UnsupportedMechanism",
    "ValueFunction",
    "WeightingFunction",
    "WeightingKind",
    "break_even_n",
    "build_schedule",
    "cpt_utility",
    "eut_utility",
    "operator_profit",
    "optimal_k",
    "prize_pool",
    "profit_frontier",
    "to_prospects",
    "utility_at",
    "utility_curve",
    "value",
    "weight",
    "winners_count",
]
