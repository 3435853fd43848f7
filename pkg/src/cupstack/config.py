"""Resource budgets and run configuration.

Budgets exist so exhaustive components fail loudly instead of running away.
Exceeding one reports "unknown" (searches) or raises BudgetExceededError
(constructions); it never silently produces a definitive answer.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

# Hard state caps for the two search kernels.  CUPSTACK_BUDGET overrides both.
DECIDE_STATE_BUDGET = 50_000_000
MIN_WEIGHT_STATE_BUDGET = 20_000_000

# Largest product graph graph_power will materialize.
VERTEX_BUDGET = 200_000

# Bitmask DP limit for Hamilton path search (2^n masks).
HAMILTON_MAX_VERTICES = 24

# Exhaustive isomorphism-free enumeration limit.
ENUMERATION_MAX_VERTICES = 7

# Kernels index states with one byte per vertex.
SEARCH_MAX_VERTICES = 255

ENV_BUDGET = "CUPSTACK_BUDGET"
ENV_BACKEND = "CUPSTACK_BACKEND"


def _env_budget() -> int | None:
    raw = os.environ.get(ENV_BUDGET)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_BUDGET} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{ENV_BUDGET} must be positive, got {value}")
    return value


def decide_budget(budget: int | None = None) -> int:
    """Effective state cap for stackability searches."""
    if budget is not None:
        return budget
    return _env_budget() or DECIDE_STATE_BUDGET


def min_weight_budget(budget: int | None = None) -> int:
    """Effective state cap for minimum-weight searches."""
    if budget is not None:
        return budget
    return _env_budget() or MIN_WEIGHT_STATE_BUDGET


@dataclass
class Config:
    """Bundle of knobs used by the command line front end."""

    state_budget: int | None = None
    vertex_budget: int = VERTEX_BUDGET
    workers: int = 1
    output_dir: str | None = None
    deterministic: bool = True
    extra: dict = field(default_factory=dict)
