"""Cooperative step budget for long-running basis computations.

The Gröbner engines call :func:`spend` once per S-pair reduction.  A budget is
installed for the dynamic extent of a ``with step_budget(n):`` block; nested
blocks see the innermost budget.  Without an active budget, spending is free.
Budgets live in a context variable, so concurrent tasks do not interfere.
"""

from __future__ import annotations

import contextlib
from contextvars import ContextVar

from .errors import BudgetExceededError


class _Budget:
    __slots__ = ("remaining", "limit")

    def __init__(self, limit: int):
        self.limit = limit
        self.remaining = limit


_current: ContextVar[_Budget | None] = ContextVar("cmlocus_budget", default=None)


@contextlib.contextmanager
def step_budget(max_steps: int):
    """Limit the number of pair reductions performed inside the block."""
    if max_steps <= 0:
        raise ValueError("budget must be positive")
    token = _current.set(_Budget(max_steps))
    try:
        yield
    finally:
        _current.reset(token)


def spend(steps: int = 1) -> None:
    budget = _current.get()
    if budget is None:
        return
    budget.remaining -= steps
    if budget.remaining < 0:
        raise BudgetExceededError(
            f"reduction budget of {budget.limit} steps exceeded"
        )
