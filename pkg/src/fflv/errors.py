"""Exception types and enumeration budgets."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


class FFLVError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(FFLVError, ValueError):
    """Malformed weight, permutation, segment family or point."""


class BudgetExceeded(FFLVError):
    """An enumeration would exceed the configured caps."""


@dataclass(frozen=True)
class Budget:
    max_rank_a: int = 6
    max_rank_c: int = 4
    lattice_nodes: int = 10_000_000
    max_brute_support: int = 14

    @classmethod
    def from_env(cls, value: str | None = None) -> "Budget":
        """Read ``FFLV_BUDGET``.

        Accepts a bare integer (the lattice cap) or comma-separated
        ``key=value`` pairs naming fields of this class.
        """
        if value is None:
            value = os.environ.get("FFLV_BUDGET", "")
        value = value.strip()
        budget = cls()
        if not value:
            return budget
        if value.isdigit():
            return replace(budget, lattice_nodes=int(value))
        updates = {}
        for item in value.split(","):
            key, sep, raw = item.partition("=")
            key = key.strip()
            if not sep or key not in cls.__dataclass_fields__ or not raw.strip().isdigit():
                raise InvalidInput(f"bad FFLV_BUDGET entry {item!r}")
            updates[key] = int(raw)
        return replace(budget, **updates)

    def check_rank_a(self, n: int) -> None:
        if n > self.max_rank_a:
            raise BudgetExceeded(f"type A rank n={n} exceeds cap {self.max_rank_a}")

    def check_rank_c(self, n: int) -> None:
        if n > self.max_rank_c:
            raise BudgetExceeded(f"type C rank n={n} exceeds cap {self.max_rank_c}")


def default_budget() -> Budget:
    return Budget.from_env()
