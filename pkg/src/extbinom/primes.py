"""Prime criterion over weighted compositions, plus the trial-division oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import HypothesisViolation
from .weights import WeightSpec, eval_weight, format_spec

__all__ = ["PrimalityVerdict", "mann_shanks_is_prime", "trial_division_is_prime"]


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimalityVerdict:
    """Outcome of the criterion. ``witness`` is the first m whose check failed."""

    n: int
    is_prime: bool
    witness: int | None = None

    def __post_init__(self):
        if (self.witness is None) != self.is_prime:
            raise ValueError("a witness is present exactly when n is composite")


@lru_cache(maxsize=16)
def _triangle_for(f: WeightSpec):
    # imported here: exact -> weights only, primes is imported by modular
    from .exact import LazyTriangle

    return LazyTriangle(f)


def mann_shanks_is_prime(n: int, f: WeightSpec) -> PrimalityVerdict:
    """n > 1 is prime iff m divides <m, n - 2m>_f for every 0 <= 2m <= n.

    Requires f(0) = f(1) = 1. "0 divides x" means x == 0.
    """
    if n < 2:
        raise ValueError("n must be greater than 1")
    if eval_weight(f, 0) != 1 or eval_weight(f, 1) != 1:
        raise HypothesisViolation(f"criterion needs f(0) = f(1) = 1, got {format_spec(f)}")
    table = _triangle_for(f)
    for m in range(n // 2 + 1):
        value = table.value(m, n - 2 * m)
        ok = value == 0 if m == 0 else value % m == 0
        if not ok:
            return PrimalityVerdict(n, False, m)
    return PrimalityVerdict(n, True)
