"""Residues of <k, n>_f modulo a prime without building the full triangle.

:func:`granville_mod` is the fast path: a digit recursion on (k, n) in base p
that only ever needs exact coefficients of rows k < p. :func:`lucas_mod`
reaches the same residue through a sum over base-p splittings of n and is
kept as an independent check.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded, DivergentBracket, NotPrime
from .exact import coefficients, enumeration_budget, ext_binom
from .primes import trial_division_is_prime
from .weights import WeightSpec, eval_weight, format_spec, from_table, support_bound

__all__ = [
    "DEFAULT_CAP",
    "Residue",
    "babbage_weight",
    "exact_mod",
    "granville_mod",
    "lucas_mod",
    "parity",
    "prime_power_row",
    "prime_row",
]

#: Column cap for digit rows when f has unbounded support.
DEFAULT_CAP = 10**4


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus}")

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def _require_prime(p: int) -> None:
    if p < 2 or not trial_division_is_prime(p):
        raise NotPrime(f"{p} is not prime")


def prime_row(p: int, n: int, f: WeightSpec) -> Residue:
    """<p, n>_f mod p: f(n/p) when p divides n, else 0."""
    _require_prime(p)
    value = eval_weight(f, n // p) if n >= 0 and n % p == 0 else 0
    return Residue(value % p, p)


def prime_power_row(p: int, m: int, n: int, f: WeightSpec) -> Residue:
    """<p**m, n>_f mod p (modulus p, not p**m)."""
    _require_prime(p)
    if m < 1:
        raise ValueError("m must be at least 1")
    q = p**m
    value = eval_weight(f, n // q) if n >= 0 and n % q == 0 else 0
    return Residue(value % p, p)


def parity(k: int, n: int, f: WeightSpec) -> Residue:
    """<k, n>_f mod 2 by halving k and n."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    bound = support_bound(f)
    odd_weights: dict[int, int] = {}

    def weight_bit(s):
        if s not in odd_weights:
            odd_weights[s] = eval_weight(f, s) & 1
        return odd_weights[s]

    memo: dict[tuple[int, int], int] = {}

    def go(k, n):
        if n < 0:
            return 0
        if k == 0:
            return 1 if n == 0 else 0
        if bound is not None and n > k * bound:
            return 0
        key = (k, n)
        if key in memo:
            return memo[key]
        if k % 2 == 0:
            out = 0 if n % 2 else go(k // 2, n // 2)
        else:
            half, low = n // 2, n % 2
            out = 0
            for s in range(half + 1):
                if weight_bit(2 * s + low):
                    out ^= go(k // 2, half - s)
        memo[key] = out
        return out

    return Residue(go(k, n), 2)


@lru_cache(maxsize=256)
def _digit_rows(f: WeightSpec, p: int, width: int) -> tuple[tuple[int, ...], ...]:
    """Rows k = 0..p-1 of the triangle, columns 0..width, reduced mod p."""
    return tuple(tuple(v % p for v in coefficients(f, k, width)) for k in range(p))


def _row_width(f: WeightSpec, p: int, n: int, cap: int) -> int:
    bound = support_bound(f)
    if bound is not None:
        return (p - 1) * bound
    if n > cap:
        raise BudgetExceeded(f"column {n} exceeds cap {cap} for unbounded {format_spec(f)}")
    return n


def _base_digits(k: int, p: int) -> list[int]:
    digits = []
    while k:
        k, d = divmod(k, p)
        digits.append(d)
    return digits or [0]


def lucas_mod(k: int, n: int, f: WeightSpec, p: int, budget: int | None = None) -> Residue:
    """<k, n>_f mod p via sum over (s_0..s_r), sum s_i p**i = n, of prod <k_i, s_i>_f."""
    _require_prime(p)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n < 0:
        return Residue(0, p)
    bound = support_bound(f)
    width = (p - 1) * bound if bound is not None else n
    rows = _digit_rows(f, p, width)
    digits = _base_digits(k, p)
    limit = enumeration_budget(budget)
    visited = 0

    def small(kd, s):
        return rows[kd][s] if s <= width else 0

    # pick s_i from the lowest digit up; s_i must match the remaining n mod p
    def walk(i, remaining):
        nonlocal visited
        kd = digits[i]
        if i == len(digits) - 1:
            visited += 1
            if visited > limit:
                raise BudgetExceeded(f"more than {limit} digit tuples")
            return small(kd, remaining)
        cap = remaining if bound is None else min(remaining, kd * bound)
        total = 0
        for s in range(remaining % p, cap + 1, p):
            term = small(kd, s)
            if term:
                total += term * walk(i + 1, (remaining - s) // p)
        return total % p

    return Residue(walk(0, n) % p, p)


def _ceil_log(k: int, p: int) -> int:
    e, q = 0, 1
    while q < k:
        q *= p
        e += 1
    return e


def granville_mod(
    k: int,
    n: int,
    f: WeightSpec,
    p: int,
    *,
    cap: int = DEFAULT_CAP,
    stats: dict | None = None,
) -> Residue:
    """<k, n>_f mod p by the base-p digit recursion

        <k, n> = sum_m <k // p, n // p - m> * <k % p, n % p + m p>   (mod p)

    Rows below p are computed exactly. For unbounded support, columns are
    limited to ``cap``. If ``stats`` is a dict it receives ``memo_size`` and
    ``max_depth`` for the query.
    """
    _require_prime(p)
    if k < 0:
        raise ValueError("k must be nonnegative")
    bound = support_bound(f)
    if n < 0:
        return Residue(0, p)
    width = _row_width(f, p, n, cap)
    rows = _digit_rows(f, p, width)
    memo: dict[tuple[int, int], int] = {}
    max_depth = 0

    def base(kd, col):
        if kd == 0:
            return 1 if col == 0 else 0
        return rows[kd][col] if col <= width else 0

    def go(k, n, depth):
        nonlocal max_depth
        max_depth = max(max_depth, depth)
        if n < 0:
            return 0
        if bound is not None and n > k * bound:
            return 0
        if k < p:
            return base(k, n)
        key = (k, n)
        if key in memo:
            return memo[key]
        hi_k, k0 = divmod(k, p)
        hi_n, n0 = divmod(n, p)
        top = hi_n if bound is None else min(hi_n, (k0 * bound - n0) // p)
        total = 0
        for m in range(top + 1):
            low = base(k0, n0 + m * p)
            if low:
                total += low * go(hi_k, hi_n - m, depth + 1)
        memo[key] = total % p
        return memo[key]

    value = go(k, n, 1)
    if stats is not None:
        stats["memo_size"] = len(memo)
        stats["max_depth"] = max_depth
        stats["depth_bound"] = _ceil_log(k, p) + 1 if k else 1
    return Residue(value, p)


def babbage_weight(f: WeightSpec, p: int) -> WeightSpec:
    """Table weight g(r) = <p, r p>_f for r = 0..S (exact, unreduced)."""
    _require_prime(p)
    bound = support_bound(f)
    if bound is None:
        raise DivergentBracket(f"{format_spec(f)} has unbounded support")
    row = coefficients(f, p, p * bound)
    return from_table({r: row[r * p] for r in range(bound + 1)})


def exact_mod(k: int, n: int, f: WeightSpec, p: int) -> Residue:
    """Reference residue: exact coefficient reduced mod p."""
    if p < 2:
        raise ValueError("modulus must be at least 2")
    return Residue(ext_binom(k, n, f) % p, p)
