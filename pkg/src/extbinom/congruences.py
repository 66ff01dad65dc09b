"""Mechanical checks of congruences for <k, n>_f, c_f(n) and bracket sums.

Every check computes both sides with exact integers from :mod:`extbinom.exact`
and only reduces at the end, so the fast residue algorithms in
:mod:`extbinom.modular` can be tested against these reports rather than
trusted by them.

A report's ``modulus`` is the modulus of the congruence; ``0`` marks an exact
identity (0 divides x only when x is 0), ``1`` a congruence that is trivially
true for the given parameters.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DivergentBracket, DivergentMass, HypothesisViolation, InfiniteCount
from .exact import bracket, c_sequence, coefficients, ext_binom
from .primes import trial_division_is_prime
from .weights import (
    WeightSpec,
    eval_weight,
    format_spec,
    from_table,
    identity,
    indicator_set,
    odd_indicator,
    ones,
    avoid_progression,
    restrict,
    support_bound,
    total_mass,
)

__all__ = [
    "FIB_FAMILIES",
    "THEOREMS",
    "CongruenceReport",
    "SweepSummary",
    "fib",
    "fib_family",
    "sweep",
    "verify",
]


def fib(n: int) -> int:
    """Fibonacci number with F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


#: Weights whose composition counts are shifted Fibonacci numbers.
FIB_FAMILIES: dict[str, WeightSpec] = {
    "pair": indicator_set({1, 2}),               # c(n) = F(n+1)
    "ge2": restrict(restrict(ones(), 0), 1),     # c(n) = F(n-1)
    "odd": odd_indicator(),                      # c(n) = F(n)
    "id": identity(),                            # c(n) = F(2n)
}

_FIB_INDEX: dict[str, Callable[[int], int]] = {
    "pair": lambda n: n + 1,
    "ge2": lambda n: n - 1,
    "odd": lambda n: n,
    "id": lambda n: 2 * n,
}

_PREFIX_CHECK = 64


def fib_family(name: str) -> WeightSpec:
    try:
        return FIB_FAMILIES[name]
    except KeyError:
        raise HypothesisViolation(f"unknown Fibonacci family {name!r}") from None


@dataclass(frozen=True)
class CongruenceReport:
    theorem_id: str
    params: dict
    lhs: int
    rhs: int
    modulus: int
    holds: bool = field(init=False)

    def __post_init__(self):
        diff = self.lhs - self.rhs
        holds = diff == 0 if self.modulus == 0 else diff % self.modulus == 0
        object.__setattr__(self, "holds", holds)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "params": dict(self.params),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "modulus": self.modulus,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class SweepSummary:
    theorem_id: str
    total_cases: int
    skipped: int
    failures: tuple[CongruenceReport, ...]

    @property
    def successes(self) -> int:
        return self.total_cases - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "total": self.total_cases,
            "skipped": self.skipped,
            "failures": [r.to_dict() for r in self.failures],
        }


# -- helpers ----------------------------------------------------------------

def _prime(p: int) -> None:
    if p < 2 or not trial_division_is_prime(p):
        raise HypothesisViolation(f"p = {p} is not prime")


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise HypothesisViolation(message)


def _finite(f: WeightSpec) -> int:
    bound = support_bound(f)
    _need(bound is not None, f"{format_spec(f)} must have finite support")
    return bound


@lru_cache(maxsize=1024)
def _c(f: WeightSpec, n: int) -> int:
    try:
        return c_sequence(f, n)[n]
    except InfiniteCount as exc:
        raise HypothesisViolation(str(exc)) from None


def _g_table(f: WeightSpec, p: int, upto: int) -> WeightSpec:
    """g(r) = <p, r p>_f for r <= upto; enough for any <., m>_g with m <= upto."""
    row = coefficients(f, p, p * upto)
    return from_table({r: row[r * p] for r in range(upto + 1)})


def _nonneg(params: Mapping, *names: str) -> list[int]:
    out = []
    for name in names:
        if name not in params:
            raise HypothesisViolation(f"missing parameter {name!r}")
        value = params[name]
        _need(isinstance(value, int) and value >= 0, f"{name} must be a nonnegative integer")
        out.append(value)
    return out


def _same_prefix(f: WeightSpec, g: WeightSpec) -> bool:
    return all(eval_weight(f, s) == eval_weight(g, s) for s in range(_PREFIX_CHECK + 1))


def _family_weight(params: Mapping, f: WeightSpec | None, allowed) -> tuple[str, WeightSpec]:
    name = params.get("family")
    _need(name in allowed, f"family must be one of {sorted(allowed)}")
    canonical = fib_family(name)
    _need(f is None or _same_prefix(f, canonical), f"weights do not match family {name}")
    return name, canonical


def _require_f(f: WeightSpec | None) -> WeightSpec:
    _need(f is not None, "this theorem needs a weight spec")
    return f


# -- one function per theorem: return (lhs, rhs, modulus) ---------------------

def _parity(params, f):
    k, n = _nonneg(params, "k", "n")
    f = _require_f(f)
    lhs = ext_binom(k, n, f)
    if k % 2 == 0:
        rhs = 0 if n % 2 else ext_binom(k // 2, n // 2, f)
    else:
        half, low = divmod(n, 2)
        rhs = sum(eval_weight(f, 2 * s + low) * ext_binom(k // 2, half - s, f) for s in range(half + 1))
    return lhs, rhs, 2


def _prime_row(params, f):
    p, n = _nonneg(params, "p", "n")
    f = _require_f(f)
    _prime(p)
    rhs = eval_weight(f, n // p) if n % p == 0 else 0
    return ext_binom(p, n, f), rhs, p


def _shift_row(params, f):
    k, s, p, j = _nonneg(params, "k", "s", "p", "j")
    f = _require_f(f)
    _prime(p)
    _need(j < p, "need j < p")
    return ext_binom(k + s * p, j, f), ext_binom(k, j, f) * eval_weight(f, 0) ** (s * p), p


def _p_plus_1_row(params, f):
    p, m, r = _nonneg(params, "p", "m", "r")
    f = _require_f(f)
    _prime(p)
    _need(r < p, "need r < p")
    rhs = sum(eval_weight(f, r + s * p) * eval_weight(f, m - s) for s in range(m + 1))
    return ext_binom(p + 1, m * p + r, f), rhs, p


def _prime_power_row(params, f):
    p, m, n = _nonneg(params, "p", "m", "n")
    f = _require_f(f)
    _prime(p)
    _need(m >= 1, "need m >= 1")
    q = p**m
    rhs = eval_weight(f, n // q) if n % q == 0 else 0
    return ext_binom(q, n, f), rhs, p


def _babbage(params, f):
    n, m, p = _nonneg(params, "n", "m", "p")
    f = _require_f(f)
    _prime(p)
    g = _g_table(f, p, m)
    return ext_binom(n * p, m * p, f), ext_binom(n, m, g), p * p


def _babbage_single(params, f):
    r, p = _nonneg(params, "r", "p")
    f = _require_f(f)
    _prime(p)
    _need(r >= 1, "need r >= 1 (f(0) is raised to p(r-1))")
    rhs = ext_binom(p, p, f) * eval_weight(f, 0) ** (p * (r - 1)) * r
    return ext_binom(p * r, p, f), rhs, p * p


def _sp_row_mod_p2(params, f):
    s, r, p = _nonneg(params, "s", "r", "p")
    f = _require_f(f)
    _prime(p)
    _need(r % p != 0, "need p not dividing r")
    lhs = ext_binom(s * p, r, f)
    if s == 0:
        return lhs, 0, p * p
    g = _g_table(f, p, r // p)
    inner = sum(
        ext_binom(p, i1, f) * ext_binom(s - 1, (r - i1) // p, g)
        for i1 in range(r + 1)
        if (r - i1) % p == 0
    )
    return lhs, s * inner, p * p


def _sp_row_small(params, f):
    s, r, p = _nonneg(params, "s", "r", "p")
    f = _require_f(f)
    _prime(p)
    _need(s >= 1, "need s >= 1 (f(0) is raised to p(s-1))")
    _need(1 <= r <= p, "need 1 <= r <= p")
    rhs = s * ext_binom(p, r, f) * eval_weight(f, 0) ** (p * (s - 1))
    return ext_binom(s * p, r, f), rhs, p * p


def _cross_symmetry(params, f):
    r, s, p = _nonneg(params, "r", "s", "p")
    f = _require_f(f)
    _prime(p)
    _need(1 <= r <= p and 1 <= s <= p, "need 1 <= r, s <= p")
    f0 = eval_weight(f, 0)
    lhs = f0 ** (p * (s - 1)) * s * ext_binom(r * p, r, f)
    rhs = f0 ** (p * (r - 1)) * r * ext_binom(s * p, r, f)
    return lhs, rhs, p * p


def _divisibility(params, f):
    m, k, n = _nonneg(params, "m", "k", "n")
    f = _require_f(f)
    _need(k >= 1, "need k >= 1")
    return ext_binom(m * k, n, f), 0, k // math.gcd(k, n)


def _ms(params, f):
    p, r = _nonneg(params, "p", "r")
    f = _require_f(f)
    _prime(p)
    _need(r >= 1, "need r >= 1")
    rhs = eval_weight(f, 0) ** (p * (r - 1)) * eval_weight(f, 1) ** p * math.comb(p * r, p)
    return ext_binom(p * r, p, f), rhs, p * r


def _lucas(params, f):
    k, n, p = _nonneg(params, "k", "n", "p")
    f = _require_f(f)
    _prime(p)
    digits = []
    rest = k
    while rest:
        rest, d = divmod(rest, p)
        digits.append(d)
    digits = digits or [0]

    def walk(i, remaining):
        if i == len(digits) - 1:
            return ext_binom(digits[i], remaining, f)
        return sum(
            ext_binom(digits[i], s, f) * walk(i + 1, (remaining - s) // p)
            for s in range(remaining % p, remaining + 1, p)
        )

    return ext_binom(k, n, f), walk(0, n), p


def _granville(params, f):
    k, n, p = _nonneg(params, "k", "n", "p")
    f = _require_f(f)
    _prime(p)
    k0, n0 = k % p, n % p
    rhs = sum(ext_binom(k // p, n // p - m, f) * ext_binom(k0, n0 + m * p, f) for m in range(n // p + 1))
    return ext_binom(k, n, f), rhs, p


def _somer(params, f):
    p, b, n = _nonneg(params, "p", "b", "n")
    f = _require_f(f)
    _prime(p)
    bound = _finite(f)
    _need(eval_weight(f, 0) == 0, "need f(0) = 0")
    order = params.get("order", bound)
    _need(isinstance(order, int) and order >= max(bound, 1), "order must be >= support bound and >= 1")
    q = p**b
    lhs = _c(f, n + order * q)
    rhs = sum(eval_weight(f, i) * _c(f, n + (order - i) * q) for i in range(1, order + 1))
    return lhs, rhs, p


def _avoid_recurrence(params, f):
    a, m, n = _nonneg(params, "a", "m", "n")
    _need(1 <= a < m, "need 1 <= a < m")
    _need(n >= 1, "need n >= 1")
    canonical = avoid_progression(a, m)
    _need(f is None or _same_prefix(restrict(f, 0), restrict(canonical, 0)), "weights do not match avoid:a,m")
    # compositions into positive parts: part size 0 never counts
    g = restrict(canonical, 0)
    lhs = _c(g, n + m)
    rhs = sum(_c(g, n + m - i) for i in range(1, m) if i != a) + 2 * _c(g, n)
    return lhs, rhs, 0


def _glaisher(params, f):
    p, m, r, k = _nonneg(params, "p", "m", "r", "k")
    f = _require_f(f)
    _prime(p)
    _need(m >= 1 and p % m == 1 % m, "need p = 1 (mod m)")
    _need(r < m, "need r < m")
    _need(k >= 1, "need k >= 1")
    _finite(f)
    return bracket(k + p - 1, r, m, f), bracket(k, r, m, f), p


def _rowsum_parity(params, f):
    (k,) = _nonneg(params, "k")
    f = _require_f(f)
    _need(k >= 1, "need k >= 1")
    _finite(f)
    return bracket(k, 0, 1, f), total_mass(f), 2


def _fib_prime_residue(params, f):
    (p,) = _nonneg(params, "p")
    _prime(p)
    name, g = _family_weight(params, f, {"pair", "ge2", "odd"})
    index = {"pair": p - 1, "ge2": p + 1, "odd": p}[name]
    if p == 5:
        rhs = 0
    elif p % 5 in (1, 4):
        rhs = 1
    else:
        rhs = p - 1
    return _c(g, index), rhs, p


def _fib_gcd(params, f):
    m, n = _nonneg(params, "m", "n")
    _need(m >= 1 and n >= 1, "need m, n >= 1")
    name, g = _family_weight(params, f, set(FIB_FAMILIES))
    if name == "pair":
        target = math.gcd(m + 1, n + 1) - 1
    elif name == "ge2":
        target = math.gcd(m - 1, n - 1) + 1
    else:
        target = math.gcd(m, n)
    return math.gcd(_c(g, m), _c(g, n)), _c(g, target), 0


def _fib_identity(params, f):
    (n,) = _nonneg(params, "n")
    name, g = _family_weight(params, f, set(FIB_FAMILIES))
    _need(n >= 1 or name == "pair", "need n >= 1 for this family")
    return _c(g, n), fib(_FIB_INDEX[name](n)), 0


_CHECKS: dict[str, Callable] = {
    "parity": _parity,
    "prime_row": _prime_row,
    "shift_row": _shift_row,
    "p_plus_1_row": _p_plus_1_row,
    "prime_power_row": _prime_power_row,
    "babbage": _babbage,
    "babbage_single": _babbage_single,
    "sp_row_mod_p2": _sp_row_mod_p2,
    "sp_row_small": _sp_row_small,
    "cross_symmetry": _cross_symmetry,
    "divisibility": _divisibility,
    "ms": _ms,
    "lucas": _lucas,
    "granville": _granville,
    "somer": _somer,
    "avoid_recurrence": _avoid_recurrence,
    "glaisher": _glaisher,
    "rowsum_parity": _rowsum_parity,
    "fib_prime_residue": _fib_prime_residue,
    "fib_gcd": _fib_gcd,
    "fib_identity": _fib_identity,
}

THEOREMS: tuple[str, ...] = tuple(_CHECKS)


def verify(theorem_id: str, params: Mapping, f: WeightSpec | None = None) -> CongruenceReport:
    """Instantiate one theorem on concrete parameters.

    Raises :class:`HypothesisViolation` when the parameters (or ``f``) fall
    outside the theorem's hypotheses.
    """
    try:
        check = _CHECKS[theorem_id]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem_id!r}; choose from {', '.join(THEOREMS)}") from None
    try:
        lhs, rhs, modulus = check(params, f)
    except (DivergentBracket, DivergentMass) as exc:
        raise HypothesisViolation(str(exc)) from None
    bound = dict(params)
    if f is not None:
        bound["weights"] = format_spec(f)
    return CongruenceReport(theorem_id, bound, lhs, rhs, modulus)


def sweep(
    theorem_id: str,
    param_ranges: Mapping[str, Iterable],
    spec_corpus: Sequence[WeightSpec | None] = (None,),
) -> SweepSummary:
    """Run :func:`verify` over corpus x product(ranges); violating tuples are skipped.

    Cases run in corpus order, then in the product order of ``param_ranges``.
    """
    if theorem_id not in _CHECKS:
        raise ValueError(f"unknown theorem {theorem_id!r}")
    names = list(param_ranges)
    values = [list(param_ranges[name]) for name in names]
    total = skipped = 0
    failures = []
    for f in spec_corpus:
        for combo in itertools.product(*values):
            try:
                report = verify(theorem_id, dict(zip(names, combo)), f)
            except HypothesisViolation:
                skipped += 1
                continue
            total += 1
            if not report.holds:
                failures.append(report)
    return SweepSummary(theorem_id, total, skipped, tuple(failures))
