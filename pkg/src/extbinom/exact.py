"""Exact arbitrary-precision extended binomial coefficients.

``<k, n>_f`` is the coefficient of x**n in (sum_s f(s) x**s)**k, i.e. the
number of f-weighted compositions of n with k parts. Four independent routes
are provided:

* :func:`count_by_enumeration` walks every k-tuple of parts (oracle);
* :func:`ext_binom_by_partitions` sums multinomials over partitions (oracle);
* :func:`triangle` / :class:`LazyTriangle` use the row recurrence
  ``<k, n> = sum_mu f(mu) <k-1, n-mu>``;
* :func:`ext_binom` raises the truncated power series to the k-th power by
  repeated squaring, which stays cheap for large k.
"""
from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded, DivergentBracket, InfiniteCount
from .weights import WeightSpec, eval_weight, format_spec, support_bound, weight_vector

__all__ = [
    "DEFAULT_BUDGET",
    "LazyTriangle",
    "SequenceTable",
    "TriangleTable",
    "bracket",
    "c_sequence",
    "coefficients",
    "count_by_enumeration",
    "enumeration_budget",
    "ext_binom",
    "ext_binom_by_partitions",
    "triangle",
]

DEFAULT_BUDGET = 10**7


def enumeration_budget(budget: int | None = None) -> int:
    """Explicit budget, else $EXTBINOM_BUDGET, else ``DEFAULT_BUDGET``."""
    if budget is not None:
        return budget
    env = os.environ.get("EXTBINOM_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _column_limit(f: WeightSpec, k: int, n: int) -> int:
    """Highest column that can be nonzero in rows <= k, capped at n."""
    bound = support_bound(f)
    return n if bound is None else min(n, k * bound)


# -- polynomial helpers -----------------------------------------------------

def _mul_trunc(a: list[int], b: list[int], n: int) -> list[int]:
    """Product of two coefficient lists, truncated to degree n."""
    out = [0] * min(n + 1, len(a) + len(b) - 1)
    top = len(out)
    nz_b = [(j, bj) for j, bj in enumerate(b) if bj]
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in nz_b:
            if i + j >= top:
                break
            out[i + j] += ai * bj
    return out


@lru_cache(maxsize=4096)
def coefficients(f: WeightSpec, k: int, n: int) -> tuple[int, ...]:
    """(<k,0>_f, ..., <k,n>_f) by square-and-multiply on truncated series."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    result = [1]
    base = weight_vector(f, n)
    e = k
    while e:
        if e & 1:
            result = _mul_trunc(result, base, n)
        e >>= 1
        if e:
            base = _mul_trunc(base, base, n)
    return tuple(result) + (0,) * (n + 1 - len(result))


def ext_binom(k: int, n: int, f: WeightSpec) -> int:
    """Exact <k, n>_f."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n < 0:
        return 0
    if _column_limit(f, k, n) < n:
        return 0
    return coefficients(f, k, n)[n]


# -- oracles ----------------------------------------------------------------

def count_by_enumeration(n: int, k: int, f: WeightSpec, budget: int | None = None) -> int:
    """Sum of f(p_1)...f(p_k) over all nonnegative (p_1..p_k) summing to n.

    Raises :class:`BudgetExceeded` if the number of such tuples,
    C(n+k-1, k-1), is larger than the budget.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k == 0:
        return 1 if n == 0 else 0
    limit = enumeration_budget(budget)
    tuples = math.comb(n + k - 1, k - 1)
    if tuples > limit:
        raise BudgetExceeded(f"{tuples} compositions exceed budget {limit}")
    w = [eval_weight(f, s) for s in range(n + 1)]

    def walk(parts_left, remaining):
        if parts_left == 1:
            return w[remaining]
        return sum(w[p] * walk(parts_left - 1, remaining - p) for p in range(remaining + 1))

    return walk(k, n)


def ext_binom_by_partitions(k: int, n: int, f: WeightSpec, budget: int | None = None) -> int:
    """Multinomial sum over (k_0..k_n) with sum k_i = k and sum i*k_i = n."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    limit = enumeration_budget(budget)
    w = [eval_weight(f, s) for s in range(n + 1)]
    visited = 0
    total = 0

    # counts[i] = k_i for i >= 1, chosen from the largest part size down
    def walk(size, remaining, used, counts):
        nonlocal visited, total
        if remaining == 0:
            visited += 1
            if visited > limit:
                raise BudgetExceeded(f"more than {limit} partitions")
            k0 = k - used
            term = w[0] ** k0
            placed = k0
            for i, ki in counts:
                placed += ki
                term *= math.comb(placed, ki) * w[i] ** ki
            total += term
            return
        if size == 0:
            return
        for ki in range(min(remaining // size, k - used), -1, -1):
            if ki:
                counts.append((size, ki))
            walk(size - 1, remaining - size * ki, used + ki, counts)
            if ki:
                counts.pop()

    walk(n, n, 0, [])
    return total


# -- triangles --------------------------------------------------------------

@dataclass(frozen=True)
class TriangleTable:
    """Rows k = 0..k_max of <k, n>_f for n = 0..n_max.

    Row k stores only the columns that can be nonzero (up to k*S for finite
    support S); :meth:`value` and :meth:`row` pad with zeros.
    """

    weights: WeightSpec
    k_max: int
    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, k: int, n: int) -> int:
        if not (0 <= k <= self.k_max and 0 <= n <= self.n_max):
            raise IndexError(f"({k}, {n}) outside table")
        row = self.rows[k]
        return row[n] if n < len(row) else 0

    def row(self, k: int) -> tuple[int, ...]:
        row = self.rows[k]
        return row + (0,) * (self.n_max + 1 - len(row))

    def dense(self) -> list[tuple[int, ...]]:
        return [self.row(k) for k in range(self.k_max + 1)]


def _next_row(prev: list[int], w: list[int], width: int) -> list[int]:
    row = [0] * width
    for mu, fm in enumerate(w):
        if not fm:
            continue
        for j, v in enumerate(prev):
            if mu + j >= width:
                break
            if v:
                row[mu + j] += fm * v
    return row


def triangle(f: WeightSpec, k_max: int, n_max: int) -> TriangleTable:
    """Pascal-like triangle of <k, n>_f built row by row."""
    if k_max < 0 or n_max < 0:
        raise ValueError("k_max and n_max must be nonnegative")
    w = weight_vector(f, n_max)
    rows = [(1,)]
    prev = [1]
    for k in range(1, k_max + 1):
        prev = _next_row(prev, w, _column_limit(f, k, n_max) + 1)
        rows.append(tuple(prev))
    return TriangleTable(f, k_max, n_max, tuple(rows))


class LazyTriangle:
    """Row-recurrence triangle that grows on demand.

    Useful when many (k, n) queries hit the same weight, e.g. a primality
    scan. Growth is serialised by a lock, so instances can be shared.
    """

    def __init__(self, f: WeightSpec):
        self.weights = f
        self._bound = support_bound(f)
        self._w = [eval_weight(f, 0)]
        self._rows = [[1]]
        self._lock = threading.Lock()

    def _width(self, k, n):
        return n + 1 if self._bound is None else min(n, k * self._bound) + 1

    def _grow_weights(self, n):
        top = n if self._bound is None else min(n, self._bound)
        while len(self._w) <= top:
            self._w.append(eval_weight(self.weights, len(self._w)))

    def value(self, k: int, n: int) -> int:
        if k < 0:
            raise ValueError("k must be nonnegative")
        with self._lock:
            return self._value(k, n)

    def _value(self, k, n):
        if n < 0:
            return 0
        if k == 0:
            return 1 if n == 0 else 0
        width = self._width(k, n)
        if n >= width:
            return 0
        self._grow_weights(n)
        while len(self._rows) <= k:
            self._rows.append([])
        # every row j <= k must reach column n (or its own width)
        for j in range(1, k + 1):
            row = self._rows[j]
            need = self._width(j, n)
            if len(row) >= need:
                continue
            prev = self._rows[j - 1]
            for col in range(len(row), need):
                acc = 0
                for mu in range(max(0, col - len(prev) + 1), min(col, len(self._w) - 1) + 1):
                    fm = self._w[mu]
                    if fm:
                        acc += fm * prev[col - mu]
                row.append(acc)
        return self._rows[k][n]


# -- sequences and brackets -------------------------------------------------

@dataclass(frozen=True)
class SequenceTable:
    """c_f(0..N): f-weighted compositions of n with any number of parts."""

    weights: WeightSpec
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def c_sequence(f: WeightSpec, N: int) -> SequenceTable:
    """c_f(0..N) from c(0) = 1, c(n) = sum_{m>=1} f(m) c(n-m)."""
    if eval_weight(f, 0) > 0:
        raise InfiniteCount(f"f(0) > 0 for {format_spec(f)}: c_f(n) is infinite")
    if N < 0:
        raise ValueError("N must be nonnegative")
    w = weight_vector(f, N)
    support = [(m, fm) for m, fm in enumerate(w) if m and fm]
    c = [1]
    for n in range(1, N + 1):
        c.append(sum(fm * c[n - m] for m, fm in support if m <= n))
    return SequenceTable(f, tuple(c))


def bracket(k: int, r: int, m: int, f: WeightSpec) -> int:
    """Sum of <k, n>_f over n = r (mod m)."""
    if m < 1 or not 0 <= r < m:
        raise ValueError("need m >= 1 and 0 <= r < m")
    bound = support_bound(f)
    if bound is None:
        raise DivergentBracket(f"{format_spec(f)} has unbounded support")
    row = coefficients(f, k, k * bound)
    return sum(row[r::m])
