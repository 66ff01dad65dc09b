"""Weight functions f: N -> N, the part-size colour counts.

A :class:`WeightSpec` is an immutable description of ``f`` built from one of a
few closed-form families or a finite table, plus two overlays:

* ``overrides`` pins individual values (``id|put=0=1`` is ``f(0)=1, f(s)=s``);
* ``zeroed`` forces part sizes to weight 0 and always wins.

Text form (``parse`` / ``format_spec``)::

    spec   := "table:" pairs | "set:" ints | "odd" | "id" | "ones"
            | "avoid:a=" int ",m=" int | "binom"
    pairs  := int "=" int ("," int "=" int)*     duplicate keys: last wins
    ints   := int ("," int)*
    suffix := "|zero=" ints | "|put=" pairs      any number, any order

Table values given as text are capped at ``MAX_TABLE_VALUE`` (2**64 - 1).
Programmatic construction accepts any natural number.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from .errors import DivergentMass, ParseError

__all__ = [
    "MAX_TABLE_VALUE",
    "UNBOUNDED",
    "WeightKind",
    "WeightSpec",
    "avoid_progression",
    "binomial",
    "eval_weight",
    "format_spec",
    "from_table",
    "identity",
    "indicator_set",
    "odd_indicator",
    "ones",
    "override",
    "parse",
    "restrict",
    "support_bound",
    "total_mass",
    "weight_vector",
]

MAX_TABLE_VALUE = 2**64 - 1

#: Returned by :func:`support_bound` for infinitely supported weights.
UNBOUNDED = None


class WeightKind(str, enum.Enum):
    TABLE = "table"
    INDICATOR_SET = "set"
    INDICATOR_ODD = "odd"
    IDENTITY = "id"
    ONES = "ones"
    AVOID_PROGRESSION = "avoid"
    BINOMIAL = "binom"


def _pairs(mapping: Mapping[int, int] | Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    items = dict(mapping.items() if isinstance(mapping, Mapping) else mapping)
    for s, v in items.items():
        if s < 0 or v < 0:
            raise ValueError(f"weights and part sizes must be nonnegative, got {s}={v}")
    return tuple(sorted(items.items()))


@dataclass(frozen=True)
class WeightSpec:
    """Immutable weight function description. Use the module constructors."""

    kind: WeightKind
    table: tuple[tuple[int, int], ...] = ()
    members: frozenset[int] = frozenset()
    a: int = 0
    m: int = 1
    zeroed: frozenset[int] = frozenset()
    overrides: tuple[tuple[int, int], ...] = ()
    _table_map: dict = field(init=False, repr=False, compare=False, hash=False)
    _override_map: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_table_map", dict(self.table))
        object.__setattr__(self, "_override_map", dict(self.overrides))
        if self.kind is WeightKind.AVOID_PROGRESSION and self.m < 1:
            raise ValueError("avoid progression needs m >= 1")

    def __call__(self, s: int) -> int:
        return eval_weight(self, s)

    def __str__(self) -> str:
        return format_spec(self)


# -- constructors -----------------------------------------------------------

def from_table(mapping: Mapping[int, int] | Iterable[tuple[int, int]]) -> WeightSpec:
    return WeightSpec(WeightKind.TABLE, table=_pairs(mapping))


def indicator_set(members: Iterable[int]) -> WeightSpec:
    members = frozenset(members)
    if any(s < 0 for s in members):
        raise ValueError("set members must be nonnegative")
    return WeightSpec(WeightKind.INDICATOR_SET, members=members)


def odd_indicator() -> WeightSpec:
    return WeightSpec(WeightKind.INDICATOR_ODD)


def identity() -> WeightSpec:
    return WeightSpec(WeightKind.IDENTITY)


def ones() -> WeightSpec:
    """Indicator of all of N (weak compositions)."""
    return WeightSpec(WeightKind.ONES)


def avoid_progression(a: int, m: int) -> WeightSpec:
    """f(s) = 1 unless s = a + m*j for some j >= 0."""
    if a < 0 or m < 1:
        raise ValueError("avoid progression needs a >= 0 and m >= 1")
    return WeightSpec(WeightKind.AVOID_PROGRESSION, a=a, m=m)


def binomial() -> WeightSpec:
    return WeightSpec(WeightKind.BINOMIAL)


# -- evaluation -------------------------------------------------------------

def _base_value(spec: WeightSpec, s: int) -> int:
    kind = spec.kind
    if kind is WeightKind.TABLE:
        return spec._table_map.get(s, 0)
    if kind is WeightKind.INDICATOR_SET:
        return 1 if s in spec.members else 0
    if kind is WeightKind.INDICATOR_ODD:
        return s & 1
    if kind is WeightKind.IDENTITY:
        return s
    if kind is WeightKind.ONES:
        return 1
    if kind is WeightKind.AVOID_PROGRESSION:
        on_progression = s >= spec.a and (s - spec.a) % spec.m == 0
        return 0 if on_progression else 1
    if kind is WeightKind.BINOMIAL:
        return 1 if s <= 1 else 0
    raise AssertionError(kind)


def eval_weight(spec: WeightSpec, s: int) -> int:
    """f(s) with overrides applied, then the zeroed overlay."""
    if s < 0 or s in spec.zeroed:
        return 0
    if s in spec._override_map:
        return spec._override_map[s]
    return _base_value(spec, s)


def _finite_candidates(spec: WeightSpec) -> set[int] | None:
    kind = spec.kind
    if kind is WeightKind.TABLE:
        base = set(spec._table_map)
    elif kind is WeightKind.INDICATOR_SET:
        base = set(spec.members)
    elif kind is WeightKind.BINOMIAL:
        base = {0, 1}
    else:
        return None
    return base | set(spec._override_map)


def support_bound(spec: WeightSpec) -> int | None:
    """Largest s with f(s) > 0, or ``UNBOUNDED`` (None). f == 0 gives 0."""
    candidates = _finite_candidates(spec)
    if candidates is None:
        return UNBOUNDED
    positive = [s for s in candidates if eval_weight(spec, s) > 0]
    return max(positive, default=0)


def weight_vector(spec: WeightSpec, n: int) -> list[int]:
    """[f(0), ..., f(n')] where n' = min(n, support bound); trailing zeros dropped."""
    bound = support_bound(spec)
    top = n if bound is None else min(n, bound)
    return [eval_weight(spec, s) for s in range(top + 1)]


def restrict(spec: WeightSpec, ell: int) -> WeightSpec:
    """Same weight with f(ell) forced to 0."""
    return replace(spec, zeroed=spec.zeroed | {ell})


def override(spec: WeightSpec, values: Mapping[int, int]) -> WeightSpec:
    """Pin f(s) = values[s]; existing zeroed entries still win."""
    merged = dict(spec.overrides)
    merged.update(values)
    return replace(spec, overrides=_pairs(merged))


def total_mass(spec: WeightSpec) -> int:
    bound = support_bound(spec)
    if bound is None:
        raise DivergentMass(f"{format_spec(spec)} has unbounded support")
    return sum(eval_weight(spec, s) for s in range(bound + 1))


# -- text form --------------------------------------------------------------

_INT = re.compile(r"\d+")


class _Reader:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def fail(self, reason):
        raise ParseError(self.text, self.pos, reason)

    def at_end(self):
        return self.pos >= len(self.text)

    def take(self, literal):
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal):
        if not self.take(literal):
            self.fail(f"expected {literal!r}")

    def integer(self, cap=None):
        match = _INT.match(self.text, self.pos)
        if not match:
            self.fail("expected an unsigned decimal integer")
        value = int(match.group())
        if cap is not None and value > cap:
            self.fail(f"value exceeds {cap}")
        self.pos = match.end()
        return value

    def ints(self):
        values = [self.integer()]
        while self.take(","):
            values.append(self.integer())
        return values

    def pairs(self):
        out = {}
        while True:
            key = self.integer()
            self.expect("=")
            out[key] = self.integer(cap=MAX_TABLE_VALUE)
            if not self.take(","):
                return out


def parse(text: str) -> WeightSpec:
    """Parse the weight-spec DSL; raises :class:`ParseError` on bad input."""
    r = _Reader(text)
    if r.take("table:"):
        spec = from_table(r.pairs())
    elif r.take("set:"):
        spec = indicator_set(r.ints())
    elif r.take("avoid:"):
        r.expect("a=")
        a = r.integer()
        r.expect(",m=")
        pos = r.pos
        m = r.integer()
        if m < 1:
            r.pos = pos
            r.fail("m must be at least 1")
        spec = avoid_progression(a, m)
    elif r.take("odd"):
        spec = odd_indicator()
    elif r.take("ones"):
        spec = ones()
    elif r.take("id"):
        spec = identity()
    elif r.take("binom"):
        spec = binomial()
    else:
        r.fail("unknown weight family")
    while not r.at_end():
        if r.take("|zero="):
            spec = replace(spec, zeroed=spec.zeroed | frozenset(r.ints()))
        elif r.take("|put="):
            spec = override(spec, r.pairs())
        else:
            r.fail("expected '|zero=' or '|put=' suffix")
    return spec


def _fmt_pairs(pairs):
    return ",".join(f"{s}={v}" for s, v in pairs)


def format_spec(spec: WeightSpec) -> str:
    """Canonical DSL text for ``spec``; ``parse(format_spec(f))`` equals ``f``."""
    kind = spec.kind
    if kind is WeightKind.TABLE:
        head = "table:" + (_fmt_pairs(spec.table) or "0=0")
    elif kind is WeightKind.INDICATOR_SET:
        # empty set has no text form of its own
        head = "set:" + ",".join(map(str, sorted(spec.members))) if spec.members else "table:0=0"
    elif kind is WeightKind.AVOID_PROGRESSION:
        head = f"avoid:a={spec.a},m={spec.m}"
    else:
        head = kind.value
    if spec.overrides:
        head += "|put=" + _fmt_pairs(spec.overrides)
    if spec.zeroed:
        head += "|zero=" + ",".join(map(str, sorted(spec.zeroed)))
    return head
