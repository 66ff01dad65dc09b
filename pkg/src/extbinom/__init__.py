"""Extended binomial coefficients <k, n>_f: counts of f-weighted integer
compositions, computed exactly and modulo primes, with congruence checkers."""
from .congruences import THEOREMS, CongruenceReport, SweepSummary, fib, sweep, verify
from .errors import (
    BudgetExceeded,
    DivergentBracket,
    DivergentMass,
    ExtBinomError,
    HypothesisViolation,
    InfiniteCount,
    NotPrime,
    ParseError,
)
from .exact import (
    LazyTriangle,
    SequenceTable,
    TriangleTable,
    bracket,
    c_sequence,
    count_by_enumeration,
    ext_binom,
    ext_binom_by_partitions,
    triangle,
)
from .modular import (
    Residue,
    babbage_weight,
    granville_mod,
    lucas_mod,
    parity,
    prime_power_row,
    prime_row,
)
from .primes import PrimalityVerdict, mann_shanks_is_prime, trial_division_is_prime
from .weights import (
    WeightSpec,
    avoid_progression,
    binomial,
    eval_weight,
    format_spec,
    from_table,
    identity,
    indicator_set,
    odd_indicator,
    ones,
    override,
    parse,
    restrict,
    support_bound,
    total_mass,
)

__version__ = "0.1.0"
