"""Spot checks and sweeps of the congruence catalogue.

Run: python3 demos/02_congruences.py
"""
from extbinom import THEOREMS, from_table, parse, sweep, verify

remark = from_table({0: 5, 2: 2, 3: 1})

report = verify("prime_row", {"p": 3, "n": 6}, remark)
print(f"<3,6> = {report.lhs} and f(2) = {report.rhs}, equal mod {report.modulus}: {report.holds}")

report = verify("babbage", {"n": 2, "m": 1, "p": 2}, remark)
print(f"babbage at n=2, m=1, p=2: lhs {report.lhs}, rhs {report.rhs}, mod {report.modulus}")

report = verify("somer", {"p": 5, "b": 1, "n": 0}, parse("table:1=1,2=3,4=2"))
print(f"c(20) = {report.lhs}, c(4) = {report.rhs}, congruent mod 5: {report.holds}")

# One small sweep per theorem. Tuples outside a theorem's hypotheses are
# skipped and counted, not failed.
corpus = [remark, parse("table:1=1,2=1,3=1,9=3"), parse("binom"), parse("set:1,2")]
grids = {
    "parity": {"k": range(12), "n": range(16)},
    "prime_row": {"p": [2, 3, 5], "n": range(20)},
    "shift_row": {"k": range(4), "s": range(3), "p": [3, 5], "j": range(5)},
    "p_plus_1_row": {"p": [2, 3, 5], "m": range(3), "r": range(5)},
    "prime_power_row": {"p": [2, 3], "m": [1, 2], "n": range(20)},
    "babbage": {"n": range(4), "m": range(4), "p": [2, 3]},
    "babbage_single": {"r": range(4), "p": [2, 3, 5]},
    "sp_row_mod_p2": {"s": range(4), "r": range(8), "p": [2, 3]},
    "sp_row_small": {"s": range(4), "r": range(4), "p": [2, 3]},
    "cross_symmetry": {"r": range(4), "s": range(4), "p": [2, 3]},
    "divisibility": {"m": range(1, 4), "k": range(5), "n": range(12)},
    "ms": {"p": [2, 3, 5], "r": range(4)},
    "lucas": {"k": range(20), "n": range(20), "p": [2, 3]},
    "granville": {"k": range(20), "n": range(20), "p": [2, 3]},
    "somer": {"p": [2, 3], "b": [1, 2], "n": range(4)},
    "glaisher": {"p": [3, 5, 7], "m": [1, 2, 3], "r": range(3), "k": range(1, 4)},
    "rowsum_parity": {"k": range(8)},
}
no_weights = {
    "avoid_recurrence": {"a": [1, 2], "m": [2, 3], "n": range(10)},
    "fib_prime_residue": {"p": [2, 3, 5, 7, 11, 13], "family": ["pair", "ge2", "odd"]},
    "fib_gcd": {"m": range(1, 6), "n": range(1, 6), "family": ["pair", "ge2", "odd", "id"]},
    "fib_identity": {"n": range(10), "family": ["pair", "ge2", "odd", "id"]},
}
print(f"\n{'theorem':18s} {'cases':>6s} {'skipped':>8s} {'failures':>9s}")
for theorem in THEOREMS:
    if theorem in grids:
        summary = sweep(theorem, grids[theorem], corpus)
    else:
        summary = sweep(theorem, no_weights[theorem])
    print(f"{theorem:18s} {summary.total_cases:6d} {summary.skipped:8d} {len(summary.failures):9d}")
