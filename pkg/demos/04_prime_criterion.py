"""A primality test driven by weighted compositions.

With f(0) = f(1) = 1, n is prime exactly when m divides <m, n-2m>_f for every
m with 0 <= 2m <= n. The smallest m that fails is a witness of compositeness.

Run: python3 demos/04_prime_criterion.py
"""
from extbinom import ext_binom, mann_shanks_is_prime, parse, trial_division_is_prime

f = parse("id|put=0=1")  # f(0) = 1, f(s) = s otherwise

for n in (5, 6):
    terms = [ext_binom(m, n - 2 * m, f) for m in range(n // 2 + 1)]
    verdict = mann_shanks_is_prime(n, f)
    print(f"n={n}: <m, n-2m> for m=0.. is {terms} -> prime={verdict.is_prime}, witness={verdict.witness}")

weights = [parse("binom"), f, parse("table:0=1,1=1,2=7,3=2")]
for g in weights:
    found = [n for n in range(2, 120) if mann_shanks_is_prime(n, g).is_prime]
    agree = all(mann_shanks_is_prime(n, g).is_prime == trial_division_is_prime(n) for n in range(2, 120))
    print(f"\n{g}: {len(found)} primes below 120, agrees with trial division: {agree}")
    print("  " + " ".join(map(str, found)))
