import math

import pytest

from extbinom import (
    HypothesisViolation,
    PrimalityVerdict,
    binomial,
    ext_binom,
    from_table,
    identity,
    mann_shanks_is_prime,
    override,
    trial_division_is_prime,
    verify,
)

SHIFTED_ID = override(identity(), {0: 1})


def test_trial_division():
    assert trial_division_is_prime(2)
    assert not trial_division_is_prime(91)
    assert trial_division_is_prime(97)
    assert [n for n in range(30) if trial_division_is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_worked_examples():
    assert [ext_binom(m, 5 - 2 * m, SHIFTED_ID) for m in range(3)] == [0, 3, 2]
    assert mann_shanks_is_prime(5, SHIFTED_ID) == PrimalityVerdict(5, True)
    assert [ext_binom(m, 6 - 2 * m, SHIFTED_ID) for m in range(4)] == [0, 4, 5, 1]
    assert mann_shanks_is_prime(6, SHIFTED_ID) == PrimalityVerdict(6, False, 2)


def test_two_is_prime_for_any_admissible_weight():
    for f in (binomial(), SHIFTED_ID, from_table({0: 1, 1: 1, 2: 7, 3: 2})):
        assert mann_shanks_is_prime(2, f).is_prime


def test_hypothesis_checked():
    with pytest.raises(HypothesisViolation):
        mann_shanks_is_prime(7, identity())
    with pytest.raises(HypothesisViolation):
        mann_shanks_is_prime(7, from_table({0: 1, 1: 2}))
    with pytest.raises(ValueError):
        mann_shanks_is_prime(1, binomial())


def test_verdict_invariants():
    with pytest.raises(ValueError):
        PrimalityVerdict(9, False)
    with pytest.raises(ValueError):
        PrimalityVerdict(7, True, 3)


@pytest.mark.parametrize("f", [binomial(), SHIFTED_ID, from_table({0: 1, 1: 1, 2: 7, 3: 2})], ids=str)
def test_agrees_with_trial_division(f):
    for n in range(2, 201):
        verdict = mann_shanks_is_prime(n, f)
        assert verdict.is_prime == trial_division_is_prime(n)
        if verdict.witness is not None:
            assert 0 <= 2 * verdict.witness <= n


def test_witness_consistent_with_congruence():
    # odd composite n, prime factor p, m = (n - p) / 2 = p r
    for f in (binomial(), SHIFTED_ID):
        for n in (9, 15, 21, 25, 27, 33, 35, 49, 91):
            p = min(d for d in range(3, n) if n % d == 0 and trial_division_is_prime(d))
            m = (n - p) // 2
            r = m // p
            assert ext_binom(m, n - 2 * m, f) % m != 0
            report = verify("ms", {"p": p, "r": r}, f)
            assert report.holds
            assert math.comb(p * r, p) % (p * r) != 0
