import json

import pytest

from extbinom import HypothesisViolation, binomial, from_table, identity, parse, sweep, verify
from extbinom.congruences import THEOREMS, CongruenceReport, FIB_FAMILIES, fib

REMARK = from_table({0: 5, 2: 2, 3: 1})
INTRO = from_table({1: 1, 2: 1, 3: 1, 9: 3})


def test_fib():
    assert [fib(n) for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    with pytest.raises(ValueError):
        fib(-1)


def test_divisibility_example():
    report = verify("divisibility", {"m": 1, "k": 4, "n": 15}, INTRO)
    assert report.holds and report.lhs == 84 and report.modulus == 4


def test_ms_degenerate_binomial():
    report = verify("ms", {"p": 3, "r": 1}, binomial())
    assert report.holds and report.lhs == report.rhs == 1 and report.modulus == 3


def test_babbage_example():
    report = verify("babbage", {"n": 2, "m": 1, "p": 2}, REMARK)
    # <4,2>_f from the triangle recurrence: 4 * 5^3 * 2 = 1000
    assert report.lhs == 1000
    assert report.modulus == 4 and report.holds


def test_somer_worked_case():
    f = from_table({1: 1, 2: 3, 4: 2})
    report = verify("somer", {"p": 5, "b": 1, "n": 0}, f)
    assert report.lhs == 22_985_976 and report.rhs == 301_456 and report.holds


@pytest.mark.parametrize(
    "theorem, params, f",
    [
        ("prime_row", {"p": 4, "n": 4}, REMARK),
        ("shift_row", {"k": 1, "s": 1, "p": 3, "j": 3}, REMARK),
        ("p_plus_1_row", {"p": 3, "m": 1, "r": 3}, REMARK),
        ("prime_power_row", {"p": 3, "m": 0, "n": 3}, REMARK),
        ("sp_row_mod_p2", {"s": 2, "r": 6, "p": 3}, REMARK),
        ("sp_row_small", {"s": 0, "r": 1, "p": 3}, REMARK),
        ("sp_row_small", {"s": 2, "r": 0, "p": 3}, REMARK),
        ("cross_symmetry", {"r": 4, "s": 1, "p": 3}, REMARK),
        ("babbage_single", {"r": 0, "p": 3}, REMARK),
        ("divisibility", {"m": 1, "k": 0, "n": 0}, REMARK),
        ("ms", {"p": 3, "r": 0}, REMARK),
        ("somer", {"p": 3, "b": 1, "n": 0}, REMARK),
        ("somer", {"p": 3, "b": 1, "n": 0}, parse("id")),
        ("glaisher", {"p": 5, "m": 3, "r": 0, "k": 1}, REMARK),
        ("glaisher", {"p": 7, "m": 3, "r": 0, "k": 1}, identity()),
        ("rowsum_parity", {"k": 0}, REMARK),
        ("avoid_recurrence", {"a": 2, "m": 2, "n": 3}, None),
        ("avoid_recurrence", {"a": 1, "m": 3, "n": 0}, None),
        ("fib_prime_residue", {"p": 7, "family": "id"}, None),
        ("fib_gcd", {"m": 3, "n": 4, "family": "pair"}, identity()),
        ("fib_identity", {"n": 0, "family": "odd"}, None),
        ("parity", {"k": 1}, REMARK),
        ("parity", {"k": 1, "n": 2}, None),
        ("parity", {"k": -1, "n": 2}, REMARK),
    ],
)
def test_hypothesis_violations(theorem, params, f):
    with pytest.raises(HypothesisViolation):
        verify(theorem, params, f)


def test_unknown_theorem():
    with pytest.raises(ValueError):
        verify("nope", {}, REMARK)
    with pytest.raises(ValueError):
        sweep("nope", {}, [REMARK])


def test_excluded_edge_cases_are_really_false():
    # the instances excluded above are not just unproven: they fail
    assert (verify("sp_row_small", {"s": 2, "r": 1, "p": 3}, binomial()).holds)
    lhs_r0 = 1  # <2p, 0> for the binomial weight
    assert (lhs_r0 - 2 * 1) % 9 != 0  # s <p,0> f(0)^{p(s-1)} = 2
    from extbinom import c_sequence, restrict, avoid_progression

    c = c_sequence(restrict(avoid_progression(2, 2), 0), 10).values
    assert c[5] != c[4] + 2 * c[3]


def test_report_holds_definition():
    assert CongruenceReport("x", {}, 10, 3, 7).holds
    assert not CongruenceReport("x", {}, 10, 4, 7).holds
    assert CongruenceReport("x", {}, 5, 5, 0).holds
    assert not CongruenceReport("x", {}, 5, 6, 0).holds
    assert CongruenceReport("x", {}, 3, 12, 1).holds


def test_report_json_schema():
    report = verify("prime_row", {"p": 3, "n": 6}, REMARK)
    data = json.loads(json.dumps(report.to_dict()))
    assert set(data) == {"theorem", "params", "lhs", "rhs", "modulus", "holds"}
    assert data["lhs"] == "23" and data["rhs"] == "2" and data["modulus"] == 3 and data["holds"] is True
    assert data["params"]["weights"] == "table:0=5,2=2,3=1"


def test_sweep_examples(corpus):
    summary = sweep("prime_row", {"p": [2, 3, 5, 7], "n": range(31)}, corpus)
    assert summary.failures == () and summary.total_cases == 4 * 31 * len(corpus)
    assert summary.successes == summary.total_cases and summary.ok
    empty = sweep("prime_row", {"p": [], "n": range(5)}, corpus)
    assert empty.total_cases == 0 and empty.skipped == 0


def test_sweep_glaisher(finite_corpus):
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    summary = sweep("glaisher", {"p": primes, "m": [1, 2, 3, 5], "r": range(5), "k": range(1, 7)}, finite_corpus)
    assert summary.failures == () and summary.total_cases > 0 and summary.skipped > 0


def test_sweep_counts_skips():
    summary = sweep("ms", {"p": [2, 4], "r": [0, 1]}, [REMARK])
    assert summary.total_cases == 1 and summary.skipped == 3
    assert summary.to_dict() == {"theorem": "ms", "total": 1, "skipped": 3, "failures": []}


def test_sweep_collects_failures_in_order(monkeypatch):
    import extbinom.congruences as cg

    monkeypatch.setitem(cg._CHECKS, "prime_row", lambda params, f: (params["n"], 0, 2))
    summary = sweep("prime_row", {"n": [3, 1, 2]}, [REMARK])
    assert [r.params["n"] for r in summary.failures] == [3, 1]
    assert summary.total_cases == 3 and not summary.ok


def test_every_theorem_has_a_passing_instance():
    samples = {
        "parity": ({"k": 13, "n": 14}, parse("table:0=3,1=2,2=1")),
        "prime_row": ({"p": 3, "n": 6}, REMARK),
        "shift_row": ({"k": 2, "s": 2, "p": 5, "j": 3}, REMARK),
        "p_plus_1_row": ({"p": 3, "m": 2, "r": 1}, REMARK),
        "prime_power_row": ({"p": 2, "m": 2, "n": 8}, REMARK),
        "babbage": ({"n": 3, "m": 2, "p": 3}, REMARK),
        "babbage_single": ({"r": 3, "p": 5}, REMARK),
        "sp_row_mod_p2": ({"s": 3, "r": 5, "p": 3}, REMARK),
        "sp_row_small": ({"s": 3, "r": 2, "p": 5}, REMARK),
        "cross_symmetry": ({"r": 2, "s": 3, "p": 3}, REMARK),
        "divisibility": ({"m": 2, "k": 6, "n": 9}, REMARK),
        "ms": ({"p": 5, "r": 3}, REMARK),
        "lucas": ({"k": 29, "n": 40, "p": 3}, REMARK),
        "granville": ({"k": 29, "n": 40, "p": 3}, REMARK),
        "somer": ({"p": 3, "b": 2, "n": 4}, INTRO),
        "avoid_recurrence": ({"a": 1, "m": 3, "n": 5}, None),
        "glaisher": ({"p": 7, "m": 3, "r": 1, "k": 2}, REMARK),
        "rowsum_parity": ({"k": 5}, REMARK),
        "fib_prime_residue": ({"p": 13, "family": "ge2"}, None),
        "fib_gcd": ({"m": 12, "n": 18, "family": "id"}, None),
        "fib_identity": ({"n": 9, "family": "odd"}, FIB_FAMILIES["odd"]),
    }
    assert set(samples) == set(THEOREMS)
    for theorem, (params, f) in samples.items():
        assert verify(theorem, params, f).holds, theorem


def test_fib_gcd_pair_example():
    report = verify("fib_gcd", {"m": 5, "n": 8, "family": "pair"})
    # gcd(c(5), c(8)) = gcd(F6, F9) = gcd(8, 34) = 2 = c(gcd(6, 9) - 1) = c(2)
    assert report.lhs == report.rhs == 2


def test_fib_prime_residue_case_split():
    for p, expect in ((5, 0), (11, 1), (19, 1), (2, 1), (3, 2), (7, 6)):
        for family in ("pair", "ge2", "odd"):
            report = verify("fib_prime_residue", {"p": p, "family": family})
            assert report.rhs == expect and report.holds


def test_family_identity_consequence():
    from extbinom import c_sequence

    c = c_sequence(identity(), 12)
    assert all(c[4 * m] % 3 == 0 and c[4 * m] % 7 == 0 for m in range(1, 4))
