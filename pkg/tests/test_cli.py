import io
import json

import pytest

from extbinom.cli import main, parse_ranges, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_compute_example():
    assert call("compute", "--weights", "table:0=3,1=2,2=1", "--k", "13", "--n", "14") == (0, "289159780\n", "")


def test_compute_mod():
    code, out, _ = call("compute", "--weights", "table:0=3,1=2,2=1", "--k", "13", "--n", "14", "--mod", "2")
    assert (code, out) == (0, "0\n")


@pytest.mark.parametrize("method", ["power", "rows", "partitions", "enumeration"])
def test_compute_methods(method):
    code, out, _ = call("compute", "--weights", "table:1=1,2=1,3=1,9=3", "--k", "4", "--n", "15", "--method", method)
    assert (code, out) == (0, "84\n")


def test_compute_json():
    code, out, _ = call("compute", "--weights", "id", "--k", "40", "--n", "90", "--format", "json")
    data = json.loads(out)
    assert code == 0 and isinstance(data["value"], str) and "e" not in data["value"]


def test_prime_composite():
    code, out, _ = call("prime", "--weights", "binom", "--n", "91")
    data = json.loads(out)
    assert code == 0 and data["is_prime"] is False and data["trial_division"] is False
    assert data["witness"] is not None


def test_prime_text():
    code, out, _ = call("prime", "--weights", "id|put=0=1", "--n", "6", "--format", "tsv")
    assert (code, out) == (0, "6\tcomposite\twitness=2\n")


def test_triangle_and_sequence():
    code, out, _ = call("triangle", "--weights", "table:0=5,2=2,3=1", "--rows", "3", "--cols", "9")
    assert code == 0 and out.splitlines()[-1] == "3\t125\t0\t150\t75\t60\t60\t23\t12\t6\t1"
    code, out, _ = call("triangle", "--weights", "binom", "--rows", "2", "--cols", "2", "--format", "json")
    assert json.loads(out) == [["1", "0", "0"], ["1", "1", "0"], ["1", "2", "1"]]
    code, out, _ = call("sequence", "--weights", "table:1=1,2=3,4=2", "--n", "20")
    assert out.splitlines()[-1] == "20\t22985976"


def test_bracket():
    assert call("bracket", "--weights", "table:0=5,2=2,3=1", "--k", "2", "--r", "1", "--m", "3")[:2] == (0, "4\n")
    code, out, _ = call("bracket", "--weights", "id", "--k", "2", "--r", "0", "--m", "2", "--format", "json")
    assert code == 2 and "error" in json.loads(out)


def test_verify_passes():
    code, out, _ = call("verify", "--theorem", "prime_row", "--ranges", "p=2,3,5,7", "n=0..30",
                        "--weights", "binom", "--weights", "table:0=5,2=2,3=1")
    data = json.loads(out)
    assert code == 0 and data["total"] == 248 and data["failures"] == []


def test_verify_without_weights():
    code, out, _ = call("verify", "--theorem", "fib_gcd", "--ranges", "m=1..6", "n=1..6", "family=pair,id")
    assert code == 0 and json.loads(out)["total"] == 72


def test_verify_failure_exit_code(monkeypatch):
    import extbinom.congruences as cg

    monkeypatch.setitem(cg._CHECKS, "parity", lambda params, f: (1, 0, 2))
    code, out, _ = call("verify", "--theorem", "parity", "--ranges", "k=1", "n=1", "--weights", "binom")
    data = json.loads(out)
    assert code == 1 and len(data["failures"]) == 1 and data["failures"][0]["holds"] is False


def test_bench_matches():
    code, out, _ = call("bench", "--weights", "table:1=1,2=1", "--k", "300", "--n", "420", "--p", "7")
    data = json.loads(out)
    assert code == 0 and data["match"] is True
    assert data["granville"]["residue"] == data["exact"]["residue"]


def test_bench_large_without_exact():
    code, out, _ = call("bench", "--weights", "table:1=1,2=1", "--k", "1000000000", "--n", "1000000000",
                        "--p", "2", "--no-exact")
    data = json.loads(out)
    assert code == 0 and data["exact"] is None and data["granville"]["residue"] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--weights", "table:0=1,1=", "--k", "1", "--n", "1", "--format", "json"],
        ["compute", "--weights", "binom", "--k", "1", "--format", "json"],
        ["compute", "--weights", "binom", "--k", "x", "--n", "1", "--format", "json"],
        ["verify", "--theorem", "nope"],
        ["verify", "--theorem", "ms", "--ranges", "p=2..", "--weights", "binom"],
        ["prime", "--weights", "id", "--n", "7"],
        ["sequence", "--weights", "binom", "--n", "4", "--format", "json"],
        ["compute", "--weights", "binom", "--k", "3", "--n", "3", "--mod", "4", "--format", "json"],
    ],
)
def test_json_errors(argv):
    code, out, _ = call(*argv)
    assert code == 2
    assert "error" in json.loads(out)


def test_text_error_shows_grammar():
    code, out, err = call("compute", "--weights", "nope", "--k", "1", "--n", "1")
    assert code == 2 and out == "" and "weight spec grammar" in err


def test_enumeration_budget_flag():
    code, out, _ = call("compute", "--weights", "binom", "--k", "12", "--n", "30", "--method", "enumeration",
                        "--budget", "10", "--format", "json")
    assert code == 2 and json.loads(out)["kind"] == "BudgetExceeded"


def test_parse_ranges():
    assert parse_ranges(["p=2,3", "n=0..3", "family=pair"]) == {"p": [2, 3], "n": [0, 1, 2, 3], "family": ["pair"]}


def test_main_entry(capsys):
    assert main(["compute", "--weights", "binom", "--k", "5", "--n", "2"]) == 0
    assert capsys.readouterr().out == "10\n"
