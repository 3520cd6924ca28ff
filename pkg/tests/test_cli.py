import json

import pytest

from grrskit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_axioms_template(capsys):
    code, out = run(capsys, "axioms", "--family", "B(m,n)", "--max", "2")
    assert code == 0 and out.count("PASS") == 4


def test_forbidden_lambda_is_usage_error(capsys):
    assert main(["axioms", "--family", "D(2,1;l=0)"]) == 2


def test_mutation_fails(capsys):
    code, out = run(capsys, "axioms", "--family", "gl(2|1)", "--mutate", "drop-root")
    assert code == 1 and "witness" in out


def test_trichotomy_histogram(capsys):
    code, out = run(capsys, "trichotomy", "--family", "B(1,1)", "--budget", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["instances"] == 4
    assert set(data["histogram"]) <= {"Empty", "IsotropicPair", "IrreducibleGrrsWithOdd"}


def test_identity_only(capsys):
    code, out = run(capsys, "trichotomy", "--family", "gl(2|1)", "--identity-only", "--json")
    assert json.loads(out)["histogram"] == {"IrreducibleGrrsWithOdd": 1}


def test_iwasawa(capsys):
    code, out = run(capsys, "iwasawa", "--pair", "gl(3|2):gl(1|2)xgl(2|0)", "--json",
                    "--expect-table")
    data = json.loads(out)
    assert code == 0
    assert data["iwasawa_theta"] is False and data["iwasawa_delta_theta"] is True


def test_sv_expect_table(capsys):
    code, _ = run(capsys, "sv", "--pair", "gl(4|2):gl(1|1)xgl(3|1)", "--expect-table")
    assert code == 0


def test_sv_failure_exit(capsys):
    code, out = run(capsys, "sv", "--pair", "F(1|3):D(1,2;2)")
    assert code == 1 and "NotTwoComponent" in out


def test_satake_dot(capsys):
    code, out = run(capsys, "satake", "--pair", "gl(3|1):gl(1|0)xgl(2|1)", "--dot")
    assert code == 0
    assert out.count("shape=circle") == 3 and out.count("fixed=true") == 1
    assert out.count("dir=both") == 1


def test_satake_seed_coords(capsys):
    code, out = run(capsys, "satake", "--pair", "gl(3|1):gl(1|0)xgl(2|1)", "--seed", "coords")
    assert code == 0 and "arrow" in out


def test_restrict(capsys):
    code, out = run(capsys, "restrict", "--pair", "gl(2|2):osp(2|2)", "--json")
    assert code == 0 and json.loads(out)["passed"]


@pytest.mark.parametrize("argv", [["iwasawa", "--pair", "nonsense"], ["bogus"],
                                  ["sv", "--pair", "gl(2|2):p(2)"],
                                  ["iwasawa", "--pair", "F(1|3):sl(1|4)"]])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_deterministic_output(capsys):
    _, a = run(capsys, "restrict", "--pair", "osp(4|2):gl(2|1)", "--json")
    _, b = run(capsys, "restrict", "--pair", "osp(4|2):gl(2|1)", "--json")
    assert a == b
