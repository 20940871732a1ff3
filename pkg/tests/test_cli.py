import json

import pytest

from expdiv import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_point_values(capsys):
    code, out, _ = run(capsys, "eval", "--fn", "p_tilde", "--n", "16")
    assert code == 0 and out.strip() == "24"
    code, out, _ = run(capsys, "eval", "--fn", "phi_e", "--n", "1000000")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "eval", "--fn", "tau_e", "--n", "72")
    assert code == 0 and out.strip() == "4"


def test_eval_gcd_e(capsys):
    code, out, _ = run(capsys, "eval", "--fn", "gcd_e", "--n", "72", "--m", "24")
    assert code == 0 and out.strip() == "24"
    code, _, err = run(capsys, "eval", "--fn", "gcd_e", "--n", "4", "--m", "9")
    assert code == 1 and "does not exist" in err
    code, _, err = run(capsys, "eval", "--fn", "gcd_e", "--n", "4")
    assert code == 2


def test_eval_unknown_fn_is_usage_error(capsys):
    code, _, err = run(capsys, "eval", "--fn", "nope", "--n", "3")
    assert code == 2


def test_sum_csv_deterministic(capsys):
    args = ("sum", "--fn", "phi_e", "--grid", "1e3:1e5:10", "--no-meta")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.splitlines()[0] == "x,sum"
    assert out1.splitlines()[1] == "1000,1241"


def test_sum_json(capsys):
    code, out, _ = run(
        capsys, "sum", "--fn", "tau13", "--grid", "100,1000",
        "--format", "json", "--no-meta",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"][0]["x"] == 100
    assert "timestamp" not in doc["meta"]


def test_sum_capacity_exit_code(capsys):
    code, _, err = run(capsys, "sum", "--fn", "phi_e", "--grid", "1e9:1e12:10")
    assert code == 3


def test_check_suites_pass(capsys):
    for suite, n in (
        ("oracle", 300),
        ("lemma1", 2000),
        ("lemma3", 2000),
        ("petermann-wu", 2000),
        ("theorem4-exact", 30),
        ("theorem7-exact", 50),
    ):
        code, out, _ = run(capsys, "check", "--suite", suite, "--N", str(n))
        assert code == 0, (suite, out)
        assert json.loads(out)["status"] == "pass"


def test_check_cap_exit_code(capsys):
    code, _, err = run(capsys, "check", "--suite", "oracle", "--N", "10000000")
    assert code == 3
    code, _, err = run(capsys, "check", "--suite", "oracle", "--N", "0")
    assert code == 2


def test_constants_cache_roundtrip(tmp_path, capsys):
    cache = str(tmp_path / "c.cache")
    code, out1, _ = run(
        capsys, "constants", "--name", "C5", "--cache", cache, "--no-meta"
    )
    assert code == 0
    code, out2, _ = run(
        capsys, "constants", "--name", "C5", "--cache", cache, "--no-meta"
    )
    assert code == 0 and out1 == out2
    with open(cache) as fh:
        assert fh.readline().startswith("# expdiv-constants")


def test_fit_no_compute_without_cache_errors(tmp_path, capsys):
    cache = str(tmp_path / "empty.cache")
    code, _, err = run(
        capsys, "fit", "--theorem", "1", "--grid", "1e4:1e7:2",
        "--cache", cache, "--no-compute",
    )
    assert code == 2


def test_fit_theorem5_passes(tmp_path, capsys):
    cache = str(tmp_path / "c.cache")
    code, out, _ = run(
        capsys, "fit", "--theorem", "5", "--k", "2", "--grid", "1e4:1e7:2",
        "--cache", cache, "--no-meta",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "pass"
    assert doc["fitted_exponent"] <= 0.25 + doc["slack"]
    row = doc["rows"][0]
    assert set(row) == {"x", "sum", "main", "residual", "ratio"}


def test_usage_exit_code_from_argparse():
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == 2
