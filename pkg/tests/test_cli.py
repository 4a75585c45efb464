import json
import subprocess
import sys

import pytest

from tripenv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ops_list(capsys):
    code, out, _ = run(capsys, "ops", "list")
    assert code == 0 and len(out.strip().splitlines()) == 22
    code, out, _ = run(capsys, "ops", "list", "--json")
    rows = json.loads(out)
    assert len(rows) == 22
    by_name = {r["name"]: r for r in rows}
    assert by_name["jordan-inf"]["coefficients"] == ["1", "0", "0", "0", "0", "1"]


def test_ops_equiv_and_matrix(capsys):
    code, out, _ = run(capsys, "ops", "equiv", "lie-inf", "anti-jordan-inf", "--json")
    assert code == 0 and json.loads(out)["equivalent"] is False
    code, out, _ = run(capsys, "ops", "equiv", "symmetric-sum", "2,2,2,2,2,2")
    assert out.strip() == "symmetric-sum ~ 2,2,2,2,2,2"
    code, out, _ = run(capsys, "ops", "matrix", "symmetric-sum", "--json")
    assert json.loads(out)["matrix_form"] == ["6", "0", "0", "0", "0", "0"]


def test_ops_search(capsys):
    code, out, _ = run(capsys, "ops", "search", "--range", "1", "--json")
    doc = json.loads(out)
    assert doc["vectors"] == 243 and doc["catalog_hits"] >= 20


def test_envelope_text_and_json(capsys):
    code, out, _ = run(capsys, "envelope", "jordan-inf")
    assert code == 0
    assert "verdict: finite(5)" in out and "Q + M2(Q)" in out
    code, out, _ = run(capsys, "envelope", "lie-inf", "--json")
    doc = json.loads(out)
    assert doc["downup_parameters"] == ["2", "-1", "-2"] and doc["authoritative"]
    code, out, _ = run(capsys, "envelope", "alternating-sum", "--growth", "8")
    assert "exponential" in out and "groebner basis (complete): (empty)" in out


def test_envelope_truncation_exit_code(capsys, monkeypatch):
    import tripenv.cli as cli
    real = cli.envelope_report

    def truncated(*args):
        doc = real(*args)
        doc["authoritative"] = False
        return doc

    monkeypatch.setattr(cli, "envelope_report", truncated)
    code, out, _ = run(capsys, "envelope", "symmetric-sum")
    assert code == 1 and "not authoritative" in out


def test_wedderburn(capsys):
    code, out, _ = run(capsys, "wedderburn", "jordan-0")
    assert code == 0 and "R(4) + Q + M2(Q)" in out
    code, _, err = run(capsys, "wedderburn", "lie-inf")
    assert code == 2 and "no finite table" in err


def test_downup_commands(capsys):
    code, out, _ = run(capsys, "downup", "mult", "--params=0,1,0", "0,0,3", "2,0,0")
    assert out.strip() == "(b^3) * (a^2) = a^2 b^3"
    code, out, _ = run(capsys, "downup", "center", "--m", "2")
    assert code == 0 and "central: True" in out
    code, out, _ = run(capsys, "downup", "b2", "1,1,0", "--params=0,1,0", "--c1", "2", "--c2", "0")
    assert out.strip() == "2 a^2 b + a (ba)"
    code, out, _ = run(capsys, "downup", "mult", "--quotient", "2,0,0", "1,0,0")
    assert out.strip().endswith("= 0")


@pytest.mark.parametrize("suite,extra", [("thm4.16", ["--m", "4"]), ("cor4.7", ["--n", "12"]),
                                         ("lemma4.24", []), ("sl2-powers", ["--max", "3"])])
def test_verify_suites(capsys, suite, extra):
    code, out, _ = run(capsys, "verify", suite, "--json", *extra)
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["mismatches"] == 0


def test_gk(capsys):
    code, out, _ = run(capsys, "gk", "symmetric-sum")
    assert code == 0 and out.strip().endswith("polynomial(1)")


def test_usage_errors(capsys):
    assert run(capsys, "envelope", "no-such-op")[0] == 2
    assert run(capsys, "ops", "equiv", "lie-inf")[0] == 2
    assert run(capsys, "verify", "nope")[0] == 2
    assert run(capsys, "downup", "mult", "1,2", "0,0,0")[0] == 2
    with pytest.raises(SystemExit):
        main(["envelope", "jordan-inf", "--cap", "2"])
    with pytest.raises(SystemExit):
        main(["gk", "lie-inf", "--degree", "5"])


def test_output_is_deterministic_across_workers(tmp_path):
    outs = []
    for w in ("1", "3"):
        env = {"TRIPENV_WORKERS": w, "PATH": "/usr/bin:/bin"}
        proc = subprocess.run([sys.executable, "-m", "tripenv", "verify", "center", "--m", "4", "--json"],
                              capture_output=True, text=True, env=env, check=True)
        outs.append(proc.stdout)
        proc = subprocess.run([sys.executable, "-m", "tripenv", "envelope", "all", "--json", "--growth", "8"],
                              capture_output=True, text=True, env=env, check=True)
        outs.append(proc.stdout)
    assert outs[0] == outs[2] and outs[1] == outs[3]
