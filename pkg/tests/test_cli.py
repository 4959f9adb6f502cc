import copy
import json
import subprocess
import sys

import pytest

from dpverify import cli
from dpverify.catalog import document
from dpverify.scenario import shipped_scenarios


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run(["list"], capsys)
    assert code == 0
    assert out.split() == [p.name[:-5] for p in shipped_scenarios()]


@pytest.mark.parametrize("argv", [
    ["verify"],
    ["verify", "--type", "E8"],
    ["verify", "missing.json"],
    ["verify", "--all", "--primes", "2,3"],
    ["verify", "--all", "--format", "xml"],
    ["frobnicate"],
])
def test_usage_errors_exit_3(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code = cli.main(argv)
        raise SystemExit(code)
    assert exc.value.code == 3


def test_passing_scenario_exit_0(capsys):
    code, out, err = run(["verify", "--type", "fermat"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["reports"][0]["status"] == "pass"
    assert "fermat: pass" in err


def test_report_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for f, jobs in ((a, "1"), (b, "2")):
        assert run(["verify", "--type", "A5A1", "--type", "E7", "--seed", "3",
                    "--jobs", jobs, "--out", str(f)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["seed"] == 3 and all("seconds" not in c for r in doc["reports"]
                                    for c in r["claims"])


def test_timings_flag_records_seconds(capsys):
    code, out, _ = run(["verify", "--type", "A1^7", "--timings"], capsys)
    assert all("seconds" in c for c in json.loads(out)["reports"][0]["claims"])


def test_corrupted_generator_exit_1(capsys, tmp_path):
    doc = copy.deepcopy(document("fermat"))
    doc["generators"][0]["block"][1][1] = "2"
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 1
    claims = json.loads(out)["reports"][0]["claims"]
    assert any(c["kind"] == "generator-preserves" and c["result"] == "fail" for c in claims)


def test_malformed_json_exit_3(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(["verify", str(path)], capsys)
    assert code == 3 and "schema error" in err


def test_budget_exhaustion_exit_2(capsys):
    code, out, _ = run(["verify", "--type", "fermat", "--gb-budget", "2"], capsys)
    assert code == 2
    claims = json.loads(out)["reports"][0]["claims"]
    assert claims[0]["result"] == "inconclusive"


def test_markdown_output(capsys):
    code, out, _ = run(["verify", "--type", "E7", "--format", "markdown"], capsys)
    assert code == 0
    assert out.startswith("# dpverify")
    assert "| # | claim | inputs | expected | observed | result |" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "dpverify", "list"], capture_output=True, text=True)
    assert res.returncode == 0 and "fermat" in res.stdout
