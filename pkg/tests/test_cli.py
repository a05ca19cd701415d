import io
import json

import pytest

from qellip import SurfaceConfig, certify_bound, RegionBounds
from qellip.cli import main
from qellip.examples import example_surface_3_1


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def ex_file(tmp_path):
    path = tmp_path / "ex31.json"
    path.write_text(json.dumps(example_surface_3_1().to_dict()))
    return str(path)


def test_threshold_on_example_file(ex_file):
    code, out = run("threshold", "--config", ex_file)
    assert code == 0
    assert "stable_m=5" in out and "first_success=3" in out


def test_threshold_structured(ex_file):
    code, out = run("threshold", "--config", ex_file, "--format", "structured")
    doc = json.loads(out)
    assert code == 0
    assert doc["stable_m"] == 5 and doc["failures"] == [1, 2, 4] and doc["window"] == [5, 6, 7]
    assert SurfaceConfig.from_dict(doc["config"]) == example_surface_3_1()


def test_threshold_not_kappa_one(capsys):
    code, _ = run("threshold", "--p", "3", "--g", "1", "--chi", "0", "--t", "0")
    assert code == 2
    assert "criterion (*)" in capsys.readouterr().err


def test_certify_pass():
    code, out = run("certify", "--p", "3", "--g-max", "4", "--chi-t-max", "6", "--lambda-max", "6")
    assert code == 0
    assert "max stable threshold: 5" in out and "overall: PASS" in out


def test_certify_structured_and_exit_mirrors_report():
    for argv, bounds in [
        (["--p", "2"], RegionBounds(2)),
        (["--p", "2", "--exclude", "question-3-3"], RegionBounds(2, exclusions=("question-3-3",))),
        (["--p", "3", "--g-max", "1", "--chi-t-max", "2", "--lambda-max", "3"], RegionBounds(3, 1, 2, 3)),
    ]:
        code, out = run("certify", *argv, "--format", "structured")
        doc = json.loads(out)
        assert doc["pass"] == certify_bound(bounds).passed
        assert code == (0 if doc["pass"] else 3)


def test_analyze_invalid():
    code, out = run("analyze", "--p", "3", "--g", "0", "--chi", "0", "--t", "0", "--format", "structured")
    doc = json.loads(out)
    assert code == 2
    assert doc["validation"]["violations"][0]["rule"] == "chi-lower-bound"
    assert "chi below lower bound" in doc["validation"]["violations"][0]["message"]


def test_analyze_valid_text():
    code, out = run("analyze", "--p", "3", "--g", "0", "--chi", "1", "--t", "0",
                    "--fiber", "tame:2", "--fiber", "tame:2")
    assert code == 0
    assert "criterion (*) value: 1/3" in out and "case: III-3" in out


def test_analyze_strict():
    argv = ["analyze", "--p", "3", "--g", "1", "--chi", "0", "--t", "1", "--fiber", "tame:2"]
    assert run(*argv)[0] == 0
    assert run(*argv, "--strict")[0] == 2


def test_examples_round_trip(tmp_path):
    for name in ("example-3-1", "question-3-3"):
        code, out = run("examples", "--name", name)
        assert code == 0
        path = tmp_path / f"{name}.json"
        path.write_text(out)
        code, analyzed = run("analyze", "--config", str(path), "--format", "structured")
        assert code == 0
        assert json.loads(analyzed)["config"] == json.loads(out)


def test_examples_listing():
    code, out = run("examples")
    assert code == 0 and set(json.loads(out)) == {"example-3-1", "question-3-3"}


def test_table_formats(ex_file):
    code, out = run("table", "--config", ex_file, "--m-max", "5", "--format", "delimited")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,degree,h0_lower,h0_upper,gives_fibration"
    assert lines[4] == "4,0,1,1,false"
    code, out = run("table", "--config", ex_file, "--m-max", "5", "--format", "structured")
    assert [r["h0_lower"] for r in json.loads(out)] == [0, 1, 2, 1, 2]


def test_enumerate_formats():
    argv = ["enumerate", "--p", "3", "--g-max", "0", "--chi-t-max", "1", "--lambda-max", "2"]
    code, out = run(*argv, "--format", "structured")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(recs) == 1
    assert recs[0]["stable_m"] == 5 and recs[0]["case"] == "III-3"
    code, out = run(*argv, "--format", "delimited")
    assert out.splitlines() == ["p,g,chi,t,fibers,case,first_success,stable_m", "3,0,1,0,T2 T2,III-3,3,5"]


def test_enumerate_deterministic():
    argv = ["enumerate", "--p", "2", "--g-max", "2", "--chi-t-max", "3", "--lambda-max", "3", "--format", "structured"]
    assert run(*argv) == run(*argv)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["threshold"],
        ["certify"],
        ["certify", "--p", "5"],
        ["analyze", "--p", "3", "--g", "0", "--chi", "1", "--t", "0", "--fiber", "tame"],
        ["certify", "--p", "3", "--exclude", "nope"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 1


def test_unknown_config_field_is_usage_error(tmp_path):
    data = example_surface_3_1().to_dict()
    data["lamda"] = 2
    path = tmp_path / "typo.json"
    path.write_text(json.dumps(data))
    assert run("analyze", "--config", str(path))[0] == 1
