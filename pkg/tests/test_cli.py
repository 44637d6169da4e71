import json
import subprocess
import sys

from hodge_vfilt.cli import run, write_model
from hodge_vfilt.model import Slope, delta_module_model

QUADRIC = {"n": 3, "r": 1, "weights": [1, 1, 1], "degrees": [2]}


def call(capsys, tmp_path, argv, *docs):
    paths = []
    for n, doc in enumerate(docs):
        p = tmp_path / f"in{n}.json"
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        paths.append(str(p))
    argv = list(argv)
    for p in paths:
        argv += ["--input", p]
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_quadric_exact_bytes(capsys, tmp_path):
    code, out, err = call(capsys, tmp_path, ["classify"], QUADRIC)
    assert code == 0
    assert out == '{"du_bois":true,"k":0,"lower_bound":"1","upper_bound":"3/2","verdict":"kRational(0)"}\n'
    assert "isolated singular point" in err


def test_classify_quiet(capsys, tmp_path):
    _, _, err = call(capsys, tmp_path, ["classify", "--quiet"], QUADRIC)
    assert err == ""


def test_bfun_ts(capsys, tmp_path):
    doc = {"schema": "hodge-vfilt/v1/bfunction", "roots": {"1": 1}}
    code, out, _ = call(capsys, tmp_path, ["bfun-ts"], doc, doc)
    assert code == 0 and json.loads(out) == {"roots": {"2": 1}}


def test_bfun_rescale_factor(capsys, tmp_path):
    doc = {"roots": {"5/6": 1, "1": 1, "7/6": 1}}
    code, out, _ = call(capsys, tmp_path, ["bfun-rescale", "--factor", "2"], doc)
    assert json.loads(out) == {"roots": {"5/3": 1, "2": 1, "7/3": 1}}


def test_broken_model_is_schema_error(capsys, tmp_path):
    code, out, err = call(capsys, tmp_path, ["model-validate"], '{"schema": "hodge-vfilt/v1/model", "slope": [1], ')
    assert code == 1
    assert "invalid JSON" in err


def test_missing_field_names_pointer(capsys, tmp_path):
    doc = write_model(delta_module_model(Slope((1,)), 1))
    del doc["pieces"][0]["dim"]
    code, out, _ = call(capsys, tmp_path, ["model-validate"], doc)
    assert code == 1
    assert json.loads(out)["pointer"] == "/pieces/0/dim"


def test_unknown_schema_version(capsys, tmp_path):
    code, out, _ = call(capsys, tmp_path, ["classify"], dict(QUADRIC, schema="hodge-vfilt/v2/whci"))
    assert code == 1 and json.loads(out)["pointer"] == "/schema"


def test_floats_rejected(capsys, tmp_path):
    code, _, err = call(capsys, tmp_path, ["transform-specialize"], '{"lambda": 0.5, "k": 0, "slope": [1]}')
    assert code == 1 and "floating point" in err


def test_invalid_model_exit_two(capsys, tmp_path):
    doc = write_model(delta_module_model(Slope((1,)), 2))
    for act in doc["d_actions"]:
        if act["grade"] == "-1":
            act["matrix"] = [["0"]]
    code, out, _ = call(capsys, tmp_path, ["model-validate"], doc)
    assert code == 2
    assert any(v["rule"] == "commute_dt" for v in json.loads(out)["violations"])


def test_model_round_trip_validates(capsys, tmp_path):
    doc = write_model(delta_module_model(Slope((1, 2)), 2))
    code, out, _ = call(capsys, tmp_path, ["model-validate"], doc)
    assert code == 0 and json.loads(out)["ok"]


def test_delta_model_sigma_with_local(capsys, tmp_path):
    doc = {"schema": "hodge-vfilt/v1/delta-model", "slope": [1]}
    code, out, _ = call(capsys, tmp_path, ["model-sigma", "--depth", "2", "--local", "0:0"], doc)
    res = json.loads(out)
    assert code == 0
    assert res["total_dims"] == [1, 0] and res["strict"]
    assert res["local_cohomology"] == {"dim": 0, "ell": 0, "p": 0}


def test_koszul_at_window_too_small(capsys, tmp_path):
    doc = {"schema": "hodge-vfilt/v1/delta-model", "slope": [1], "depth": 2}
    code, out, _ = call(capsys, tmp_path, ["model-koszul", "--at", "1"], doc)
    res = json.loads(out)
    assert res["B"] == {"window_too_small": ["2"]}


def test_transform_cyclic(capsys, tmp_path):
    doc = {"spectrum": {"jumps": [{"index": "2"}]}, "a": [2], "ell": [1]}
    code, out, _ = call(capsys, tmp_path, ["transform-cyclic"], doc)
    comps = json.loads(out)["components"]
    assert [(c["beta"], c["jumps"][0]["index"]) for c in comps] == [([0], "1"), ([1], "2")]


def test_order_bound_and_homogeneity(capsys, tmp_path):
    code, out, _ = call(capsys, tmp_path, ["order-bound"], {"alpha": [0, 0, 0], "beta": [2], "weights": [1, 1, 1], "degrees": [2]})
    assert json.loads(out) == {"bound": "-1"}
    code, out, _ = call(capsys, tmp_path, ["check-homog"], {"polynomial": "x^2 + y^3", "variables": ["x", "y"], "weights": [1, 1]})
    assert code == 2 and json.loads(out)["ok"] is False


def test_batch_jobs_and_pointer(capsys, tmp_path):
    batch = {"schema": "hodge-vfilt/v1/batch", "jobs": [QUADRIC, {"n": 2, "r": 1, "weights": [3, 2]}]}
    serial = call(capsys, tmp_path, ["classify"], batch)
    parallel = call(capsys, tmp_path, ["classify", "--jobs", "2"], batch)
    assert serial[1] == parallel[1]
    res = json.loads(serial[1])["results"]
    assert serial[0] == 1
    assert res[0]["exit"] == 0 and res[1]["result"]["pointer"] == "/jobs/1/degrees"


def test_table_format(capsys, tmp_path):
    _, out, _ = call(capsys, tmp_path, ["classify", "--format", "table", "--quiet"], QUADRIC)
    assert "upper_bound\t3/2" in out.splitlines()


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    call(capsys, tmp_path, ["classify", "--quiet", "--output", str(target)], QUADRIC)
    assert json.loads(target.read_text())["verdict"] == "kRational(0)"


def test_selftest(capsys):
    assert run(["selftest", "--seed", "3", "--count", "10"]) == 0
    assert json.loads(capsys.readouterr().out)["ok"]


def test_byte_identical_across_processes(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps({"schema": "hodge-vfilt/v1/delta-model", "slope": [1, 2], "depth": 2}))
    cmd = [sys.executable, "-m", "hodge_vfilt.cli", "model-koszul", "--input", str(p)]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_bad_window_flag(capsys, tmp_path):
    code, out, _ = call(capsys, tmp_path, ["model-validate", "--window", "x"], {"schema": "hodge-vfilt/v1/delta-model", "slope": [1]})
    assert code == 1
