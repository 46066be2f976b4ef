import json
import subprocess
import sys

import pytest

from superchevalley.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(scope="module")
def pair_files(tmp_path_factory):
    d = tmp_path_factory.mktemp("pairs")
    files = {}
    for name, family, params in [
        ("c2", "c-special", ["q=1"]),
        ("gl11", "group-gl", ["p=1,q=1"]),
        ("bad", "gl-block", ["p=2", "q=1", "r=1", "s=2"]),
    ]:
        path = d / f"{name}.json"
        assert main(["build", "--family", family, "--params", *params, "--out", str(path)]) == 0
        files[name] = str(path)
    return files


def test_build_stdout_is_pair_json(capsys):
    code, out, _ = run(capsys, "build", "--family", "c-special", "--params", "q=1")
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "c-special"


def test_build_is_deterministic(capsys):
    runs = [run(capsys, "build", "--family", "group-osp", "--params", "m=1,n=2") for _ in range(2)]
    assert runs[0][0] == 0 and runs[0][1]
    assert runs[0][1] == runs[1][1]


def test_build_warns_on_non_even_type(capsys):
    code, out, err = run(capsys, "build", "--family", "gl-block", "--params", "p=2,q=1,r=1,s=2")
    assert code == 0 and "not even type" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "--family", "c-special", "--params", "q"],
        ["build", "--family", "c-special", "--params", "q=x"],
        ["build", "--family", "gl-block", "--params", "p=1"],
        ["coeffs", "--b", "3", "2"],
        ["coeffs", "--bessel", "-1"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_roots(capsys, pair_files):
    code, out, _ = run(capsys, "roots", pair_files["c2"])
    data = json.loads(out)
    assert code == 0 and data["weyl_order"] == 1
    assert len(data["roots"]) == 2


def test_non_even_type_exit_3(capsys, pair_files):
    for verb in (["roots"], ["verify"], ["invariants", "--degree", "1"]):
        assert run(capsys, verb[0], pair_files["bad"], *verb[1:])[0] == 3


def test_unreadable_pair_exit_3(capsys, tmp_path):
    bad = tmp_path / "x.json"
    bad.write_text("{not json")
    assert run(capsys, "roots", str(bad))[0] == 3
    assert run(capsys, "roots", str(tmp_path / "missing.json"))[0] == 3


def test_invariants(capsys, pair_files):
    code, out, _ = run(capsys, "invariants", pair_files["c2"], "--degree", "2")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 1 and data["dim_image"] == 1


def test_verify(capsys, pair_files):
    code, out, _ = run(capsys, "verify", pair_files["gl11"], "--max-degree", "3")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert [row["dim_image"] for row in data["degrees"]] == [1, 1, 2, 3]


def test_coeffs(capsys):
    assert json.loads(run(capsys, "coeffs", "--b", "0", "1")[1]) == "1"
    assert json.loads(run(capsys, "coeffs", "--a", "2", "1")[1]) == "2"
    assert json.loads(run(capsys, "coeffs", "--bessel", "2")[1]) == ["1", "3", "3"]


def test_radial(capsys, pair_files):
    code, out, _ = run(capsys, "radial", pair_files["c2"], "--root", "1", "--k", "1")
    data = json.loads(out)
    assert code == 0 and data["ok"] and len(data["checks"]) == 3
    assert data["operator"]["terms"] == [{"lambda_pow": -1, "d_pow": 1, "coeff": "-1"}]
    code, out, _ = run(capsys, "--seed-points", "5", "radial", pair_files["c2"], "--root", "1")
    assert len(json.loads(out)["checks"]) == 5


def test_radial_errors(capsys, pair_files):
    assert run(capsys, "radial", pair_files["c2"], "--root", "1", "--k", "2")[0] == 2
    assert run(capsys, "radial", pair_files["c2"], "--root", "2")[0] == 2
    assert run(capsys, "radial", pair_files["c2"], "--root", "a")[0] == 2
    assert run(capsys, "--seed-points", "0", "coeffs", "--b", "0", "1")[0] == 2


def test_console_entry_point_is_byte_identical(pair_files):
    cmd = [sys.executable, "-m", "superchevalley.cli", "verify", pair_files["c2"], "--max-degree", "2"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["ok"]
