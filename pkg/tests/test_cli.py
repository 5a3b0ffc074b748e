import json

import pytest

from ncsolenoid.cli import main


@pytest.fixture
def n5_file(tmp_path):
    path = tmp_path / "n5.json"
    path.write_text('{"N": 5, "alpha0": "1/62", "carrier": {"value": "-1/62"}}')
    return str(path)


@pytest.fixture
def half_file(tmp_path):
    path = tmp_path / "half.json"
    path.write_text('{"N": 3, "alpha0": "1/2", "carrier": {"value": "-1/2"}}')
    return str(path)


@pytest.fixture
def thirds2_file(tmp_path):
    path = tmp_path / "t2.json"
    path.write_text('{"N": 2, "alpha0": "1/3", "carrier": {"value": "-1/3"}}')
    return str(path)


@pytest.fixture
def thirds4_file(tmp_path):
    path = tmp_path / "t4.json"
    path.write_text('{"N": 4, "alpha0": "1/3", "carrier": {"value": "-1/3"}}')
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_info(capsys, n5_file):
    code, out = run(capsys, ["info", n5_file])
    assert code == 0
    assert out["type"] == "RationalPeriodic"
    assert out["values"][:3] == ["1/62", "25/62", "5/62"]


def test_simple_and_symmetrizer(capsys, n5_file):
    code, out = run(capsys, ["simple", n5_file])
    assert (code, out) == (0, {"simple": False})
    code, out = run(capsys, ["symmetrizer", n5_file])
    assert (code, out) == (0, {"variant": "ScaledLattice", "b": 62})


def test_k0_trace(capsys, half_file):
    code, out = run(capsys, ["k0", "trace", "--z", "1", "--x", "1/3", half_file])
    assert (code, out) == (0, {"trace": "3/2"})


def test_k0_member(capsys, half_file):
    code, out = run(capsys, ["k0", "member", "--first", "1/3", "--second", "1/3", half_file])
    assert (code, out) == (0, {"member": True})
    code, out = run(capsys, ["k0", "member", "--first", "1/2", "--second", "1/3", half_file])
    assert (code, out) == (0, {"member": False})


def test_k0_add(capsys, half_file):
    code, out = run(
        capsys,
        ["k0", "add", "--az", "0", "--ax", "1/3", "--bz", "0", "--bx", "2/3", half_file],
    )
    assert code == 0
    assert out == {"z": "1", "x": {"num": "1", "exp": 0}}


def test_cohomologous(capsys, half_file):
    code, out = run(capsys, ["cohomologous", half_file, half_file])
    assert code == 0
    assert out["cohomologous"] is True
    assert out["witness"]["psi"]["0"] == "0"


def test_iso_yes(capsys, thirds2_file, thirds4_file):
    code, out = run(capsys, ["iso", thirds2_file, thirds4_file, "--bound", "8"])
    assert code == 0
    assert out["verdict"] == "Yes"
    assert out["witness"]["R"] == 2


def test_iso_unknown_exit_code(capsys, tmp_path):
    a = tmp_path / "a.json"
    a.write_text('{"N": 3, "alpha0": "1/2", "carrier": {"value": "0"}}')
    b = tmp_path / "b.json"
    b.write_text('{"N": 3, "alpha0": "1/2", "carrier": {"value": "2"}}')
    code, out = run(capsys, ["iso", str(a), str(b), "--bound", "4"])
    assert code == 3
    assert out["verdict"] == "Unknown"


def test_bundle(capsys, thirds2_file):
    code, out = run(capsys, ["bundle", thirds2_file])
    assert code == 0
    assert (out["q"], out["k"], out["lambda"]) == (3, 2, "1/3")


def test_missing_file_is_a_domain_error(capsys, tmp_path):
    code, _ = run(capsys, ["info", str(tmp_path / "nope.json")])
    assert code == 2


def test_float_literals_rejected(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"N": 3, "alpha0": 0.5, "carrier": {"value": "0"}}')
    code, _ = run(capsys, ["info", str(path)])
    assert code == 2


def test_selftest_small(capsys):
    code = main(
        ["selftest", "--trials", "40", "--depth", "2", "--window-p", "20", "--window-k", "2"]
    )
    captured = capsys.readouterr()
    assert code == 0
    out = json.loads(captured.out)
    assert out["passed"] is True
    assert "selftest" in captured.err
