from __future__ import annotations

import json
import math

import numpy as np

from darkgauge import make_scenario
from darkgauge.cli import execute

SINGLE_POINT = (1.0, 0.75, 0.5)


def _rows(path):
    lines = path.read_text().splitlines()
    return [line.split(",") for line in lines]


def test_verify_report_and_json(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert execute(["verify", "rb-so-coupling", "--json", str(out)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert all(line.startswith("[PASS]") for line in lines[:-1])
    document = json.loads(out.read_text())
    assert set(document) == {"scenario", "passed", "checks", "environment"}
    assert document["scenario"] == "rb-so-coupling"
    assert document["passed"] is True
    n = len(document["checks"])
    assert lines[-1] == f"PASSED rb-so-coupling: {n}/{n} checks"
    for check in document["checks"]:
        assert set(check) == {"name", "claim", "residual", "tolerance", "passed"}
        # floats are serialized as decimal strings, not JSON numbers
        assert float(check["residual"]) <= float(check["tolerance"])
    assert "hbar" in document["environment"]


def test_usage_errors(capsys, tmp_path):
    assert execute([]) == 2
    assert execute(["verify", "no-such-scenario"]) == 2
    assert execute(["verify"]) == 2
    assert "no scenario" in capsys.readouterr().err
    assert execute(["sample", "rb-so-coupling", "--grid", "x=0:1:2",
                    "--field", "A", "--out", str(tmp_path / "x.csv")]) == 2
    assert execute(["sample", "rb-so-coupling", "--grid", "x=0:1:0,y=0:1:1,z=0:1:1",
                    "--field", "A", "--out", str(tmp_path / "x.csv")]) == 2
    assert execute(["sample", "rb-so-coupling", "--grid", "single-point",
                    "--field", "A", "--out", str(tmp_path / "x.csv"),
                    "--gauge", "bogus"]) == 2


def test_sample_single_point(tmp_path):
    out = tmp_path / "a.csv"
    assert execute(["sample", "rb-so-coupling", "--grid", "single-point",
                    "--field", "A", "--out", str(out)]) == 0
    header, row = _rows(out)
    assert header[:3] == ["x", "y", "z"]
    assert header[3:9] == ["re_A_11_x", "im_A_11_x", "re_A_11_y",
                           "im_A_11_y", "re_A_11_z", "im_A_11_z"]
    assert header[-1] == "error"
    assert len(header) == 3 + 2 * 3 * 9 + 1
    assert row[:3] == ["1", "0.75", "0.5"]
    assert row[-1] == ""

    a = make_scenario("rb-so-coupling").connection_sampler(None)(SINGLE_POINT)
    expected = []
    for i in range(3):
        for j in range(3):
            for ax in range(3):
                expected += [a[ax, i, j].real, a[ax, i, j].imag]
    # 17 significant digits round-trip doubles exactly
    assert [float(v) for v in row[3:-1]] == expected


def test_sample_constant_field(tmp_path):
    out = tmp_path / "grid.csv"
    assert execute(["sample", "rb-so-coupling", "--grid", "x=0.5:1.5:2,y=1:1:1,z=0:0:1",
                    "--field", "A", "--out", str(out)]) == 0
    _, first, second = _rows(out)
    assert first[:3] != second[:3]
    # step lengths differ between the points, so agreement is numeric only
    a = np.array([float(v) for v in first[3:-1]])
    b = np.array([float(v) for v in second[3:-1]])
    assert np.max(np.abs(a - b)) < 1e-9


def test_sample_guard_rows(tmp_path):
    out = tmp_path / "mixed.csv"
    assert execute(["sample", "rb-monopole-jx", "--grid", "x=0:1:2,y=0:0:1,z=1:1:1",
                    "--field", "A", "--out", str(out)]) == 0
    _, on_axis, clear = _rows(out)
    assert on_axis[:3] == ["0", "0", "1"]
    assert on_axis[-1] == "near-singularity"
    assert all(cell == "" for cell in on_axis[3:-1])
    assert clear[-1] == ""
    assert all(cell != "" for cell in clear[3:-1])

    allerr = tmp_path / "axis.csv"
    code = execute(["sample", "rb-monopole-jx", "--grid", "x=0:0:1,y=0:0:1,z=0.5:1.5:2",
                    "--field", "A", "--out", str(allerr)])
    assert code == 3
    rows = _rows(allerr)
    assert len(rows) == 3
    assert all(row[-1] == "near-singularity" for row in rows[1:])


def test_sample_deterministic(tmp_path):
    argv = ["sample", "rb-monopole-jx", "--grid", "r=1,theta=3,phi=4",
            "--field", "B", "--out"]
    first, second = tmp_path / "b1.csv", tmp_path / "b2.csv"
    assert execute([*argv, str(first)]) == 0
    assert execute([*argv, str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert len(_rows(first)) == 1 + 3 * 4


def test_sample_scalar_potential(tmp_path):
    out = tmp_path / "phi.csv"
    assert execute(["sample", "rb-so-coupling", "--grid", "single-point",
                    "--field", "Phi", "--out", str(out)]) == 0
    header, row = _rows(out)
    assert header[3:5] == ["re_Phi_11", "im_Phi_11"]
    assert len(header) == 3 + 2 * 9 + 1
    cells = [float(v) for v in row[3:-1]]
    phi = np.array(cells[0::2]).reshape(3, 3) + 1j * np.array(cells[1::2]).reshape(3, 3)
    assert np.max(np.abs(phi - phi.conj().T)) < 1e-10
    assert np.linalg.eigvalsh(phi).min() > -1e-10


def test_charge_json(tmp_path):
    out = tmp_path / "charge.json"
    assert execute(["charge", "rb-monopole-jx", "--json", str(out)]) == 0
    document = json.loads(out.read_text())
    assert set(document) == {
        "scenario", "radius", "gauge", "transformed", "charge", "convergence",
        "pattern_charge", "pattern_residual", "coefficients",
        "surface_charge", "surface_source", "string",
    }
    assert document["transformed"] is False
    assert float(document["radius"]) == 1.0
    assert abs(float(document["pattern_charge"]) - 1.0) < 1e-3
    assert float(document["convergence"]) < 5e-2
    assert len(document["charge"]) == 3
    assert all(len(pair) == 2 for row in document["charge"] for pair in row)
    assert set(document["coefficients"]) == {"c0", "c"}
    assert len(document["coefficients"]["c"]) == 8
    assert document["surface_source"] == "full-field"
    string = document["string"]
    assert string["undetectable"] is True
    assert float(string["holonomy_defect"]) < 1e-9


def test_charge_transformed_needs_unitary(capsys):
    assert execute(["charge", "rb-monopole-jx", "--transformed"]) == 2
    assert "no gauge transform" in capsys.readouterr().err


def test_decompose(tmp_path, capsys):
    diag = tmp_path / "diag.json"
    diag.write_text(json.dumps([[1, 0, 0], [0, 0, 0], [0, 0, -1]]))
    assert execute(["decompose", "--matrix", str(diag)]) == 0
    lines = capsys.readouterr().out.splitlines()
    values = {}
    for line in lines:
        name, _, text = line.partition(" = ")
        values[name] = float(text)
    assert sorted(values) == [f"c{i}" for i in range(9)]
    assert abs(values["c0"]) < 1e-12
    assert abs(values["c3"] - 1.0) < 1e-12
    assert abs(values["c8"] - math.sqrt(3.0)) < 1e-12

    pairs = tmp_path / "pairs.json"
    pairs.write_text(json.dumps({"matrix": [
        [[0, 0], [0, -0.5], [0, 0]],
        [[0, 0.5], [0, 0], [0, 0]],
        [[0, 0], [0, 0], [0, 0]],
    ]}))
    assert execute(["decompose", "--matrix", str(pairs)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[2] == "c2 = 1"


def test_decompose_rejects_bad_input(tmp_path, capsys):
    skew = tmp_path / "skew.json"
    skew.write_text(json.dumps([[0, 1, 0], [0, 0, 0], [0, 0, 0]]))
    assert execute(["decompose", "--matrix", str(skew)]) == 2
    assert "Hermiticity residual" in capsys.readouterr().err
    small = tmp_path / "small.json"
    small.write_text(json.dumps([[1, 0], [0, 1]]))
    assert execute(["decompose", "--matrix", str(small)]) == 2
    assert execute(["decompose", "--matrix", str(tmp_path / "absent.json")]) == 2


def test_config_file(tmp_path, capsys):
    base = tmp_path / "base.csv"
    assert execute(["sample", "rb-so-coupling", "--grid", "single-point",
                    "--field", "A", "--out", str(base)]) == 0

    config = tmp_path / "config.json"
    config.write_text(json.dumps({"scenario": "rb-so-coupling", "hbar": 2.0}))
    scaled = tmp_path / "scaled.csv"
    assert execute(["sample", "--config", str(config), "--grid", "single-point",
                    "--field", "A", "--out", str(scaled)]) == 0
    reference = [float(v) for v in _rows(base)[1][3:-1]]
    doubled = [float(v) for v in _rows(scaled)[1][3:-1]]
    # the connection is linear in hbar
    assert doubled == [2.0 * v for v in reference]

    bad_key = tmp_path / "bad_key.json"
    bad_key.write_text(json.dumps({"scenario": "rb-so-coupling", "coupling": 3}))
    assert execute(["sample", "--config", str(bad_key), "--grid", "single-point",
                    "--field", "A", "--out", str(tmp_path / "x.csv")]) == 2
    assert "unknown config key" in capsys.readouterr().err

    not_object = tmp_path / "list.json"
    not_object.write_text(json.dumps([1, 2]))
    assert execute(["sample", "--config", str(not_object), "--grid", "single-point",
                    "--field", "A", "--out", str(tmp_path / "x.csv")]) == 2
    assert execute(["sample", "--config", str(tmp_path / "absent.json"),
                    "--grid", "single-point", "--field", "A",
                    "--out", str(tmp_path / "x.csv")]) == 2
