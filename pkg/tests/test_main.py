"""
BSD 3-Clause License

Copyright (c) 2026, the ose-solver authors

Redistribution and use in source and binary forms, with or without
modification, are permitted provided that the following conditions are met:

1. Redistributions of source code must retain the above copyright notice, this
   list of conditions and the following disclaimer.

2. Redistributions in binary form must reproduce the above copyright notice,
   this list of conditions and the following disclaimer in the documentation
   and/or other materials provided with the distribution.

3. Neither the name of the copyright holder nor the names of its
   contributors may be used to endorse or promote products derived from
   this software without specific prior written permission.

THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
"""

"""Tests for the command-line front end (run in-process)."""
import json

import pandas as pd
import pytest

import main

STUDY_FLAGS = ["--A", "0.3", "--gamma1", "0.4", "--gamma2", "0.5", "--m-i", "0.1", "--m-e", "0.1", "--w0", "0.05"]


def test_solve_high_theta_opens(capsys):
    assert main.main(["solve", "--theta", "1.25", *STUDY_FLAGS]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["outcome"]["strategy"] == "open"
    assert record["outcome"]["role"] == "component_manufacturer"
    assert record["leader"]["profit"] == pytest.approx(0.090191, abs=1e-6)


def test_solve_low_theta_stays_closed(capsys):
    assert main.main(["solve", "--theta", "0.8", *STUDY_FLAGS]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["outcome"]["strategy"] == "closed"
    assert record["outcome"]["reason"] == "open_dominated"


def test_solve_uses_study_defaults(capsys):
    argv = ["solve", "--theta", "1.25", "--A", "0.3", "--gamma1", "0.4", "--m-i", "0.1", "--m-e", "0.1"]
    assert main.main(argv) == 0
    scenario = json.loads(capsys.readouterr().out)["scenario"]
    assert scenario["gamma2"] == 0.5
    assert scenario["w0"] == 0.05
    assert scenario["K"] == 0.0


def test_solve_scenario_file_round_trip(tmp_path, capsys, low_raw):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(low_raw))
    out = tmp_path / "solve.json"
    assert main.main(["--quiet", "solve", "--scenario", str(path), "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    echoed = json.loads(out.read_text())["scenario"]
    assert echoed == low_raw


def test_solve_validation_error(capsys):
    argv = ["solve", "--theta", "0.8", *STUDY_FLAGS[:2], "--gamma1", "0.6", *STUDY_FLAGS[4:]]
    assert main.main(argv) == 2
    assert "gamma1 + gamma2 must be <= 1" in capsys.readouterr().err


def test_solve_input_errors(tmp_path, capsys, low_raw):
    assert main.main(["solve", "--scenario", str(tmp_path / "missing.json")]) == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert main.main(["solve", "--scenario", str(broken)]) == 2
    good = tmp_path / "good.json"
    good.write_text(json.dumps(low_raw))
    assert main.main(["solve", "--scenario", str(good), "--theta", "1.25"]) == 2
    assert "cannot be combined" in capsys.readouterr().err


def test_unknown_flag_exits_with_usage_error():
    with pytest.raises(SystemExit) as info:
        main.main(["solve", "--bogus"])
    assert info.value.code == 2


def test_zones_csv(tmp_path, capsys):
    out = tmp_path / "zones.csv"
    argv = ["zones", "--theta", "1.25", "--m-i", "0.1", "--m-e", "0.1",
            "--x-step", "0.1", "--y-step", "0.1", "--out", str(out)]
    assert main.main(argv) == 0
    frame = pd.read_csv(out)
    assert list(frame.columns)[:3] == ["A", "gamma1", "A_hat"]
    assert len(frame) == 10 * 5
    assert "open=" in capsys.readouterr().err


def test_zones_single_cell_json(capsys):
    argv = ["--quiet", "zones", "--theta", "1.25", "--m-i", "0.1", "--m-e", "0.1",
            "--x-min", "0.2", "--x-max", "0.3", "--x-step", "0.1",
            "--y-min", "0.3", "--y-max", "0.4", "--y-step", "0.1", "--format", "json"]
    assert main.main(argv) == 0
    captured = capsys.readouterr()
    record = json.loads(captured.out)
    assert len(record["rows"]) == 1
    assert captured.err == ""


def test_zones_input_errors(tmp_path):
    base = ["zones", "--theta", "1.25", "--m-i", "0.1", "--m-e", "0.1"]
    assert main.main([*base, "--x-step", "0"]) == 2
    assert main.main(["zones", "--theta", "1.25", "--m-e", "0.1"]) == 2
    unwritable = tmp_path / "no-such-dir" / "zones.csv"
    assert main.main([*base, "--x-step", "0.5", "--y-step", "0.25", "--out", str(unwritable)]) == 2


def test_verify_grid_too_large(capsys):
    argv = ["verify", "--theta", "0.8", *STUDY_FLAGS,
            "--grid-pe", "1e-6", "--grid-pi", "1e-6", "--grid-w", "1e-6"]
    assert main.main(argv) == 2
    assert "cap" in capsys.readouterr().err


def test_verify_default_scenario_passes(capsys):
    assert main.main(["verify", "--theta", "0.8", *STUDY_FLAGS, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] is True


def test_verify_corrupted_fixture_fails(capsys):
    argv = ["verify", "--theta", "0.8", *STUDY_FLAGS,
            "--grid-pe", "0.005", "--grid-pi", "0.02", "--grid-w", "0.01", "--corrupt-fixture"]
    assert main.main(argv) == 1
    captured = capsys.readouterr()
    assert "FAIL" in captured.out
    assert "demand.Q_i" in captured.err
