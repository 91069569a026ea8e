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

"""Tests for JSON/CSV encoding of solver results."""
import io
import json

import pandas as pd
import pytest

import encoding
import strategy
import zone_schema as zs
from scenario import baselines, validate_params


def test_round_sig():
    assert encoding.round_sig(0.1008620689655) == 0.100862069
    assert encoding.round_sig(None) is None
    assert encoding.round_sig(float("inf")) is None
    assert encoding.format_number(float("nan")) == ""
    assert encoding.format_number(0.25) == "0.25"


def test_solve_record_open(high_params):
    outcome = strategy.stage1_decide(high_params)
    record = encoding.solve_record(high_params, baselines(high_params), outcome)
    assert list(record) == ["scenario", "baselines", "outcome", "leader", "follower", "demand", "diagnostics"]
    assert record["outcome"]["strategy"] == "open"
    assert record["outcome"]["role"] == "component_manufacturer"
    leader = record["leader"]
    assert list(leader)[:6] == list(zs.LEADER_KEYS)
    assert leader["case"] == "i.4"
    assert leader["region"] == "R6"
    assert leader["p_i_interval"] is None
    assert record["follower"]["source"] == "switch"
    assert record["demand"]["q_i"] == pytest.approx(0.0, abs=1e-12)
    assert record["baselines"]["A_hat_entry_min"] == pytest.approx(0.239013, abs=1e-6)


def test_solve_record_below_entry(low_raw):
    params = validate_params(dict(low_raw, gamma1=0.1))
    outcome = strategy.stage1_decide(params)
    record = encoding.solve_record(params, baselines(params), outcome)
    assert record["outcome"]["reason"] == "below_entry_threshold"
    assert record["outcome"]["profit_open"] is None
    assert record["leader"] is None and record["follower"] is None and record["demand"] is None


def test_scenario_round_trip(tmp_path, low_params):
    outcome = strategy.stage1_decide(low_params)
    text = encoding.dumps(encoding.solve_record(low_params, baselines(low_params), outcome))
    echoed = json.loads(text)["scenario"]
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(echoed))
    assert validate_params(encoding.read_scenario(path)) == low_params


def test_read_scenario_rejects_bad_files(tmp_path):
    listed = tmp_path / "list.json"
    listed.write_text("[1, 2, 3]")
    with pytest.raises(ValueError, match="must be an object"):
        encoding.read_scenario(listed)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(json.JSONDecodeError):
        encoding.read_scenario(bad)
    with pytest.raises(FileNotFoundError):
        encoding.read_scenario(tmp_path / "missing.json")


def test_read_scenario_leaves_validation_to_caller(tmp_path, low_raw):
    partial = {key: value for key, value in low_raw.items() if key not in ("A", "gamma1")}
    path = tmp_path / "partial.json"
    path.write_text(json.dumps(partial))
    assert encoding.read_scenario(path) == partial


def _zones():
    fixed = {"theta": 1.25, "gamma2": 0.5, "m_i": 0.1, "m_e": 0.1, "w0": 0.05}
    return strategy.pareto_sweep(fixed, (0.05, 0.3), (0.05, 0.4))


def test_zone_csv_layout():
    zone_map = _zones()
    buffer = io.StringIO()
    encoding.write_zone_csv(zone_map, buffer)
    lines = buffer.getvalue().splitlines()
    assert lines[0] == "A,gamma1,A_hat,strategy,role,region,case,p_i,w,p_e,profit_open,profit_closed"
    assert len(lines) == 1 + 4
    frame = pd.read_csv(io.StringIO(buffer.getvalue()), keep_default_na=False)
    closed = frame[frame["strategy"] == "closed"]
    opened = frame[frame["strategy"] == "open"]
    assert len(closed) > 0 and len(opened) > 0
    for column in ("region", "case", "p_i", "w", "p_e"):
        assert (closed[column] == "").all()
        assert (opened[column] != "").all()


def test_zone_record():
    zone_map = _zones()
    record = encoding.zone_record(zone_map)
    assert record["columns"] == zs.zone_header()
    assert record["counts"]["open"] + record["counts"]["closed"] == len(record["rows"])
    assert record["fixed"]["theta"] == 1.25
    json.loads(encoding.dumps(record))
