import json
import xml.etree.ElementTree as ET

import pytest

from cevian_app import main, run
from cli_requests import CountRequest
from utils import EXIT_CONSISTENCY_ERROR, EXIT_IO_ERROR, EXIT_SUCCESS, EXIT_VALIDATION_ERROR


def stdout_of(capsys, argv):
    assert main(argv) == EXIT_SUCCESS
    return capsys.readouterr().out


def test_count_opening_example(capsys):
    out = stdout_of(capsys, ["count", "--equal", "2", "--oracle"])
    assert "d=1 (ceva-equation)" in out
    assert "triangles=16" in out
    assert "oracle=16 (agrees)" in out


def test_count_moved_foot_json(capsys):
    body = json.loads(stdout_of(capsys, ["count", "--a", "1/2", "--b", "1/2", "--c", "1/3", "--oracle", "--json"]))
    assert body == {
        "a": "1", "b": "1", "c": "1", "d": "0",
        "d_provenance": "geometric",
        "triangle_count": "17",
        "oracle_count": "17",
        "oracle_agrees": True,
    }


def test_count_equal_three(capsys):
    out = stdout_of(capsys, ["count", "--equal", "3"])
    assert "d=0" in out
    assert "triangles=72" in out


def test_count_affine_check(capsys):
    body = json.loads(stdout_of(capsys, ["count", "--equal", "3", "--affine-check", "--json"]))
    assert body["affine_invariant"] is True


def test_count_from_config_file(tmp_path, capsys):
    path = tmp_path / "two_vertex.cfg"
    path.write_text("feet_a = 1/3, 2/3\nfeet_b = 1/4, 1/2\n", encoding="utf-8")
    out = stdout_of(capsys, ["count", "--config", str(path), "--oracle"])
    assert "triangles=27" in out
    assert "structural-zero" in out


@pytest.mark.parametrize("argv", [
    ["count"],
    ["count", "--equal", "2", "--a", "1/2"],
    ["count", "--a", "0"],
    ["count", "--a", "1/2,1/2"],
    ["count", "--equal", "1"],
    ["count", "--equal", "two"],
    ["fan", "--apex", "1", "--parallel", "1"],
    ["table", "--equal-range", "5", "3"],
    ["seq", "--name", "d-of-n", "--limit", "1"],
    ["scan", "--family", "3", "--p-max", "5"],
    ["render", "--equal", "2", "--highlight", "triple", "3,4,5"],
    ["render", "--equal", "2", "--highlight", "sideways"],
])
def test_validation_errors_exit_one(argv):
    response = run(argv)
    assert response.exit_code == EXIT_VALIDATION_ERROR
    assert response.stdout == ""
    assert response.error["exit_code"] == EXIT_VALIDATION_ERROR
    assert "message" in response.error


def test_error_body_carries_code_and_log():
    response = run(["count", "--a", "3/2"])
    assert response.error["error_code"] == "CONFIG_ERROR"
    assert response.error["command"] == "count"
    assert isinstance(response.error["error_log"], list)
    assert json.loads(response.stderr)["exit_code"] == EXIT_VALIDATION_ERROR


def test_io_errors_exit_three(tmp_path):
    assert run(["count", "--config", str(tmp_path / "absent.cfg")]).exit_code == EXIT_IO_ERROR
    out = tmp_path / "missing" / "figure.svg"
    assert run(["render", "--equal", "2", "--out", str(out)]).exit_code == EXIT_IO_ERROR


def test_undecodable_config_is_a_validation_error(tmp_path):
    path = tmp_path / "latin.cfg"
    path.write_bytes(b"feet_a = 1/2\xff\n")
    response = run(["count", "--config", str(path)])
    assert response.exit_code == EXIT_VALIDATION_ERROR
    assert response.error["error_code"] == "CONFIG_ERROR"
    assert "UTF-8" in response.error["message"]


def test_unexpected_exception_maps_to_internal_error(monkeypatch):
    def explode(self):
        raise RuntimeError("arrangement exploded")

    monkeypatch.setattr(CountRequest, "execute", explode)
    response = run(["count", "--equal", "2"])
    assert response.exit_code == EXIT_CONSISTENCY_ERROR
    assert response.error["error_code"] == "RuntimeError"
    assert "arrangement exploded" in response.error["message"]


def test_error_log_holds_only_the_current_command(tmp_path):
    first = run(["count", "--a", "3/2"])
    assert any("CONFIG_ERROR" in line for line in first.error["error_log"])
    second = run(["count", "--config", str(tmp_path / "absent.cfg")])
    assert any("IO_ERROR" in line for line in second.error["error_log"])
    assert not any("CONFIG_ERROR" in line for line in second.error["error_log"])


def test_table_json(capsys):
    rows = json.loads(stdout_of(capsys, ["table", "--equal-range", "2", "6", "--format", "json"]))
    by_n = {row["n"]: row for row in rows}
    assert by_n["4"]["d"] == "7" and by_n["4"]["count"] == "183" and by_n["4"]["match"] is True
    assert by_n["3"]["prime_power"] == "3^1" and by_n["3"]["closed_form"] == "72"
    assert by_n["6"]["d"] == "13" and by_n["6"]["count"] == "698"
    assert by_n["6"]["prime_power"] is None and by_n["6"]["match"] is None


def test_table_nine_matches_closed_form(capsys):
    rows = json.loads(stdout_of(capsys, ["table", "--equal-range", "9", "9", "--format", "json"]))
    assert rows[0]["d"] == "0" and rows[0]["match"] is True


def test_table_csv_and_text(capsys):
    csv_out = stdout_of(capsys, ["table", "--equal-range", "2", "3", "--format", "csv"])
    assert csv_out.splitlines() == [
        "n,d,count,orbits,prime_power,closed_form,match",
        "2,1,16,1,2^1,16,yes",
        "3,0,72,0,3^1,72,yes",
    ]
    text = stdout_of(capsys, ["table", "--equal-range", "6", "6"])
    assert text.splitlines()[1].split()[:3] == ["6", "13", "698"]


def test_scan(capsys):
    out = stdout_of(capsys, ["scan", "--family", "1", "--p-max", "2"])
    assert "p=2 n=6 companion=3 has_solution=true witness=(2, 3, 4)" in out

    body = json.loads(stdout_of(capsys, ["scan", "--family", "2", "--p-max", "5", "--json"]))
    assert [record["n"] for record in body["records"]] == ["20", "63", "275"]
    assert all(record["has_solution"] for record in body["records"])


def test_render_all_triangles(tmp_path, capsys):
    out = tmp_path / "sixteen.svg"
    stdout_of(capsys, ["render", "--equal", "2", "--highlight", "all-triangles", "--out", str(out)])
    root = ET.parse(out).getroot()
    cells = [g for g in root.iter() if g.tag.endswith("g") and g.get("class") == "triangle"]
    assert len(cells) == 16


def test_render_to_stdout(capsys):
    assert "<circle" not in stdout_of(capsys, ["render", "--equal", "3"])
    assert stdout_of(capsys, ["render", "--a", "1/2", "--b", "1/2", "--c", "1/2"]).count("<circle") == 1
    assert "highlight" in stdout_of(capsys, ["render", "--equal", "2", "--highlight", "triple", "0,1,2"])


def test_render_is_deterministic(capsys):
    argv = ["render", "--equal", "3", "--highlight", "all-triangles"]
    assert stdout_of(capsys, argv) == stdout_of(capsys, argv)


def test_seq(capsys):
    assert stdout_of(capsys, ["seq", "--name", "d-of-n", "--limit", "6"]) == "1\n0\n7\n0\n13\n"
    assert stdout_of(capsys, ["seq", "--name", "d-of-n", "--limit", "2"]) == "1\n"
    odd = stdout_of(capsys, ["seq", "--name", "odd-positive", "--limit", "15"]).split()
    assert "15" in odd
    assert not {"3", "5", "7", "9", "11", "13"} & set(odd)
    body = json.loads(stdout_of(capsys, ["seq", "--name", "d-of-n", "--limit", "4", "--format", "json"]))
    assert body["values"] == ["1", "0", "7"]


def test_fan(capsys):
    assert stdout_of(capsys, ["fan", "--apex", "4", "--parallel", "3"]) == "18\n35-4-1-12\n"
    assert stdout_of(capsys, ["fan", "--apex", "2", "--parallel", "1"]).splitlines()[0] == "1"


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0
    assert "count" in capsys.readouterr().out
