#!/usr/bin/env python3
"""
Tests for the equimot command line front end
"""

import io
import json

import pytest

from abelian_groups import make_group
from equimot import main
from groth_ring import element_to_json, lefschetz, sym_base
from motivic_zeta import CurveSpec, sym_curve_class
from power_series import witness_from_json, witness_to_json


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _write_json(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def test_zeta_a1_json(capsys):
    code, out, _ = _run(capsys, "zeta", "a1", "--group", "2", "--char", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["group"] == {"divisors": [2]}
    w = witness_from_json(payload["witness"], make_group([2]))
    assert str(w.num) == "1 + A(1)*t"
    assert str(w.den) == "1 - L*A(1)*t^2"
    assert witness_to_json(w) == payload["witness"]


def test_zeta_a1_pretty(capsys):
    code, out, _ = _run(capsys, "zeta", "a1", "--group", "2", "--chi", "1")
    assert code == 0
    assert "=" * 50 in out
    assert "denominator: 1 - L*A(1)*t^2" in out


def test_zeta_curve_expansion(capsys):
    code, out, _ = _run(capsys, "zeta", "curve", "--genus", "0", "--group", "1", "--expand", "4")
    assert code == 0
    assert "t^0: 1" in out
    assert "t^1: S1" in out
    assert "t^2: S1 + E[1,1]" in out
    assert "t^3: S1 + E[1,1] + L*E[1,1]" in out


def test_zeta_curve_json_series(capsys):
    code, out, _ = _run(capsys, "zeta", "curve", "--genus", "1", "--group", "2", "--expand", "6", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["series"]["order"] == 6
    assert len(payload["series"]["coeffs"]) == 7


def test_zeta_ak_with_several_characters(capsys):
    code, out, _ = _run(capsys, "zeta", "ak", "--group", "3", "--char", "1,2", "--expand", "2")
    assert code == 0
    assert "A^2" in out


def test_character_index_out_of_range(capsys):
    code, _, err = _run(capsys, "zeta", "a1", "--group", "2", "--char", "7")
    assert code == 2
    assert "character index out of range" in err


@pytest.mark.parametrize("argv", [
    ["zeta", "a1", "--group", "0"],
    ["zeta", "a1", "--group", "2"],
    ["zeta", "a1", "--group", "2", "--char", "1", "--chi", "1"],
    ["zeta", "curve", "--genus", "-1"],
    ["zeta", "torus"],
    ["verify", "p1", "--q", "5"],
    ["verify", "a1", "--q", "7", "--r", "4"],
])
def test_invalid_input_exits_with_usage_code(capsys, argv):
    code, _, _ = _run(capsys, *argv)
    assert code == 2


def test_verify_cross(capsys):
    code, out, _ = _run(capsys, "verify", "cross", "--group", "4", "--order", "12")
    assert code == 0
    assert "❌ Failed: 0" in out


def test_verify_p1(capsys):
    code, out, _ = _run(capsys, "verify", "p1", "--q", "5", "--r", "2", "--nmax", "8", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["failed"] == 0
    assert payload["checks"][0]["suite"] == "p1"


def test_verify_weil(capsys):
    code, out, _ = _run(capsys, "verify", "weil", "--p", "5", "--a", "1", "--b", "1", "--nmax", "8")
    assert code == 0
    assert "✅ Passed" in out


def test_verify_beyond_the_bound_exits_with_resource_code(capsys):
    code, _, err = _run(capsys, "verify", "p1", "--q", "13", "--r", "4", "--nmax", "7")
    assert code == 3
    assert "limit" in err


def test_verify_singular_curve(capsys):
    code, _, _ = _run(capsys, "verify", "weil", "--p", "5", "--a", "0", "--b", "0")
    assert code == 2


def test_realize_p1_scenario(capsys, tmp_path):
    group = make_group([2])
    elem = sym_curve_class(3, CurveSpec(0, group))
    path = _write_json(tmp_path / "sym3.json", element_to_json(elem))
    code, out, _ = _run(capsys, "realize", "--q", "5", "--r", "2", "--g", "1", "--element", path)
    assert code == 0
    assert out.strip() == "12"


def test_realize_with_table_file(capsys, tmp_path):
    group = make_group([1])
    element = _write_json(tmp_path / "l2.json", element_to_json(lefschetz(group) ** 2))
    table = _write_json(tmp_path / "table.json", [{"gen": {"kind": "aff", "chi": [0]}, "value": 5}])
    code, out, _ = _run(capsys, "realize", "--table", table, "--element", element, "--json")
    assert code == 0
    assert json.loads(out) == {"value": 25}


def test_realize_uncovered_generator(capsys, tmp_path):
    group = make_group([1])
    element = _write_json(tmp_path / "s9.json", element_to_json(sym_base(9) * lefschetz(group)))
    table = _write_json(tmp_path / "table.json", [{"gen": {"kind": "aff", "chi": [0]}, "value": 5}])
    code, _, err = _run(capsys, "realize", "--table", table, "--element", element)
    assert code == 2
    assert "S9" in err


def test_realize_reads_stdin(capsys, monkeypatch, tmp_path):
    group = make_group([1])
    table = _write_json(tmp_path / "table.json", [{"gen": {"kind": "aff", "chi": [0]}, "value": 7}])
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(element_to_json(lefschetz(group) + 1))))
    code, out, _ = _run(capsys, "realize", "--table", table)
    assert code == 0
    assert out.strip() == "8"


def test_realize_needs_a_table(capsys):
    code, _, err = _run(capsys, "realize")
    assert code == 2
    assert "--table" in err


@pytest.mark.parametrize("element", [
    {"not": "a list"},
    [{"coef": "1"}],
    [{"coef": "x", "mon": []}],
    [{"coef": "1", "mon": [{"gen": {"kind": "symc"}, "exp": 1}]}],
    [{"coef": "1", "mon": [{"gen": {"kind": "e0", "i": 99, "j": 1}, "exp": 1}]}],
    ["L"],
])
def test_realize_malformed_element(capsys, monkeypatch, tmp_path, element):
    table = _write_json(tmp_path / "table.json", [{"gen": {"kind": "aff", "chi": [0]}, "value": 7}])
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(element)))
    code, _, err = _run(capsys, "realize", "--table", table)
    assert code == 2
    assert err.startswith("error: ")
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize("table", [
    {"L": 5},
    [{"gen": {"kind": "aff", "chi": [0]}}],
    [{"gen": {"kind": "aff", "chi": [0]}, "value": "five"}],
    [{"gen": "aff", "value": 5}],
])
def test_realize_malformed_table(capsys, tmp_path, table):
    group = make_group([1])
    element = _write_json(tmp_path / "l.json", element_to_json(lefschetz(group)))
    path = _write_json(tmp_path / "table.json", table)
    code, _, err = _run(capsys, "realize", "--table", path, "--element", element)
    assert code == 2
    assert "malformed" in err or "list" in err


@pytest.mark.parametrize("argv", [
    ["verify", "a1", "--q", "5", "--r", "2", "--nmax", "-1"],
    ["verify", "p1", "--q", "5", "--r", "2", "--nmax", "-1"],
    ["verify", "weil", "--nmax", "-1"],
    ["verify", "cross", "--group", "2", "--order", "-1"],
])
def test_verify_rejects_negative_bounds(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == 2
    assert "nonnegative" in err


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
