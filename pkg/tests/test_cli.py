from __future__ import annotations

import io
import json
from contextlib import redirect_stdout

import pytest

from kwall import cli, fixtures
from kwall.volumes import TwoRayModel


def run_cli(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(list(argv))
    return code, buf.getvalue()


def test_walls_quintic_table():
    code, out = run_cli("walls", "quintic")
    assert code == 0
    assert out.rstrip().splitlines()[-1].endswith("54/95")
    for w in ("3/7", "8/15", "6/11", "63/115", "54/95"):
        assert w in out


def test_wall_fixture_report():
    code, out = run_cli("wall", "--fixture", "a12")
    assert code == 0
    assert "8/15" in out and "15 - 26 c" in out and "17/5" in out


def test_determinism_byte_identical():
    outs = {run_cli("--json", "centroid", "--fixture", "centroid-a10-case1")[1] for _ in range(3)}
    assert len(outs) == 1
    outs = {run_cli("walls", "quintic")[1] for _ in range(3)}
    assert len(outs) == 1


def test_unknown_fixture_lists_available(capsys):
    code = cli.main(["wall", "--fixture", "nope"])
    captured = capsys.readouterr()
    assert code == 1
    assert "unknown fixture" in captured.err
    assert "a11red" in captured.err  # the listing is printed


def test_json_output_is_exact_rationals():
    code, out = run_cli("--json", "wall", "--fixture", "a10")
    doc = json.loads(out)
    assert doc["wall"] == "54/95"
    assert "." not in doc["wall"]


def test_first_wall_command():
    code, out = run_cli("first-wall", "--degree", "7")
    assert code == 0 and "3/11" in out


def test_centroid_fixture_command():
    code, out = run_cli("centroid", "--fixture", "centroid-a12-case1")
    assert code == 0
    assert "(3/5, 8/15, 1/30)" in out
    assert "(9, 1, -49/150)" in out


def test_lct_command_variants():
    code, out = run_cli("lct", "--germ", "2,0 0,10")
    assert code == 0 and "3/5" in out
    code, out = run_cli("lct", "--quasihomog", "2,1,5")
    assert code == 0 and "3/5" in out
    code, out = run_cli("lct", "--fixture", "p1425-d20")
    assert code == 0 and "1/4" in out


def test_index_and_cm_commands():
    code, out = run_cli("index-bound", "--degree", "5", "--coeff", "57/100")
    assert code == 0 and "5" in out
    code, out = run_cli("cm", "--n", "2", "--degree", "5", "--coeff", "3/5")
    assert code == 0 and "cm degree" in out and ": 0" in out


def test_stratum_command():
    code, out = run_cli("stratum", "--coords", "0,1,0,1")
    assert code == 0 and "Sigma5" in out and "54/95" in out
    code, out = run_cli("stratum", "--coords", "1,0")
    assert code == 0 and "Sigma1" in out


def test_stratum_fixture_listing():
    code, out = run_cli("stratum", "--fixture", "quintic-strata")
    assert code == 0
    for s in ("Sigma2", "Sigma6", "63/115"):
        assert s in out


def test_whole_range_unstable_verdict():
    code, out = run_cli("wall", "--fixture", "x26-through-sing")
    assert code == 0 and "K-unstable on the whole range" in out
    code, out = run_cli("wall", "--fixture", "p114-nondeg")
    assert code == 0 and "K-unstable on the whole range" in out


def test_scenario_two_ray_roundtrip(tmp_path):
    payload = {
        "name": "a12-scenario",
        "h2": "1", "e2": "1/26", "cross": "0",
        "neg_curve": ["5", "26"],
        "L": ["1", "0"],
        "anti_k": ["3", "5"],
    }
    text = cli.serialize_scenario("two-ray", payload, provenance="test")
    path = tmp_path / "a12.json"
    path.write_text(text, encoding="utf-8")
    code, out = run_cli("--json", "volume", "--file", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["S0"] == "17/5"
    # re-ingest the serialized document: identical report
    kind, payload2, _ = cli.load_scenario(json.loads(text))
    assert cli.run_scenario(kind, payload2) == json.loads(out)


def test_scenario_wall_case(tmp_path):
    payload = {
        "name": "a11irr-scenario",
        "A0": "7", "ordD": "12", "S0": "49/30",
        "alpha": "3", "beta": "5",
        "range": ["0", "3/5"],
    }
    path = tmp_path / "wall.json"
    path.write_text(cli.serialize_scenario("wall-case", payload), encoding="utf-8")
    code, out = run_cli("--json", "wall", "--file", str(path))
    assert code == 0
    assert json.loads(out)["wall"] == "63/115"


def test_scenario_centroid(tmp_path):
    payload = {
        "name": "a11red-scenario",
        "generators": [["0", "0", "-1"], ["-1", "1", "-2"], ["1", "0", "6"]],
        "xi0": ["0", "1", "0"],
        "eta0star": ["0", "0", "1"],
        "u1": ["12", "10", "-1"],
    }
    path = tmp_path / "cent.json"
    path.write_text(cli.serialize_scenario("centroid", payload), encoding="utf-8")
    code, out = run_cli("--json", "centroid", "--file", str(path))
    assert code == 0
    assert json.loads(out)["(a, c, b)"] == "(11/6, 6/11, 3/4)"


def test_scenario_git_binary(tmp_path):
    payload = {"name": "octic", "parity": "even", "degree": 4, "forms": {"2": [[5, 3]]}}
    path = tmp_path / "git.json"
    path.write_text(cli.serialize_scenario("git-binary", payload), encoding="utf-8")
    code, out = run_cli("--json", "git", "binary", "--file", str(path))
    assert code == 0
    assert json.loads(out)["verdict"] == "unstable"


@pytest.mark.parametrize("kind,payload", [
    ("toric", {"polygon": [["0", "0"], ["1", "0"], ["0", "1/4"]],
               "w": ["-2", "-12"], "anti_k": ["6", "10"]}),
    ("lct", {"germ": [[2, 0], [0, 10]]}),
    ("lct", {"quasihomog": [2, 1, 5]}),
    ("index", {"degree": 5, "coeff": "57/100"}),
    ("cm", {"n": 3, "degree": 4, "coeff": "1/2"}),
    ("stratum", {"coords": ["0", "1", "0", "1"]}),
    ("git-plane", {"degree": 5, "monomials": [[1, 4, 0]], "lambda": [-1, 2, -1]}),
])
def test_every_scenario_kind_roundtrips(kind, payload):
    text = cli.serialize_scenario(kind, payload)
    kind2, payload2, _ = cli.load_scenario(json.loads(text))
    assert (kind2, payload2) == (kind, payload)
    first = cli.run_scenario(kind, payload)
    second = cli.run_scenario(kind2, payload2)
    assert first == second


def test_delta_fixtures_reachable():
    code, out = run_cli("wall", "--fixture", "x26-delta")
    assert code == 0 and "1/9" in out
    code, out = run_cli("wall", "--fixture", "p1425-delta")
    assert code == 0 and "1/10" in out and "x: 1/10" in out


def test_scenario_rejects_floats(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"kind": "index", "payload": {"degree": 5, "coeff": 0.5}}', encoding="utf-8")
    code = cli.main(["index-bound", "--degree", "5", "--coeff", "1/2"])
    assert code == 0
    capsys.readouterr()
    code = cli.main(["wall", "--file", str(path)])
    captured = capsys.readouterr()
    assert code == 1
    assert "rejected" in captured.err or "rational" in captured.err


def test_empty_scenario_file(tmp_path, capsys):
    path = tmp_path / "empty.json"
    path.write_text("", encoding="utf-8")
    code = cli.main(["wall", "--file", str(path)])
    captured = capsys.readouterr()
    assert code == 1 and "empty scenario" in captured.err


def test_schema_diagnostic_names_offending_field(tmp_path, capsys):
    path = tmp_path / "missing.json"
    path.write_text(json.dumps({"kind": "wall-case", "payload": {"A0": "1"}}), encoding="utf-8")
    code = cli.main(["wall", "--file", str(path)])
    captured = capsys.readouterr()
    assert code == 1 and "field 'ordD'" in captured.err


def test_wrong_kind_for_command(tmp_path, capsys):
    path = tmp_path / "kind.json"
    path.write_text(json.dumps({"kind": "cm", "payload": {"n": 2, "degree": 5, "coeff": "1/5"}}), encoding="utf-8")
    code = cli.main(["wall", "--file", str(path)])
    captured = capsys.readouterr()
    assert code == 1 and "kind" in captured.err


def test_annotations_never_consulted(monkeypatch):
    # wiping a fixture's expected values does not change computed output
    base = run_cli("--json", "wall", "--fixture", "a12")[1]
    fx = fixtures.WALL_FIXTURES["a12"]
    monkeypatch.setitem(fixtures.WALL_FIXTURES, "a12", type(fx)(
        name=fx.name, valuation=fx.valuation, curve_germ=fx.curve_germ,
        volume=fx.volume, valid_range=fx.valid_range, provenance=fx.provenance,
        expected={},
    ))
    assert run_cli("--json", "wall", "--fixture", "a12")[1] == base


def test_corrupted_fixture_fails_verification(monkeypatch):
    from fractions import Fraction as F
    from kwall import acceptance

    fx = fixtures.VOLUME_FIXTURES["a12"]
    corrupted = type(fx)(
        name=fx.name,
        model=TwoRayModel(F(1), F(1, 25), F(0), (F(5), F(26))),  # wrong (E^2)
        L=fx.L, moment=fx.moment, anti_k=fx.anti_k,
        provenance=fx.provenance, expected=fx.expected,
    )
    monkeypatch.setitem(fixtures.VOLUME_FIXTURES, "a12", corrupted)
    results = acceptance.run_all()
    failed = [r for r in results if not r.passed]
    assert failed, "corrupting a fixture must surface as a named failure"


def test_verify_all_exit_code():
    code, out = run_cli("verify-all")
    assert code == 0
    assert "11/11 criteria passed" in out


def test_every_registry_name_is_reachable():
    commands = {
        **{name: ("wall", "--fixture") for name in fixtures.WALL_FIXTURES},
        **{n: ("wall", "--fixture") for n in
           ("firstwall-even", "firstwall-odd", "firstwall-d5", "x26-delta", "p1425-delta")},
        **{name: ("centroid", "--fixture") for name in fixtures.CENTROID_FIXTURES},
        **{name: ("volume", "--fixture") for name in fixtures.VOLUME_FIXTURES},
        **{name: ("lct", "--fixture") for name in fixtures.LCT_FIXTURES},
        **{name: ("git", "binary", "--fixture") for name in fixtures.BINARY_FIXTURES},
        "quartic-binary": ("git", "binary", "--fixture"),
        **{name: ("git", "plane", "--fixture") for name in fixtures.PLANE_GIT_FIXTURES},
        "quintic-strata": ("stratum", "--fixture"),
    }
    assert set(commands) == set(fixtures.REGISTRY_NAMES)
    for name, argv in sorted(commands.items()):
        code, out = run_cli(*argv, name)
        assert code == 0 and out.strip(), name
