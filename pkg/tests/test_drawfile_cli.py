import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mwgdraw import drawfile, svg
from mwgdraw.cli import ERROR, NEGATIVE, OK, main
from mwgdraw.construct import draw_pair
from mwgdraw.fixtures import fixture
from mwgdraw.geometry import HORIZONTAL, Point
from mwgdraw.model import Drawing, GraphSpec, MwgInstance

K = GraphSpec.of
rationals = st.fractions(max_denominator=10 ** 6).filter(lambda q: abs(q) < 10 ** 9)


# ---------------------------------------------------------------- rationals and specs

@pytest.mark.parametrize("text, value", [("0", 0), ("-3", -3), ("+7/2", Fraction(7, 2)),
                                         ("-6/4", Fraction(-3, 2))])
def test_parse_rational(text, value):
    assert drawfile.parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1/0", "1/-2", "", " 1", "a/b", "1e3", "--1"])
def test_parse_rational_rejects(text):
    with pytest.raises(drawfile.FormatError):
        drawfile.parse_rational(text)


def test_parse_rational_rejects_numbers():
    with pytest.raises(drawfile.FormatError):
        drawfile.parse_rational(1)


@given(rationals)
def test_rational_round_trip(q):
    assert drawfile.parse_rational(drawfile.format_rational(q)) == q


def test_pair_grammar():
    assert drawfile.parse_pair(" K2, 2 ; K1,5 ") == (K(2, 2), K(1, 5))
    assert drawfile.parse_pair("K2,2,2;K2,2")[0] == K(2, 2, 2)
    assert drawfile.format_pair(K(5, 1), K(2, 2)) == "K1,5;K2,2"
    for bad in ["K2,2", "K2;K2,2", "K2,0;K1,1", "X2,2;K1,1", "K2,2;K1,1;K1,1", "K,2;K1,1"]:
        with pytest.raises(drawfile.FormatError):
            drawfile.parse_pair(bad)


# ---------------------------------------------------------------- drawing files

def _instance(A, B, with_sep):
    d0 = Drawing(tuple((f"a{i}", Point(*p)) for i, p in enumerate(A)))
    d1 = Drawing(tuple((f"b{i}", Point(*p)) for i, p in enumerate(B)))
    return MwgInstance(d0, d1, HORIZONTAL if with_sep else None, {"note": "x"})


@given(st.lists(st.tuples(rationals, rationals.filter(lambda q: q > 0)), min_size=1, max_size=5,
                unique=True),
       st.lists(st.tuples(rationals, rationals.filter(lambda q: q < 0)), min_size=1, max_size=5,
                unique=True),
       st.booleans())
def test_file_round_trip_is_exact(A, B, with_sep):
    inst = _instance(A, B, with_sep)
    assert drawfile.loads(drawfile.dumps(inst)) == inst


@pytest.mark.parametrize("name", ["K22_K22", "K22_IND3", "NONSEP_DIAM3", "NONSEP_DIAM1"])
def test_fixture_round_trip(name):
    inst = fixture(name)
    assert drawfile.loads(drawfile.dumps(inst)) == inst


def test_rationals_are_strings_in_json():
    data = json.loads(drawfile.dumps(draw_pair(K(1, 2), K(1, 3))))
    assert data["version"] == 1
    assert all(isinstance(v["x"], str) and isinstance(v["y"], str)
               for v in data["gamma0"] + data["gamma1"])
    assert data["intendedSpecs"] == [[2, 1], [3, 1]]


@pytest.mark.parametrize("mutate", [
    lambda d: d.update(version=2),
    lambda d: d.update(extra=1),
    lambda d: d["gamma0"][0].update(x=1.5),
    lambda d: d["gamma0"][0].update(x="1/0"),
    lambda d: d["gamma0"].append(dict(d["gamma0"][0])),
    lambda d: d.update(gamma1=[]),
    lambda d: d.update(separator={"a": "0", "b": "1", "c": "100", "sideOfFirst": 1}),
    lambda d: d.update(intendedSpecs=[[2, 2]]),
    lambda d: d.update(metadata={"k": 3}),
])
def test_malformed_files_raise_format_error(mutate):
    data = json.loads(drawfile.dumps(fixture("K22_K22")))
    mutate(data)
    with pytest.raises(drawfile.FormatError):
        drawfile.loads(json.dumps(data))


def test_invalid_json():
    with pytest.raises(drawfile.FormatError):
        drawfile.loads("{not json")


# ---------------------------------------------------------------- SVG

@pytest.mark.parametrize("disks", [False, True])
def test_svg_is_well_formed(disks):
    doc = svg.render(fixture("K22_K22"), disks=disks, title="K2,2;K2,2")
    root = ET.fromstring(doc)
    assert root.tag.endswith("svg") and root.get("version") == "1.1"
    circles = root.iter("{http://www.w3.org/2000/svg}circle")
    assert sum(1 for _ in circles) >= 8


def test_svg_marks_non_separable():
    doc = svg.render(fixture("NONSEP_DIAM1"))
    ET.fromstring(doc)
    assert "not linearly separable" in doc


# ---------------------------------------------------------------- CLI

def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("pair, code, text", [
    ("K2,2;K1,5", OK, "DRAWABLE"),
    ("K2,3;K2,3", NEGATIVE, "NOT_DRAWABLE SHAPE_VIOLATION"),
    ("K2,2,2;K2,2", NEGATIVE, "NOT_DRAWABLE MULTIPARTITE_RULE"),
    ("K1,2;K1,6", NEGATIVE, "NOT_DRAWABLE SIZE_GAP"),
])
def test_cli_test(pair, code, text, capsys):
    got, out, _ = run(["test", pair], capsys)
    assert got == code and out.strip() == text


@pytest.mark.parametrize("pair", ["K2;K2", "K1,2,2;K2,2", "K2,2"])
def test_cli_bad_pair_is_error(pair, capsys):
    assert run(["test", pair], capsys)[0] == ERROR


@pytest.mark.parametrize("argv", [[], ["bogus"], ["draw"]])
def test_cli_usage_exit_code_is_two(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == ERROR


def test_cli_draw_verify_check_round_trip(tmp_path, capsys):
    out, pic = tmp_path / "d.json", tmp_path / "d.svg"
    code, text, _ = run(["draw", "K1,3;K1,3", "-o", str(out), "--svg", str(pic), "--disks"], capsys)
    assert code == OK and "verification PASS" in text
    ET.fromstring(pic.read_text())
    assert run(["verify", str(out), "--expect", "K1,3;K1,3"], capsys)[0] == OK
    code, text, _ = run(["verify", str(out), "--json"], capsys)
    summary = json.loads(text)
    assert code == OK and summary["separable"] is True
    code, text, _ = run(["check", str(out)], capsys)
    assert code == OK and "FAIL" not in text.replace("no FAIL", "")


def test_cli_draw_k22_with_single_edge(tmp_path, capsys):
    out = tmp_path / "k.json"
    assert run(["draw", "K2,2;K1,1", "-o", str(out)], capsys)[0] == OK
    assert out.exists()


def test_cli_undrawable_writes_nothing(tmp_path, capsys):
    out, pic = tmp_path / "x.json", tmp_path / "x.svg"
    code, text, _ = run(["draw", "K2,3;K1,4", "-o", str(out), "--svg", str(pic)], capsys)
    assert code == NEGATIVE and not out.exists() and not pic.exists()


def test_cli_verify_expect_mismatch(tmp_path, capsys):
    path = tmp_path / "f.json"
    drawfile.save(fixture("K22_IND3"), path)
    code, text, _ = run(["verify", str(path), "--expect", "K2,2;K1,3"], capsys)
    assert code == NEGATIVE and "MISMATCH" in text


def test_cli_corrupted_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"version": 1, "gamma0": [{"label": "a", "x": "1.5", "y": "1"}]}')
    for cmd in ("verify", "check"):
        code, _, err = run([cmd, str(path)], capsys)
        assert code == ERROR and "error" in err
    code, _, _ = run(["verify", str(tmp_path / "missing.json")], capsys)
    assert code == ERROR


def test_cli_check_nonsep_fixture(tmp_path, capsys):
    path = tmp_path / "n.json"
    drawfile.save(fixture("NONSEP_DIAM3"), path)
    code, text, _ = run(["check", str(path), "--json"], capsys)
    rep = json.loads(text)
    assert code == OK
    assert rep["checks"]["non_crossing"]["status"] == "NOT_APPLICABLE"
    assert rep["checks"]["linear_separability"]["status"] == "NOT_APPLICABLE"


def test_cli_check_intended_flags_corruption(tmp_path, capsys):
    # move a gamma1 vertex so the stored partition no longer matches the geometry
    inst = fixture("K22_K22")
    data = json.loads(drawfile.dumps(inst))
    data["gamma1"][2]["x"], data["gamma1"][2]["y"] = "-30", "-1"
    path = tmp_path / "c.json"
    path.write_text(json.dumps(data))
    assert run(["check", str(path)], capsys)[0] == OK
    code, text, _ = run(["check", str(path), "--intended"], capsys)
    assert code == NEGATIVE and "FAIL" in text


def test_cli_search(tmp_path, capsys):
    out = tmp_path / "s.json"
    code, text, _ = run(["search", "K1,2;K1,2", "--budget", "100000", "--seed", "1",
                         "--mode", "anneal", "-o", str(out)], capsys)
    stats = json.loads(text[:text.rindex("}") + 1])
    assert code == OK and stats["found"] and out.exists()
    code, text, _ = run(["search", "K2,3;K2,3", "--budget", "2000"], capsys)
    stats = json.loads(text)
    assert code == NEGATIVE and stats["status"] == "not found within budget"


def test_cli_fixture(tmp_path, capsys):
    code, text, _ = run(["fixture", "K22_K22"], capsys)
    assert code == OK and drawfile.loads(text) == fixture("K22_K22")


def test_module_entry_point_and_no_color(tmp_path):
    env = {"MWG_NO_COLOR": "1", "PATH": ""}
    proc = subprocess.run([sys.executable, "-m", "mwgdraw", "test", "K2,2;K2,2"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0 and proc.stdout.strip() == "DRAWABLE"
    path = tmp_path / "f.json"
    drawfile.save(fixture("K22_K22"), path)
    proc = subprocess.run([sys.executable, "-m", "mwgdraw", "check", str(path)],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0 and "\x1b[" not in proc.stdout
