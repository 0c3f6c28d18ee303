import json
import re
import subprocess
import sys

import pytest

from periodcollapse import cli
from periodcollapse.constructions import assemble, quad_Q, seed_data, seed_vertex_data
from periodcollapse.ehrhart import EhrhartSeries, sample_series
from periodcollapse.errors import ConstraintError, ParseError
from periodcollapse.field import field
from periodcollapse.scene import (
    emit_csv, format_fan_data, format_scene, parse_csv, parse_fan_data, parse_scene,
)
from periodcollapse.svg import emit_svg

from conftest import poly

Q5 = field(5)

CORPUS = [
    {"d": 5, "kind": "quad", "h": "7/2+1/2*s5", "k": "5/2-1/2*s5"},
    {"d": 5, "kind": "cut_and_paste", "h": "9/2+1/2*s5", "k": "9/2-1/2*s5"},
    {"d": 2, "kind": "pyramid", "a": "0-1*s2", "b": "3-1*s2"},
    {"kind": "cgls", "alpha": 3, "beta": 3},
    {"kind": "counterexample", "beta": 5},
    {"kind": "polygon", "d": 5, "vertices": [["0", "0"], ["1", "0"], ["0", "1/2"]]},
    {"kind": "fan", "beta": 5, "entries": [
        {"ray": [1, 0], "base": "H", "offset": 0}, {"ray": [0, 1], "base": "K", "offset": 0},
        {"ray": [-1, 0], "base": "H", "offset": 0}, {"ray": [0, -1], "base": "K", "offset": 0}]},
]


@pytest.mark.parametrize("obj", CORPUS, ids=lambda o: o["kind"])
def test_scene_round_trip(obj):
    scene = parse_scene(json.dumps(obj))
    text = format_scene(scene)
    assert parse_scene(text) == scene
    assert format_scene(parse_scene(text)) == text


def test_quad_scene_maps_to_construction(h0k0):
    scene = parse_scene(json.dumps(CORPUS[0]))
    assert scene.build() == quad_Q(h0k0[0] + 1, h0k0[1])


def test_fan_file_is_step1_data():
    text = json.dumps({k: v for k, v in CORPUS[-1].items() if k != "kind"})
    assert parse_fan_data(text) == seed_data(4)
    assert parse_scene(text).build() == assemble(seed_data(4))
    assert parse_fan_data(format_fan_data(seed_data(13))) == seed_data(13)


@pytest.mark.parametrize("text,exc", [
    ('{"d":5,"kind":"quad","h":"1/0","k":"1"}', ParseError),
    ('{"d":5,"kind":"quad","h":1.5,"k":"1"}', ParseError),
    ('{"d":5,"kind":"quad",', ParseError),
    ('{"kind":"triangle"}', ParseError),
    ('{"d":4,"kind":"quad","h":"1","k":"1"}', ParseError),
    ('{"d":5,"kind":"quad","h":"5/2+1/2*s5","k":"1/2-1/2*s5"}', ConstraintError),
    ('{"d":5,"kind":"quad","h":"5/2+1/2*s5","k":"5/2-1/2*s2"}', ConstraintError),
    ('{"kind":"counterexample","beta":4}', ConstraintError),
])
def test_scene_errors(text, exc):
    with pytest.raises(exc):
        parse_scene(text)


def test_json_syntax_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_scene('{\n  "kind": "quad",\n  "d" 5\n}')
    assert info.value.line == 3 and info.value.column is not None


def test_constraint_message_names_condition():
    with pytest.raises(ConstraintError, match="h \\+ k"):
        parse_scene('{"d":5,"kind":"quad","h":"5/2+1/2*s5","k":"3-1/2*s5"}')


def test_csv_examples(h0k0):
    assert emit_csv(sample_series(quad_Q(*h0k0), 3)) == "t,count\n1,6\n2,16\n3,31\n"
    assert emit_csv(EhrhartSeries((4, 9))) == "t,count\n1,4\n2,9\n"
    with pytest.raises(Exception):
        emit_csv(EhrhartSeries(()))
    s = EhrhartSeries((8, 24, 51, 87))
    assert parse_csv(emit_csv(s)).values == s.values
    assert emit_csv(s).encode() == b"t,count\n1,8\n2,24\n3,51\n4,87\n"


def test_svg_examples(h0k0):
    svg = emit_svg(assemble(seed_data(4)))
    outer = re.search(r'class="outer" data-edges="(\d+)" points="([^"]*)"', svg)
    assert outer.group(1) == "4" and len(outer.group(2).split()) == 4
    assert svg.count('class="inside"') == 13
    svg = emit_svg(quad_Q(*h0k0))
    assert svg.count('class="collinear"') == 1
    assert 'data-edges="3"' in svg
    assert 'data-edges="9"' in emit_svg(assemble(seed_data(9)))
    assert emit_svg(assemble(seed_vertex_data(6)), t=2).startswith("<svg")


# -- CLI ----------------------------------------------------------------------------

@pytest.fixture
def scene_file(tmp_path):
    def write(obj, name="scene.json"):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(path)
    return write


def test_cli_construct_and_count(scene_file, capsys):
    path = scene_file(CORPUS[0])
    assert cli.main(["construct", path]) == 0
    out = capsys.readouterr().out
    assert '"kind": "quad"' in out and "# canonical edges: 4" in out
    assert cli.main(["count", path, "--t", "1", "2", "3"]) == 0
    assert capsys.readouterr().out == "t,count\n1,7\n2,19\n3,37\n"
    assert cli.main(["count", path, "--t", "2", "--bruteforce"]) == 0
    assert capsys.readouterr().out == "t,count\n2,19\n"


def test_cli_series_and_fit(scene_file, tmp_path, capsys):
    path = scene_file(CORPUS[4])
    out = tmp_path / "s.csv"
    assert cli.main(["series", path, "--t-max", "36", "--out", str(out)]) == 0
    assert out.read_text().startswith("t,count\n1,8\n2,24\n3,51\n4,87\n")
    assert cli.main(["fit", str(out), "--degree", "2", "--p-max", "6"]) == 0
    text = capsys.readouterr().out
    assert "no-fit-up-to(6)" in text and "first violation at t = 4" in text


def test_cli_verify(scene_file, capsys):
    assert cli.main(["verify", scene_file(CORPUS[1]), "--t-max", "24"]) == 0
    out = capsys.readouterr().out
    assert "verdict: polynomial" in out and "closed form: match" in out
    assert "class 0: 9/2*t^2 + 9/2*t + 1" in out


def test_cli_seed(tmp_path, capsys):
    assert cli.main(["seed", "--edges", "9"]) == 0
    assert parse_fan_data(capsys.readouterr().out) == seed_data(9)
    assert cli.main(["seed", "--vertices", "6"]) == 0
    assert parse_fan_data(capsys.readouterr().out) == seed_vertex_data(6)
    assert cli.main(["seed", "--edges", "5"]) == 1
    assert cli.main(["seed", "--vertices", "7"]) == 1


def test_cli_render(scene_file, tmp_path):
    out = tmp_path / "p.svg"
    assert cli.main(["render", scene_file(CORPUS[-1]), "--out", str(out)]) == 0
    assert out.read_text().count('class="inside"') == 13


def test_cli_exit_codes(scene_file, capsys):
    assert cli.main(["count", scene_file('{"d":5,"kind":"quad","h":"1/0","k":"1"}')]) == 2
    assert cli.main(["count", scene_file('{"kind":"counterexample","beta":4}')]) == 1
    assert cli.main(["count", "/nonexistent/scene.json"]) == 2
    assert cli.main(["bogus"]) == 2
    assert cli.main(["construct", scene_file(CORPUS[3])]) == 0
    capsys.readouterr()


def test_cli_module_entry_point(scene_file):
    path = scene_file(CORPUS[3])
    proc = subprocess.run([sys.executable, "-m", "periodcollapse", "series", path, "--t-max", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    # T(3,3): t^2/2 + 3t/2 + 1
    assert proc.stdout == "t,count\n1,3\n2,6\n3,10\n"
    bad = subprocess.run([sys.executable, "-m", "periodcollapse", "count", "-"],
                         input='{"kind": "cgls", "alpha": 3,}', capture_output=True, text=True)
    assert bad.returncode == 2 and "line 1" in bad.stderr
