import json
import random
import subprocess
import sys

import pytest

from starramsey.cli import main
from starramsey.core import ColoredCompleteGraph
from starramsey.io import PALETTE, coloring_to_dict, to_dot

from conftest import random_coloring


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(path)


def test_construct_then_verify_round_trip(tmp_path, capsys):
    path = str(tmp_path / "w.json")
    code, out, _ = run(capsys, "construct", "--pattern", "double-star", "-n", "3", "-m", "1", "-k", "3", "-o", path)
    assert code == 0 and "K_11" in out
    data = json.loads(open(path).read())
    assert data["order"] == 11 and data["claimed_bound"] == 12 and data["verified"]
    assert data["schema_version"].startswith("1.")
    assert data["edges"] == sorted(data["edges"])
    assert set(data["partition"]) == {"A", "B", "V"}
    code, out, _ = run(capsys, "verify", path)
    assert code == 0 and out.strip() == "FREE"


@pytest.mark.parametrize("argv", [
    ["--pattern", "substar", "-n", "3", "-m", "2", "-k", "3"],
    ["--pattern", "double-star", "-n", "2", "-m", "2", "-k", "6", "--construction", "double-star-divisible"],
    ["--pattern", "substar", "-n", "3", "-m", "2", "-k", "2", "--construction", "substar-2-color"],
    ["--pattern", "p4", "-k", "4"],
    ["--pattern", "star", "-n", "3", "-k", "3"],
])
def test_construct_variants_round_trip(tmp_path, capsys, argv):
    path = str(tmp_path / "c.json")
    code, _, _ = run(capsys, "construct", *argv, "-o", path)
    assert code == 0
    assert run(capsys, "verify", path)[0] == 0


def test_construct_substar_order(capsys):
    code, out, _ = run(capsys, "construct", "--pattern", "substar", "-n", "3", "-m", "2", "-k", "3", "--format", "json")
    assert code == 0 and json.loads(out)["order"] == 9


@pytest.mark.parametrize("argv", [
    ["construct", "--pattern", "double-star", "-n", "1", "-m", "2", "-k", "3"],
    ["construct", "--pattern", "double-star", "-n", "3", "-k", "3"],
    ["construct", "--pattern", "substar", "-n", "3", "-m", "3", "-k", "2", "--construction", "substar-2-color"],
    ["construct", "--pattern", "double-star", "-n", "3", "-m", "1", "-k", "3", "--construction", "substar-odd-k"],
    ["bounds", "--pattern", "hexagon", "-k", "2"],
    ["search"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_seed_from_environment(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("RAMSEY_SEED", "17")
    path = str(tmp_path / "s.json")
    run(capsys, "construct", "--pattern", "double-star", "-n", "2", "-m", "2", "-k", "6", "-o", path)
    assert json.loads(open(path).read())["seed"] == 17
    monkeypatch.setenv("RAMSEY_SEED", "oops")
    assert run(capsys, "construct", "--pattern", "p4", "-k", "3")[0] == 2


def test_verify_monochromatic_k6_finds_p4(tmp_path, capsys):
    path = write(tmp_path, "m.json", coloring_to_dict(ColoredCompleteGraph.monochromatic(6)))
    code, out, _ = run(capsys, "verify", path, "--pattern", "p4")
    assert code == 1 and out.startswith("FOUND")
    code, out, _ = run(capsys, "verify", path, "--pattern", "p4", "--format", "json")
    assert code == 1 and json.loads(out)["embedding"]["color"] == 1


def test_verify_malformed_files(tmp_path, capsys):
    good = coloring_to_dict(ColoredCompleteGraph.monochromatic(4))
    text = json.dumps(good)
    assert run(capsys, "verify", write(tmp_path, "t.json", text[: len(text) // 2]), "--pattern", "p4")[0] == 2
    bad_version = dict(good, schema_version="2.0")
    assert run(capsys, "verify", write(tmp_path, "v.json", bad_version), "--pattern", "p4")[0] == 2
    missing = dict(good, edges=good["edges"][:-1])
    assert run(capsys, "verify", write(tmp_path, "e.json", missing), "--pattern", "p4")[0] == 2
    assert run(capsys, "verify", str(tmp_path / "absent.json"), "--pattern", "p4")[0] == 2


def test_older_minor_version_loads(tmp_path, capsys):
    data = coloring_to_dict(ColoredCompleteGraph.monochromatic(3))
    data["schema_version"] = "1.0"
    assert run(capsys, "verify", write(tmp_path, "o.json", data), "--pattern", "p4")[0] == 0
    data["schema_version"] = "1.7"
    assert run(capsys, "verify", write(tmp_path, "n.json", data), "--pattern", "p4")[0] == 0


def test_bounds_and_search(capsys):
    code, out, _ = run(capsys, "bounds", "--pattern", "p4", "-k", "5")
    assert code == 0 and out.strip() == "exact 11"
    code, out, _ = run(capsys, "search", "--pattern", "p4", "-k", "3", "--cap", "8")
    assert code == 0 and out.strip() == "r = 6"
    code, out, _ = run(capsys, "search", "--pattern", "p4", "-k", "2", "--cap", "4", "--format", "json")
    assert code == 1 and json.loads(out)["lower_bound"] == 5
    code, out, _ = run(capsys, "search", "--pattern", "p4", "-k", "3", "--cap", "8", "--budget", "10")
    assert code == 1 and "budget" in out


def test_extract_and_detect(tmp_path, capsys):
    G = random_coloring(12, 3, random.Random(6))
    path = write(tmp_path, "c.json", coloring_to_dict(G))
    code, out, _ = run(capsys, "extract", "--input", path, "--pattern", "double-star", "-n", "3", "-m", "1",
                       "--format", "json", "--explain")
    assert code == 0
    payload = json.loads(out)
    assert payload["embedding"]["pattern"] == {"kind": "double-star", "n": 3, "m": 1}
    assert payload["trace"]["steps"][0]["step"] == "star"
    code, out, _ = run(capsys, "extract", "--input", path, "--pattern", "double-star", "-n", "2", "-m", "1",
                       "--method", "m1")
    assert code == 0 and '"vertex_map"' in out
    code, out, _ = run(capsys, "extract", "--input", path, "--pattern", "substar", "-n", "3", "-m", "1")
    assert code == 0
    code, _, _ = run(capsys, "extract", "--input", path, "--pattern", "double-star", "-n", "4", "-m", "1")
    assert code == 2
    code, out, _ = run(capsys, "detect", "--input", path, "--pattern", "substar", "-n", "3", "-m", "2",
                       "--format", "json")
    assert code == 0 and json.loads(out)["found"]


def test_export_dot(tmp_path, capsys):
    G = ColoredCompleteGraph.from_function(6, 14, lambda a, b: (a * b) % 14 + 1)
    path = write(tmp_path, "g.json", coloring_to_dict(G))
    out_path = tmp_path / "g.dot"
    assert run(capsys, "export", "--input", path, "-o", str(out_path))[0] == 0
    dot = out_path.read_text()
    assert dot.startswith("graph") and dot.count("--") == 15
    assert f'color="{PALETTE[0]}", style=dashed' in to_dot(G)  # color 13 wraps with a new style
    assert run(capsys, "export", "--input", path, "--color", "99")[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "starramsey", "bounds", "--pattern", "p4", "-k", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "exact 6"
