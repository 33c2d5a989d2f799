import json
import subprocess
import sys
from fractions import Fraction

import pytest

from ordinary.cli import EXIT_HYPOTHESIS, EXIT_INVALID, EXIT_OK, EXIT_USAGE, main
from ordinary.generators import GenSpec, generate
from ordinary.io import dumps_arrangement, parse_arrangement
from ordinary.oracle import classify, enumerate_2d

TRIANGLE = {"lines": [{"a": "1", "b": "0", "c": "0"}, {"a": "0", "b": "1", "c": "0"},
                      {"a": "1", "b": "1", "c": "1"}]}
PENCIL = {"lines": [{"a": "1", "b": "-1", "c": "0"}, {"a": "1", "b": "1", "c": "0"},
                    {"a": "0", "b": "1", "c": "0"}]}
REPORT_KEYS = {"command", "input", "result", "timings_ns", "trace", "verification", "error"}


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_formats_round_trip():
    for spec in [GenSpec("random", 9, seed=1), GenSpec("random", 8, d=4, seed=1),
                 GenSpec("bichromatic", 8, seed=1)]:
        elements = generate(spec)
        _, back = parse_arrangement(json.loads(dumps_arrangement(elements)))
        assert dumps_arrangement(back) == dumps_arrangement(elements)


def test_parse_rejects_floats_and_unknown_documents():
    with pytest.raises(ValueError):
        parse_arrangement({"lines": [{"a": 0.5, "b": "1", "c": "0"}]})
    with pytest.raises(ValueError):
        parse_arrangement({"circles": []})
    kind, lines = parse_arrangement({"lines": [{"a": 2, "b": "-2", "c": "3/2", "color": "red"}]})
    assert kind == "lines" and lines[0].key == (4, -4, 3) and lines[0].color == "red"


def test_triangle_json_report(tmp_path, capsys):
    code, out, _ = run(["ordinary2d", write(tmp_path, "t.json", TRIANGLE), "--json"], capsys)
    assert code == EXIT_OK
    report = json.loads(out)
    assert set(report) == REPORT_KEYS
    assert len(report["result"]["witnesses"]) == 2
    assert report["verification"]["confirmed"]
    assert all(isinstance(v, int) and v >= 0 for v in report["timings_ns"].values())
    assert report["timings_ns"]["total"] >= report["timings_ns"]["search"]


def test_global_flags_before_subcommand(tmp_path, capsys):
    code, out, _ = run(["--json", "ordinary2d", write(tmp_path, "t.json", TRIANGLE)], capsys)
    assert code == EXIT_OK and json.loads(out)["command"] == "ordinary2d"


def test_pencil_exit_two(tmp_path, capsys):
    code, _, err = run(["ordinary2d", write(tmp_path, "p.json", PENCIL)], capsys)
    assert code == EXIT_HYPOTHESIS
    assert "all lines concurrent" in err


def test_usage_errors(tmp_path, capsys):
    assert run([], capsys)[0] == EXIT_USAGE
    assert run(["frobnicate"], capsys)[0] == EXIT_USAGE
    assert run(["ordinary2d"], capsys)[0] == EXIT_USAGE
    path = write(tmp_path, "t.json", TRIANGLE)
    assert run(["render", path, "--out", str(tmp_path / "x.svg"), "--highlight", "1"], capsys)[0] == EXIT_USAGE
    assert run(["bench", "--kind", "random", "--sizes", "a,b"], capsys)[0] == EXIT_USAGE


def test_invalid_input(tmp_path, capsys):
    assert run(["ordinary2d", str(tmp_path / "missing.json")], capsys)[0] == EXIT_INVALID
    assert run(["ordinary2d", write(tmp_path, "bad.json", "{not json")], capsys)[0] == EXIT_INVALID
    crossing_twice = {"pseudolines": [
        {"vertices": [["0", "1"], ["1", "-1"], ["2", "1"]], "left_slope": "0", "right_slope": "0"},
        {"vertices": [["0", "0"]], "left_slope": "0", "right_slope": "0"},
        {"vertices": [["0", "0"]], "left_slope": "1", "right_slope": "1"},
    ]}
    path = write(tmp_path, "twice.json", crossing_twice)
    assert run(["ordinary-pseudo", path], capsys)[0] == EXIT_INVALID
    # the hyperplane command does not take lines
    assert run(["ordinary-nd", write(tmp_path, "t.json", TRIANGLE)], capsys)[0] == EXIT_INVALID


def test_mono_pseudo_biased(tmp_path, capsys):
    ps = generate(GenSpec("biased", 14, seed=6, color_bias="blue"))
    path = write(tmp_path, "biased.json", dumps_arrangement(ps))
    code, out, _ = run(["mono-pseudo", path], capsys)
    assert code == EXIT_OK and "color blue" in out
    code, out, _ = run(["mono-pseudo", path, "--json"], capsys)
    result = json.loads(out)["result"]
    point = tuple(Fraction(x) for x in result["point"])
    cls = classify(enumerate_2d(ps), [p.color for p in ps])
    assert result["color"] == "blue" and point in cls.monochromatic["blue"]


def test_ordinary_pseudo_trace(tmp_path, capsys):
    ps = generate(GenSpec("wiring_diagram", 25, seed=2, max_bundle_size=6))
    path = write(tmp_path, "w.json", dumps_arrangement(ps))
    code, out, _ = run(["ordinary-pseudo", path, "--json", "--trace"], capsys)
    report = json.loads(out)
    assert code == EXIT_OK and isinstance(report["trace"], list)
    assert report["result"]["steps"] == len(report["trace"])
    code, _, _ = run(["ordinary-pseudo", path, "--no-validate"], capsys)
    assert code == EXIT_OK


def test_ordinary_nd_and_no_point(tmp_path, capsys):
    hs = generate(GenSpec("pencil_plus", 9, d=4, seed=3))
    code, out, _ = run(["ordinary-nd", write(tmp_path, "h.json", dumps_arrangement(hs)), "--json"], capsys)
    assert code == EXIT_OK and len(json.loads(out)["result"]["witnesses"]) == 4
    flat = {"d": 3, "hyperplanes": [{"normal": ["1", "0", "0"], "offset": "0"},
                                    {"normal": ["1", "0", "0"], "offset": "1"},
                                    {"normal": ["0", "1", "0"], "offset": "0"}]}
    code, out, _ = run(["ordinary-nd", write(tmp_path, "f.json", flat), "--json"], capsys)
    assert code == EXIT_HYPOTHESIS
    assert json.loads(out)["result"]["verdict"] == "no_intersection_point"


def test_verify_accepts_and_refutes(tmp_path, capsys):
    lines = generate(GenSpec("pencil_plus", 12, seed=4, max_bundle_size=3))
    path = write(tmp_path, "l.json", dumps_arrangement(lines))
    _, out, _ = run(["ordinary2d", path, "--json"], capsys)
    good = write(tmp_path, "claim.json", out)
    assert run(["verify", path, "--claim", good], capsys)[0] == EXIT_OK

    report = json.loads(out)
    x, y = (Fraction(v) for v in report["result"]["point"])
    for dx, dy in [(Fraction(1, 7), 0), (0, -1), (1, 1)]:
        report["result"]["point"] = [str(x + dx), str(y + dy)]
        bad = write(tmp_path, "bad.json", report)
        assert run(["verify", path, "--claim", bad], capsys)[0] == EXIT_INVALID
    # a genuine crossing with the wrong witnesses is refuted too
    report["result"]["point"] = [str(x), str(y)]
    report["result"]["witnesses"] = [0, 1]
    if sorted(json.loads(out)["result"]["witnesses"]) != [0, 1]:
        bad = write(tmp_path, "bad.json", report)
        assert run(["verify", path, "--claim", bad], capsys)[0] == EXIT_INVALID


def test_verify_monochromatic_claim(tmp_path, capsys):
    ps = generate(GenSpec("biased", 12, seed=1, color_bias="red"))
    path = write(tmp_path, "b.json", dumps_arrangement(ps))
    _, out, _ = run(["mono-pseudo", path, "--json"], capsys)
    claim = json.loads(out)["result"]
    assert run(["verify", path, "--claim", write(tmp_path, "c.json", claim)], capsys)[0] == EXIT_OK
    claim["color"] = "blue"
    assert run(["verify", path, "--claim", write(tmp_path, "c.json", claim)], capsys)[0] == EXIT_INVALID


def test_generate_and_render(tmp_path, capsys):
    code, out, _ = run(["generate", "--kind", "grid", "--n", "4", "--seed", "0"], capsys)
    assert code == EXIT_OK and len(json.loads(out)["lines"]) == 4
    code, out, _ = run(["generate", "--kind", "random", "--n", "7", "--d", "3", "--seed", "9"], capsys)
    assert json.loads(out)["d"] == 3
    path = write(tmp_path, "t.json", TRIANGLE)
    svg = tmp_path / "t.svg"
    code, _, _ = run(["render", path, "--out", str(svg), "--highlight", "1/2,0"], capsys)
    assert code == EXIT_OK and svg.read_text().startswith("<svg")
    assert run(["generate", "--kind", "grid", "--n", "4", "--d", "3"], capsys)[0] == EXIT_INVALID


def test_bench_json(capsys):
    code, out, _ = run(["bench", "--kind", "random", "--sizes", "64,128", "--seed", "1",
                        "--repeats", "2", "--json"], capsys)
    rows = json.loads(out)["rows"]
    assert code == EXIT_OK and [r["n"] for r in rows] == [64, 128]
    assert rows[0]["ratio"] is None and rows[1]["ratio"] > 0


def test_module_entry_point(tmp_path):
    path = write(tmp_path, "p.json", PENCIL)
    proc = subprocess.run([sys.executable, "-m", "ordinary", "ordinary2d", path],
                          capture_output=True, text=True)
    assert proc.returncode == EXIT_HYPOTHESIS
    assert "all lines concurrent" in proc.stderr
