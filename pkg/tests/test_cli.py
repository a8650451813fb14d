import io

import pytest

from gallailab.cli import EXIT_FOUND, EXIT_OK, EXIT_PARSE, EXIT_USAGE, run
from gallailab.fixtures import fixture
from gallailab.graph6 import parse_graph6, write_graph6

FIX = "walther-zamfirescu-12"


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_gen_then_verify_split(tmp_path):
    code, out, _ = call(["gen", "--class", "split", "--n", "9", "--count", "20", "--seed", "4"])
    assert code == EXIT_OK and len(out.splitlines()) == 20
    f = tmp_path / "split.g6"
    f.write_text(out)
    code, out, _ = call(["verify", str(f)])
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 20
    assert all(l.startswith("verdict=holds ") or l.startswith("verdict=not-applicable") for l in lines)
    assert sum(l.startswith("verdict=holds") for l in lines) >= 15


def test_intersect_fixture():
    code, out, _ = call(["intersect", "--fixture", FIX])
    assert code == EXIT_OK
    assert out == "order=10 count=0 method=deletion paths=-\n"
    code, out, _ = call(["intersect", "--fixture", FIX, "--method", "enumeration"])
    assert out == "order=10 count=0 method=enumeration paths=42\n"


def test_intersect_lists_vertices():
    code, out, _ = call(["intersect"], stdin="C~\n")  # K4
    assert out.splitlines() == ["order=4 count=4 method=deletion paths=-", "0", "1", "2", "3"]


def test_hunt_exhaustive_six():
    code, out, _ = call(["hunt", "--exhaustive", "6"])
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "scanned=27476 skipped=6391 found=0"


def test_hunt_iso_seven():
    code, out, _ = call(["hunt", "--exhaustive", "7", "--iso"])
    assert code == EXIT_OK and out.endswith("found=0\n")


def test_hunt_stream_with_counterexample():
    g6 = write_graph6(fixture(FIX))
    code, out, err = call(["hunt"], stdin=f"D?{{\n{g6}\nA?\n!!\n")
    assert code == EXIT_FOUND
    lines = out.splitlines()
    assert parse_graph6(lines[0]) == fixture(FIX)
    assert lines[-1] == "scanned=2 skipped=1 found=1"
    assert "line 4" in err


def test_hunt_workers_match_serial():
    g6 = write_graph6(fixture(FIX))
    stream = "\n".join(["D?{", g6, "Ch", g6, "E?~o"] * 3) + "\n"
    serial = call(["hunt"], stdin=stream)
    parallel = call(["hunt", "--workers", "2"], stdin=stream)
    assert serial[:2] == parallel[:2]


def test_verify_workers_output_order(tmp_path):
    _, out, _ = call(["gen", "--class", "2k2free", "--n", "8", "--count", "12", "--seed", "2"])
    f = tmp_path / "g.g6"
    f.write_text(out)
    assert call(["verify", str(f)])[1] == call(["verify", str(f), "--workers", "3"])[1]


def test_machine_output_is_byte_stable():
    argv = ["verify", "--class", "cochordal", "--n", "9", "--count", "10", "--seed", "11"]
    assert call(argv)[1] == call(argv)[1]


def test_recognize_and_dominate():
    code, out, _ = call(["recognize"], stdin="Dhc\n")  # C5
    assert code == EXIT_OK
    assert "2k2free=yes" in out and "split=no" in out and "chordal=no" in out
    code, out, _ = call(["dominate"], stdin="4 3\n0 1\n1 2\n2 3\n")
    assert out.startswith("path=0-1-2-3 order=4")
    code, out, _ = call(["dominate"], stdin="DQo\n")
    assert "error=not-2k2-free" in out


def test_longest_paths_listing(capsys):
    code, out, _ = call(["longest", "--paths"], stdin="3 2\n0 1\n0 2\n")
    assert out.splitlines() == ["order=3 count=1", "1-0-2"]
    code, out, _ = call(["longest", "--cap", "2"], stdin="Dhc\n")
    assert "capped=yes" in out and "more than 2" in capsys.readouterr().err


def test_edgelist_input_records():
    code, out, _ = call(["verify", "--input-format", "edgelist"], stdin="3 2\n0 1\n0 2\n2 1\n0 1\n")
    assert code == EXIT_OK and len(out.splitlines()) == 2


def test_parse_error_exit_code():
    code, out, err = call(["recognize"], stdin="D?{\nD?\n")
    assert code == EXIT_PARSE
    assert len(out.splitlines()) == 1 and "<stdin>:2" in err
    code, _, _ = call(["verify", "--input-format", "edgelist"], stdin="3 5\n0 1\n")
    assert code == EXIT_PARSE


def test_missing_file():
    code, _, err = call(["verify", "/nonexistent/file.g6"])
    assert code == EXIT_PARSE and "nonexistent" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["verify", "--cap", "0"],
        ["verify", "--fixture", "nope"],
        ["verify", "x.g6", "--fixture", FIX],
        ["gen"],
        ["verify", "--method", "magic"],
        ["hunt", "--exhaustive", "8", "--iso"],
    ],
)
def test_usage_errors(argv):
    assert call(argv)[0] == EXIT_USAGE


def test_human_format():
    code, out, _ = call(["verify", "--fixture", FIX, "--format", "human"])
    assert "verdict: not-applicable" in out


def test_violation_exit_code(monkeypatch):
    from gallailab import cli
    from gallailab.theorem import TheoremReport, Verdict

    fake = TheoremReport(Verdict.VIOLATED, frozenset({0}), frozenset(), 2)
    monkeypatch.setattr(cli, "verify_max_degree_theorem", lambda *a, **k: fake)
    assert call(["verify"], stdin="A_\n")[0] == EXIT_FOUND
