import pytest

from astopo.cli import run_cli
from astopo.io import parse_edge_list, read_curve_csv


def read_summary(path):
    rows = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        name, value = line.split(": ", 1)
        rows[name] = value
    return rows


@pytest.fixture
def small_ig(tmp_path):
    path = tmp_path / "ig.txt"
    assert run_cli(["generate", "--model", "ig", "--n", "500", "--seed", "1", "--out", str(path)]) == 0
    return path


def test_generate_writes_edge_list(small_ig):
    with open(small_ig) as fh:
        g, rep = parse_edge_list(fh)
    assert (g.node_count, g.edge_count) == (500, 7 + 3 * 492)
    assert rep.duplicates_dropped == rep.self_loops_dropped == 0


def test_analyze_outputs(small_ig, tmp_path):
    out = tmp_path / "out"
    assert run_cli(["analyze", "--in", str(small_ig), "--outdir", str(out)]) == 0
    rows = read_summary(out / "summary.txt")
    assert list(rows) == ["N", "L", "gamma", "max_k", "max_Kt", "avg_Kt"]
    assert rows["N"] == "500" and rows["L"] == str(7 + 3 * 492)
    for name, header in [
        ("richclub.csv", ("r", "phi")),
        ("degree_ccdf.csv", ("k", "p")),
        ("triangles_ccdf.csv", ("kt", "p")),
    ]:
        with open(out / name) as fh:
            assert read_curve_csv(fh)[0] == header
    assert (out / "label_map.csv").read_text().startswith("label,id\n")


def test_analyze_custom_r_grid(small_ig, tmp_path):
    out = tmp_path / "out"
    assert run_cli(["analyze", "--in", str(small_ig), "--outdir", str(out),
                    "--r-grid", "0.01,0.1,1"]) == 0
    with open(out / "richclub.csv") as fh:
        _, pts = read_curve_csv(fh)
    assert [r for r, _ in pts] == [0.01, 0.1, 1.0]


@pytest.mark.parametrize("strategy", ["static", "adaptive", "random"])
def test_attack_writes_curve(small_ig, tmp_path, strategy):
    out = tmp_path / f"{strategy}.csv"
    assert run_cli(["attack", "--in", str(small_ig), "--strategy", strategy,
                    "--seed", "4", "--out", str(out)]) == 0
    with open(out) as fh:
        header, pts = read_curve_csv(fh)
    assert header == ("f", "s")
    assert pts[0] == (0.0, 1.0)


def test_missing_input_exit_2(tmp_path):
    assert run_cli(["analyze", "--in", str(tmp_path / "missing.txt"),
                    "--outdir", str(tmp_path / "out")]) == 2


def test_parse_error_exit_2(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("a b c\n")
    assert run_cli(["attack", "--in", str(bad), "--out", str(tmp_path / "x.csv")]) == 2


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["generate", "--model", "ba", "--out", "x"],
        ["generate", "--model", "ig", "--out", "x", "--bogus"],
        ["attack", "--in", "x", "--strategy", "betweenness", "--out", "y"],
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    assert run_cli(argv) == 1
    assert "usage" in capsys.readouterr().err


def test_invalid_parameter_exit_1(tmp_path):
    assert run_cli(["generate", "--model", "fba", "--n", "5", "--out", str(tmp_path / "x")]) == 1


def test_help_exit_0():
    assert run_cli(["--help"]) == 0


def test_generate_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for path in (a, b):
        run_cli(["generate", "--model", "fba", "--n", "800", "--seed", "3", "--out", str(path)])
    assert a.read_bytes() == b.read_bytes()
