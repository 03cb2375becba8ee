import json
from fractions import Fraction as F

import pytest

from deltacover import Cover, Point, build_graph
from deltacover.cli import main
from deltacover.io import (
    FileFormatError,
    cover_to_text,
    graph_to_text,
    parse_cover_text,
    parse_graph_text,
    read_cover,
    write_cover,
    write_graph_file,
)
from conftest import cycle, k_n


def test_parse_minimal_graph():
    g = parse_graph_text("p 2 1\ne 1 2\n")
    assert (g.n, g.m) == (2, 1)


def test_parse_with_comments_and_roundtrip():
    g = cycle(4)
    text = graph_to_text(g, comments=("four cycle",))
    again = parse_graph_text(text)
    assert again == g
    assert graph_to_text(again, comments=("four cycle",)) == text


def test_parse_errors_carry_line_numbers():
    with pytest.raises(FileFormatError, match=":2:"):
        parse_graph_text("p 2 1\ne 1 5\n")
    with pytest.raises(FileFormatError, match=":1:"):
        parse_graph_text("e 1 2\n")
    with pytest.raises(FileFormatError, match="promises"):
        parse_graph_text("p 2 2\ne 1 2\n")
    with pytest.raises(FileFormatError, match="loop"):
        parse_graph_text("p 2 2\ne 1 1\ne 1 2\n")


def test_cover_text_roundtrip():
    g = cycle(4)
    cover = Cover.of(
        [Point.vertex(0), Point.on_edge(1, 2, F(1, 3)), Point.on_edge(2, 3, F(2, 3))],
        F(1, 3),
    )
    text = cover_to_text(cover)
    again = parse_cover_text(text, g, F(1, 3))
    assert again.points == cover.points
    assert cover_to_text(again) == text


def test_cover_single_interior_line():
    g = build_graph([(0, 1)])
    cover = parse_cover_text("i 1 2 1/2\n", g, F(1))
    assert cover.points == {Point.on_edge(0, 1, F(1, 2))}


def test_cover_six_point_denominator_three_roundtrip(tmp_path):
    g = cycle(4)
    pts = [Point.on_edge(0, 1, F(1, 3)), Point.on_edge(0, 1, F(2, 3)),
           Point.on_edge(1, 2, F(1, 3)), Point.on_edge(2, 3, F(2, 3)),
           Point.vertex(3), Point.vertex(0)]
    cover = Cover.of(pts, F(1, 3))
    path = tmp_path / "c.cover"
    write_cover(path, cover)
    assert read_cover(path, g, F(1, 3)).points == cover.points
    write_cover(tmp_path / "again.cover", read_cover(path, g, F(1, 3)))
    assert (tmp_path / "again.cover").read_text() == path.read_text()


def test_cover_parse_errors():
    g = build_graph([(0, 1)])
    with pytest.raises(FileFormatError, match=":1:"):
        parse_cover_text("i 1 2 3/0\n", g, F(1))
    with pytest.raises(FileFormatError, match=":2:"):
        parse_cover_text("v 1\nx 2\n", g, F(1))
    with pytest.raises(FileFormatError):
        parse_cover_text("i 1 3 1/2\n", g, F(1))  # edge not in graph


def test_cli_solve_verify_flow(tmp_path):
    gpath = tmp_path / "c4.graph"
    write_graph_file(gpath, cycle(4))
    cpath = tmp_path / "c4.cover"
    assert main(["solve", "--exact", "--delta", "1/1", "--input", str(gpath),
                 "--output", str(cpath)]) == 0
    assert main(["verify", "--delta", "1/1", "--input", str(gpath),
                 "--cover", str(cpath)]) == 0
    assert main(["verify", "--delta", "2/3", "--input", str(gpath),
                 "--cover", str(cpath)]) == 1


def test_cli_budget_exit_code(tmp_path):
    gpath = tmp_path / "k5.graph"
    write_graph_file(gpath, k_n(5))
    rc = main(["solve", "--exact", "--delta", "2/5", "--input", str(gpath),
               "--budget-nodes", "2"])
    assert rc == 2


def test_cli_usage_errors(tmp_path):
    assert main(["solve", "--input", "missing.graph"]) == 3
    gpath = tmp_path / "k2.graph"
    write_graph_file(gpath, build_graph([(0, 1)]))
    assert main(["solve", "--input", str(gpath)]) == 3  # no delta
    assert main(["tree", "--delta", "1/1", "--input", str(gpath.with_name("no.graph"))]) == 3


def test_cli_tree_and_approx(tmp_path, capsys):
    gpath = tmp_path / "p6.graph"
    write_graph_file(gpath, build_graph([(i, i + 1) for i in range(6)]))
    out = tmp_path / "t.cover"
    assert main(["tree", "--delta", "3/5", "--input", str(gpath),
                 "--output", str(out)]) == 0
    assert "size 5" in capsys.readouterr().out

    report = tmp_path / "r.json"
    assert main(["approx", "--delta", "2/3", "--input", str(gpath),
                 "--output", str(tmp_path / "a.cover"), "--report", str(report)]) == 0
    data = json.loads(report.read_text())
    assert data["regime"] == "exact"
    assert data["verified"] is True


def test_cli_gen_and_metadata(tmp_path):
    out = tmp_path / "fam.graph"
    meta = tmp_path / "fam.json"
    assert main(["gen", "--family", "triangles_center", "--k", "3",
                 "--output", str(out), "--metadata", str(meta)]) == 0
    g = parse_graph_text(out.read_text())
    assert (g.n, g.m) == (10, 12)
    data = json.loads(meta.read_text())
    assert data["params"]["k"] == 3
    assert {kv["delta"] for kv in data["known_values"]} == {"5/4", "1/1"}

    src = tmp_path / "src.graph"
    write_graph_file(src, k_n(3))
    assert main(["gen", "--family", "ugc_gadget", "--x", "1", "--variant", "path_apex",
                 "--source", str(src), "--output", str(tmp_path / "g.graph")]) == 0
    gg = parse_graph_text((tmp_path / "g.graph").read_text())
    assert (gg.n, gg.m) == (7, 9)


def test_cli_bench_small_suite(tmp_path):
    gdir = tmp_path
    write_graph_file(gdir / "c4.graph", cycle(4))
    write_graph_file(gdir / "k3.graph", k_n(3))
    config = {
        "deltas": ["3/5", "2/3", "1", "4/3"],
        "budget": {"seconds": 5},
        "instances": [
            {"id": "c4", "file": "c4.graph"},
            {"id": "k3", "file": "k3.graph"},
        ],
    }
    cfg = gdir / "suite.json"
    cfg.write_text(json.dumps(config))
    csv_path = gdir / "rows.csv"
    summary_path = gdir / "summary.json"
    assert main(["bench", "--config", str(cfg), "--csv", str(csv_path),
                 "--summary", str(summary_path)]) == 0
    lines = csv_path.read_text().strip().splitlines()
    assert len(lines) == 9  # header + 8 rows
    header = lines[0].split(",")
    assert header[:6] == ["instance", "family", "n", "m", "delta", "regime"]
    summary = json.loads(summary_path.read_text())
    assert summary["rows"] == 8
    assert summary["all_verified"] is True
    for regime, agg in summary["regimes"].items():
        assert agg["violations"] == 0


def test_cli_bench_empty_suite(tmp_path):
    cfg = tmp_path / "empty.json"
    cfg.write_text(json.dumps({"deltas": [], "instances": []}))
    csv_path = tmp_path / "rows.csv"
    assert main(["bench", "--config", str(cfg), "--csv", str(csv_path)]) == 0
    lines = csv_path.read_text().strip().splitlines()
    assert len(lines) == 1  # header only
