import json

import pytest
from typer.testing import CliRunner

from blockbetti import __version__
from blockbetti.cli import app, main
from blockbetti.graphs.io import read_graphs

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for key in ("BLOCKBETTI_P", "BLOCKBETTI_CONFIRM_P", "BLOCKBETTI_WORKERS", "BLOCKBETTI_SEED"):
        monkeypatch.delenv(key, raising=False)


def _json(path):
    return json.loads(path.read_text())


def test_betti_on_triangle(tmp_path, graph, write_graph):
    path = write_graph(graph("K3"), "k3")
    out = tmp_path / "k3.json"
    result = runner.invoke(app, ["betti", "-g", str(path), "-o", str(out)])
    assert result.exit_code == 0, result.output
    data = _json(out)
    for side in ("monomial", "binomial"):
        entries = {(e["i"], e["j"]): e["beta"] for e in data[side]["entries"]}
        assert entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
        assert data[side]["total"] is True
        assert data[side]["analytics"]["reg"] == 1
        assert data[side]["analytics"]["single_extremal"] is True


def test_betti_window(tmp_path, graph, write_graph):
    path = write_graph(graph("star3"), "star3")
    out = tmp_path / "star3.json"
    args = ["betti", "-g", str(path), "--side", "binomial", "--window", "3,5;3,6", "-o", str(out)]
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    doc = _json(out)["binomial"]
    assert doc["total"] is False
    assert [[e["i"], e["j"], e["beta"]] for e in doc["entries"]] == [[3, 5, 2]]
    assert "analytics" not in doc


def test_betti_engine_and_field(tmp_path, graph, write_graph):
    path = write_graph(graph("P4"), "p4")
    out = tmp_path / "p4.json"
    args = ["betti", "-g", str(path), "--side", "monomial", "-e", "taylor", "--p", "3"]
    args += ["-o", str(out)]
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    assert _json(out)["monomial"]["char"] == 3
    assert "binomial" not in _json(out)


def test_betti_text_and_dot(tmp_path, graph, write_graph):
    path = write_graph(graph("K2"), "k2")
    dots = tmp_path / "dots"
    args = ["betti", "-g", str(path), "--format", "text", "--emit-dot", str(dots)]
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    assert (dots / "k2.dot").exists()
    assert "total:" in (dots / "k2.binomial.txt").read_text()


@pytest.mark.parametrize(
    "extra",
    [["--side", "neither"], ["--format", "xml"], ["--engine", "koszul"], ["--window", "3"]],
)
def test_betti_usage_errors(graph, write_graph, extra):
    path = write_graph(graph("K2"), "k2")
    assert main(["betti", "-g", str(path)] + extra) == 2


def test_budget_abort_exit_code(tmp_path, graph, write_graph):
    path = write_graph(graph("K3"), "k3")
    config = tmp_path / "tight.yaml"
    config.write_text("blockbetti:\n  budgets:\n    max_full_binomial_variables: 4\n")
    assert main(["betti", "-g", str(path), "--side", "binomial", "-c", str(config)]) == 3


def test_invalid_config_exit_code(tmp_path, graph, write_graph):
    path = write_graph(graph("K3"), "k3")
    config = tmp_path / "bad.yaml"
    config.write_text("blockbetti:\n  coefficients:\n    p: 4\n")
    assert main(["betti", "-g", str(path), "-c", str(config)]) == 2


def test_unreadable_graphs(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n2 x\n")
    assert main(["betti", "-g", str(bad)]) == 2
    assert main(["classify", "-g", str(tmp_path / "missing.txt")]) == 2


def test_groebner(tmp_path, graph, write_graph):
    path = write_graph(graph("P3"), "p3")
    out = tmp_path / "p3.json"
    result = runner.invoke(app, ["groebner", "-g", str(path), "-o", str(out)])
    assert result.exit_code == 0, result.output
    data = _json(out)
    assert data["initial_ideal"] == ["x1*y2", "x2*y3"]
    assert data["buchberger_agrees"] is True
    assert len(data["admissible_paths"]) == 2


def test_groebner_without_oracle(tmp_path, graph, write_graph):
    path = write_graph(graph("K3"), "k3")
    out = tmp_path / "k3.json"
    assert main(["groebner", "-g", str(path), "--no-oracle", "-o", str(out)]) == 0
    assert _json(out)["buchberger_agrees"] is None


def test_classify_forbidden_graph(tmp_path, graph, write_graph):
    path = write_graph(graph("T1"), "t1")
    out = tmp_path / "t1.json"
    assert main(["classify", "-g", str(path), "-o", str(out)]) == 0
    data = _json(out)
    assert data["predicted_single_extremal"] is False
    assert data["forbidden"]["id"] == "T1"


def test_analyze(tmp_path, graph, write_graph):
    path = write_graph(graph("paw"), "paw")
    out = tmp_path / "paw.json"
    assert main(["analyze", "-g", str(path), "-o", str(out)]) == 0
    data = _json(out)
    assert data["block_structure"]["f"] == 3
    assert data["block_structure"]["inner_vertices"] == [3]
    assert data["decomposition"]["gluing_vertices"] == [3]
    assert len(data["decomposition"]["components"]) == 2


def test_analyze_per_component(tmp_path, write_graph):
    from blockbetti.graphs.graph import Graph

    path = write_graph(Graph.from_edges(5, [(1, 2), (3, 4), (4, 5), (3, 5)]), "two")
    out = tmp_path / "two.json"
    assert main(["analyze", "-g", str(path), "--per-component", "-o", str(out)]) == 0
    assert [part["block_structure"]["f"] for part in _json(out)] == [2, 3]


def test_verify_writes_stream(tmp_path):
    out = tmp_path / "runs" / "out.jsonl"
    args = [
        "verify",
        "--corpus",
        "named:K2,P3",
        "--checks",
        "theorem-main,prop-product",
        "-o",
        str(out),
    ]
    assert main(args) == 0
    lines = out.read_text().splitlines()
    summary = json.loads(lines[0])
    assert summary["type"] == "summary"
    assert summary["ok"] is True
    assert len(lines) == 3


def test_verify_directory_output(tmp_path):
    out = tmp_path / "reports"
    assert main(["verify", "--corpus", "named:K3", "--checks", "projdim", "-o", str(out)]) == 0
    assert len(list(out.glob("verify_*.jsonl"))) == 1


def test_verify_stdout_stream():
    result = runner.invoke(app, ["verify", "--corpus", "named:K2", "--checks", "theorem-main"])
    assert result.exit_code == 0
    assert '"type": "summary"' in result.output


@pytest.mark.parametrize(
    "args",
    [
        ["--checks", "nope"],
        ["--corpus", "exhaustive:n<4"],
        ["--corpus", "no-such-corpus"],
        ["--format", "yaml"],
        ["--p", "6"],
    ],
)
def test_verify_usage_errors(args):
    assert main(["verify", "--corpus", "named:K2"] + args) == 2


def test_emitted_documents_parse_as_models(tmp_path, graph, write_graph):
    from blockbetti.classify import ClassificationVerdict
    from blockbetti.graphs import BlockStructure, Decomposition
    from blockbetti.harness import Report
    from blockbetti.resolutions import BettiTableDocument, TableAnalytics

    path = write_graph(graph("paw"), "paw")
    assert main(["betti", "-g", str(path), "-o", str(tmp_path / "b.json")]) == 0
    assert main(["classify", "-g", str(path), "-o", str(tmp_path / "c.json")]) == 0
    assert main(["analyze", "-g", str(path), "-o", str(tmp_path / "a.json")]) == 0
    stream = tmp_path / "v.jsonl"
    args = ["verify", "--corpus", "named:paw", "--checks", "prop-product", "-o", str(stream)]
    assert main(args) == 0

    betti = _json(tmp_path / "b.json")["binomial"]
    assert BettiTableDocument.model_validate(betti).pd == 3
    assert TableAnalytics.model_validate(betti["analytics"]).reg == 2
    assert not ClassificationVerdict.model_validate(_json(tmp_path / "c.json")).indecomposable
    analyzed = _json(tmp_path / "a.json")
    assert BlockStructure.model_validate(analyzed["block_structure"]).i == 1
    assert Decomposition.model_validate(analyzed["decomposition"]).s == 2
    report = Report.model_validate_json(stream.read_text().splitlines()[1])
    assert report.claim == "prop-product"


def test_generate_exhaustive(tmp_path):
    out = tmp_path / "graphs.jsonl"
    assert main(["generate", "--mode", "exhaustive", "--n-max", "4", "-o", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 7


def test_generate_random_graph6(tmp_path):
    out = tmp_path / "graphs.g6"
    args = ["generate", "--count", "5", "--n-max", "7", "--seed", "3", "-o", str(out)]
    assert main(args) == 0
    assert len(read_graphs(out)) == 5


def test_generate_unknown_mode(tmp_path):
    assert main(["generate", "--mode", "all", "-o", str(tmp_path / "g.jsonl")]) == 2


def test_schema_files(tmp_path):
    out = tmp_path / "schema"
    assert main(["schema", "-o", str(out)]) == 0
    names = sorted(p.name for p in out.iterdir())
    assert len(names) == 9
    assert "SuiteSummary.schema.json" in names
    assert "BettiTableDocument.schema.json" in names
    assert _json(out / "Report.schema.json")["title"] == "Report"


@pytest.mark.parametrize("command", ["checks", "corpora"])
def test_listing_commands(command):
    assert runner.invoke(app, [command]).exit_code == 0


def test_version():
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert __version__ in result.output
