import json

import pytest

from blockbetti.core.config import Config, OutputConfig, OutputFormat
from blockbetti.core.engine import VerificationEngine
from blockbetti.core.errors import UnknownNameError
from blockbetti.core.reporter import Reporter
from blockbetti.harness import Verdict, run_suite


@pytest.fixture
def small_result():
    return run_suite("named:K2,P3", ["theorem-main", "prop-product"])


def test_suite_runs_applicable_checks(small_result):
    assert small_result.instances == 2
    assert len(small_result.reports) == 2
    assert small_result.counts["theorem-main"].passed == 1
    assert small_result.counts["prop-product"].passed == 1
    assert small_result.ok
    assert small_result.failed == 0
    assert small_result.checks == ["theorem-main", "prop-product"]


def test_reports_are_sorted(small_result):
    keys = [r.sort_key for r in small_result.reports]
    assert keys == sorted(keys)
    assert all(r.wall_time is not None for r in small_result.reports)


def test_suite_rejects_unknown_checks_before_running():
    with pytest.raises(UnknownNameError):
        run_suite("named:K2", ["theorem-main", "nope"])


def test_max_items():
    config = Config.model_validate({"settings": {"max_items": 2}})
    result = run_suite("named:K2,K3,K4", ["theorem-main"], config=config)
    assert result.instances == 2
    assert sorted(r.instance.name for r in result.reports) == ["K2", "K3"]


def test_budget_skips_are_counted():
    config = Config.model_validate(
        {
            "budgets": {
                "max_monomial_variables": 2,
                "max_full_binomial_variables": 2,
                "max_window_binomial_variables": 2,
            }
        }
    )
    result = run_suite("named:K3", ["theorem-main"], config=config)
    assert result.counts["theorem-main"].skipped == 1
    assert result.reports[0].verdict == Verdict.SKIPPED_BUDGET
    assert result.ok


def test_progress_callback():
    done = []
    run_suite("named:K2,K3", ["projdim"], on_item=done.append)
    assert done == [1, 2]


def test_stream_lines(small_result):
    lines = Reporter(OutputConfig()).stream_lines(small_result)
    summary = json.loads(lines[0])
    assert summary["type"] == "summary"
    assert summary["ok"] is True
    assert summary["counts"]["theorem-main"] == {"passed": 1, "failed": 0, "skipped": 0}
    assert len(lines) == 3
    assert all("wall_time" not in line for line in lines[1:])


def test_stream_with_timing(small_result):
    lines = Reporter(OutputConfig(), include_timing=True).stream_lines(small_result)
    assert all("wall_time" in line for line in lines[1:])


def test_document(small_result):
    doc = Reporter(OutputConfig()).document(small_result)
    assert doc["ok"] is True
    assert doc["instances"] == 2
    assert "wall_time" not in doc["reports"][0]


def test_save_formats(tmp_path, small_result):
    reporter = Reporter(OutputConfig(directory=str(tmp_path)))
    paths = reporter.save(
        small_result,
        formats=[OutputFormat.JSON, OutputFormat.JSONL, OutputFormat.MARKDOWN, OutputFormat.TEXT],
        base_name="run",
    )
    assert [p.rsplit(".", 1)[1] for p in paths] == ["json", "jsonl", "md"]
    assert json.loads((tmp_path / "run.json").read_text())["ok"] is True
    assert len((tmp_path / "run.jsonl").read_text().splitlines()) == 3
    markdown = (tmp_path / "run.md").read_text()
    assert "| theorem-main | 1 | 0 | 0 |" in markdown
    assert "## Failures" not in markdown


def test_markdown_lists_notes(tmp_path):
    result = run_suite("named:P3", ["corollary-product"])
    Reporter(OutputConfig(directory=str(tmp_path))).save(
        result, formats=[OutputFormat.MARKDOWN], base_name="notes"
    )
    assert "## Notes" in (tmp_path / "notes.md").read_text()


def test_summary_table(small_result):
    table = Reporter.generate_summary_table(small_result)
    assert "theorem-main" in table
    assert "all checks passed" in table


def test_engine_run_and_save(tmp_path):
    engine = VerificationEngine(Config())
    with pytest.raises(RuntimeError):
        engine.save_results(str(tmp_path / "early.jsonl"))
    result = engine.run("named:K2,P3", ["theorem-main", "prop-product"], verbose=False)
    assert result.ok
    paths = engine.save_results(str(tmp_path / "out" / "results.jsonl"))
    assert paths == [str(tmp_path / "out" / "results.jsonl")]
    lines = (tmp_path / "out" / "results.jsonl").read_text().splitlines()
    assert json.loads(lines[0])["instances"] == 2


def test_identical_seeds_give_identical_streams():
    reporter = Reporter(OutputConfig())
    a = run_suite("random:4:n<=6", ["theorem-main", "prop-product"], seed=5)
    b = run_suite("random:4:n<=6", ["theorem-main", "prop-product"], seed=5)
    assert reporter.stream_lines(a) == reporter.stream_lines(b)


@pytest.mark.slow
def test_worker_count_does_not_change_the_stream():
    reporter = Reporter(OutputConfig())
    serial = run_suite("exhaustive:n<=5", ["theorem-main", "prop-product", "hope"])
    config = Config.model_validate({"settings": {"workers": 2}})
    parallel = run_suite("exhaustive:n<=5", ["theorem-main", "prop-product", "hope"], config=config)
    assert reporter.stream_lines(serial) == reporter.stream_lines(parallel)
    assert serial.ok


@pytest.mark.slow
def test_acceptance_corpus_passes():
    checks = [
        "theorem-main",
        "corollary-product",
        "prop-product",
        "hope-ii-iii",
        "groebner-oracle",
        "engine-oracles",
    ]
    result = run_suite("builtin:acceptance", checks)
    failures = [r.failures for r in result.reports if r.verdict == Verdict.FAIL]
    assert not failures


@pytest.mark.slow
def test_theorem_main_on_every_indecomposable_graph_to_six():
    result = run_suite("exhaustive:n<=6:indecomposable", ["theorem-main"])
    counts = result.counts["theorem-main"]
    assert (counts.passed, counts.failed, counts.skipped) == (13, 0, 0)


@pytest.mark.slow
def test_theorem_main_monomial_side_to_ten():
    result = run_suite("exhaustive:n<=10:indecomposable", ["theorem-main:monomial"])
    counts = result.counts["theorem-main"]
    assert counts.failed == 0
    assert counts.passed > 0
    assert counts.passed + counts.skipped == result.instances
    for report in result.reports:
        if report.verdict == Verdict.SKIPPED_BUDGET:
            assert [s.side for s in report.skipped] == ["monomial"]
    assert max(r.instance.n for r in result.reports if r.verdict == Verdict.PASS) >= 7


@pytest.mark.slow
def test_products_on_every_decomposable_graph_to_six():
    result = run_suite("exhaustive:n<=6:decomposable", ["prop-product", "corollary-product"])
    for claim in ("prop-product", "corollary-product"):
        counts = result.counts[claim]
        assert (counts.passed, counts.failed, counts.skipped) == (25, 0, 0)
    for report in result.reports:
        if report.claim == "prop-product":
            assert report.computed["support_separation"] is True
        else:
            assert any("printed exponent" in note for note in report.notes)


@pytest.mark.slow
def test_hope_agreement_on_every_indecomposable_graph_to_nine():
    result = run_suite("exhaustive:n<=9:indecomposable", ["hope-ii-iii"])
    counts = result.counts["hope-ii-iii"]
    assert counts.failed == 0
    assert counts.passed == result.instances


@pytest.mark.slow
def test_hope_agreement_on_random_graphs():
    result = run_suite("random:1000:n<=25:indecomposable", ["hope-ii-iii"], seed=7)
    counts = result.counts["hope-ii-iii"]
    assert result.instances == 1000
    assert (counts.passed, counts.failed, counts.skipped) == (1000, 0, 0)
