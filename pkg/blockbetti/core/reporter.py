"""
Reporter - Write suite results in various formats
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from blockbetti.core.config import OutputConfig, OutputFormat
from blockbetti.harness.base import Verdict
from blockbetti.harness.suite import SuiteResult


class Reporter:
    """
    Write suite results in various formats.

    Supports:
    - JSON: the whole result as one document
    - JSONL: a summary line, then one line per report
    - Markdown: per-claim counts and the failing instances

    JSON and JSONL carry no timestamps, so a fixed seed gives byte-identical
    files; the timestamp lives in the default file name only.
    """

    def __init__(self, config: OutputConfig, include_timing: bool = False):
        self.config = config
        self.include_timing = include_timing
        self.output_dir = Path(config.directory)

    def save(
        self,
        result: SuiteResult,
        formats: Optional[List[OutputFormat]] = None,
        base_name: Optional[str] = None,
    ) -> List[str]:
        """
        Save results in the given formats.

        Args:
            result: Suite result to write
            formats: Formats to write (defaults to config)
            base_name: Base filename (without extension)

        Returns:
            List of saved file paths
        """
        formats = formats or self.config.formats
        if base_name is None:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            base_name = f"verify_{timestamp}"
        self.output_dir.mkdir(parents=True, exist_ok=True)

        saved_paths = []
        for fmt in formats:
            fmt = OutputFormat(fmt)
            if fmt == OutputFormat.JSON:
                path = self._save_json(result, base_name)
            elif fmt == OutputFormat.JSONL:
                path = self._save_jsonl(result, base_name)
            elif fmt == OutputFormat.MARKDOWN:
                path = self._save_markdown(result, base_name)
            else:
                continue
            saved_paths.append(path)
        return saved_paths

    def summary(self, result: SuiteResult) -> Dict[str, Any]:
        return result.summary().model_dump(mode="json")

    def stream_lines(self, result: SuiteResult) -> List[str]:
        """The JSON-lines stream: summary first, then reports in order"""
        lines = [json.dumps(self.summary(result), sort_keys=True, ensure_ascii=False)]
        for report in result.reports:
            lines.append(report.to_json_line(self.include_timing))
        return lines

    def document(self, result: SuiteResult) -> Dict[str, Any]:
        exclude = None if self.include_timing else {"reports": {"__all__": {"wall_time"}}}
        data = result.model_dump(mode="json", exclude=exclude)
        data["ok"] = result.ok
        return data

    def _save_json(self, result: SuiteResult, base_name: str) -> str:
        path = self.output_dir / f"{base_name}.json"
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.document(result), f, indent=2, sort_keys=True, ensure_ascii=False)
            f.write("\n")
        return str(path)

    def _save_jsonl(self, result: SuiteResult, base_name: str) -> str:
        path = self.output_dir / f"{base_name}.jsonl"
        with open(path, "w", encoding="utf-8") as f:
            for line in self.stream_lines(result):
                f.write(line + "\n")
        return str(path)

    def _save_markdown(self, result: SuiteResult, base_name: str) -> str:
        path = self.output_dir / f"{base_name}.md"
        md_lines = [
            f"# Verification Report: {result.corpus}",
            "",
            f"**Date:** {datetime.now().isoformat(timespec='seconds')}",
            f"**Checks:** {', '.join(result.checks)}",
            f"**Seed:** {result.seed}  **Field:** p = {result.p}  "
            f"**Instances:** {result.instances}",
            "",
            "## Results Summary",
            "",
            "| Claim | Pass | Fail | Skipped |",
            "|-------|------|------|---------|",
        ]
        for claim, c in result.counts.items():
            md_lines.append(f"| {claim} | {c.passed} | {c.failed} | {c.skipped} |")

        failures = [r for r in result.reports if r.verdict == Verdict.FAIL]
        if failures:
            md_lines.extend(
                [
                    "",
                    "## Failures",
                    "",
                    "| Claim | Graph | n | Edges | Reason |",
                    "|---|---|---|---|---|",
                ]
            )
            for r in failures:
                edges = " ".join(f"{u}-{v}" for u, v in r.instance.edges)
                md_lines.append(
                    f"| {r.claim} | `{r.instance.graph_hash}` | {r.instance.n} | {edges} | "
                    f"{'; '.join(r.failures)} |"
                )

        notes = sorted({note for r in result.reports for note in r.notes})
        if notes:
            md_lines.extend(["", "## Notes", ""] + [f"- {note}" for note in notes])

        md_lines.extend(["", "---", "*Generated by blockbetti*", ""])
        with open(path, "w", encoding="utf-8") as f:
            f.write("\n".join(md_lines))
        return str(path)

    @staticmethod
    def generate_summary_table(result: SuiteResult) -> str:
        """Plain-text summary table"""
        lines = [
            "=" * 60,
            f"  Corpus: {result.corpus}  (seed {result.seed}, p = {result.p})",
            "=" * 60,
            "",
            f"{'Claim':<30} {'Pass':>8} {'Fail':>8} {'Skip':>8}",
            "-" * 60,
        ]
        for claim, c in result.counts.items():
            lines.append(f"{claim:<30} {c.passed:>8} {c.failed:>8} {c.skipped:>8}")
        lines.extend(
            [
                "-" * 60,
                f"Result: {'all checks passed' if result.ok else f'{result.failed} failed'}",
                "=" * 60,
            ]
        )
        return "\n".join(lines)
