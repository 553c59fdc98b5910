"""
Verification Engine - Main orchestrator for running check suites
"""

from pathlib import Path
from typing import List, Optional, Sequence

from blockbetti.core.config import Config
from blockbetti.core.reporter import Reporter
from blockbetti.harness.corpus import parse_corpus
from blockbetti.harness.suite import SuiteResult, run_suite


class VerificationEngine:
    """
    Main orchestrator for running check suites.

    Coordinates between:
    - Corpora (which graphs)
    - Checks (which claims)
    - Workbench caches and worker processes (the suite runner)
    - Reporter (output)
    """

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()
        self.reporter = Reporter(self.config.output, self.config.settings.include_timing)
        self.result: Optional[SuiteResult] = None

    def run(
        self,
        corpus: str,
        checks: Sequence[str],
        seed: Optional[int] = None,
        verbose: bool = True,
    ) -> SuiteResult:
        """
        Run the checks on a corpus.

        Args:
            corpus: Corpus spec string
            checks: Check names
            seed: Seed for random corpora (defaults to the configured seed)
            verbose: Show progress and the summary on the console

        Returns:
            The suite result, reports in deterministic order
        """
        from rich.console import Console
        from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn

        console = Console(stderr=True)
        seed = self.config.settings.seed if seed is None else seed
        items = parse_corpus(corpus, seed)
        if self.config.settings.max_items:
            items = items[: self.config.settings.max_items]

        if verbose:
            console.print(f"\n[bold blue]blockbetti[/bold blue] - {corpus}")
            console.print(
                f"Running {len(checks)} checks on {len(items)} graphs "
                f"(p = {self.config.p}, {self.config.settings.workers} workers)\n"
            )

        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
            console=console,
            disable=not verbose,
        ) as progress:
            task = progress.add_task("Verifying...", total=len(items))
            self.result = run_suite(
                corpus,
                checks,
                seed=seed,
                config=self.config,
                on_item=lambda done: progress.update(task, completed=done),
                items=items,
            )

        if verbose:
            self._print_summary(console)
        return self.result

    def _print_summary(self, console) -> None:
        """Print summary to console"""
        from rich.table import Table

        console.print("\n[bold green]═══ Verification Complete ═══[/bold green]\n")
        table = Table(title="Results Summary")
        table.add_column("Claim", style="cyan")
        table.add_column("Pass", justify="right")
        table.add_column("Fail", justify="right")
        table.add_column("Skipped", justify="right")
        for claim, c in self.result.counts.items():
            table.add_row(
                claim,
                str(c.passed),
                f"[red]{c.failed}[/red]" if c.failed else "0",
                str(c.skipped),
            )
        console.print(table)

        if self.result.ok:
            console.print("\n[bold green]All checks passed[/bold green]")
        else:
            console.print(f"\n[bold red]{self.result.failed} check(s) failed[/bold red]")

    def save_results(self, path: Optional[str] = None) -> List[str]:
        """
        Save results with the reporter; ``path`` overrides directory and
        base name and keeps its own format when it has a known suffix.
        """
        if self.result is None:
            raise RuntimeError("run() must be called before save_results()")
        if path is None:
            return self.reporter.save(self.result)
        target = Path(path)
        reporter = Reporter(
            self.config.output.model_copy(update={"directory": str(target.parent)}),
            self.config.settings.include_timing,
        )
        formats = {".json": ["json"], ".jsonl": ["jsonl"], ".md": ["markdown"]}.get(target.suffix)
        return reporter.save(self.result, formats=formats, base_name=target.stem)
