"""
Suite runner: every check on every corpus item, optionally in worker
processes, with a deterministic report order
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Literal, Optional, Sequence

from pydantic import BaseModel, Field

from blockbetti.core.config import Config
from blockbetti.core.errors import BlockBettiError, BudgetExceeded
from blockbetti.harness.base import Evidence, InstanceDescriptor, Report, Verdict, Workbench
from blockbetti.harness.corpus import CorpusItem, parse_corpus

logger = logging.getLogger(__name__)


class ClaimCounts(BaseModel):
    passed: int = 0
    failed: int = 0
    skipped: int = 0


class SuiteResult(BaseModel):
    """Reports in emission order plus per-claim counts"""
    corpus: str
    checks: List[str]
    seed: int
    p: int
    instances: int
    counts: Dict[str, ClaimCounts] = Field(default_factory=dict)
    reports: List[Report] = Field(default_factory=list)

    @property
    def failed(self) -> int:
        return sum(c.failed for c in self.counts.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> "SuiteSummary":
        return SuiteSummary(
            corpus=self.corpus,
            checks=self.checks,
            seed=self.seed,
            p=self.p,
            instances=self.instances,
            counts=self.counts,
            ok=self.ok,
        )


class SuiteSummary(BaseModel):
    """First line of a JSON-lines report stream"""
    type: Literal["summary"] = "summary"
    corpus: str
    checks: List[str]
    seed: int
    p: int
    instances: int
    counts: Dict[str, ClaimCounts]
    ok: bool


def _run_item(item: CorpusItem, checks: Sequence[str], config: Config) -> List[Report]:
    """All applicable checks on one corpus item, sharing one workbench"""
    # imported here so worker processes resolve the registry themselves
    from blockbetti.harness import get_check

    bench = Workbench(config)
    reports = []
    for spec in checks:
        check = get_check(spec)
        if not check.applies(item.graph, bench):
            continue
        start = time.perf_counter()
        try:
            report = check.run(item.graph, bench, name=item.name, seed=item.seed)
        except BudgetExceeded as e:
            evidence = Evidence()
            evidence.skip("all", e)
            report = _report(check.name, item, config, evidence)
        except BlockBettiError as e:
            evidence = Evidence()
            evidence.require("completed", False, f"{type(e).__name__}: {e}")
            report = _report(check.name, item, config, evidence)
        report.wall_time = round(time.perf_counter() - start, 6)
        if report.verdict == Verdict.FAIL:
            logger.warning(
                "%s failed on %s: %s", check.name, report.instance.graph_hash, report.failures
            )
        reports.append(report)
    return reports


def _report(claim: str, item: CorpusItem, config: Config, evidence: Evidence) -> Report:
    return Report(
        claim=claim,
        instance=InstanceDescriptor.for_graph(item.graph, config.p, item.name, item.seed),
        verdict=evidence.verdict,
        computed=evidence.computed,
        failures=evidence.failures,
        skipped=evidence.skipped,
    )


def run_suite(
    corpus: str,
    checks: Sequence[str],
    seed: Optional[int] = None,
    config: Optional[Config] = None,
    on_item: Optional[Callable[[int], None]] = None,
    items: Optional[List[CorpusItem]] = None,
) -> SuiteResult:
    """
    Run ``checks`` over the corpus described by ``corpus``.

    Args:
        corpus: Corpus spec string (see harness.corpus)
        checks: Check names, optionally with ":option"
        seed: Seed for random corpora; defaults to the configured seed
        config: Budgets, field and worker settings
        on_item: Called with the number of finished items after each one
        items: Already parsed corpus items; ``corpus`` then only labels the run

    Returns:
        SuiteResult with reports sorted by (graph hash, claim, name)
    """
    from blockbetti.harness import get_check

    config = config or Config()
    seed = config.settings.seed if seed is None else seed
    checks = list(checks)
    for spec in checks:
        get_check(spec)
    if items is None:
        items = parse_corpus(corpus, seed)
    if config.settings.max_items:
        items = items[: config.settings.max_items]
    logger.info("running %d checks on %d graphs", len(checks), len(items))

    reports: List[Report] = []
    workers = config.settings.workers
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_item, item, checks, config) for item in items]
            for done, future in enumerate(futures, start=1):
                reports.extend(future.result())
                if on_item:
                    on_item(done)
    else:
        for done, item in enumerate(items, start=1):
            reports.extend(_run_item(item, checks, config))
            if on_item:
                on_item(done)

    reports.sort(key=lambda r: r.sort_key)
    counts: Dict[str, ClaimCounts] = {}
    for report in reports:
        c = counts.setdefault(report.claim, ClaimCounts())
        if report.verdict == Verdict.PASS:
            c.passed += 1
        elif report.verdict == Verdict.FAIL:
            c.failed += 1
        else:
            c.skipped += 1
    return SuiteResult(
        corpus=corpus,
        checks=[get_check(spec).name for spec in checks],
        seed=seed,
        p=config.p,
        instances=len(items),
        counts=dict(sorted(counts.items())),
        reports=reports,
    )
