"""
blockbetti CLI - Command line interface for block graph Betti computations
and verification suites
"""

import json
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, List, Optional

import click
import typer
from rich.console import Console

app = typer.Typer(
    name="blockbetti",
    help="blockbetti - Betti tables of binomial edge ideals of block graphs",
    add_completion=False,
)

console = Console()
err_console = Console(stderr=True)

logger = logging.getLogger("blockbetti")


def _setup_logging(verbose: bool) -> None:
    from rich.logging import RichHandler

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


@contextmanager
def _errors():
    """Map library errors to messages and exit codes"""
    from pydantic import ValidationError

    from blockbetti.core.errors import BlockBettiError, BudgetExceeded

    try:
        yield
    except BudgetExceeded as e:
        err_console.print(f"[red]Budget exceeded: {e}[/red]")
        raise typer.Exit(e.exit_code)
    except BlockBettiError as e:
        err_console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(e.exit_code)
    except ValidationError as e:
        err_console.print(f"[red]Invalid configuration: {e}[/red]")
        raise typer.Exit(2)
    except OSError as e:
        err_console.print(f"[red]{e}[/red]")
        raise typer.Exit(2)


def _load_config(
    config: Optional[Path],
    p: Optional[int] = None,
    workers: Optional[int] = None,
    seed: Optional[int] = None,
):
    from dotenv import load_dotenv

    from blockbetti.core.config import Config

    load_dotenv()
    cfg = Config.from_yaml(str(config)) if config else Config()
    cfg = cfg.with_env_overrides()
    data = cfg.model_dump()
    if p is not None:
        data["coefficients"]["p"] = p
    if workers is not None:
        data["settings"]["workers"] = workers
    if seed is not None:
        data["settings"]["seed"] = seed
    return Config.model_validate(data)


def _emit(data: Any, output: Optional[Path]) -> None:
    text = json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
    if output:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text + "\n", encoding="utf-8")
        err_console.print(f"[green]Written to: {output}[/green]")
    else:
        typer.echo(text)


def _parse_window(text: Optional[str]):
    if not text:
        return None
    from blockbetti.core.errors import BlockBettiError

    window = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            i, j = (int(x) for x in part.split(","))
        except ValueError:
            raise BlockBettiError(f"window entries look like 'i,j', got '{part}'") from None
        window.append((i, j))
    return window


def _emit_dot(directory: Optional[Path], g, name: str, highlight: List[int] = ()) -> None:
    if directory is None:
        return
    from blockbetti.graphs.io import write_dot

    path = write_dot(g, Path(directory) / f"{name}.dot", name=name, highlight=highlight)
    err_console.print(f"[green]DOT written to: {path}[/green]")


GRAPH_OPTION = typer.Option(
    ..., "--graph", "-g", help="Graph file: edge list, graph6, or JSON {n, edges}"
)
CONFIG_OPTION = typer.Option(None, "--config", "-c", help="Path to configuration YAML file")
OUTPUT_OPTION = typer.Option(None, "--output", "-o", help="Write JSON here instead of stdout")
VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Debug logging")


@app.command()
def analyze(
    graph: Path = GRAPH_OPTION,
    per_component: bool = typer.Option(
        False, "--per-component", help="Analyze each connected component separately"
    ),
    emit_dot: Optional[Path] = typer.Option(
        None, "--emit-dot", help="Directory for a Graphviz rendering of the graph"
    ),
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """
    Block structure and decomposition of a block graph.

    Example:
        blockbetti analyze -g bowtie.txt
    """
    _setup_logging(verbose)
    from blockbetti.graphs import block_structure, connected_components, decompose, graph_hash
    from blockbetti.graphs.io import read_graph

    with _errors():
        g = read_graph(graph)
        parts = connected_components(g) if per_component else [g]
        results = []
        for part in parts:
            bs = block_structure(part)
            results.append(
                {
                    "graph": {"n": part.n, "edges": part.edges, "hash": graph_hash(part)},
                    "labels": [part.label(v) for v in part.vertices],
                    "block_structure": bs.model_dump(mode="json"),
                    "decomposition": decompose(part).model_dump(mode="json"),
                }
            )
        inner = [] if per_component else results[0]["block_structure"]["inner_vertices"]
        _emit_dot(emit_dot, g, graph.stem, inner)
        _emit(results if per_component else results[0], output)


@app.command()
def groebner(
    graph: Path = GRAPH_OPTION,
    oracle: bool = typer.Option(
        True, "--oracle/--no-oracle", help="Compare with Buchberger's algorithm when in budget"
    ),
    config: Optional[Path] = CONFIG_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """
    Generators of J_G, admissible paths and the initial ideal.

    Example:
        blockbetti groebner -g paw.txt
    """
    _setup_logging(verbose)
    from blockbetti.core.errors import BudgetExceeded
    from blockbetti.graphs.io import read_graph
    from blockbetti.groebner import (
        admissible_paths,
        binomial_generators,
        buchberger_initial_ideal,
        initial_ideal,
    )

    with _errors():
        cfg = _load_config(config)
        g = read_graph(graph)
        ideal = initial_ideal(g)
        result: Dict[str, Any] = {
            "n": g.n,
            "generators": [str(b) for b in binomial_generators(g)],
            "admissible_paths": [p.to_dict() for p in admissible_paths(g)],
            "initial_ideal": ideal.to_strings(),
            "buchberger_agrees": None,
        }
        if oracle:
            try:
                theirs = buchberger_initial_ideal(g, cfg.budgets.max_buchberger_variables)
                result["buchberger_agrees"] = theirs == ideal
            except BudgetExceeded as e:
                logger.info("Buchberger oracle skipped: %s", e)
        _emit(result, output)
        if result["buchberger_agrees"] is False:
            raise typer.Exit(1)


@app.command()
def betti(
    graph: Path = GRAPH_OPTION,
    side: str = typer.Option(
        "both", "--side", "-s", help="monomial (S/in J_G), binomial (S/J_G) or both"
    ),
    window: Optional[str] = typer.Option(
        None, "--window", "-w", help="Bidegrees to compute, e.g. '3,4;3,5'"
    ),
    engine: str = typer.Option(
        "lattice", "--engine", "-e", help="Monomial-side engine: lattice, hochster or taylor"
    ),
    p: Optional[int] = typer.Option(None, "--p", help="Field characteristic (prime or 0)"),
    format: str = typer.Option("json", "--format", "-f", help="Output format: json or text"),
    emit_dot: Optional[Path] = typer.Option(
        None, "--emit-dot", help="Directory for the graph rendering and text tables"
    ),
    config: Optional[Path] = CONFIG_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """
    Graded Betti tables of S/J_G and S/in_<(J_G).

    Example:
        blockbetti betti -g k3.txt --side both
    """
    _setup_logging(verbose)
    from blockbetti.core.errors import BlockBettiError
    from blockbetti.graphs.io import read_graph
    from blockbetti.groebner import initial_ideal
    from blockbetti.resolutions import betti_binomial, get_engine, table_analytics

    if side not in ("monomial", "binomial", "both"):
        err_console.print(f"[red]Unknown side: {side}[/red]")
        raise typer.Exit(2)
    if format not in ("json", "text"):
        err_console.print(f"[red]Unknown format: {format}[/red]")
        raise typer.Exit(2)

    with _errors():
        cfg = _load_config(config, p=p)
        g = read_graph(graph)
        bidegrees = _parse_window(window)
        tables = {}
        if side in ("monomial", "both"):
            monomial_engine = get_engine(engine, cfg.p, cfg.budgets)
            if monomial_engine.side != "monomial":
                raise BlockBettiError(f"engine '{engine}' does not resolve monomial ideals")
            tables["monomial"] = monomial_engine.compute(initial_ideal(g), bidegrees)
        if side in ("binomial", "both"):
            tables["binomial"] = betti_binomial(g, cfg.p, bidegrees, cfg.budgets)

        if emit_dot is not None:
            _emit_dot(emit_dot, g, graph.stem)
            for name, table in tables.items():
                path = Path(emit_dot) / f"{graph.stem}.{name}.txt"
                path.write_text(table.render() + "\n", encoding="utf-8")

        if format == "text":
            for name, table in tables.items():
                console.print(f"[bold]{name}[/bold] (p = {table.char})")
                console.print(table.render(), highlight=False)
            return
        result = {}
        for name, table in tables.items():
            entry = table.to_document().model_dump(mode="json")
            if table.is_total and table.entries:
                entry["analytics"] = table_analytics(table).model_dump(mode="json")
            result[name] = entry
        _emit(result, output)


@app.command()
def classify(
    graph: Path = GRAPH_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """
    Predict whether S/J_G has a single extremal Betti number.

    Example:
        blockbetti classify -g t1.txt
    """
    _setup_logging(verbose)
    from blockbetti.classify import classify as classify_graph
    from blockbetti.graphs.io import read_graph

    with _errors():
        verdict = classify_graph(read_graph(graph))
        _emit(verdict.model_dump(mode="json"), output)


@app.command()
def verify(
    corpus: str = typer.Option(
        "acceptance", "--corpus", help="Corpus spec, e.g. 'exhaustive:n<=6' or 'named:K3,P4'"
    ),
    checks: str = typer.Option(
        "theorem-main,prop-product", "--checks", help="Comma-separated check names"
    ),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help="Seed for random corpora"),
    workers: Optional[int] = typer.Option(None, "--workers", "-j", help="Worker processes"),
    p: Optional[int] = typer.Option(None, "--p", help="Field characteristic (prime or 0)"),
    max_items: Optional[int] = typer.Option(None, "--max-items", help="Limit the corpus size"),
    format: str = typer.Option(
        "jsonl", "--format", "-f", help="Stdout format: jsonl, json or text"
    ),
    output: Optional[Path] = typer.Option(
        None,
        "--output",
        "-o",
        help="Report file (.json, .jsonl, .md) or directory for the configured formats",
    ),
    config: Optional[Path] = CONFIG_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """
    Run verification checks over a graph corpus.

    Example:
        blockbetti verify --corpus 'exhaustive:n<=6' --checks theorem-main,prop-product
    """
    _setup_logging(verbose)
    from blockbetti.core.engine import VerificationEngine

    if format not in ("jsonl", "json", "text"):
        err_console.print(f"[red]Unknown format: {format}[/red]")
        raise typer.Exit(2)

    with _errors():
        cfg = _load_config(config, p=p, workers=workers, seed=seed)
        if max_items is not None:
            cfg.settings.max_items = max_items
        check_list = [c.strip() for c in checks.split(",") if c.strip()]
        engine = VerificationEngine(cfg)
        result = engine.run(corpus, check_list, verbose=format == "text" or output is not None)

        if output is not None:
            if output.suffix:
                paths = engine.save_results(str(output))
            else:
                cfg.output.directory = str(output)
                paths = VerificationEngine(cfg).reporter.save(result)
            for path in paths:
                err_console.print(f"[green]Results saved to: {path}[/green]")
        elif format == "jsonl":
            for line in engine.reporter.stream_lines(result):
                typer.echo(line)
        elif format == "json":
            typer.echo(json.dumps(engine.reporter.document(result), indent=2, sort_keys=True))
        else:
            typer.echo(engine.reporter.generate_summary_table(result))

    if not result.ok:
        raise typer.Exit(1)


@app.command()
def generate(
    mode: str = typer.Option("random", "--mode", "-m", help="random or exhaustive"),
    count: int = typer.Option(100, "--count", "-n", help="Number of random graphs"),
    n_max: int = typer.Option(10, "--n-max", help="Largest vertex count"),
    max_clique: int = typer.Option(4, "--max-clique", "-k", help="Largest block size"),
    indecomposable: bool = typer.Option(
        False, "--indecomposable", help="Only indecomposable graphs"
    ),
    seed: int = typer.Option(42, "--seed", "-s", help="Random seed for reproducibility"),
    output: Path = typer.Option(
        Path("graphs.jsonl"), "--output", "-o", help="Output file (.jsonl or .g6)"
    ),
):
    """
    Generate random or exhaustive block graph corpora.

    Example:
        blockbetti generate --mode exhaustive --n-max 7 -o blocks7.g6
    """
    from blockbetti.graphs import enumerate_block_graphs, generate_block_graphs
    from blockbetti.graphs.io import to_graph6

    if mode not in ("random", "exhaustive"):
        err_console.print(f"[red]Unknown mode: {mode}[/red]")
        raise typer.Exit(2)

    with _errors():
        if mode == "random":
            graphs = generate_block_graphs(count, n_max, max_clique, indecomposable, seed)
        else:
            graphs = list(enumerate_block_graphs(n_max, True if indecomposable else None))

        output.parent.mkdir(parents=True, exist_ok=True)
        with open(output, "w", encoding="utf-8") as f:
            for g in graphs:
                if output.suffix == ".g6":
                    f.write(to_graph6(g) + "\n")
                else:
                    f.write(json.dumps({"n": g.n, "edges": g.edges}) + "\n")

    err_console.print(f"[green]Generated {len(graphs)} graphs to: {output}[/green]")


@app.command()
def checks():
    """
    List available verification checks.
    """
    from rich.table import Table

    from blockbetti.harness import list_checks

    table = Table(title="Available Checks")
    table.add_column("Name", style="cyan")
    table.add_column("Applies to", style="green")
    table.add_column("Description")
    for check in list_checks():
        table.add_row(check["name"], check["applies_to"], check["description"])
    console.print(table)


@app.command()
def corpora():
    """
    List built-in corpora.
    """
    from rich.table import Table

    from blockbetti.harness import list_builtin_corpora

    table = Table(title="Built-in Corpora")
    table.add_column("Name", style="cyan")
    table.add_column("Description")
    for corpus in list_builtin_corpora():
        table.add_row(corpus["name"], corpus["description"])
    console.print(table)


@app.command()
def schema(
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Directory for one <model>.schema.json per output model"
    ),
):
    """
    Print the JSON Schemas of every output document.
    """
    from blockbetti.classify import ClassificationVerdict
    from blockbetti.core.config import Config
    from blockbetti.graphs import BlockStructure, Decomposition
    from blockbetti.harness import Report, SuiteResult, SuiteSummary
    from blockbetti.resolutions import BettiTableDocument, TableAnalytics

    models = [
        BlockStructure,
        Decomposition,
        ClassificationVerdict,
        BettiTableDocument,
        TableAnalytics,
        Report,
        SuiteSummary,
        SuiteResult,
        Config,
    ]
    schemas = {m.__name__: m.model_json_schema() for m in models}
    if output is None:
        typer.echo(json.dumps(schemas, indent=2, sort_keys=True))
        return
    output.mkdir(parents=True, exist_ok=True)
    for name, body in schemas.items():
        (output / f"{name}.schema.json").write_text(
            json.dumps(body, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    err_console.print(f"[green]{len(schemas)} schemas written to: {output}[/green]")


@app.command()
def version():
    """
    Show version information.
    """
    from blockbetti import __version__

    console.print(f"blockbetti v{__version__}")


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting"""
    try:
        result = app(args=argv, standalone_mode=False, prog_name="blockbetti")
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return 2
    except click.exceptions.Abort:
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    raise SystemExit(main())
