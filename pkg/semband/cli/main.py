"""Main CLI entry point for semband commands."""

import functools
import logging
from collections.abc import Callable
from typing import Any, TypeVar

try:
    import click
except ImportError:
    raise ImportError(
        "The semband CLI requires extra dependencies. "
        "Install them with: pip install 'semband[cli]'"
    ) from None

from semband.types import (
    ConfigError,
    DomainError,
    ExportError,
    GraphError,
    NumericalError,
    SembandError,
)

F = TypeVar("F", bound=Callable[..., Any])

EXIT_INPUT_ERROR = 2
EXIT_NUMERICAL_ERROR = 3


def exit_code_for(error: SembandError) -> int:
    """2 for bad input (config, graph, domain, I/O), 3 for numerical failures."""
    if isinstance(error, ConfigError | GraphError | DomainError | ExportError):
        return EXIT_INPUT_ERROR
    if isinstance(error, NumericalError):
        return EXIT_NUMERICAL_ERROR
    return 1


def handle_errors(func: F) -> F:
    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except SembandError as e:
            click.echo(f"Error: {e}", err=True)
            raise SystemExit(exit_code_for(e)) from e

    return wrapper  # type: ignore[return-value]


@click.group()
@click.version_option(package_name="semband")
@click.option("--log-level", default="WARNING", help="Python logging level")
def cli(log_level: str) -> None:
    """semband - causal bandit experiments over linear SEMs."""
    logging.basicConfig(
        level=getattr(logging, log_level.upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )


@cli.command("run")
@click.argument("config", type=click.Path(exists=True, dir_okay=False))
@click.option("--seed", type=int, help="Override [run] seed")
@click.option("--out", "-o", help="Override [run] output CSV path")
@click.option("--horizon", type=int, help="Override [run] horizon")
@click.option("--instances", type=int, help="Override [run] instances")
@click.option("--reps", type=int, help="Override [run] reps")
@click.option("--workers", type=int, help="Worker processes for replications")
@click.option("--verbose", "-v", is_flag=True, help="Stream run events to stderr")
@handle_errors
def run_command_cli(
    config: str,
    seed: int | None,
    out: str | None,
    horizon: int | None,
    instances: int | None,
    reps: int | None,
    workers: int | None,
    verbose: bool,
) -> None:
    """Run one experiment and write its regret CSV."""
    from semband.cli.commands.run import run_command
    from semband.harness.config import apply_overrides, load_config

    resolved = apply_overrides(
        load_config(config),
        seed=seed,
        output=out,
        horizon=horizon,
        instances=instances,
        reps=reps,
        workers=workers,
    )
    run_command(resolved, verbose)


@cli.command("sweep")
@click.argument("config_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--out", "-o", help="Write the summary table to this CSV")
@click.option("--workers", type=int, help="Worker processes for replications")
@handle_errors
def sweep_command_cli(config_dir: str, out: str | None, workers: int | None) -> None:
    """Run every *.ini config in a directory and summarize final regret."""
    from semband.cli.commands.sweep import sweep_command

    sweep_command(config_dir, out, workers)


@cli.command("inspect")
@click.argument("config", type=click.Path(exists=True, dir_okay=False))
@click.option("--csv", "csv_path", help="Also write the values as key,value CSV")
@click.option("--seed", type=int, help="Override [run] seed")
@handle_errors
def inspect_command_cli(config: str, csv_path: str | None, seed: int | None) -> None:
    """Show graph statistics and regret-bound constants."""
    from semband.cli.commands.inspect import inspect_command
    from semband.harness.config import apply_overrides, load_config

    inspect_command(apply_overrides(load_config(config), seed=seed), csv_path)


@cli.group("gen-graph")
def gen_graph_group() -> None:
    """Emit a benchmark graph in the graph file format."""


@gen_graph_group.command("hierarchical")
@click.option("--degree", "-d", type=int, default=3, help="Nodes per layer")
@click.option("--layers", "-L", type=int, default=2, help="Number of layers")
@click.option("--seed", type=int, default=0, help="Seed for the edge weights")
@click.option("--out", "-o", help="Output file (default: stdout)")
@handle_errors
def gen_hierarchical_cli(degree: int, layers: int, seed: int, out: str | None) -> None:
    """Layered graph with fully connected consecutive layers."""
    from semband.cli.commands.gen_graph import gen_graph_command
    from semband.harness.generators import gen_hierarchical

    graph = gen_hierarchical(degree, layers)
    gen_graph_command(graph, f"hierarchical d={degree} L={layers}", seed, out)


@gen_graph_group.command("enhanced-parallel")
@click.option("--nodes", "-n", type=int, default=5, help="Node count N")
@click.option("--structure-seed", type=int, default=0, help="Seed for the structure")
@click.option("--seed", type=int, default=0, help="Seed for the edge weights")
@click.option("--out", "-o", help="Output file (default: stdout)")
@handle_errors
def gen_parallel_cli(
    nodes: int, structure_seed: int, seed: int, out: str | None
) -> None:
    """Parallel bandit with one random extra parent per node."""
    from semband.cli.commands.gen_graph import gen_graph_command
    from semband.environment.sampling import stream_rng
    from semband.harness.generators import gen_enhanced_parallel
    from semband.types import StreamPurpose

    rng = stream_rng(structure_seed, purpose=StreamPurpose.STRUCTURE)
    graph = gen_enhanced_parallel(nodes, rng)
    description = f"enhanced parallel N={nodes} structure seed {structure_seed}"
    gen_graph_command(graph, description, seed, out)


def main() -> None:
    """Main entry point."""
    cli()


if __name__ == "__main__":
    main()
