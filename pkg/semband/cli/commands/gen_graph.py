"""gen-graph command for CLI."""

from __future__ import annotations

from semband.environment.params import PriorConfig, sample_prior_center
from semband.environment.sampling import stream_rng
from semband.harness.config import resolve_output_path
from semband.harness.generators import GeneratedGraph
from semband.sem.graph_file import format_graph_text
from semband.types import ExportError, StreamPurpose


def gen_graph_command(
    graph: GeneratedGraph, description: str, seed: int, out: str | None = None
) -> None:
    """Draw prior-center weights for ``graph`` and emit it in the graph file format."""
    prior = PriorConfig()
    center = sample_prior_center(
        graph.dag, prior, stream_rng(seed, purpose=StreamPurpose.PRIOR_CENTER)
    )
    text = format_graph_text(
        graph.dag,
        center.obs_weights,
        center.int_weights,
        comment=f"{description}, weight seed {seed}",
    )
    if out is None:
        print(text, end="")
        return
    path = resolve_output_path(out)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise ExportError(f"Cannot write graph ({e.strerror})", path=str(path)) from e
    print(f"Graph written to {path}")
