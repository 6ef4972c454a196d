"""Experiment configuration: INI parsing, CLI overrides and provenance hashing.

A config file has up to four sections::

    [graph]
    family = hierarchical
    degree = 3
    layers = 2

    [policy]
    kind = linsem_ts_gaussian
    sigma = 1.0

    [prior]
    weight_low = 0.25

    [run]
    horizon = 5000
    instances = 20
    reps = 20
    seed = 0
    output = hier_d3_L2.csv

Every key is optional; unknown sections and keys are rejected.
"""

from __future__ import annotations

import configparser
import dataclasses
import hashlib
import json
import os
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from difflib import get_close_matches
from enum import Enum
from pathlib import Path
from typing import Any, TypeVar

from semband.environment.params import PriorConfig
from semband.policies.factory import PolicySettings
from semband.types import (
    ConfigError,
    GraphFamily,
    InterventionalRule,
    KnownDistMode,
    NoiseKind,
    PolicyKind,
)

OUTPUT_DIR_ENV = "SEMBAND_OUTPUT_DIR"

E = TypeVar("E", bound=Enum)


@dataclass(frozen=True, slots=True)
class GraphConfig:
    """Graph family and its parameters.

    ``degree``/``layers`` apply to hierarchical graphs, ``nodes`` and
    ``structure_seed`` to enhanced parallel graphs, ``path`` to graph files.
    """

    family: GraphFamily = GraphFamily.HIERARCHICAL
    degree: int = 3
    layers: int = 2
    nodes: int = 5
    structure_seed: int = 0
    structures: int = 1
    path: str | None = None

    def __post_init__(self) -> None:
        if self.family is GraphFamily.HIERARCHICAL and (
            self.degree < 1 or self.layers < 1
        ):
            raise ConfigError("Hierarchical graphs need degree >= 1 and layers >= 1")
        if self.family is GraphFamily.ENHANCED_PARALLEL and self.nodes < 3:
            raise ConfigError("Enhanced parallel graphs need nodes >= 3")
        if self.family is GraphFamily.FILE and not self.path:
            raise ConfigError("Graph family 'file' requires a path")
        if self.structures < 1:
            raise ConfigError("structures must be at least 1")
        if self.structures > 1 and self.family is not GraphFamily.ENHANCED_PARALLEL:
            raise ConfigError("Only enhanced parallel graphs have random structures")


@dataclass(frozen=True, slots=True)
class RunConfig:
    horizon: int = 5000
    instances: int = 20
    reps: int = 20
    seed: int = 0
    output: str = "regret.csv"
    workers: int = 1
    label: str | None = None

    def __post_init__(self) -> None:
        if self.horizon < 1:
            raise ConfigError("horizon must be at least 1")
        if self.instances < 1 or self.reps < 1:
            raise ConfigError("instances and reps must be at least 1")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if self.seed < 0:
            raise ConfigError("seed must be non-negative")


@dataclass(frozen=True)
class ExperimentConfig:
    graph: GraphConfig = field(default_factory=GraphConfig)
    policy: PolicySettings = field(default_factory=PolicySettings)
    prior: PriorConfig = field(default_factory=PriorConfig)
    run: RunConfig = field(default_factory=RunConfig)

    @property
    def label(self) -> str:
        if self.run.label:
            return self.run.label
        g = self.graph
        if g.family is GraphFamily.HIERARCHICAL:
            graph = f"hier_d{g.degree}_L{g.layers}"
        elif g.family is GraphFamily.ENHANCED_PARALLEL:
            graph = f"par_N{g.nodes}"
        else:
            graph = Path(g.path or "graph").stem
        return f"{graph}_{self.policy.label}"

    def to_dict(self) -> dict[str, Any]:
        """Plain JSON-ready mapping of every resolved setting."""
        return {
            section: {
                k: v.value if isinstance(v, Enum) else v
                for k, v in dataclasses.asdict(getattr(self, section)).items()
            }
            for section in ("graph", "policy", "prior", "run")
        }


def compute_config_hash(config: ExperimentConfig) -> str:
    """Deterministic 16-hex-digit hash of the resolved configuration."""
    content = json.dumps(config.to_dict(), sort_keys=True)
    return hashlib.sha256(content.encode()).hexdigest()[:16]


def suggest_similar(target: str, candidates: Iterable[str]) -> str | None:
    matches = get_close_matches(target, list(candidates), n=1, cutoff=0.6)
    return matches[0] if matches else None


def _did_you_mean(target: str, candidates: Iterable[str]) -> str:
    suggestion = suggest_similar(target, candidates)
    return f" Did you mean '{suggestion}'?" if suggestion else ""


def _enum(kind: type[E]) -> Callable[[str], E]:
    def parse(raw: str) -> E:
        try:
            return kind(raw.strip().lower().replace("-", "_"))
        except ValueError:
            choices = [m.value for m in kind]
            raise ConfigError(
                f"'{raw}' is not one of {', '.join(choices)}."
                + _did_you_mean(raw, choices)
            ) from None

    return parse


def _bool(raw: str) -> bool:
    value = configparser.ConfigParser.BOOLEAN_STATES.get(raw.strip().lower())
    if value is None:
        raise ConfigError(f"'{raw}' is not a boolean")
    return value


def _optional(parse: Callable[[str], Any]) -> Callable[[str], Any]:
    def wrapped(raw: str) -> Any:
        return None if raw.strip().lower() in {"", "none"} else parse(raw)

    return wrapped


def _str(raw: str) -> str:
    return raw.strip()


_SECTIONS: Mapping[str, Mapping[str, Callable[[str], Any]]] = {
    "graph": {
        "family": _enum(GraphFamily),
        "degree": int,
        "layers": int,
        "nodes": int,
        "structure_seed": int,
        "structures": int,
        "path": _optional(_str),
    },
    "policy": {
        "kind": _enum(PolicyKind),
        "sigma": float,
        "c": _optional(float),
        "m": float,
        "max_sweeps": int,
        "restarts": int,
        "improvement_tol": float,
        "adaptive_m": _bool,
        "mode": _enum(KnownDistMode),
        "beta": _optional(float),
    },
    "prior": {
        "weight_low": float,
        "weight_high": float,
        "interventional_rule": _enum(InterventionalRule),
        "instance_jitter_sd": float,
        "normalize_columns": _bool,
        "noise_mean": float,
        "noise_variance": float,
        "noise_kind": _enum(NoiseKind),
        "noise_bound": _optional(float),
    },
    "run": {
        "horizon": int,
        "instances": int,
        "reps": int,
        "seed": int,
        "output": _str,
        "workers": int,
        "label": _optional(_str),
    },
}

_BUILDERS: Mapping[str, Callable[..., Any]] = {
    "graph": GraphConfig,
    "policy": PolicySettings,
    "prior": PriorConfig,
    "run": RunConfig,
}


def parse_config_text(text: str, source: str = "<config>") -> ExperimentConfig:
    """Parse INI text into a validated ``ExperimentConfig``.

    Raises:
        ConfigError: on syntax errors, unknown sections or keys, and values
            that fail conversion or validation.
    """
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text, source=source)
    except configparser.Error as e:
        raise ConfigError(f"{source}: {e}") from e

    kwargs: dict[str, dict[str, Any]] = {name: {} for name in _SECTIONS}
    for section in parser.sections():
        if section not in _SECTIONS:
            raise ConfigError(
                f"{source}: unknown section [{section}]."
                + _did_you_mean(section, _SECTIONS)
            )
        converters = _SECTIONS[section]
        for key, raw in parser.items(section):
            if key not in converters:
                raise ConfigError(
                    f"{source}: unknown key '{key}' in [{section}]."
                    + _did_you_mean(key, converters)
                )
            try:
                kwargs[section][key] = converters[key](raw)
            except ConfigError as e:
                raise ConfigError(f"{source}: [{section}] {key}: {e}") from None
            except ValueError:
                raise ConfigError(
                    f"{source}: [{section}] {key}: cannot parse '{raw}'"
                ) from None

    try:
        parts = {name: _BUILDERS[name](**kwargs[name]) for name in _SECTIONS}
    except ConfigError as e:
        raise ConfigError(f"{source}: {e}") from None
    return ExperimentConfig(**parts)


def load_config(path: str | Path) -> ExperimentConfig:
    """Read a config file; a relative graph ``path`` is resolved next to it."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"Cannot read config {path} ({e.strerror})") from e
    config = parse_config_text(text, source=str(path))
    graph_path = config.graph.path
    if graph_path and not Path(graph_path).is_absolute():
        resolved = str((path.parent / graph_path).resolve())
        config = dataclasses.replace(
            config, graph=dataclasses.replace(config.graph, path=resolved)
        )
    return config


def apply_overrides(config: ExperimentConfig, **overrides: Any) -> ExperimentConfig:
    """Override ``[run]`` keys; ``None`` values leave the key unchanged."""
    changes = {k: v for k, v in overrides.items() if v is not None}
    unknown = set(changes) - set(_SECTIONS["run"])
    if unknown:
        raise ConfigError(f"Cannot override unknown run keys: {sorted(unknown)}")
    if not changes:
        return config
    return dataclasses.replace(config, run=dataclasses.replace(config.run, **changes))


def resolve_output_path(output: str | Path) -> Path:
    """Absolute outputs stay put; relative ones land in ``$SEMBAND_OUTPUT_DIR``.

    Without the variable, relative paths resolve against the working directory.
    """
    path = Path(output).expanduser()
    if path.is_absolute():
        return path
    raw = os.getenv(OUTPUT_DIR_ENV)
    if raw:
        return Path(raw).expanduser() / path
    return path
