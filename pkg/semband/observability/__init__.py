"""Run events and observers for experiment progress."""

import inspect
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Protocol, runtime_checkable


class RunEventType(Enum):
    EXPERIMENT_START = "experiment_start"
    INSTANCE_READY = "instance_ready"
    REPLICATION_START = "replication_start"
    REPLICATION_END = "replication_end"
    EXPERIMENT_END = "experiment_end"


@dataclass(frozen=True, slots=True)
class RunEvent:
    """One lifecycle event of an experiment.

    ``stage`` names the unit the event is about, e.g. ``"instance 3"`` or
    ``"instance 3 rep 7"``.
    """

    type: RunEventType
    stage: str
    payload: dict[str, Any] | None = None
    timestamp: float = field(default_factory=time.time)


@dataclass(frozen=True, slots=True)
class RunMeta:
    """Experiment metadata handed to every observer hook."""

    label: str
    config_hash: str
    started_at: float | None = None


@runtime_checkable
class ObserverProtocol(Protocol):
    """Structural contract for experiment observers."""

    async def on_experiment_start(self, meta: RunMeta) -> None: ...

    async def on_event(self, meta: RunMeta, event: RunEvent) -> None: ...

    async def on_experiment_end(self, meta: RunMeta, duration_s: float) -> None: ...

    async def on_experiment_error(self, meta: RunMeta, error: Exception) -> None: ...


class Observer:
    """Optional base class for experiment observers; every hook is a no-op.

    Example:
        class Progress(Observer):
            async def on_event(self, meta, event):
                if event.type is RunEventType.REPLICATION_END:
                    print(event.stage, event.payload["final_cum_regret"])
    """

    async def on_experiment_start(self, meta: RunMeta) -> None:
        return None

    async def on_event(self, meta: RunMeta, event: RunEvent) -> None:
        return None

    async def on_experiment_end(self, meta: RunMeta, duration_s: float) -> None:
        return None

    async def on_experiment_error(self, meta: RunMeta, error: Exception) -> None:
        return None


def validate_observer(observer: object) -> None:
    """Validate observer contract and required async hook methods."""
    required_methods = tuple(
        name
        for name, obj in ObserverProtocol.__dict__.items()
        if callable(obj) and not name.startswith("_")
    )

    if not isinstance(observer, ObserverProtocol):
        missing = [
            name
            for name in required_methods
            if not callable(getattr(observer, name, None))
        ]
        if missing:
            raise TypeError(
                f"Observer {type(observer).__name__} is missing required hooks: "
                f"{', '.join(missing)}. Implement async methods matching "
                f"semband.observability.ObserverProtocol."
            )

    for name in required_methods:
        method = getattr(observer, name, None)
        if not callable(method) or not inspect.iscoroutinefunction(method):
            raise TypeError(
                f"Observer {type(observer).__name__}.{name} must be declared with "
                f"'async def' to match semband.observability.ObserverProtocol."
            )


from semband.observability.logger import (  # noqa: E402
    EventLogger,
    LogRecord,
    LogSink,
    StreamLogSink,
)

__all__ = [
    "EventLogger",
    "LogRecord",
    "LogSink",
    "Observer",
    "ObserverProtocol",
    "RunEvent",
    "RunEventType",
    "RunMeta",
    "StreamLogSink",
    "validate_observer",
]
