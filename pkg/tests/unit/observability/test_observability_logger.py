from io import StringIO

import pytest

from semband.observability import (
    EventLogger,
    LogRecord,
    RunEvent,
    RunEventType,
    RunMeta,
    StreamLogSink,
)

META = RunMeta(label="hier_d2_L2_linsem_ucb", config_hash="0" * 16, started_at=100.0)


@pytest.mark.parametrize(
    ("level", "event_type", "expected"),
    [
        ("DEBUG", RunEventType.REPLICATION_START, True),
        ("INFO", RunEventType.INSTANCE_READY, True),
        ("INFO", RunEventType.REPLICATION_END, False),
        ("WARNING", RunEventType.EXPERIMENT_START, False),
        ("ERROR", RunEventType.EXPERIMENT_END, False),
    ],
)
def test_should_log_respects_level(
    level: str, event_type: RunEventType, expected: bool
) -> None:
    logger = EventLogger(level=level, sink=None, use_colors=False)
    assert logger._should_log(event_type) is expected


def test_format_event_renders_payload() -> None:
    logger = EventLogger(level="DEBUG", sink=None, use_colors=False)
    event = RunEvent(
        RunEventType.REPLICATION_END,
        "instance 2 rep 5",
        payload={"final_cum_regret": 12.5},
        timestamp=10.0,
    )

    rendered = logger._format_event(event)

    assert "REPLICATION_END" in rendered
    assert "instance 2 rep 5" in rendered
    assert "final_cum_regret=12.5" in rendered


async def test_on_event_emits_structured_record_to_sink() -> None:
    records: list[LogRecord] = []
    logger = EventLogger(level="INFO", sink=records.append, use_colors=False)
    await logger.on_experiment_start(META)
    event = RunEvent(RunEventType.INSTANCE_READY, "instance 0", timestamp=101.5)

    await logger.on_event(META, event)

    assert len(records) == 1
    assert records[0].event_type is RunEventType.INSTANCE_READY
    assert records[0].stage == "instance 0"
    assert records[0].relative_time == "00:00:01.500"


async def test_info_level_skips_replication_events() -> None:
    records: list[LogRecord] = []
    logger = EventLogger(level="INFO", sink=records.append)
    await logger.on_event(META, RunEvent(RunEventType.REPLICATION_START, "rep"))
    assert records == []


async def test_end_and_error_records() -> None:
    records: list[LogRecord] = []
    logger = EventLogger(level="INFO", sink=records.append)
    await logger.on_experiment_start(META)
    await logger.on_experiment_end(META, 2.5)
    await logger.on_experiment_error(META, RuntimeError("boom"))

    assert "completed in 2.50s" in records[0].message
    assert records[0].payload == {"duration_s": 2.5}
    assert "boom" in records[1].message
    assert records[1].stage == "system"


async def test_warning_level_skips_end_record() -> None:
    records: list[LogRecord] = []
    logger = EventLogger(level="WARNING", sink=records.append)
    await logger.on_experiment_end(META, 1.0)
    assert records == []


async def test_stream_sink_writes_lines() -> None:
    stream = StringIO()
    logger = EventLogger(level="DEBUG", sink=StreamLogSink(stream))
    await logger.on_event(META, RunEvent(RunEventType.EXPERIMENT_START, "run"))
    assert "EXPERIMENT_START" in stream.getvalue()


def test_colors_wrap_labels() -> None:
    logger = EventLogger(level="DEBUG", use_colors=True)
    rendered = logger._format_event(
        RunEvent(RunEventType.EXPERIMENT_END, "run", timestamp=1.0)
    )
    assert "\033[1m" in rendered
