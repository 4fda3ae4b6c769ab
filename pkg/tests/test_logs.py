import logging

from selfsim.logs import subsystem_of, clear_logs, get_recent_logs, setup_runtime_logging
from selfsim.nilpotent.presentation import clear_presentations, get_presentation


def test_subsystem_names():
    assert subsystem_of("selfsim.nilpotent.subgroup") == "nilpotent"
    assert subsystem_of("selfsim.cli.rep") == "cli.rep"
    assert subsystem_of("selfsim") == "selfsim"
    assert subsystem_of("") == "root"
    assert subsystem_of("numpy.core") == "numpy"


def test_records_are_buffered():
    setup_runtime_logging("INFO")
    clear_logs()
    clear_presentations()
    get_presentation(2, 4)
    entries = get_recent_logs()
    assert any(e["subsystem"] == "nilpotent" and "N_{2,4}" in e["message"] for e in entries)
    assert get_recent_logs(min_level="ERROR") == []
    clear_logs()
    assert get_recent_logs() == []
    setup_runtime_logging("WARNING")


def test_exceptions_are_captured():
    setup_runtime_logging("WARNING")
    clear_logs()
    try:
        raise RuntimeError("boom")
    except RuntimeError:
        logging.getLogger("selfsim.selfsimilar").exception("failed")
    entry = get_recent_logs(limit=1)[0]
    assert entry["level"] == "ERROR"
    assert "boom" in entry["exception"]


def test_buffer_is_bounded():
    from selfsim.logs import LogBuffer

    buffer = LogBuffer(capacity=3)
    for position in range(5):
        buffer.append({"message": str(position)})
    assert [entry["message"] for entry in buffer.snapshot()] == ["2", "3", "4"]
    assert get_recent_logs(limit=0) == []
