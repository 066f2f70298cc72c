import logging

from logging_config import ROOT_LOGGER_NAME, get_logger, resolve_level, setup_logging


def test_module_loggers_are_children_of_the_package_logger():
    logger = get_logger("rpm.solver")
    assert logger.name == "spiked_spectra.rpm.solver"
    assert logger.propagate
    assert get_logger().name == ROOT_LOGGER_NAME


def test_level_resolution(monkeypatch):
    assert resolve_level("debug") == logging.DEBUG
    assert resolve_level(logging.ERROR) == logging.ERROR
    monkeypatch.setenv("LOG_LEVEL", "warning")
    assert resolve_level() == logging.WARNING
    monkeypatch.setenv("LOG_LEVEL", "loud")
    assert resolve_level() == logging.INFO


def test_file_sink(tmp_path, monkeypatch):
    monkeypatch.delenv("LOG_FILE", raising=False)
    path = tmp_path / "logs" / "run.log"
    try:
        setup_logging("INFO", log_file=str(path))
        get_logger("tests").info("ladder converged")
        for handler in logging.getLogger(ROOT_LOGGER_NAME).handlers:
            handler.flush()
        assert "spiked_spectra.tests - INFO - ladder converged" in path.read_text()
    finally:
        setup_logging()
