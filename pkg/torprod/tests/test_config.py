import logging

import pytest

from src.config import Settings, configure_logging, load_settings
from src.utils.errors import ParseError


def test_defaults():
    settings = load_settings({})
    assert settings == Settings()
    assert (settings.seed, settings.workers, settings.trials, settings.log_level) == (0, 1, 100, "WARNING")


def test_environment_overrides():
    settings = load_settings({"TORPROD_SEED": "7", "TORPROD_WORKERS": "4", "TORPROD_LOG_LEVEL": "debug"})
    assert settings.seed == 7
    assert settings.workers == 4
    assert settings.log_level == "DEBUG"


@pytest.mark.parametrize("name, value", [
    ("TORPROD_WORKERS", "0"),
    ("TORPROD_TRIALS", "-1"),
    ("TORPROD_SEED", "seven"),
    ("TORPROD_LOG_LEVEL", "LOUD"),
])
def test_invalid_environment(name, value):
    with pytest.raises(ParseError):
        load_settings({name: value})


def test_configure_logging():
    configure_logging("INFO")
    assert logging.getLogger().level == logging.INFO
    configure_logging("WARNING")
