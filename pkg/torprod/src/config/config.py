# /src/config/config.py

"""Runtime settings read from the environment (and a .env file next to main.py)."""

__all__ = ["Settings", "load_settings", "configure_logging"]

import logging
import os
from typing import Mapping, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ValidationError, field_validator

from src.utils.errors import ParseError

load_dotenv()

LOG_FORMAT = "%(levelname)s: %(asctime)s %(name)s %(message)s"


class Settings(BaseModel):
    seed: int = 0
    workers: int = 1
    trials: int = 100
    log_level: str = "WARNING"

    @field_validator("workers")
    @classmethod
    def check_workers(cls, value: int) -> int:
        if value < 1:
            raise ValueError("TORPROD_WORKERS must be at least 1")
        return value

    @field_validator("trials")
    @classmethod
    def check_trials(cls, value: int) -> int:
        if value < 0:
            raise ValueError("TORPROD_TRIALS must be non-negative")
        return value

    @field_validator("log_level")
    @classmethod
    def check_log_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR"):
            raise ValueError(f"unknown log level {value}")
        return value


def load_settings(environ: Optional[Mapping[str, str]] = None) -> Settings:
    environ = os.environ if environ is None else environ
    raw = {}
    for name in ("seed", "workers", "trials", "log_level"):
        value = environ.get(f"TORPROD_{name.upper()}")
        if value is not None and value != "":
            raw[name] = value
    try:
        return Settings(**raw)
    except ValidationError as e:
        raise ParseError(f"invalid environment: {e.errors()[0]['msg']}") from e


def configure_logging(level: str) -> None:
    logging.basicConfig(format=LOG_FORMAT, level=getattr(logging, level.upper(), logging.WARNING), force=True)
