# config.py
import os
from functools import lru_cache

from pydantic import BaseModel, ConfigDict, Field


DEFAULT_MAX_WORK = 10_000_000


def _get_env(name: str, default: str = "") -> str:
    return (os.getenv(name) or default).strip()


class Settings(BaseModel):
    max_work: int = Field(default=DEFAULT_MAX_WORK, ge=1)
    log_level: str = "WARNING"
    seed: int = 0

    model_config = ConfigDict(frozen=True)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Settings read from the environment (after load_dotenv in main.py).
    """
    return Settings(
        max_work=int(_get_env("SYMPROD_MAX_WORK", str(DEFAULT_MAX_WORK))),
        log_level=_get_env("SYMPROD_LOG_LEVEL", "WARNING").upper(),
        seed=int(_get_env("SYMPROD_SEED", "0")),
    )
