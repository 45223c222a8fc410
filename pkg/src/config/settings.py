from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(extra="ignore")

    output_dir: Path = Field(alias="OUTPUT_DIR", default=Path("results"))
    qaplib_dir: Path = Field(alias="QAPLIB_DIR", default=Path("data/qaplib"))
    cec_data_dir: Optional[Path] = Field(alias="CEC_DATA_DIR", default=None)
    max_workers: int = Field(alias="MAX_WORKERS", default=4, ge=1)
    base_seed: int = Field(alias="BASE_SEED", default=0, ge=0, lt=2**64)
    show_progress: bool = Field(alias="SHOW_PROGRESS", default=True)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
