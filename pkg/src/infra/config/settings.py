from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field


class Settings(BaseSettings):
    """Process-level settings for the simulator."""

    debug: bool = Field(default=False)
    environment: str = Field(
        default="development",
        description="Environment of the application, development, production, etc.",
    )
    app_title: str = "dmk-transport"
    app_description: str = "Extended Dynamic Monge-Kantorovich transport simulator"
    app_version: str = "0.1.0"

    # Output locations
    log_dir: str = Field(default="logs")
    output_root: str = Field(
        default="runs",
        description="Parent directory for runs whose scenario file names no output_dir.",
    )

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", case_sensitive=False, extra="ignore"
    )
