from .settings import settings, Settings
from .log_setup import configure_logging
from .pipeline import PipelineConfig

__all__ = [
    "settings",
    "Settings",
    "configure_logging",
    "PipelineConfig",
]
