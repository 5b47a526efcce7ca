from pydantic import BaseModel, ConfigDict, Field

from .settings import settings


class PipelineConfig(BaseModel):
    """Knobs for one certification run."""

    trials: int = Field(default_factory=lambda: settings.SAMPLE_TRIALS, ge=1)
    reduction_trials: int = Field(
        default_factory=lambda: settings.REDUCTION_TRIALS, ge=1
    )
    seed: int = Field(default_factory=lambda: settings.SEED)
    n_max: int | None = Field(None, ge=1)
    horizon: int | None = Field(None, ge=4)
    usd_bound: int = Field(default_factory=lambda: settings.USD_BOUND, ge=1)
    max_workers: int = Field(default_factory=lambda: settings.MAX_WORKERS, ge=1)
    check_exponent: int = Field(1, ge=1)

    model_config = ConfigDict(frozen=True)
