import os

from dotenv import load_dotenv

load_dotenv()


def _optional_int(name: str) -> int | None:
    raw = os.getenv(name, "")
    return int(raw) if raw.strip() else None


class Settings:
    """Application settings."""

    PRIME: int = int(os.getenv("BSB_PRIME", "32003"))
    SEED: int = int(os.getenv("BSB_SEED", "0"))

    SAMPLE_TRIALS: int = int(os.getenv("BSB_SAMPLE_TRIALS", "12"))
    REDUCTION_TRIALS: int = int(os.getenv("BSB_REDUCTION_TRIALS", "20"))
    HORIZON: int | None = _optional_int("BSB_HORIZON")
    USD_BOUND: int = int(os.getenv("BSB_USD_BOUND", "2"))

    SATURATION_CAP: int = int(os.getenv("BSB_SATURATION_CAP", "50"))
    RATLIFF_RUSH_CAP: int = int(os.getenv("BSB_RATLIFF_RUSH_CAP", "30"))
    NUMERICS_RETRIES: int = 2

    MAX_WORKERS: int = int(os.getenv("BSB_MAX_WORKERS", "1"))

    LOG_LEVEL: str = os.getenv("BSB_LOG_LEVEL", "WARNING")
    NO_COLOR: bool = bool(os.getenv("NO_COLOR"))

    STANDARD_SOP_POWERS = (1, 2, 4)
    COHOMOLOGY_SLICE_EXPONENTS = (2, 4, 8)
    G_INVARIANT_EXPONENTS = (1, 2, 4)

    @classmethod
    def default_n_max(cls, dim: int) -> int:
        "Scan bound for reduction numbers"
        return 2 * dim + 10

    @classmethod
    def default_horizon(cls, dim: int, reduction_number: int) -> int:
        "Horizon for Hilbert-Samuel fits"
        if cls.HORIZON is not None:
            return cls.HORIZON
        return dim * (reduction_number + 4) + 10

    @classmethod
    def get_runtime_info(cls) -> str:
        "Get general runtime info"
        return f"F_{cls.PRIME} (seed {cls.SEED}, {cls.SAMPLE_TRIALS} sanity trials)"


settings = Settings()
