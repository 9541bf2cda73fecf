"""Pydantic models for the Monte Carlo engine."""

from pydantic import BaseModel, ConfigDict, Field

MAX_SEED = 2**64 - 1


class McConfig(BaseModel):
    """Monte Carlo run configuration."""

    model_config = ConfigDict(frozen=True)

    trials: int = Field(default=1_000_000, ge=1, description="Number of realizations")
    seed: int = Field(default=20190101, ge=0, le=MAX_SEED, description="Reproducibility seed")
    workers: int = Field(default=1, ge=1, description="Number of worker processes")
    block_size: int = Field(
        default=65_536,
        ge=1,
        description="Trials per random substream; fixed so results never depend on workers",
    )

    def with_trials(self, trials: int) -> "McConfig":
        return McConfig(**{**self.model_dump(), "trials": trials})


class McEstimate(BaseModel):
    """Sample-mean estimate with its standard error."""

    model_config = ConfigDict(frozen=True)

    mean: float = Field(description="Estimated probability or capacity")
    std_err: float = Field(ge=0, description="Standard error of the mean")
    trials: int = Field(ge=1, description="Number of realizations used")

    @property
    def relative_std_err(self) -> float:
        return self.std_err / self.mean if self.mean > 0 else float("inf")
