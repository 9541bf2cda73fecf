"""Report header shared by machine-readable outputs."""

from datetime import datetime, timezone

from pydantic import AwareDatetime, BaseModel, Field, field_serializer, field_validator


class BaseReport(BaseModel):
    """Outcome flag plus the UTC time the report was produced."""

    success: bool = Field(default=True, description="Whether every check passed")
    timestamp: AwareDatetime = Field(
        default_factory=lambda: datetime.now(timezone.utc),
        description="Report generation time, always UTC",
    )

    @field_validator("timestamp")
    @classmethod
    def _to_utc(cls, value: datetime) -> datetime:
        return value.astimezone(timezone.utc)

    @field_serializer("timestamp")
    def _rfc3339(self, value: datetime) -> str:
        return value.isoformat().replace("+00:00", "Z")
