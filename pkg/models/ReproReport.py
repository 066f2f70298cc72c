from pydantic import BaseModel, Field
from typing import List, Optional
from models.tiles.ReproEntry import ReproEntry

class ReproReport(BaseModel):
    precision: Optional[int] = Field(
        default=None,
        description="Requested working precision in bits."
    )
    digits_target: Optional[int] = Field(
        default=None,
        description="Significant digits each entry is asked to match (at most 20)."
    )
    entries: List[ReproEntry] = Field(
        default_factory=list,
        description="One entry per (model, R) pair in canonical order."
    )
    matched: Optional[int] = Field(
        default=None,
        description="Number of entries reaching digits_target."
    )
    failures: List[str] = Field(
        default_factory=list,
        description="Human-readable description of each entry that failed or fell short."
    )
