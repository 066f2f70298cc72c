from pydantic import BaseModel, Field
from typing import Optional

class CurveSummary(BaseModel):
    model: Optional[str] = Field(default=None, description="Model label, e.g. 'm=1,n=3'.")
    m: Optional[int] = Field(default=None)
    n: Optional[int] = Field(default=None)
    R: Optional[str] = Field(default=None)
    v: Optional[int] = Field(default=None)
    N_max: Optional[int] = Field(default=None, description="Highest perturbative order evaluated.")
    reference: Optional[str] = Field(
        default=None,
        description="Reference energy the curve is measured against."
    )
    floor_log10: Optional[str] = Field(
        default=None,
        description="log10 of the noise floor below which rises are ignored."
    )
    best_order: Optional[int] = Field(default=None)
    best_log10_rel_err: Optional[str] = Field(default=None)
    oscillation_onset: Optional[int] = Field(
        default=None,
        description="First order at which the error rises twice in a row, if any."
    )
    oscillates: Optional[bool] = Field(default=None)
    error: Optional[str] = Field(default=None, description="Failure message for this model.")
