from pydantic import BaseModel, Field
from typing import Optional

class ReproEntry(BaseModel):
    model: Optional[str] = Field(
        default=None,
        description="Model label, e.g. 'm=1,n=3'."
    )
    m: Optional[int] = Field(default=None, description="Exponent of the confining term x^(2m).")
    n: Optional[int] = Field(default=None, description="Exponent of the spike λ/x^(2n).")
    R: Optional[str] = Field(default=None, description="Coupling R as a decimal string.")
    method: Optional[str] = Field(
        default=None,
        description="RPM variant used: 'regularized' for n = 1, 'general' otherwise."
    )
    target: Optional[str] = Field(
        default=None,
        description="Reference eigenvalue as published."
    )
    computed: Optional[str] = Field(
        default=None,
        description="Computed eigenvalue (real part) to 25 significant digits."
    )
    E_im: Optional[str] = Field(
        default=None,
        description="Imaginary part of the computed eigenvalue."
    )
    err_est: Optional[str] = Field(
        default=None,
        description="Last D-ladder difference."
    )
    D: Optional[int] = Field(default=None, description="Hankel dimension of the reported rung.")
    matching_digits: Optional[int] = Field(
        default=None,
        description="Leading significant digits shared with the target after rounding both to 20 digits."
    )
    runtime_s: Optional[str] = Field(
        default=None,
        description="Wall-clock seconds spent on the entry; omitted when timing is disabled."
    )
    error: Optional[str] = Field(
        default=None,
        description="Failure message when the ladder did not produce an eigenvalue."
    )
