from pydantic import BaseModel, Field
from typing import Optional

class SolutionRecord(BaseModel):
    model: Optional[str] = Field(
        default=None,
        description="Potential label, e.g. 'int(m=1, n=3, R=2)'."
    )
    m: Optional[int] = Field(default=None, description="Integer-family m, when applicable.")
    n: Optional[int] = Field(default=None, description="Integer-family n, when applicable.")
    R: Optional[str] = Field(default=None, description="Integer-family R, when applicable.")
    variant: Optional[str] = Field(default=None, description="'general' or 'regularized'.")
    D: Optional[int] = Field(default=None, description="Hankel dimension.")
    d: Optional[int] = Field(default=None, description="Hankel offset.")
    E_re: Optional[str] = Field(default=None, description="Real part of E.")
    E_im: Optional[str] = Field(default=None, description="Imaginary part of E.")
    f0_re: Optional[str] = Field(default=None, description="Real part of the free coefficient f0 (general variant).")
    f0_im: Optional[str] = Field(default=None, description="Imaginary part of f0.")
    err_est: Optional[str] = Field(default=None, description="|E_D − E_(D−1)|, absent on the first rung.")
    residual_norm: Optional[str] = Field(default=None, description="Largest weighted determinant at the accepted root.")
    conditioning: Optional[str] = Field(
        default=None,
        description="Largest Hadamard ratio |det| / Π‖row‖ of the determinants a short step off the root."
    )
    digits_claimed: Optional[int] = Field(
        default=None,
        description="Significant digits supported by the error estimate."
    )
    precision: Optional[int] = Field(default=None, description="Working precision in bits at which the rung converged.")
