from pydantic import BaseModel, Field
from typing import Optional

class EstimateTile(BaseModel):
    method: Optional[str] = Field(
        default=None,
        description="Which estimator produced the value: harmonic, perturbative or rpm."
    )
    order: Optional[str] = Field(
        default=None,
        description="Perturbative order N, Hankel dimension D, or 'harmonic'."
    )
    E_re: Optional[str] = Field(
        default=None,
        description="Real part of the energy as a decimal string."
    )
    E_im: Optional[str] = Field(
        default=None,
        description="Imaginary part of the energy as a decimal string."
    )
    err_est: Optional[str] = Field(
        default=None,
        description="Empirical error bar: smallest series term or the last ladder difference."
    )
    error: Optional[str] = Field(
        default=None,
        description="Failure message when the estimator could not produce a value."
    )
