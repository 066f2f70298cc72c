from pydantic import BaseModel, Field
from typing import Dict, Optional
from models.tiles.EstimateTile import EstimateTile

class CompareBundle(BaseModel):
    model: Optional[str] = Field(
        default=None,
        description="Potential label."
    )
    v: Optional[int] = Field(default=None, description="Oscillator level.")
    harmonic: Optional[EstimateTile] = Field(
        default=None,
        description="Leading-order V0 + (2v+1)√V2."
    )
    perturbative: Optional[EstimateTile] = Field(
        default=None,
        description="Optimally truncated Rayleigh–Schrödinger sum."
    )
    rpm: Optional[EstimateTile] = Field(
        default=None,
        description="Best D-ladder eigenvalue."
    )
    discrepancies: Dict[str, str] = Field(
        default_factory=dict,
        description="Absolute differences between estimators, keyed 'a-b'."
    )
    reality: Dict[str, str] = Field(
        default_factory=dict,
        description="|Im E| per estimator."
    )
