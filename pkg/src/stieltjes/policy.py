"""Truncation orders and tolerances used by every series and quadrature."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import DomainError

PROFILE_ENV = "STIELTJES_PRECISION_PROFILE"


@dataclass(frozen=True)
class PrecisionPolicy:
    em_direct_terms: int = 30
    em_tail_order: int = 28
    series_max_terms: int = 400
    series_term_floor: float = 1e-16
    quad_step: float = 0.05
    quad_halfwidth: float = 6.0
    agree_tol: float = 1e-9

    def __post_init__(self):
        if self.em_direct_terms < 1:
            raise DomainError("em_direct_terms must be positive")
        if self.em_tail_order < 2 or self.em_tail_order % 2:
            raise DomainError("em_tail_order must be even and >= 2")
        if self.series_max_terms < 1:
            raise DomainError("series_max_terms must be positive")
        if not (self.series_term_floor > 0 and self.agree_tol > 0):
            raise DomainError("series_term_floor and agree_tol must be positive")
        if not (self.quad_step > 0 and self.quad_halfwidth > 0):
            raise DomainError("quadrature step and halfwidth must be positive")

    def with_(self, **changes) -> "PrecisionPolicy":
        return replace(self, **changes)


PRESETS = {
    "default": PrecisionPolicy(),
    "strict": PrecisionPolicy(
        em_direct_terms=40,
        em_tail_order=32,
        series_max_terms=600,
        series_term_floor=1e-18,
        quad_step=0.025,
        quad_halfwidth=7.0,
        agree_tol=1e-10,
    ),
}


def get_policy(name: str | None = None) -> PrecisionPolicy:
    """Return a named preset; falls back to ``$STIELTJES_PRECISION_PROFILE``."""
    if name is None:
        name = os.environ.get(PROFILE_ENV, "default")
    try:
        return PRESETS[name]
    except KeyError:
        raise DomainError(f"unknown precision profile {name!r}") from None


DEFAULT_POLICY = PRESETS["default"]
