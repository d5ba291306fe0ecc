"""Size caps guarding exhaustive constructions.

Defaults keep every search desk-scale; callers may pass explicit caps, and the
environment variables BITOPDUAL_MAX_CARRIER / BITOPDUAL_MAX_CANDIDATES
override the defaults process-wide (the CLI exposes matching flags).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_MAX_CARRIER = 100_000      # largest algebra carrier built eagerly
DEFAULT_MAX_CANDIDATES = 1_000_000  # candidate functions scanned per search


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    return int(raw)


@dataclass(frozen=True)
class Caps:
    max_carrier: int = DEFAULT_MAX_CARRIER
    max_candidates: int = DEFAULT_MAX_CANDIDATES

    def __post_init__(self):
        if self.max_carrier <= 0 or self.max_candidates <= 0:
            raise ValueError("caps must be positive")


def default_caps() -> Caps:
    return Caps(
        max_carrier=_env_int("BITOPDUAL_MAX_CARRIER", DEFAULT_MAX_CARRIER),
        max_candidates=_env_int("BITOPDUAL_MAX_CANDIDATES", DEFAULT_MAX_CANDIDATES),
    )
