"""Run-time configuration with compiled-in defaults and optional JSON override.

The Monte Carlo tolerances are pre-registered constants: they are fixed
here, not tuned after looking at sample output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields


@dataclass(frozen=True)
class McTolerances:
    mean_over_n: float = 0.005
    variance_over_n: float = 0.015
    ks: float = 0.02

    def __post_init__(self) -> None:
        for f in fields(self):
            x = getattr(self, f.name)
            if not 0.0 < x < 1.0:
                raise ValueError(f"tolerance {f.name}={x} outside (0, 1)")


@dataclass(frozen=True)
class Config:
    exhaustive_bound: int = 7
    series_order: int = 12
    mc_tolerances: McTolerances = field(default_factory=McTolerances)
    rng_seed: int = 1729

    def __post_init__(self) -> None:
        if self.exhaustive_bound < 1 or self.series_order < 1:
            raise ValueError("bounds must be positive")


def load_config(path: str | None) -> Config:
    """Config from a JSON file, or the defaults when no path is given."""
    if path is None:
        return Config()
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    tol = McTolerances(**raw.pop("mc_tolerances", {}))
    return Config(mc_tolerances=tol, **raw)
