"""Guard bounds and run configuration."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields

CONFIG_ENV = "WLMOTIF_CONFIG"


@dataclass
class Guards:
    iso_n: int = 12
    spasm_n: int = 10
    treewidth_n: int = 14
    automorphism_n: int = 10
    wl_tuples: int = 10**6
    hom_pattern_n: int = 6
    hom_target_n: int = 64
    hom_product: int = 10**8
    ind_n: int = 6
    ind_supersets: int = 1 << 16
    cfi_product: int = 4096
    cfi_iso_n: int = 64
    oddo_edges: int = 14
    anchor_labelings: int = 4096


@dataclass
class RunConfig:
    guards: Guards
    parallelism: int = 1
    seed: int = 0
    output: str | None = None

    def validate(self) -> None:
        for f in fields(self.guards):
            if getattr(self.guards, f.name) <= 0:
                raise ValueError(f"guard {f.name} must be positive")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")

    def to_dict(self) -> dict:
        return asdict(self)


GUARDS = Guards()
RUNTIME = RunConfig(GUARDS)


def load_config(path: str | None = None) -> RunConfig:
    """Read a JSON run config; falls back to ``$WLMOTIF_CONFIG`` then defaults."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        cfg = RunConfig(Guards())
    else:
        with open(path) as fh:
            raw = json.load(fh)
        g = Guards(**raw.get("guards", {}))
        cfg = RunConfig(
            guards=g,
            parallelism=raw.get("parallelism", 1),
            seed=raw.get("seed", 0),
            output=raw.get("output"),
        )
    cfg.validate()
    return cfg


def apply(cfg: RunConfig) -> None:
    """Install ``cfg.guards`` as the process-wide defaults."""
    for f in fields(Guards):
        setattr(GUARDS, f.name, getattr(cfg.guards, f.name))
    RUNTIME.parallelism = cfg.parallelism
    RUNTIME.seed = cfg.seed
    RUNTIME.output = cfg.output
