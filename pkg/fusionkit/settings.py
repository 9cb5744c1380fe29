from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Settings:
    fixtures_dir: Path
    assert_tol: float = 1e-9
    iter_tol: float = 1e-12
    max_iter: int = 100_000
    residual_gate: float = 1e-8
    seed: int = 0
    subring_enum_cap: int = 20
    pair_enum_rank: int = 8
    pair_sample: int = 20
    group_oracle_cap: int = 12


def get_settings() -> Settings:
    return Settings(fixtures_dir=Path.cwd() / "fixtures")
