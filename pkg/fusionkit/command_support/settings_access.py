from dataclasses import replace
from pathlib import Path

from ..settings import Settings, get_settings


def current_settings(args, *, iteration: bool = False) -> Settings:
    """Defaults with the global flags applied; --tol targets iteration for fpdim, assertions elsewhere."""
    settings = get_settings()
    overrides = {}
    if getattr(args, "tol", None) is not None:
        overrides["iter_tol" if iteration else "assert_tol"] = args.tol
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if getattr(args, "directory", None) is not None:
        overrides["fixtures_dir"] = Path(args.directory)
    return replace(settings, **overrides)
