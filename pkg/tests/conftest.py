from pathlib import Path

import pytest

from fusionkit.fp_numerics import compute_fp_dims
from fusionkit.services.functor_files import load_functor_file
from fusionkit.services.group_files import load_group_file
from fusionkit.services.ring_files import load_ring_file

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def ring():
    return lambda filename: load_ring_file(FIXTURES / filename)


@pytest.fixture
def group():
    return lambda filename: load_group_file(FIXTURES / filename)


@pytest.fixture
def functor():
    def _load(filename):
        rings = {r.name: r for r in map(load_ring_file, sorted(FIXTURES.glob("*.ring")))}
        return load_functor_file(FIXTURES / filename, rings)

    return _load


@pytest.fixture
def fp():
    return lambda r: compute_fp_dims(r)
