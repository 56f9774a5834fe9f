import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from grim.randgraphs import exact_histogram


@pytest.fixture(scope="session")
def hist_by_n():
    """Exact histograms for n = 1..6, computed once per run."""
    return {n: exact_histogram(n) for n in range(1, 7)}
