import subprocess
import sys

import pytest


@pytest.fixture(scope="session")
def fig1_dir(tmp_path_factory):
    """Real fig1 CSVs produced through the primary's CLI (its external interface)."""
    out = tmp_path_factory.mktemp("fig1_data")
    subprocess.run(
        [sys.executable, "-m", "hermquad", "fig1", "--out", str(out)],
        check=True,
        capture_output=True,
    )
    return out
