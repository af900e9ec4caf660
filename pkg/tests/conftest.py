import shutil
from pathlib import Path

import pytest

ASSETS = Path(__file__).resolve().parent.parent / "src" / "splitcert" / "assets"


@pytest.fixture
def asset_copy(tmp_path):
    """Writable copy of the bundled assets, for fault-injection tests."""
    dst = tmp_path / "assets"
    shutil.copytree(ASSETS, dst)
    return dst
