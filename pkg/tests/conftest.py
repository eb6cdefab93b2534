import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fairkit import Instance, mask_from_names


@pytest.fixture
def alloc_of():
    """Build an allocation tuple from per-agent name lists."""
    def build(inst: Instance, *bundles):
        return tuple(mask_from_names(inst.item_names, b) for b in bundles)
    return build
