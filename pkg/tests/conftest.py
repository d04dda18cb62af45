from __future__ import annotations

import pytest

from darkgauge import SCENARIO_IDS, make_scenario, verify_scenario


@pytest.fixture(scope="session")
def reports():
    """One full verification report per bundled scenario, computed once."""
    return {sid: verify_scenario(make_scenario(sid)) for sid in SCENARIO_IDS}
