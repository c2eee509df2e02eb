"""Hypothesis profiles for the test suite.

``dev`` is the default. ``acceptance`` runs every property that does not pin
its own size at 1000 examples::

    HYPOTHESIS_PROFILE=acceptance pytest tests/
"""

import os

from hypothesis import HealthCheck, settings

settings.register_profile("dev", max_examples=100, deadline=None)
settings.register_profile(
    "acceptance",
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))
