import sys

import pytest

from syracuse import caps

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


@pytest.fixture(autouse=True)
def _restore_exponent_cap():
    # The cap is process-global; never let one test's setting leak.
    old = caps.exponent_cap()
    yield
    caps.set_exponent_cap(old)
