import os

import pytest

from zetaint.zeros import cached_zero_table

# acceptance lines collected by test_acceptance.py, printed at the end of the run
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def zero_cache(tmp_path_factory):
    env = os.environ.get("ZETAINT_CACHE_DIR")
    return env if env else tmp_path_factory.mktemp("zeros")


@pytest.fixture(scope="session")
def zeros1000(zero_cache):
    return cached_zero_table(1000.0, zero_cache)


@pytest.fixture(scope="session")
def zeros5000(zero_cache):
    return cached_zero_table(5000.0, zero_cache)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
