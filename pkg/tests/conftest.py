import pytest

from syzplane import catalog

from _acceptance_registry import RESULTS, summary_lines

# One engine pass per curve for the whole session; every test that needs a
# resolved profile pulls it from here instead of re-analyzing.
SAMPLES = (
    ("three_conics_pencil", 2),
    ("three_conics_pencil", 3),
    ("three_conics_pencil", 5),
    ("megyesi_family", 2),
    ("megyesi_family", 3),
    ("t_family", 1),
    ("t_family", 2),
    ("ziegler_base", None),
    ("ziegler_C1", None),
    ("ziegler_C2", None),
)


@pytest.fixture(scope="session")
def catalog_runs():
    runs = {}
    for name, value in SAMPLES:
        runs[(name, value)] = catalog.run_entry(catalog.get_entry(name), value)
    return runs


@pytest.fixture(scope="session")
def profiles(catalog_runs):
    return {key: run.profile for key, run in catalog_runs.items()}


@pytest.fixture(scope="session")
def sample_polys():
    polys = {}
    for name, value in SAMPLES:
        entry = catalog.get_entry(name)
        polys[(name, value)] = catalog.build_polynomial(entry, value)
    return polys


@pytest.fixture(scope="session")
def ziegler_cmp():
    return catalog.ziegler_compare("ziegler_C1", "ziegler_C2")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in summary_lines():
        terminalreporter.write_line(line)
