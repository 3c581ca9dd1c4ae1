import sys
from itertools import product

from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")


def naive_sumset(n, a, b):
    """Double loop over residues; the oracle for every sumset test."""
    return sorted({(x + y) % n for x, y in product(a, b)})


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
