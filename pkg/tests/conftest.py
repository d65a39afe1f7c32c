import random

import pytest

from cherednik.algebra import AlgebraParams
from cherednik.field import make_field

SMALL_FIELDS = [(3, 1), (5, 1), (7, 1), (11, 1), (3, 2), (5, 2)]
ALL_FIELDS = SMALL_FIELDS + [(7, 2), (11, 2)]


def params(p, m=1, t=1, k=0):
    ctx = make_field(p, m)
    return AlgebraParams(ctx, ctx.element(t) if not hasattr(t, "code") else t,
                         ctx.element(k) if not hasattr(k, "code") else k)


def k_values(ctx, t):
    """Every k cell worth visiting for (field, t): all of F_p plus a few outside."""
    out = [ctx.element(c) for c in range(ctx.p)]
    extra = [e for e in ctx.elements() if not e.in_prime_field()]
    return out + extra[:3]


@pytest.fixture
def rng():
    return random.Random(20240611)


# Filled by test_acceptance.py; echoed after the run so the verdicts appear
# in captured logs as well as with -s.
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
