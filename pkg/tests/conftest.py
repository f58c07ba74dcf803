import pytest

from loopmod.natrep import EvalParams, ModuleVector
from loopmod.ratfunc import FieldElem


@pytest.fixture
def natural():
    """Factory for V(1) (x) V(zeta) (x) ... with zeta of order m."""
    def make(n, N, m=None):
        return EvalParams.natural(n, N, m)
    return make


def vec(ctx, pairs):
    return ModuleVector(ctx, {tuple(w): c for w, c in pairs})


def fe(m, x):
    return FieldElem.zero(m) + x


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
