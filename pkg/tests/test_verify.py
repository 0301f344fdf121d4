import pytest

from phinary.verify import SUITES, Check, run_suite

# suites whose checks all pass; the others carry a listed value that the
# computation contradicts and are reported by the acceptance module
CLEAN = sorted(set(SUITES) - {"codec", "parity", "geometry-convergent"})


@pytest.mark.parametrize("name", CLEAN)
def test_suite_passes(name):
    checks = run_suite(name)
    assert checks and all(isinstance(c, Check) for c in checks)
    assert all(c.ok for c in checks), [c.line() for c in checks if not c.ok]


@pytest.mark.parametrize("name", ["codec", "parity", "geometry-convergent"])
def test_known_disagreements_are_isolated(name):
    bad = [c.name for c in run_suite(name) if not c.ok]
    assert bad == {
        "codec": ["natural forms"],
        "parity": ["annotated parity list"],
        "geometry-convergent": ["area partial sum within 1e-14 of 1/2 at N = 40"],
    }[name]


def test_suites_are_deterministic():
    for name in ("projection", "codec", "hyperbinary"):
        assert [c.line() for c in run_suite(name)] == [c.line() for c in run_suite(name)]
