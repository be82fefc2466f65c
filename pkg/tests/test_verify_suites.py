"""Every named invariant suite must run green (these back `edgewave verify`)."""

import pytest

from edgewave.verify import SUITES, run_suite


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_green(suite):
    results = run_suite(suite)
    failures = [(check, detail) for _, check, ok, detail in results if not ok]
    assert not failures, failures


def test_unknown_suite_rejected():
    with pytest.raises(KeyError):
        run_suite("nonsense")
