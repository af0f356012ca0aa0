"""One test per acceptance criterion; each prints its PASS/FAIL line."""

import pytest

from jonesrep.acceptance import CRITERIA, run_criterion

KNOWN_FAILURES = {
    "1b": "the strict inequality fails at r = 4, where d(n,0,4) = d(n,2,4); see notes/decisions.md",
}


def _param(key):
    if key in KNOWN_FAILURES:
        return pytest.param(key, marks=pytest.mark.xfail(reason=KNOWN_FAILURES[key], strict=True))
    return key


@pytest.mark.parametrize("key", [_param(c[0]) for c in CRITERIA])
def test_criterion(key, capsys):
    outcome = run_criterion(key)
    with capsys.disabled():
        print("\n" + outcome.line())
    assert outcome.passed, outcome.detail
    assert outcome.seconds <= outcome.limit
