"""Acceptance criteria at full sample size; one pass/fail line per criterion."""

import pytest

from qautv import checks

SEED = 7


@pytest.mark.parametrize("index, check", list(enumerate(checks.ALL_CHECKS)),
                         ids=[c.__name__.removeprefix("check_") for c in checks.ALL_CHECKS])
def test_criterion(index, check, capsys):
    res = check(SEED * 1000 + index)
    with capsys.disabled():
        print("\n" + res.line())
    assert res.passed, res.failures
