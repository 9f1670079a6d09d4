"""One test per acceptance criterion; each prints a PASS/FAIL line with its timing."""

import pytest

from wlmotif.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda fn: fn.__name__.removeprefix("criterion_"))
def test_criterion(criterion, capsys):
    result = criterion(0)
    with capsys.disabled():
        print("\n" + result.line())
        for failure in result.failures[:10]:
            print("   ", failure)
    assert result.passed, result.failures[:5]
    assert result.in_time, f"{result.elapsed:.1f}s over the {result.limit}s budget"
