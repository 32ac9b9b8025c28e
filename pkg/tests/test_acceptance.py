"""The acceptance battery: one test per criterion, one printed line each.

Run with -s (or via `strata verify-paper`) to see the PASS/FAIL lines; any
failed sub-assertion is printed with its detail.
"""

import pytest

from strata import acceptance


def _run(fn):
    crit = fn()
    status = "PASS" if crit.passed else "FAIL"
    print(f"{status} {crit.key}: {crit.title}")
    for name, ok, detail in crit.checks:
        if not ok:
            print(f"    failed: {name} {detail}")
    assert crit.passed, f"{crit.key} failed: " + "; ".join(
        n for n, ok, _ in crit.checks if not ok
    )


@pytest.mark.parametrize("key,fn", acceptance.ALL, ids=[k for k, _ in acceptance.ALL])
def test_criterion(key, fn):
    _run(fn)
