"""Acceptance gate: one test per verification criterion, each printed as a
pass/fail line.  Every comparison is exact; there are no tolerances to tune."""

from __future__ import annotations

import pytest

from kwall.acceptance import CRITERIA


@pytest.mark.parametrize("cid,title,check", CRITERIA, ids=[f"criterion-{c[0]:02d}" for c in CRITERIA])
def test_criterion(cid, title, check):
    try:
        detail = check()
    except AssertionError as exc:
        print(f"FAIL  criterion {cid:>2}  {title}: {exc}")
        raise
    print(f"PASS  criterion {cid:>2}  {title}: {detail}")
