"""Collects one result line per acceptance criterion for the terminal summary."""

import time
from contextlib import contextmanager

LINES = []


@contextmanager
def criterion(number, title, budget, tolerance="exact"):
    """Time a criterion; the body sets ``box["detail"]`` and asserts.

    The line is recorded as PASS only if the body finished without an
    assertion error and within ``budget`` seconds.
    """
    box = {"detail": ""}
    start = time.perf_counter()
    ok = False
    try:
        yield box
        ok = True
    finally:
        took = time.perf_counter() - start
        within = took < budget
        status = "PASS" if ok and within else "FAIL"
        line = (f"criterion {number:>2} {status}  {title}  [tolerance {tolerance}; "
                f"{took:.1f}s of {budget}s]  {box['detail']}")
        LINES.append(line)
        print(line)
    assert within, f"criterion {number} took {took:.1f}s, budget {budget}s"
