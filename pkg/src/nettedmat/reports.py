"""Uniform result records produced by every claim verifier.

A Report names the claim, the parameter point it was checked at, and an
outcome.  Failing outcomes carry witnesses: (location, expected, actual)
string triples pinpointing the first places the claim broke.  Everything is
stringified eagerly with fmt(), which refuses floats, so a report can be
serialized without ever touching inexact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_NOT_SATISFIED = "hypothesis-not-satisfied"
DISCREPANCY_DOCUMENTED = "discrepancy-documented"

STATUSES = (PASS, FAIL, HYPOTHESIS_NOT_SATISFIED, DISCREPANCY_DOCUMENTED)

# statuses that do not flip the process exit code
BENIGN = (PASS, HYPOTHESIS_NOT_SATISFIED, DISCREPANCY_DOCUMENTED)


def fmt(value):
    """Decimal/string rendering of an exact value; floats are refused."""
    if isinstance(value, float):
        raise TypeError("floating point has no place in exact reports")
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(fmt(v) for v in value) + ")"
    return str(value)


def witness(location, expected, actual):
    return (str(location), fmt(expected), fmt(actual))


@dataclass
class Report:
    claim_id: str
    params: dict
    status: str
    witnesses: list = field(default_factory=list)
    note: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if (self.status == PASS) != (not self.witnesses):
            raise ValueError(
                "pass reports carry no witnesses; every other status must "
                "explain itself with at least one")

    @property
    def ok(self):
        return self.status in BENIGN

    def as_dict(self):
        # stable serialization schema; the free-text note stays out of it
        return {
            "claim_id": self.claim_id,
            "params": dict(self.params),
            "status": self.status,
            "witnesses": [list(w) for w in self.witnesses],
        }


def make_report(claim_id, params, witnesses, status=None, note=""):
    """Assemble a Report; status defaults to pass/fail from the witnesses."""
    params = {k: fmt(v) for k, v in params.items()}
    if status is None:
        status = FAIL if witnesses else PASS
    return Report(claim_id, params, status, list(witnesses), note)


def tally(reports):
    counts = {s: 0 for s in STATUSES}
    for r in reports:
        counts[r.status] += 1
    return counts
