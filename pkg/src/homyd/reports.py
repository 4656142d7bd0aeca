"""Check reports: every verification returns the full list of counterexamples.

A failed law is data, not an exception.  Each failure records the basis
multi-index at which the two sides of the law were evaluated together
with both evaluated value vectors, so a report is a complete certificate
either way.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ShapeError
from .linmap import LinearMap


@dataclass(frozen=True)
class Failure:
    law: str
    index: tuple[int, ...]
    lhs: tuple
    rhs: tuple

    def __str__(self):
        return f"{self.law} at {self.index}: lhs={self.lhs} rhs={self.rhs}"


@dataclass(frozen=True)
class CheckReport:
    law: str
    failures: tuple[Failure, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures

    def with_notes(self, *notes: str) -> "CheckReport":
        return CheckReport(self.law, self.failures, self.notes + tuple(notes))

    @staticmethod
    def combine(law: str, reports) -> "CheckReport":
        failures = tuple(f for r in reports for f in r.failures)
        notes = tuple(n for r in reports for n in r.notes)
        return CheckReport(law, failures, notes)

    def __str__(self):
        if self.passed:
            return f"{self.law}: pass"
        return f"{self.law}: {len(self.failures)} failure(s), first: {self.failures[0]}"


def compare_maps(law: str, lhs: LinearMap, rhs: LinearMap) -> CheckReport:
    """Exact equality of two maps, reported per domain basis multi-index."""
    if lhs.dom != rhs.dom or lhs.cod != rhs.cod or lhs.field != rhs.field:
        raise ShapeError(
            f"{law}: cannot compare map {lhs.dom} -> {lhs.cod} "
            f"with map {rhs.dom} -> {rhs.cod}"
        )
    a, b = lhs.entries, rhs.entries
    if np.array_equal(a, b):
        return CheckReport(law)
    failures = []
    for j in range(lhs.ncols):
        if not np.array_equal(a[:, j], b[:, j]):
            index = _unravel(j, lhs.dom)
            failures.append(Failure(law, index, lhs.column(j), rhs.column(j)))
    return CheckReport(law, tuple(failures))


def _unravel(flat: int, dims) -> tuple[int, ...]:
    if not dims:
        return ()
    return tuple(int(i) for i in np.unravel_index(flat, dims))
