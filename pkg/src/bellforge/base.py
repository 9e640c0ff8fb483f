"""Small value types shared across modules."""

from __future__ import annotations

from typing import NamedTuple

from .errors import MalformedInterval, ScenarioTooLarge

MAX_SETTINGS = 24


class Scenario(NamedTuple):
    """Number of measurement settings on each side."""

    m_a: int
    n_b: int

    def validate(self) -> "Scenario":
        if self.m_a < 1 or self.n_b < 1:
            raise ValueError(f"scenario needs at least one setting per side, got {tuple(self)}")
        if self.m_a + self.n_b > MAX_SETTINGS:
            raise ScenarioTooLarge(
                f"{self.m_a}+{self.n_b} settings exceeds the enumeration cap of {MAX_SETTINGS}"
            )
        return self


class Interval(NamedTuple):
    """Closed real interval ``[lo, hi]``."""

    lo: float
    hi: float

    def check(self) -> "Interval":
        if not self.lo <= self.hi:
            raise MalformedInterval(f"interval lower end {self.lo} exceeds upper end {self.hi}")
        return self

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= x <= self.hi + slack

    def issubset(self, other: "Interval", slack: float = 0.0) -> bool:
        return other.lo - slack <= self.lo and self.hi <= other.hi + slack

    @property
    def width(self) -> float:
        return self.hi - self.lo
