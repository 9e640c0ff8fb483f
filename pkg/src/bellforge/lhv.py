"""Local hidden-variable predictions.

A hidden-variable model is represented as a probability mixture of
deterministic strategies, each fixing a +/-1 outcome for every setting.
Expectation values of Bell polynomials are linear in the mixture, so the
extreme values over all strategies are the exact local bounds, and the
existence of a model reproducing given correlations is a linear
feasibility problem over the strategy simplex.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np

from .base import Interval, Scenario
from .errors import MalformedTable, ScenarioMismatch, ScenarioTooLarge
from .polynomial import BellPolynomial
from .simplex import FEAS_TOL, linprog_eq

# dense tableau columns grow as 2**(m_a + n_b)
LP_MAX_SETTINGS = 16
VALUE_MERGE_TOL = 1e-9
CLAMP_TOL = 1e-12


@dataclass(frozen=True)
class DeterministicStrategy:
    a_values: tuple[int, ...]
    b_values: tuple[int, ...]

    def __post_init__(self):
        if any(v not in (1, -1) for v in self.a_values + self.b_values):
            raise ValueError("strategy outcomes must be +1 or -1")

    def evaluate(self, p: BellPolynomial) -> float:
        return sum(c * self.a_values[i - 1] * self.b_values[j - 1] for c, i, j in p.terms)

    def label(self) -> str:
        sym = {1: "+", -1: "-"}
        return "".join(sym[v] for v in self.a_values) + "|" + "".join(sym[v] for v in self.b_values)


def strategies(scenario: Scenario) -> Iterator[DeterministicStrategy]:
    """All ``2**(m_a+n_b)`` strategies; index 0 is all +1 and A outcomes vary slowest."""
    scenario = Scenario(*scenario).validate()
    for a in itertools.product((1, -1), repeat=scenario.m_a):
        for b in itertools.product((1, -1), repeat=scenario.n_b):
            yield DeterministicStrategy(a, b)


def _sign_table(k: int) -> np.ndarray:
    """``(2**k, k)`` array of +/-1 rows in the same order as :func:`strategies`."""
    idx = np.arange(2**k)[:, None]
    bits = (idx >> np.arange(k - 1, -1, -1)) & 1
    return 1 - 2 * bits


@dataclass(frozen=True)
class LhvVerdict:
    value_set: tuple[float, ...]
    bounds: Interval


def strategy_values(p: BellPolynomial) -> np.ndarray:
    """Polynomial value under every deterministic strategy, in :func:`strategies` order."""
    m, n = p.scenario
    coeffs = p.coefficient_matrix()
    a_signs = _sign_table(m)
    b_signs = _sign_table(n)
    # for a fixed A assignment the value is linear in the B outcomes
    weights = a_signs @ coeffs  # (2**m, n)
    return (weights @ b_signs.T).ravel()


def enumerate_lhv(p: BellPolynomial) -> LhvVerdict:
    """Exact set of values the polynomial takes over deterministic strategies.

    Values closer than 1e-9 are merged so irrational coefficients do not
    produce rounding duplicates.
    """
    values = np.sort(strategy_values(p))
    merged = [float(values[0])]
    for v in values[1:]:
        if v - merged[-1] > VALUE_MERGE_TOL:
            merged.append(float(v))
    merged = [0.0 if v == 0 else v for v in merged]
    return LhvVerdict(tuple(merged), Interval(merged[0], merged[-1]))


def lhv_expectation_bounds(p: BellPolynomial) -> Interval:
    return enumerate_lhv(p).bounds


def lp_bounds(p: BellPolynomial) -> Interval:
    """Local bounds by optimising the expectation over the strategy simplex with the LP solver."""
    _check_lp_size(p.scenario)
    values = strategy_values(p)
    ones = np.ones((1, values.size))
    lo = linprog_eq(values, ones, [1.0])
    hi = linprog_eq(-values, ones, [1.0])
    return Interval(lo.fun, -hi.fun)


@dataclass(frozen=True)
class CorrelationTable:
    """Measured or predicted pair correlations ``<A_i B_j>``.

    Entries within 1e-12 outside [-1, 1] are clamped; anything further
    out raises :class:`MalformedTable`.  Tables may be partial.
    """

    scenario: Scenario
    values: Mapping[tuple[int, int], float] = field(default_factory=dict)

    def __post_init__(self):
        scenario = Scenario(*self.scenario).validate()
        clean = {}
        for (i, j), v in dict(self.values).items():
            i, j, v = int(i), int(j), float(v)
            if not (1 <= i <= scenario.m_a and 1 <= j <= scenario.n_b):
                raise MalformedTable(f"entry A{i}B{j} outside scenario {tuple(scenario)}")
            if not np.isfinite(v) or abs(v) > 1.0 + CLAMP_TOL:
                raise MalformedTable(f"<A{i}B{j}> = {v!r} is outside [-1, 1]")
            clean[(i, j)] = min(1.0, max(-1.0, v))
        object.__setattr__(self, "scenario", scenario)
        object.__setattr__(self, "values", clean)

    def __getitem__(self, key: tuple[int, int]) -> float:
        return self.values[key]

    def expectation(self, p: BellPolynomial) -> float:
        """``<p>`` computed from the table; every term must have an entry."""
        return sum(c * self.values[(i, j)] for c, i, j in p.terms)

    def to_csv(self) -> str:
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["aIndex", "bIndex", "value"])
        for (i, j), v in sorted(self.values.items()):
            w.writerow([i, j, repr(v)])
        return out.getvalue()

    @classmethod
    def from_csv(cls, text: str, scenario: Scenario | None = None) -> "CorrelationTable":
        rows = list(csv.DictReader(io.StringIO(text)))
        try:
            values = {(int(r["aIndex"]), int(r["bIndex"])): float(r["value"]) for r in rows}
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedTable(f"bad correlation CSV: {exc}") from None
        if not values:
            raise MalformedTable("correlation CSV has no rows")
        if scenario is None:
            scenario = Scenario(max(i for i, _ in values), max(j for _, j in values))
        return cls(scenario, values)


@dataclass
class FineResult:
    feasible: bool
    witness: dict[DeterministicStrategy, float] | None
    infeasibility: float


def _check_lp_size(scenario: Scenario) -> None:
    if scenario.m_a + scenario.n_b > LP_MAX_SETTINGS:
        raise ScenarioTooLarge(
            f"LP over 2**{scenario.m_a + scenario.n_b} strategies exceeds the cap 2**{LP_MAX_SETTINGS}"
        )


def fine_feasible(c: CorrelationTable, tol: float = FEAS_TOL) -> FineResult:
    """Decide whether a local hidden-variable mixture reproduces the table.

    Only pair correlations are constrained; single-party marginals are
    free.  If the uniform mixture already fits it is returned as the
    witness, otherwise the phase-one simplex vertex is used.
    """
    scenario = c.scenario
    _check_lp_size(scenario)
    m, n = scenario
    a_signs = _sign_table(m)
    b_signs = _sign_table(n)
    keys = sorted(c.values)
    rows = [np.ones(2 ** (m + n))]
    for i, j in keys:
        rows.append(np.outer(a_signs[:, i - 1], b_signs[:, j - 1]).ravel())
    a_eq = np.array(rows, dtype=float)
    b_eq = np.array([1.0] + [c.values[k] for k in keys])

    uniform = np.full(a_eq.shape[1], 1.0 / a_eq.shape[1])
    if np.max(np.abs(a_eq @ uniform - b_eq)) <= tol:
        weights = uniform
        infeasibility = 0.0
    else:
        res = linprog_eq(None, a_eq, b_eq, feas_tol=tol)
        if not res.feasible:
            return FineResult(False, None, res.infeasibility)
        weights = res.x / res.x.sum()
        infeasibility = max(0.0, res.infeasibility)

    all_strats = list(strategies(scenario))
    witness = {all_strats[k]: float(w) for k, w in enumerate(weights) if w > 0.0}
    return FineResult(True, witness, infeasibility)


# Each row holds the signs of (A1B1, A1B2, A2B1, A2B2); the minus sign rotates.
FINE_SIGNS = np.array(
    [
        [1, 1, 1, -1],
        [-1, 1, 1, 1],
        [1, -1, 1, 1],
        [1, 1, -1, 1],
    ]
)


def fine_inequalities(c: CorrelationTable) -> tuple[float, float, float, float]:
    """The four CHSH combinations whose [-2, 2] bounds characterise local (2,2) tables."""
    if c.scenario != Scenario(2, 2):
        raise ScenarioMismatch(f"Fine's inequalities need a (2, 2) table, got {tuple(c.scenario)}")
    try:
        e = np.array([c[(1, 1)], c[(1, 2)], c[(2, 1)], c[(2, 2)]])
    except KeyError as exc:
        raise MalformedTable(f"missing correlation {exc.args[0]}") from None
    return tuple(float(v) for v in FINE_SIGNS @ e)


def fine_satisfied(c: CorrelationTable, tol: float = FEAS_TOL) -> bool:
    return all(abs(v) <= 2.0 + tol for v in fine_inequalities(c))
