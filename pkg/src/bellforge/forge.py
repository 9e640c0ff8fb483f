"""Build Bell-like polynomials from commuting two-qubit Pauli sums.

A seed ``sum_k c_k sigma_{a_k} (x) sigma_{b_k}`` whose terms commute has a
spectrum fixed by ordinary sign arithmetic.  Rewriting each B-side Pauli
with the identity

    sigma_p = ((sigma_p + sigma_q) + (sigma_p - sigma_q)) / 2
    sigma_q = ((sigma_p + sigma_q) - (sigma_p - sigma_q)) / 2

turns the seed into a polynomial in +/-1 observables ``(sigma_p +/- sigma_q)/sqrt2``
that no longer commute among themselves.  Local hidden-variable bounds of
that polynomial follow naive arithmetic while its quantum spectrum is the
seed's; comparing the two classifies the resulting test.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .base import Interval, Scenario
from .errors import IncompletePairing, MalformedInterval, NonCommutingSeed, VerificationFailed
from .lhv import lhv_expectation_bounds
from .linalg import commutator, hermitian_eigenvalues, kron, zeros
from .pauli import AXES, PAULI, BlochObservable, ObservableFamily, axis_vector
from .polynomial import BellPolynomial, assemble
from .quantum import quantum_band

CONSTRUCTION_ANGLE = math.pi / 4
COMMUTE_ATOL = 1e-12
VERIFY_ATOL = 1e-12
CLASSIFY_TOL = 1e-9


class TestType(enum.Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3 = "Type3"
    TYPE4 = "Type4"
    DEGENERATE = "Degenerate"

    __test__ = False  # keep pytest from collecting the enum

    def __str__(self):
        return self.value


def classify(hlv: Interval, quantum: Interval, tol: float = CLASSIFY_TOL) -> TestType:
    """Compare the hidden-variable range [a, b] with the quantum range [c, d].

    Type1: c < a < b < d.  Type2: c < a < d < b or a < c < b < d.
    Type3: a < c < d < b.  Type4: the ranges are disjoint.  Any two
    endpoints closer than ``tol`` make the ordering non-strict and give
    ``DEGENERATE``.
    """
    a, b = hlv
    c, d = quantum
    if a > b or c > d:
        raise MalformedInterval(f"intervals must satisfy lo <= hi, got {tuple(hlv)} and {tuple(quantum)}")
    points = (a, b, c, d)
    if any(abs(x - y) <= tol for x, y in itertools.combinations(points, 2)):
        return TestType.DEGENERATE
    if c < a and b < d:
        return TestType.TYPE1
    if (c < a < d < b) or (a < c < b < d):
        return TestType.TYPE2
    if a < c and d < b:
        return TestType.TYPE3
    return TestType.TYPE4


def _axis(name: str) -> str:
    axis = name.strip().upper()
    if axis not in AXES:
        raise ValueError(f"Pauli axis must be one of X, Y, Z; got {name!r}")
    return axis


@dataclass(frozen=True)
class CommutingSeed:
    """``sum c * sigma_a (x) sigma_b`` with pairwise commuting terms."""

    terms: tuple[tuple[float, str, str], ...]

    def __post_init__(self):
        terms = tuple((float(c), _axis(a), _axis(b)) for c, a, b in self.terms)
        if not terms:
            raise ValueError("seed needs at least one term")
        object.__setattr__(self, "terms", terms)
        mats = [kron(PAULI[a], PAULI[b]) for _, a, b in terms]
        for (i, x), (j, y) in itertools.combinations(enumerate(mats), 2):
            if np.max(np.abs(commutator(x, y))) >= COMMUTE_ATOL:
                raise NonCommutingSeed(
                    f"terms {terms[i][1]}{terms[i][2]} and {terms[j][1]}{terms[j][2]} do not commute"
                )

    def matrix(self) -> np.ndarray:
        out = zeros(4)
        for c, a, b in self.terms:
            out += c * kron(PAULI[a], PAULI[b])
        return out

    @classmethod
    def from_text(cls, text: str) -> "CommutingSeed":
        """Parse ``<coeff> <A-axis> <B-axis>`` lines; ``#`` starts a comment."""
        terms = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValueError(f"seed line {lineno}: expected '<coeff> <axis> <axis>', got {raw!r}")
            terms.append((float(parts[0]), parts[1], parts[2]))
        return cls(tuple(terms))

    def to_text(self) -> str:
        return "".join(f"{c!r} {a} {b}\n" for c, a, b in self.terms)


@dataclass(frozen=True)
class PairingScheme:
    """Ordered axis pairs ``(p, q)``; each yields B settings ``(sigma_p +/- sigma_q)/sqrt2``."""

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        pairs = tuple((_axis(p), _axis(q)) for p, q in self.pairs)
        for p, q in pairs:
            if p == q:
                raise ValueError(f"pair ({p}, {q}) must use two distinct axes")
        object.__setattr__(self, "pairs", pairs)

    def covering(self, axis: str) -> list[tuple[int, int]]:
        """``(pair index, sign)`` for every pair containing ``axis``; sign is -1 when it is q."""
        return [(k, 1 if p == axis else -1) for k, (p, q) in enumerate(self.pairs) if axis in (p, q)]

    @classmethod
    def from_text(cls, text: str) -> "PairingScheme":
        pairs = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"scheme line {lineno}: expected '<p-axis> <q-axis>', got {raw!r}")
            pairs.append((parts[0], parts[1]))
        return cls(tuple(pairs))

    def to_text(self) -> str:
        return "".join(f"{p} {q}\n" for p, q in self.pairs)


def seed_spectrum_bound(s: CommutingSeed) -> Interval:
    """``[lambda_min, lambda_max]`` of the seed operator."""
    w = hermitian_eigenvalues(s.matrix())
    return Interval(float(w[0]), float(w[-1]))


def seed_candidate_values(s: CommutingSeed) -> tuple[float, ...]:
    """Every ``sum +/- c_k``; the commuting seed's spectrum is a subset of these."""
    vals = {
        round(sum(sign * c for sign, (c, _, _) in zip(signs, s.terms)), 12)
        for signs in itertools.product((1, -1), repeat=len(s.terms))
    }
    return tuple(sorted(v + 0.0 for v in vals))


@dataclass(frozen=True)
class ForgeReport:
    seed: CommutingSeed
    scheme: PairingScheme
    polynomial: BellPolynomial
    family: ObservableFamily
    a_axes: tuple[str, ...]
    b_settings: tuple[tuple[str, str, int], ...]
    hlv_bounds: Interval
    quantum_bounds: Interval
    test_type: TestType
    seed_spectrum_bound: Interval
    max_deviation: float
    construction_angle: float = CONSTRUCTION_ANGLE

    def describe_settings(self) -> list[str]:
        lines = [f"A{i} = {ax}" for i, ax in enumerate(self.a_axes, 1)]
        for j, (p, q, sign) in enumerate(self.b_settings, 1):
            op = "+" if sign > 0 else "-"
            lines.append(f"B{j} = ({p} {op} {q})/sqrt2")
        return lines


def _snap(x: float) -> float:
    r = round(x)
    return float(r) if abs(x - r) <= 1e-12 * max(1.0, abs(x)) else x


def forge(s: CommutingSeed, scheme: PairingScheme, theta: float = CONSTRUCTION_ANGLE) -> ForgeReport:
    """Rewrite a commuting seed into a Bell polynomial and classify the test.

    A-side Paulis become A settings in order of first appearance.  Each B
    Pauli is averaged over every scheme pair that contains it, so a term
    ``c sigma_a (x) sigma_b`` covered by ``k`` pairs contributes
    ``+/- c sqrt2 / (2k)`` to each of the 2k products ``A (x) (sigma_p +/- sigma_q)/sqrt2``.
    B settings list the ``+`` observable of each used pair in scheme order,
    then the ``-`` observables in the same order.

    Raises:
        IncompletePairing: a B-side axis is not covered by any pair.
        VerificationFailed: the polynomial does not reassemble into the seed.
    """
    a_axes: list[str] = []
    for _, a, _ in s.terms:
        if a not in a_axes:
            a_axes.append(a)

    covers = {}
    for _, _, b in s.terms:
        cov = scheme.covering(b)
        if not cov:
            raise IncompletePairing(f"no pair in the scheme covers B-side axis {b}")
        covers[b] = cov

    used = sorted({k for cov in covers.values() for k, _ in cov})
    plus_index = {k: n + 1 for n, k in enumerate(used)}
    minus_index = {k: len(used) + n + 1 for n, k in enumerate(used)}
    b_settings = tuple(
        [(*scheme.pairs[k], +1) for k in used] + [(*scheme.pairs[k], -1) for k in used]
    )

    terms = []
    for c, a, b in s.terms:
        i = a_axes.index(a) + 1
        cov = covers[b]
        w = c * math.sqrt(2.0) / (2 * len(cov))
        for k, sign in cov:
            terms.append((w, i, plus_index[k]))
            terms.append((sign * w, i, minus_index[k]))
    scenario = Scenario(len(a_axes), len(b_settings))
    merged = BellPolynomial(scenario, tuple(terms))
    poly = BellPolynomial(scenario, tuple((_snap(c), i, j) for c, i, j in merged.terms))

    def generator(side: str, index: int, t: float) -> BlochObservable:
        if side == "A":
            return BlochObservable(*axis_vector(a_axes[index - 1]))
        p, q, sign = b_settings[index - 1]
        # sigma_p cos t +/- sigma_q sin t equals (sigma_p +/- sigma_q)/sqrt2 at pi/4
        return BlochObservable.from_axes(p, q, sign, t)

    family = ObservableFamily(scenario.m_a, scenario.n_b, generator, name="forged")

    target = s.matrix()
    dev = float(np.max(np.abs(assemble(poly, family, theta) - target)))
    if dev >= VERIFY_ATOL:
        raise VerificationFailed(f"forged polynomial differs from the seed by {dev:.3e}")

    hlv = lhv_expectation_bounds(poly)
    qb = quantum_band(poly, family, theta)
    return ForgeReport(
        seed=s,
        scheme=scheme,
        polynomial=poly,
        family=family,
        a_axes=tuple(a_axes),
        b_settings=b_settings,
        hlv_bounds=hlv,
        quantum_bounds=qb,
        test_type=classify(hlv, qb),
        seed_spectrum_bound=seed_spectrum_bound(s),
        max_deviation=dev,
        construction_angle=theta,
    )
