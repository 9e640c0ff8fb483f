"""Symbolic Bell quantities and their assembly into two-qubit operators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .base import Scenario
from .errors import ScenarioMismatch
from .linalg import kron, zeros
from .pauli import ObservableFamily

Term = tuple[float, int, int]


@dataclass(frozen=True)
class BellPolynomial:
    """``sum_k c_k A_{i_k} B_{j_k}`` over a scenario.

    Terms are kept in first-appearance order; repeated ``(i, j)`` pairs are
    merged by adding coefficients and terms whose coefficient cancels to
    exactly zero are dropped.  Equality compares the coefficient map, not
    the term order.
    """

    scenario: Scenario
    terms: tuple[Term, ...] = field(default=())

    def __post_init__(self):
        scenario = Scenario(*self.scenario).validate()
        merged: dict[tuple[int, int], float] = {}
        for coeff, i, j in self.terms:
            i, j = int(i), int(j)
            if not (1 <= i <= scenario.m_a and 1 <= j <= scenario.n_b):
                raise IndexError(f"term A{i}B{j} outside scenario {tuple(scenario)}")
            merged[(i, j)] = merged.get((i, j), 0.0) + float(coeff)
        terms = tuple((c, i, j) for (i, j), c in merged.items() if c != 0.0)
        object.__setattr__(self, "scenario", scenario)
        object.__setattr__(self, "terms", terms)

    def coefficients(self) -> dict[tuple[int, int], float]:
        return {(i, j): c for c, i, j in self.terms}

    def coefficient(self, i: int, j: int) -> float:
        return self.coefficients().get((i, j), 0.0)

    def coefficient_matrix(self) -> np.ndarray:
        """``(m_a, n_b)`` array whose ``[i-1, j-1]`` entry is the coefficient of A_i B_j."""
        c = np.zeros(self.scenario)
        for coeff, i, j in self.terms:
            c[i - 1, j - 1] = coeff
        return c

    def __eq__(self, other):
        if not isinstance(other, BellPolynomial):
            return NotImplemented
        return self.scenario == other.scenario and self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash((self.scenario, frozenset(self.coefficients().items())))

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "BellPolynomial") -> "BellPolynomial":
        if self.scenario != other.scenario:
            raise ScenarioMismatch(f"{tuple(self.scenario)} vs {tuple(other.scenario)}")
        return BellPolynomial(self.scenario, self.terms + other.terms)

    def __neg__(self) -> "BellPolynomial":
        return self * -1.0

    def __mul__(self, alpha: float) -> "BellPolynomial":
        return BellPolynomial(self.scenario, tuple((alpha * c, i, j) for c, i, j in self.terms))

    __rmul__ = __mul__

    def equivalent(self, other: "BellPolynomial", atol: float = 1e-12) -> bool:
        """True if the two polynomials agree after relabelling settings on each side."""
        if self.scenario != other.scenario:
            return False
        a, b = self.coefficient_matrix(), other.coefficient_matrix()
        target = _sorted_columns(b)
        for perm in itertools.permutations(range(a.shape[0])):
            if np.allclose(_sorted_columns(a[list(perm)]), target, atol=atol, rtol=0):
                return True
        return False

    def to_text(self) -> str:
        """One ``<coeff> A<i> B<j>`` line per term."""
        return "".join(f"{_fmt_coeff(c)} A{i} B{j}\n" for c, i, j in self.terms)

    @classmethod
    def from_text(cls, text: str, scenario: Scenario | None = None) -> "BellPolynomial":
        """Parse the ``<coeff> A<i> B<j>`` format; blank lines and ``#`` comments are skipped.

        Without an explicit scenario the smallest one covering every index is used.
        """
        terms = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if (
                len(parts) != 3
                or parts[1][:1].upper() != "A"
                or parts[2][:1].upper() != "B"
            ):
                raise ValueError(f"line {lineno}: expected '<coeff> A<i> B<j>', got {raw!r}")
            try:
                terms.append((float(parts[0]), int(parts[1][1:]), int(parts[2][1:])))
            except ValueError:
                raise ValueError(f"line {lineno}: cannot parse {raw!r}") from None
        if scenario is None:
            scenario = Scenario(
                max((i for _, i, _ in terms), default=1), max((j for _, _, j in terms), default=1)
            )
        return cls(scenario, tuple(terms))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for c, i, j in self.terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"A{i}B{j}" if mag == 1.0 else f"{_fmt_coeff(mag)}*A{i}B{j}"
            out.append(f"{sign} {body}")
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _sorted_columns(m: np.ndarray) -> np.ndarray:
    return m[:, np.lexsort(m[::-1])]


def _fmt_coeff(c: float) -> str:
    return str(int(c)) if c == int(c) else repr(c)


def chsh_polynomial() -> BellPolynomial:
    """S = A1B1 + A1B2 + A2B1 - A2B2."""
    return BellPolynomial(Scenario(2, 2), ((1, 1, 1), (1, 1, 2), (1, 2, 1), (-1, 2, 2)))


def t_polynomial() -> BellPolynomial:
    """The twelve-term quantity over three A and six B settings."""
    return BellPolynomial(
        Scenario(3, 6),
        (
            (1, 1, 3), (1, 1, 6), (1, 2, 3), (-1, 2, 6),
            (1, 3, 2), (1, 3, 5), (1, 1, 2), (-1, 1, 5),
            (1, 2, 1), (1, 2, 4), (1, 3, 1), (-1, 3, 4),
        ),
    )


def assemble(p: BellPolynomial, fam: ObservableFamily, theta: float) -> np.ndarray:
    """Operator ``sum c (A_i (x) I)(I (x) B_j)`` on two qubits at angle ``theta``."""
    if p.scenario != fam.scenario:
        raise ScenarioMismatch(
            f"polynomial scenario {tuple(p.scenario)} != family scenario {tuple(fam.scenario)}"
        )
    out = zeros(4)
    a_cache: dict[int, np.ndarray] = {}
    b_cache: dict[int, np.ndarray] = {}
    for coeff, i, j in p.terms:
        if i not in a_cache:
            a_cache[i] = fam.local("A", i, theta)
        if j not in b_cache:
            b_cache[j] = fam.local("B", j, theta)
        out += coeff * kron(a_cache[i], b_cache[j])
    return out
