"""Pauli matrices, unit Bloch-vector observables and the two angle families."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NonUnitVector
from .linalg import identity, kron
from .base import Scenario

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
I2 = identity(2)

PAULI = {"X": SIGMA_X, "Y": SIGMA_Y, "Z": SIGMA_Z}
AXES = ("X", "Y", "Z")

UNIT_ATOL = 1e-12


def axis_vector(axis: str) -> tuple[float, float, float]:
    """Unit Bloch vector of a Pauli axis name ('X', 'Y' or 'Z')."""
    try:
        k = AXES.index(axis.upper())
    except ValueError:
        raise ValueError(f"unknown Pauli axis {axis!r}") from None
    vec = [0.0, 0.0, 0.0]
    vec[k] = 1.0
    return tuple(vec)


@dataclass(frozen=True)
class BlochObservable:
    """Single-qubit observable ``n . sigma`` with ``|n| == 1``.

    The unit-norm check at construction guarantees the matrix has
    spectrum exactly {+1, -1}.
    """

    nx: float
    ny: float
    nz: float

    def __post_init__(self):
        norm = math.sqrt(self.nx**2 + self.ny**2 + self.nz**2)
        if not math.isfinite(norm) or abs(norm - 1.0) > UNIT_ATOL:
            raise NonUnitVector(f"Bloch vector norm {norm!r} is not 1")

    @classmethod
    def from_axes(cls, p: str, q: str, sign: int, theta: float) -> "BlochObservable":
        """``sigma_p cos(theta) + sign * sigma_q sin(theta)`` for distinct axes p, q."""
        vp, vq = np.array(axis_vector(p)), np.array(axis_vector(q))
        n = vp * math.cos(theta) + sign * vq * math.sin(theta)
        return cls(*map(float, n))

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.nx, self.ny, self.nz])

    def matrix(self) -> np.ndarray:
        return bloch_matrix(self)


def bloch_matrix(o: BlochObservable) -> np.ndarray:
    return o.nx * SIGMA_X + o.ny * SIGMA_Y + o.nz * SIGMA_Z


Generator = Callable[[str, int, float], BlochObservable]


@dataclass(frozen=True)
class ObservableFamily:
    """Angle-parametrised assignment of observables to measurement settings.

    ``generator(side, index, theta)`` returns the Bloch observable for
    setting ``index`` (1-based) on side ``'A'`` or ``'B'``.  A-side
    observables act on the first qubit, B-side ones on the second.
    """

    m_a: int
    n_b: int
    generator: Generator
    name: str = ""

    @property
    def scenario(self) -> Scenario:
        return Scenario(self.m_a, self.n_b)

    def observable(self, side: str, index: int, theta: float) -> BlochObservable:
        limit = self.m_a if side == "A" else self.n_b
        if side not in ("A", "B") or not 1 <= index <= limit:
            raise IndexError(f"no setting {side}{index} in a ({self.m_a}, {self.n_b}) family")
        return self.generator(side, index, theta)

    def local(self, side: str, index: int, theta: float) -> np.ndarray:
        """2x2 matrix of a single setting."""
        return bloch_matrix(self.observable(side, index, theta))

    def a(self, index: int, theta: float) -> np.ndarray:
        """Two-qubit operator ``A_index (x) I``."""
        return kron(self.local("A", index, theta), I2)

    def b(self, index: int, theta: float) -> np.ndarray:
        """Two-qubit operator ``I (x) B_index``."""
        return kron(I2, self.local("B", index, theta))


def _family_s(side: str, index: int, theta: float) -> BlochObservable:
    if side == "A":
        if index == 1:
            return BlochObservable(0.0, 0.0, 1.0)
        return BlochObservable.from_axes("Z", "X", +1, 2 * theta)
    return BlochObservable.from_axes("Z", "X", +1 if index == 1 else -1, theta)


# (p, q, sign) per B setting: sigma_p cos(theta) + sign * sigma_q sin(theta)
_T_B_SETTINGS = {
    1: ("Y", "Z", +1),
    2: ("Z", "X", +1),
    3: ("X", "Y", +1),
    4: ("Y", "Z", -1),
    5: ("Z", "X", -1),
    6: ("X", "Y", -1),
}


def _family_t(side: str, index: int, theta: float) -> BlochObservable:
    if side == "A":
        if index == 1:
            return BlochObservable.from_axes("Z", "X", +1, 2 * theta)
        if index == 2:
            return BlochObservable.from_axes("Z", "Y", +1, 2 * theta)
        return BlochObservable(0.0, 0.0, 1.0)
    p, q, sign = _T_B_SETTINGS[index]
    return BlochObservable.from_axes(p, q, sign, theta)


def family_S() -> ObservableFamily:
    """Two-setting CHSH detector family.

    A1 = Z, A2 = Z cos 2t + X sin 2t, B1 = Z cos t + X sin t,
    B2 = Z cos t - X sin t, with the angle t supplied at evaluation time.
    """
    return ObservableFamily(2, 2, _family_s, name="S")


def family_T() -> ObservableFamily:
    """Three A settings and six B settings used by the T operator.

    A1 = Z cos 2t + X sin 2t, A2 = Z cos 2t + Y sin 2t, A3 = Z;
    B1..B6 = (Y,Z), (Z,X), (X,Y) with ``p cos t + q sin t`` for B1..B3 and
    ``p cos t - q sin t`` for B4..B6.
    """
    return ObservableFamily(3, 6, _family_t, name="T")
