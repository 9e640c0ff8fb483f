"""Exit criteria for the package, one test per criterion.

Each criterion prints a PASS/FAIL line in the pytest terminal summary.
Run ``python tests/test_acceptance.py`` to get the same lines without pytest.
"""

import math
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

from bellforge import (
    CommutingSeed,
    CorrelationTable,
    PairingScheme,
    TestType,
    assemble,
    chsh_polynomial,
    classify,
    enumerate_lhv,
    expectation,
    family_S,
    family_T,
    fine_feasible,
    fine_inequalities,
    forge,
    global_quantum_range,
    hermitian_eigenvalues,
    hermitian_eigh,
    mixed_expectation,
    named_states,
    quantum_band,
    t_polynomial,
)
from bellforge.base import Interval
from bellforge.quantum import analytic_spectrum_S, analytic_spectrum_T, mixed_singlet_components

SQRT2 = math.sqrt(2)
GRID = np.linspace(0.0, 2.0 * math.pi, 721)
RESULTS: list[str] = []


def S(t):
    return assemble(chsh_polynomial(), family_S(), t)


def T(t):
    return assemble(t_polynomial(), family_T(), t)


def c01_spectrum_S():
    w = hermitian_eigenvalues(S(math.pi / 4))
    assert np.max(np.abs(w - [-2 * SQRT2, 0, 0, 2 * SQRT2])) < 1e-10


def c02_spectrum_T():
    w, v = hermitian_eigh(T(math.pi / 4))
    assert np.max(np.abs(w - [-6 * SQRT2, 2 * SQRT2, 2 * SQRT2, 2 * SQRT2])) < 1e-10
    fidelity = abs(np.vdot(v[:, 0], named_states()["singlet"])) ** 2
    assert fidelity > 1 - 1e-10


def c03_lhv_enumeration():
    s, t = enumerate_lhv(chsh_polynomial()), enumerate_lhv(t_polynomial())
    assert s.value_set == (-2, 2) and t.value_set == (-6, -2, 2, 6)
    assert s.bounds == (-2, 2) and t.bounds == (-6, 6)


def c04_analytic_vs_numeric():
    for op, ref in ((S, analytic_spectrum_S), (T, analytic_spectrum_T)):
        worst = max(np.max(np.abs(np.sort(ref(t)) - hermitian_eigenvalues(op(t)))) for t in GRID)
        assert worst < 1e-9, worst


def c05_singlet_curves():
    psi = named_states()["singlet"]
    for t in GRID:
        s_ref = -2 * math.cos(t) - 2 * math.sin(2 * t) * math.sin(t)
        f_ref = -2 * (math.cos(t) + math.sin(t)) * (1 + 2 * math.sin(2 * t))
        assert abs(expectation(psi, S(t)) - s_ref) < 1e-10
        assert abs(expectation(psi, T(t)) - f_ref) < 1e-10
    assert abs(expectation(psi, S(math.pi / 4)) + 2 * SQRT2) < 1e-6
    assert abs(expectation(psi, S(-math.pi / 4)) + 2 * SQRT2) < 1e-6
    assert abs(expectation(psi, S(3 * math.pi / 4)) - 2 * SQRT2) < 1e-6
    f = np.array([expectation(psi, T(t)) for t in GRID])
    assert abs(f.min() + 6 * SQRT2) < 1e-6
    assert abs(GRID[f.argmin()] - math.pi / 4) < 1e-12


def c06_chi_curve():
    chi = named_states()["chi"]
    g = np.array([expectation(chi, T(t)) for t in GRID])
    ref = 2 * (np.cos(GRID) + np.sin(GRID))
    assert np.max(np.abs(g - ref)) < 1e-10
    assert abs(np.max(np.abs(g)) - 2 * SQRT2) < 1e-6
    assert np.all(np.abs(g) <= 6)


def c07_mixed_state():
    rho = mixed_singlet_components()
    vals = np.array([mixed_expectation(rho, S(t)) for t in GRID])
    assert np.max(np.abs(vals + 2 * np.cos(GRID))) < 1e-10
    assert np.all(np.abs(vals) <= 2)


def c08_forge_round_trips():
    chsh_seed = CommutingSeed(((SQRT2, "Z", "Z"), (SQRT2, "X", "X")))
    rep = forge(chsh_seed, PairingScheme((("Z", "X"),)))
    assert rep.polynomial == chsh_polynomial() and len(rep.polynomial) == 4
    assert np.max(np.abs(assemble(rep.polynomial, rep.family, math.pi / 4) - chsh_seed.matrix())) < 1e-12

    t_seed = CommutingSeed(tuple((2 * SQRT2, a, a) for a in "XYZ"))
    for pairs in ((("X", "Y"), ("Y", "Z"), ("Z", "X")), (("Y", "Z"), ("Z", "X"), ("X", "Y"))):
        rep = forge(t_seed, PairingScheme(pairs))
        assert len(rep.polynomial) == 12 and rep.polynomial.equivalent(t_polynomial())
        assert np.max(np.abs(assemble(rep.polynomial, rep.family, math.pi / 4) - t_seed.matrix())) < 1e-12
    assert rep.polynomial == t_polynomial()


def c09_classification():
    q_s = global_quantum_range(chsh_polynomial(), family_S())
    assert classify(Interval(-2, 2), q_s) is TestType.TYPE1
    q_t = quantum_band(t_polynomial(), family_T(), math.pi / 4)
    assert abs(q_t.lo + 6 * SQRT2) < 1e-10 and abs(q_t.hi - 2 * SQRT2) < 1e-10
    assert classify(Interval(-6, 6), q_t) is TestType.TYPE2


def c10_fine_oracle_equivalence():
    rng = np.random.default_rng(2010)
    keys = [(1, 1), (1, 2), (2, 1), (2, 2)]
    for _ in range(500):
        table = CorrelationTable((2, 2), dict(zip(keys, rng.uniform(-1, 1, 4))))
        by_inequalities = all(-2 <= v <= 2 for v in fine_inequalities(table))
        assert fine_feasible(table, tol=1e-9).feasible == by_inequalities


def c11_global_ranges():
    q_s = global_quantum_range(chsh_polynomial(), family_S(), 721)
    q_t = global_quantum_range(t_polynomial(), family_T(), 721)
    assert abs(q_s.lo + 2 * SQRT2) < 1e-6 and abs(q_s.hi - 2 * SQRT2) < 1e-6
    assert abs(q_t.lo + 6 * SQRT2) < 1e-6 and abs(q_t.hi - 6 * SQRT2) < 1e-6


def c12_csv_determinism():
    with tempfile.TemporaryDirectory() as d:
        outs = [Path(d) / "a.csv", Path(d) / "b.csv"]
        for out in outs:
            subprocess.run(
                [sys.executable, "-m", "bellforge", "band", "--operator", "t", "--steps", "721", "--out", str(out)],
                check=True,
            )
        assert outs[0].read_bytes() == outs[1].read_bytes()
        assert len(outs[0].read_text().splitlines()) == 722


CRITERIA = [
    (1, "spectrum of S at pi/4", c01_spectrum_S),
    (2, "spectrum of T at pi/4 and singlet eigenvector", c02_spectrum_T),
    (3, "LHV value sets and bounds", c03_lhv_enumeration),
    (4, "analytic vs numeric spectra on 721-point grid", c04_analytic_vs_numeric),
    (5, "singlet curves for S and T", c05_singlet_curves),
    (6, "chi curve for T", c06_chi_curve),
    (7, "mixed-state expectation", c07_mixed_state),
    (8, "forge round-trips for CHSH and T", c08_forge_round_trips),
    (9, "classification Type1 / Type2", c09_classification),
    (10, "Fine LP vs inequalities on 500 random tables", c10_fine_oracle_equivalence),
    (11, "global quantum ranges", c11_global_ranges),
    (12, "band CSV byte-identical across runs", c12_csv_determinism),
]


def _run_criterion(number, title, fn):
    try:
        fn()
    except Exception as exc:
        line = f"criterion {number:2d} FAIL  {title}: {type(exc).__name__} {exc}"
        RESULTS.append(line)
        print(line)
        raise
    line = f"criterion {number:2d} PASS  {title}"
    RESULTS.append(line)
    print(line)


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    _run_criterion(number, title, fn)


if __name__ == "__main__":
    failed = 0
    for number, title, fn in CRITERIA:
        try:
            _run_criterion(number, title, fn)
        except Exception:
            failed += 1
    sys.exit(1 if failed else 0)
