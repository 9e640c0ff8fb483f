import numpy as np
import pytest
from scipy.optimize import linprog

from bellforge.simplex import linprog_eq


def test_simple_optimum():
    # min -x0 - x1  s.t.  x0 + 2 x1 + s0 = 4,  3 x0 + x1 + s1 = 6
    a = [[1, 2, 1, 0], [3, 1, 0, 1]]
    res = linprog_eq([-1, -1, 0, 0], a, [4, 6])
    assert res.status == "optimal"
    np.testing.assert_allclose(res.x[:2], [1.6, 1.2], atol=1e-12)
    assert res.fun == pytest.approx(-2.8)


def test_infeasible():
    res = linprog_eq(None, [[1, 1], [1, 1]], [1, 2])
    assert res.status == "infeasible"
    assert res.infeasibility == pytest.approx(1.0)


def test_unbounded():
    res = linprog_eq([-1, 0], [[1, -1]], [1])
    assert res.status == "unbounded"


def test_negative_rhs_and_redundant_rows():
    a = [[1, 1, 0], [-1, -1, 0], [0, 1, 1]]
    res = linprog_eq([1, 2, 3], a, [1, -1, 1])
    assert res.status == "optimal"
    # x1 = 1 covers both constraints at cost 2; x0 = x2 = 1 costs 4
    assert res.fun == pytest.approx(2.0)
    np.testing.assert_allclose(np.array(a) @ res.x, [1, -1, 1], atol=1e-12)


def test_beale_cycling_example_terminates():
    # Beale's LP cycles under Dantzig's rule; Bland's rule must terminate at -1/20.
    c = [-0.75, 150, -0.02, 6, 0, 0, 0]
    a = [
        [0.25, -60, -0.04, 9, 1, 0, 0],
        [0.5, -90, -0.02, 3, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1],
    ]
    res = linprog_eq(c, a, [0, 0, 1], max_iter=200)
    assert res.status == "optimal"
    assert res.fun == pytest.approx(-0.05)


def test_random_lps_agree_with_scipy(rng):
    for _ in range(40):
        m, n = rng.integers(2, 6), rng.integers(6, 14)
        a = rng.normal(size=(m, n))
        x0 = rng.uniform(0, 1, size=n)
        b = a @ x0
        c = rng.uniform(0, 2, size=n)  # positive costs keep the problem bounded
        ours = linprog_eq(c, a, b)
        ref = linprog(c, A_eq=a, b_eq=b, bounds=(0, None), method="highs")
        assert ours.status == "optimal" and ref.status == 0
        assert ours.fun == pytest.approx(ref.fun, abs=1e-8)
        np.testing.assert_allclose(a @ ours.x, b, atol=1e-9)
