"""Principal-value total integral and the transform near xi = 0."""

import math
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from painleve_mkdv.errors import DomainError
from painleve_mkdv.integrals import (TailPolicy, pv_total_integral,
                                     total_integral_formula, v_hat)
from painleve_mkdv.stokes import make_params


def test_formula_values():
    assert total_integral_formula(make_params(0.25, 0.0)) == 0.0
    assert total_integral_formula(make_params(0.0, 0.5)) == pytest.approx(
        0.5 * math.log(3.0), abs=1e-15)
    # frozen 30-digit evaluation
    assert total_integral_formula(make_params(0.25, 0.3)) == pytest.approx(
        0.45288070667073726, abs=1e-15)


@given(st.tuples(st.floats(-0.45, 0.45), st.floats(0.001, 0.9)).filter(
    lambda ak: ak[1] < 0.99 * math.cos(math.pi * ak[0])))
@settings(max_examples=100, deadline=None)
def test_formula_antisymmetry(ak):
    alpha, k = ak
    plus = total_integral_formula(make_params(alpha, k))
    minus = total_integral_formula(make_params(alpha, -k))
    assert plus == -minus  # exact formula parity


def test_tail_policy_validation():
    with pytest.raises(DomainError):
        TailPolicy(cutoff=10.0)
    with pytest.raises(DomainError):
        TailPolicy(ibp_levels=3)


def test_pv_degenerate():
    assert pv_total_integral(make_params(0.0, 0.0)) == 0.0


def test_pv_matches_formula(sol_0_05, sol_025_03):
    for sol in (sol_0_05, sol_025_03):
        p = sol.params
        got = pv_total_integral(p, solution=sol)
        assert abs(got - total_integral_formula(p)) < 1e-3


def test_pv_cutoff_invariance(sol_0_05):
    p = sol_0_05.params
    vals = [pv_total_integral(p, TailPolicy(cutoff=x), solution=sol_0_05)
            for x in (40.0, 60.0, 80.0)]
    assert max(vals) - min(vals) < 2e-3


def test_pv_ibp_levels(sol_0_05):
    p = sol_0_05.params
    v2 = pv_total_integral(p, TailPolicy(ibp_levels=2), solution=sol_0_05)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        v1 = pv_total_integral(p, TailPolicy(ibp_levels=1), solution=sol_0_05)
    # one level keeps only the first boundary term; the difference is the
    # second boundary term, O(X^{-9/4}) ~ 1e-4 at X = 60
    assert abs(v1 - v2) < 1e-3
    assert abs(v2 - total_integral_formula(p)) < 1e-3


def test_v_hat_validation(sol_0_05):
    with pytest.raises(DomainError):
        v_hat(sol_0_05.params, 0.0, solution=sol_0_05)
    with pytest.raises(DomainError):
        v_hat(sol_0_05.params, 1.5, solution=sol_0_05)


def test_v_hat_reality_symmetry(sol_025_03):
    p = sol_025_03.params
    for xi in (1e-3, 0.2, 0.8):
        plus = v_hat(p, xi, solution=sol_025_03)
        minus = v_hat(p, -xi, solution=sol_025_03)
        assert abs(plus - minus.conjugate()) < 1e-6


def test_v_hat_zero_limit(sol_025_03):
    # vhat(xi) -> c -/+ i pi alpha as xi -> 0 +/-
    p = sol_025_03.params
    c = total_integral_formula(p)
    for xi in (1e-3, -1e-3):
        got = v_hat(p, xi, solution=sol_025_03)
        want = complex(c, -math.copysign(math.pi * p.alpha, xi))
        assert abs(got - want) < 1e-2


def test_v_hat_odd_part_is_f_limit(sol_025_03):
    # the odd-in-xi part isolates the alpha/x contribution -/+ i pi alpha
    p = sol_025_03.params
    odd = 0.5 * (v_hat(p, 1e-3, solution=sol_025_03)
                 - v_hat(p, -1e-3, solution=sol_025_03))
    assert abs(odd - complex(0.0, -math.pi * p.alpha)) < 1e-3
