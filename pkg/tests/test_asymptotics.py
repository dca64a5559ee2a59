"""Asymptotic models of v on both ends and the log-log slope fitter."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from painleve_mkdv.asymptotics import (loglog_slope, psi_stationary_threshold,
                                       psi_tilde, v_neg_asym, v_pos_asym)
from painleve_mkdv.errors import DomainError
from painleve_mkdv.stokes import ConnectionConstants, connection_constants, \
    make_params


def test_psi_tilde_values():
    c0 = ConnectionConstants(0.0, 0.0)
    val, der = psi_tilde(1.0, c0)
    assert val == pytest.approx(2.0 / 3.0, abs=1e-15)
    assert psi_tilde(4.0, c0)[1] == pytest.approx(2.0, abs=1e-15)
    c = connection_constants(make_params(0.0, 0.5))
    # frozen: (2/3)25^{3/2} - (3/4) d^2 ln 25 + phi
    assert psi_tilde(25.0, c)[0] == pytest.approx(82.20526652937216, abs=1e-10)


@given(st.floats(0.5, 500.0), st.floats(0.0, 1.2), st.floats(-3.0, 3.0))
@settings(max_examples=100, deadline=None)
def test_psi_tilde_derivative_matches_fd(s, d, phi):
    c = ConnectionConstants(d, phi)
    h = 1e-6 * max(1.0, s)
    fd = (psi_tilde(s + h, c)[0] - psi_tilde(s - h, c)[0]) / (2.0 * h)
    assert psi_tilde(s, c)[1] == pytest.approx(fd, rel=1e-7, abs=1e-7)


def test_psi_tilde_domain():
    with pytest.raises(DomainError):
        psi_tilde(-1.0, ConnectionConstants(0.1, 0.0))


def test_stationary_threshold():
    for pair in [(0.0, 0.5), (0.25, 0.3), (0.4, 0.5 * math.cos(0.4 * math.pi))]:
        c = connection_constants(make_params(*pair))
        s0 = psi_stationary_threshold(c.d)
        assert s0 > 0.0
        # derivative strictly positive beyond twice the threshold
        ss = np.linspace(2.0 * s0, 100.0, 50)
        assert np.all(psi_tilde(ss, c)[1] > 0.0)


def test_v_neg_asym_reference():
    p = make_params(0.0, 0.5)
    c = connection_constants(p)
    v, _ = v_neg_asym(-25.0, p, c, include_alpha_term=True)
    assert v == pytest.approx(0.1171823468567973, abs=1e-10)


def test_v_neg_asym_alpha_term_is_alpha_over_x():
    p = make_params(0.25, 0.3)
    c = connection_constants(p)
    x = -25.0
    with_term = v_neg_asym(x, p, c, True)[0]
    without = v_neg_asym(x, p, c, False)[0]
    assert with_term - without == pytest.approx(0.25 / x, abs=1e-16)


def test_v_neg_asym_derivative_matches_fd():
    p = make_params(0.25, 0.3)
    c = connection_constants(p)
    x = -30.0
    h = 1e-5
    fd = (v_neg_asym(x + h, p, c, True)[0] - v_neg_asym(x - h, p, c, True)[0]) / (2 * h)
    v, vp = v_neg_asym(x, p, c, True)
    assert vp == pytest.approx(fd, rel=1e-8)


def test_v_pos_asym_values():
    v, vp = v_pos_asym(10.0, 0.25)
    assert v == pytest.approx(0.025046875, abs=1e-16)
    h = 1e-5
    fd = (v_pos_asym(10 + h, 0.25)[0] - v_pos_asym(10 - h, 0.25)[0]) / (2 * h)
    assert vp == pytest.approx(fd, rel=1e-8)
    assert v_pos_asym(7.0, 0.0)[0] == 0.0


def test_v_pos_asym_monotone_leading():
    xs = np.linspace(1.0, 50.0, 200)
    v = v_pos_asym(xs, 0.25)[0]
    assert np.all(np.diff(v) < 0.0)


def test_loglog_slope_exact_laws():
    s = np.array([2.0, 5.0, 11.0, 23.0, 47.0])
    assert loglog_slope(np.stack([s, s ** -2.0], axis=1)) == pytest.approx(-2.0, abs=1e-12)
    assert loglog_slope(np.stack([s, 3.0 * s ** -1.75], axis=1)) == pytest.approx(-1.75, abs=1e-12)


def test_loglog_slope_noisy_law():
    s = np.linspace(3.0, 40.0, 25)
    vals = s ** -1.0 * (1.0 + 0.01 * np.sin(s))
    assert loglog_slope(np.stack([s, vals], axis=1)) == pytest.approx(-1.0, abs=0.02)


def test_loglog_slope_validation():
    with pytest.raises(DomainError):
        loglog_slope([(1.0, 1.0), (2.0, 1.0)])  # too few
    with pytest.raises(DomainError):
        loglog_slope([(1.0, 1.0)] * 6)  # coincident abscissas
    with pytest.raises(DomainError):
        loglog_slope([(1.0, 1.0), (2.0, -1.0), (3.0, 1.0), (4.0, 1.0), (5.0, 1.0)])
