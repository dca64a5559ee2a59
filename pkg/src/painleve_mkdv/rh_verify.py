"""Numerical verification of the computable Riemann-Hilbert identities:
phase maps, the diagonal matrix N(z), the power factor beta(z), the origin
residue identity, the stationary-point contour identity reproducing the
oscillatory tail, and the parabolic-cylinder local parametrices with their
first-order predictions.

Conventions fixed here and used throughout:

* contour circles are traversed clockwise (the residue identity evaluates
  to -2 pi i times the residue);
* powers of (z + 1/2)/(z - 1/2) are principal-branch with the cut on the
  segment [-1/2, 1/2];
* the argument of sqrt(t) zeta(z) is continued over the sector chain
  (-pi/4, 7 pi/4), which on the right ring equals
  3 pi/4 + Arg(z - 1/2) + Arg(z + 1)/2; with the segment-cut ratio power
  this makes beta(z) single-valued and analytic on the punctured disc.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (BranchCutError, DegenerateParamsError, DomainError,
                     QuadratureError, SectorBoundaryError)
from .specfun import log_gamma, pcf_d
from .stokes import (ASParams, connection_constants, rh_constants,
                     stokes_triple)

__all__ = [
    "SIGMA1",
    "SIGMA2",
    "SIGMA3",
    "ContourCircle",
    "phase_maps",
    "n_matrix",
    "beta_fn",
    "residue_check_origin",
    "stationary_identity",
    "z_parametrix",
    "t_right_parametrix",
    "t_left_parametrix",
    "m_pred",
]

SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

_RING_PHASE = 0.75 * math.pi
_ZETA_SCALE = 4.0 * math.sqrt(3.0) / 3.0


@dataclass(frozen=True)
class ContourCircle:
    """Quadrature circle; radius < 1/4 keeps the branch points and the
    segment cut on the correct sides for circles about 0 and +-1/2."""

    center: complex
    radius: float
    orientation: str = "clockwise"
    n_nodes: int = 256

    def __post_init__(self):
        if self.orientation not in ("clockwise", "counterclockwise"):
            raise DomainError("orientation must be clockwise or counterclockwise")
        if not 0.0 < self.radius < 0.25:
            raise DomainError("radius must lie in (0, 1/4)")
        if self.n_nodes < 64:
            raise DomainError("need at least 64 quadrature nodes")


def phase_maps(z: complex) -> tuple[complex, complex, complex]:
    """theta_tilde = i(4z^3/3 - z), eta = i*theta_tilde = z - 4z^3/3, and
    zeta = (4 sqrt(3)/3) e^{3 pi i/4} (z - 1/2) sqrt(z + 1) (principal root).

    zeta solves zeta^2 = -4(theta_tilde(z) - theta_tilde(1/2)).  Warns when
    z sits within 1e-9 of the sqrt branch cut (-inf, -1].
    """
    z = complex(z)
    theta = 1j * (4.0 * z ** 3 / 3.0 - z)
    eta = z - 4.0 * z ** 3 / 3.0
    w = z + 1.0
    if abs(w.imag) < 1e-9 and w.real <= 0.0:
        warnings.warn("zeta evaluated within 1e-9 of its branch cut (-inf, -1]",
                      stacklevel=2)
    zeta = _ZETA_SCALE * cmath.exp(1j * _RING_PHASE) * (z - 0.5) * cmath.sqrt(w)
    return theta, eta, zeta


def _on_segment(z: complex, tol: float = 1e-12) -> bool:
    return abs(z.imag) <= tol and -0.5 - tol <= z.real <= 0.5 + tol


def n_matrix(z: complex, nu: complex) -> np.ndarray:
    """Diagonal matrix ((z+1/2)/(z-1/2))^{nu sigma3}, cut on [-1/2, 1/2]."""
    z = complex(z)
    if _on_segment(z):
        raise BranchCutError("n_matrix undefined on the segment [-1/2, 1/2]")
    ratio = (z + 0.5) / (z - 0.5)
    power = cmath.exp(nu * cmath.log(ratio))
    return np.array([[power, 0.0], [0.0, 1.0 / power]], dtype=complex)


def beta_fn(z: complex, t: float, nu: complex) -> complex:
    """beta(z) = (sqrt(t) zeta(z) (z+1/2)/(z-1/2))^nu near z = +1/2.

    The zeta argument is continued over the parametrix sector chain; combined
    with the segment-cut power of the ratio, the z - 1/2 factors cancel and
    the product is single-valued and analytic on the punctured disc about
    +1/2: its base is sqrt(t) (4 sqrt(3)/3) e^{3 pi i/4} sqrt(z+1) (z+1/2).
    """
    z = complex(z)
    if not t > 0.0:
        raise DomainError("beta_fn requires t > 0")
    if abs(z + 0.5) < 1e-12 or abs(z + 1.0) < 1e-12:
        raise BranchCutError("beta_fn undefined at the left branch points")
    log_mag = (0.5 * math.log(t) + math.log(_ZETA_SCALE)
               + 0.5 * math.log(abs(z + 1.0)) + math.log(abs(z + 0.5)))
    arg = _RING_PHASE + 0.5 * cmath.phase(z + 1.0) + cmath.phase(z + 0.5)
    return cmath.exp(nu * (log_mag + 1j * arg))


def _circle_integral(f, circle: ContourCircle, tol: float = 1e-10,
                     max_nodes: int = 16384) -> complex:
    """Spectral trapezoid quadrature of a contour integral over the circle,
    node-doubling until two successive refinements agree."""
    sign = -1.0 if circle.orientation == "clockwise" else 1.0
    n = circle.n_nodes
    prev = None
    while n <= max_nodes:
        theta = 2.0 * math.pi * np.arange(n) / n
        pos = np.exp(sign * 1j * theta)
        zs = circle.center + circle.radius * pos
        dz = sign * 1j * circle.radius * pos * (2.0 * math.pi / n)
        total = complex(np.sum(f(zs) * dz))
        if prev is not None and abs(total - prev) < tol * max(1.0, abs(total)):
            return total
        prev = total
        n *= 2
    raise QuadratureError("circle quadrature did not converge "
                          f"(last delta at {n//2} nodes)")


def residue_check_origin(circle: ContourCircle, nu: complex) -> complex:
    """Clockwise integral of E11(z)^2 / eta(z) over a circle about 0, where
    E11 = ((z+1/2)/(1/2-z))^nu; equals -2 pi i for every nu."""
    if circle.center != 0:
        raise DomainError("residue check runs on a circle about the origin")
    if circle.orientation != "clockwise":
        raise DomainError("the residue convention here is clockwise")

    def integrand(zs):
        e11 = np.exp(nu * (np.log(zs + 0.5) - np.log(0.5 - zs)))
        eta = zs - 4.0 * zs ** 3 / 3.0
        return e11 ** 2 / eta

    return _circle_integral(integrand, circle)


def _default_stationary_circles() -> tuple[ContourCircle, ContourCircle]:
    return (ContourCircle(0.5, 0.15), ContourCircle(-0.5, 0.15))


def stationary_identity(p: ASParams, t: float,
                        circles: tuple[ContourCircle, ContourCircle] | None = None
                        ) -> tuple[complex, complex]:
    """Both sides of the stationary-point contour identity.

    lhs: the weighted clockwise integrals of beta^{+-2}/zeta over the circles
    about +-1/2; rhs: -i pi d t^{-1/2} cos((2/3) t - (3/4) d^2 ln t^{2/3} + phi).
    The identity is exact for every t > 0.
    """
    if not t > 0.0:
        raise DomainError("stationary identity requires t > 0")
    if p.degenerate:
        return 0.0 + 0.0j, 0.0 + 0.0j
    c_plus, c_minus = circles if circles is not None else _default_stationary_circles()
    if c_plus.center != 0.5 or c_minus.center != -0.5:
        raise DomainError("circles must be centered at +1/2 and -1/2")
    rc = rh_constants(p)
    cc = connection_constants(p)
    s3 = stokes_triple(p).s3
    nu = rc.nu

    def f_plus(zs):
        return np.array([beta_fn(z, t, nu) ** 2 / phase_maps(z)[2] for z in zs])

    def f_minus(zs):
        return np.array([beta_fn(-z, t, nu) ** -2 / phase_maps(-z)[2] for z in zs])

    i_plus = _circle_integral(f_plus, c_plus)
    i_minus = _circle_integral(f_minus, c_minus)
    lhs = (-t ** -0.5 * (nu * s3 / rc.h1) * cmath.exp(2j * t / 3.0) * i_plus
           + t ** -0.5 * (rc.h1 / s3) * cmath.exp(-2j * t / 3.0) * i_minus)
    phase = (2.0 / 3.0) * t - 0.75 * cc.d ** 2 * math.log(t ** (2.0 / 3.0)) + cc.phi
    rhs = -1j * math.pi * cc.d * t ** -0.5 * math.cos(phase)
    return lhs, rhs


_SECTOR_RAYS = (-0.25 * math.pi, 0.0, 0.5 * math.pi, math.pi,
                1.5 * math.pi, 1.75 * math.pi)


def _chain_arg(w: complex) -> float:
    a = cmath.phase(w)
    return a + 2.0 * math.pi if a < -0.25 * math.pi else a


def _h_factors(nu: complex) -> tuple[complex, complex]:
    h0 = -1j * math.sqrt(2.0 * math.pi) * cmath.exp(-log_gamma(nu + 1.0))
    if nu.imag == 0.0 and nu.real >= 0.0 and nu.real == int(nu.real):
        h1 = 0.0 + 0.0j  # 1/Gamma(-nu) vanishes
    else:
        h1 = math.sqrt(2.0 * math.pi) * cmath.exp(1j * math.pi * nu - log_gamma(-nu))
    return h0, h1


def _z_sector(w: complex) -> int:
    arg = _chain_arg(w)
    for ray in _SECTOR_RAYS:
        if abs(arg - ray) < 1e-8:
            raise SectorBoundaryError(f"w on a sector boundary ray (arg = {arg:.6f})")
    if arg < 0.0:
        return 0
    if arg < 0.5 * math.pi:
        return 1
    if arg < math.pi:
        return 2
    if arg < 1.5 * math.pi:
        return 3
    return 4


def _z_base(nu: complex, w: complex) -> np.ndarray:
    # base-sector matrix built on D_{-nu-1}(iw) and D_nu(w)
    v1, d1 = pcf_d(-nu - 1.0, 1j * w)
    v2, d2 = pcf_d(nu, w)
    col_phase = cmath.exp(0.5j * math.pi * (nu + 1.0))
    return np.array([
        [math.sqrt(0.5) * v1 * col_phase, math.sqrt(0.5) * v2],
        [math.sqrt(2.0) * 1j * d1 * col_phase, math.sqrt(2.0) * d2],
    ], dtype=complex)


def _z_product(nu: complex, w: complex, sector: int) -> np.ndarray:
    # recurrence form: safe only while no exponential scale separation
    h0, h1 = _h_factors(nu)
    connections = (
        np.array([[1.0, 0.0], [h0, 1.0]], dtype=complex),
        np.array([[1.0, h1], [0.0, 1.0]], dtype=complex),
        np.array([[1.0, 0.0], [-h0 * cmath.exp(-2j * math.pi * nu), 1.0]], dtype=complex),
        np.array([[1.0, -h1 * cmath.exp(2j * math.pi * nu)], [0.0, 1.0]], dtype=complex),
    )
    z = _z_base(nu, w)
    for j in range(sector):
        z = z @ connections[j]
    return z


# Per sector: (rotation for the recessive column rot_r with D_nu, rotation for
# the growing column rot_g with D_{-nu-1}), both chosen inside the |arg| <
# 3pi/4 validity cone of the respective large-w behavior.
_SECTOR_BASIS = {
    0: (1.0, 1.0j),
    1: (1.0, -1.0j),
    2: (-1.0, -1.0j),
    3: (-1.0, 1.0j),
    4: (1.0, 1.0j),
}
_SECTOR_MID = {0: -0.125 * math.pi, 1: 0.25 * math.pi, 2: 0.75 * math.pi,
               3: 1.25 * math.pi, 4: 1.625 * math.pi}

_z_calib_cache: dict = {}


def _basis_matrix(nu: complex, w: complex, sector: int) -> np.ndarray:
    # carries the same 2^{-sigma3/2} row scaling as the recurrence form, so
    # the connection coefficients inherit the diagonal structure
    rot_r, rot_g = _SECTOR_BASIS[sector]
    vg, dg = pcf_d(-nu - 1.0, rot_g * w)
    vr, dr = pcf_d(nu, rot_r * w)
    return np.array([
        [math.sqrt(0.5) * vg, math.sqrt(0.5) * vr],
        [math.sqrt(2.0) * rot_g * dg, math.sqrt(2.0) * rot_r * dr],
    ], dtype=complex)


def z_parametrix(nu: complex, w: complex) -> np.ndarray:
    """Sectionally holomorphic parabolic-cylinder matrix Z(w).

    In the base sector Z builds on D_{-nu-1}(iw) and D_nu(w); crossing each
    boundary ray of the chain multiplies by a unipotent factor, so
    det Z == -1 everywhere.  Numerically the unipotent products mix columns
    of opposite exponential scale (a 2 Re(w^2)/4-digit cancellation at large
    |w|), so each sector instead uses a basis of functions recessive/growing
    *in that sector*, glued to the recurrence form by constant matrices
    calibrated once per nu at small |w|.
    """
    w = complex(w)
    sector = _z_sector(w)
    key = (nu.real, nu.imag, sector)
    if key not in _z_calib_cache:
        w_cal = 1.5 * cmath.exp(1j * _SECTOR_MID[sector])
        ref = _z_product(nu, w_cal, sector)
        base = _basis_matrix(nu, w_cal, sector)
        coeff = np.linalg.solve(base, ref)
        # Structural zeros: a column with recessive asymptotics somewhere in
        # the (closed) sector is a multiple of the unique recessive solution
        # there, so its coefficient on the other basis function vanishes
        # identically.  Calibration noise in those entries would be blown up
        # by e^{|Re w^2|/2} at large |w|, so they are clamped exactly.
        scale = np.max(np.abs(coeff))
        if abs(coeff[1, 0]) > 1e-6 * scale or \
                (sector < 4 and abs(coeff[0, 1]) > 1e-6 * scale):
            raise QuadratureError("sector calibration lost its structural zeros")
        coeff[1, 0] = 0.0
        if sector < 4:
            coeff[0, 1] = 0.0
        _z_calib_cache[key] = coeff
    return _basis_matrix(nu, w, sector) @ _z_calib_cache[key]


def _diag_power(a: complex) -> np.ndarray:
    return np.array([[a, 0.0], [0.0, 1.0 / a]], dtype=complex)


def t_right_parametrix(p: ASParams, t: float, z: complex) -> np.ndarray:
    """Local parametrix about z = +1/2 on the annulus 0.05 <= |z-1/2| <= 0.2."""
    z = complex(z)
    if not 0.05 - 1e-12 <= abs(z - 0.5) <= 0.2 + 1e-12:
        raise DomainError("t_right_parametrix expects 0.05 <= |z - 1/2| <= 0.2")
    if not t > 0.0:
        raise DomainError("t must be positive")
    if p.degenerate:
        raise DegenerateParamsError("parametrix prefactor -h1/s3 undefined at (0,0)")
    rc = rh_constants(p)
    s3 = stokes_triple(p).s3
    nu = rc.nu
    theta, _, zeta = phase_maps(z)
    w = math.sqrt(t) * zeta
    beta = beta_fn(z, t, nu)
    a_fac = cmath.sqrt(-rc.h1 / s3)
    p_mat = np.array([[w, 1.0], [1.0, 0.0]], dtype=complex)
    out = _diag_power(beta) @ _diag_power(1.0 / a_fac)
    out = out @ _diag_power(cmath.exp(1j * t / 3.0)) @ _diag_power(math.sqrt(0.5))
    out = out @ p_mat @ z_parametrix(nu, w)
    out = out @ _diag_power(cmath.exp(t * theta)) @ _diag_power(a_fac)
    return out


def t_left_parametrix(p: ASParams, t: float, z: complex) -> np.ndarray:
    """Mirror parametrix about z = -1/2: sigma2 T_right(-z) sigma2."""
    return SIGMA2 @ t_right_parametrix(p, t, -complex(z)) @ SIGMA2


def m_pred(p: ASParams, t: float, z: complex, side: str = "right") -> np.ndarray:
    """First-order prediction I + t^{-1/2} F + t^{-1} G for T N^{-1} on the
    circle about +1/2 (side='right') or -1/2 (side='left')."""
    if side not in ("right", "left"):
        raise DomainError("side must be 'right' or 'left'")
    if not t > 0.0:
        raise DomainError("t must be positive")
    rc = rh_constants(p)
    nu = rc.nu
    if nu == 0:
        return np.eye(2, dtype=complex)
    s3 = stokes_triple(p).s3
    z = complex(z)
    zr = z if side == "right" else -z
    zeta = phase_maps(zr)[2]
    beta = beta_fn(zr, t, nu)
    osc = cmath.exp(2j * t / 3.0)
    if side == "right":
        f12 = -(nu * s3 / rc.h1) * osc * beta ** 2 / zeta
        f21 = -(rc.h1 / s3) / osc * beta ** -2 / zeta
        g11 = nu * (nu + 1.0) / (2.0 * zeta ** 2)
        g22 = -nu * (nu - 1.0) / (2.0 * zeta ** 2)
    else:
        f12 = (rc.h1 / s3) / osc * beta ** -2 / zeta
        f21 = (nu * s3 / rc.h1) * osc * beta ** 2 / zeta
        g11 = -nu * (nu - 1.0) / (2.0 * zeta ** 2)
        g22 = nu * (nu + 1.0) / (2.0 * zeta ** 2)
    out = np.eye(2, dtype=complex)
    out[0, 1] = f12 / math.sqrt(t)
    out[1, 0] = f21 / math.sqrt(t)
    out[0, 0] += g11 / t
    out[1, 1] += g22 / t
    return out
