"""Special-function kernels against a frozen high-precision oracle.

Reference values were computed once with mpmath at 30 significant digits
(power series / reflection identities / numerical differentiation) and are
frozen below; the implementation under test never touches mpmath.
"""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from painleve_mkdv.errors import PoleError, SpecFunRangeError
from painleve_mkdv.specfun import (_airy_asym_neg, _airy_asym_pos,
                                   _airy_series_dd, airy_ai, log_gamma, pcf_d)

# (x, Ai(x), Ai'(x)) at 17 significant digits
AIRY_TABLE = [
    (0.0, 0.35502805388781724, -0.25881940379280680),
    (2.3, 0.021831993180622639, -0.035173122720818072),
    (-6.5, -0.23802030199711580, -0.67495249251320217),
    (9.0, 2.4711684308724898e-9, -7.4806413896589464e-9),
    (-9.0, -0.022133721547341404, -0.97566398092633159),
    (10.0, 1.1047532552898686e-10, -3.5206336767389236e-10),
    (12.0, 1.3931846888753608e-13, -4.8547365549853085e-13),
    (15.0, 2.1649625207379923e-18, -8.4205679540177728e-18),
    (-15.0, 0.27821749087082893, 0.27237420430864202),
]


@pytest.mark.parametrize("x,ai_ref,aip_ref", AIRY_TABLE)
def test_airy_reference_values(x, ai_ref, aip_ref):
    ai, aip = airy_ai(x)
    assert abs(ai - ai_ref) <= 1e-12 * abs(ai_ref)
    assert abs(aip - aip_ref) <= 1e-12 * abs(aip_ref)


def test_airy_seam_agreement():
    # Maclaurin and asymptotic branches at the switchover, both sides of 0
    s_pos = _airy_series_dd(9.0)
    a_pos = _airy_asym_pos(9.0)
    s_neg = _airy_series_dd(-9.0)
    a_neg = _airy_asym_neg(-9.0)
    for s, a in ((s_pos, a_pos), (s_neg, a_neg)):
        assert abs(s[0] - a[0]) <= 1e-12 * abs(s[0])
        assert abs(s[1] - a[1]) <= 1e-12 * abs(s[1])


def test_airy_asymptotic_envelope():
    # leading large-x law e^{-(2/3)x^{3/2}} / (2 sqrt(pi) x^{1/4})
    ai, _ = airy_ai(10.0)
    lead = math.exp(-2.0 / 3.0 * 10.0 ** 1.5) / (2.0 * math.sqrt(math.pi) * 10.0 ** 0.25)
    assert abs(ai - lead) / ai < 5e-3


def test_airy_rejects_nan():
    with pytest.raises(ValueError):
        airy_ai(float("nan"))


# log-Gamma ------------------------------------------------------------------

LOGGAMMA_TABLE = [
    (1.0 + 0.0j, 0.0 + 0.0j),
    (0.3 + 0.4j, 0.49665590338172580 - 0.98274344760714666j),
    (-3.2 + 0.7j, -2.3406078939632626 - 10.713635915626588j),
    (-3.2 - 0.7j, -2.3406078939632626 + 10.713635915626588j),
    (-17.5 + 2.0j, -39.277772095541729 - 50.763570243203530j),
    (0.0 + 20.0j, -31.994854139470255 + 39.125080293545000j),
    (-2.5 + 0.0j, -0.056243716497674051 - 9.4247779607693797j),
]


@pytest.mark.parametrize("z,ref", LOGGAMMA_TABLE)
def test_log_gamma_reference_values(z, ref):
    got = log_gamma(z)
    assert abs(got - ref) <= 1e-12 * max(1.0, abs(ref))


def test_log_gamma_reflection_modulus():
    # |Gamma(iy)|^2 = pi / (y sinh(pi y)), the independent oracle route
    got = abs(cmath.exp(log_gamma(1j)))
    want = math.sqrt(math.pi / math.sinh(math.pi))
    assert abs(got - want) <= 1e-12
    assert abs(want - 0.52156404686493984) <= 1e-15


def test_log_gamma_arg_near_origin():
    # high-precision oracle value; also consistent with the expansion
    # -pi/2 - gamma*y + O(y^3)
    y = 0.0457859
    got = log_gamma(1j * y).imag
    assert abs(got - (-1.5971862480817344)) <= 1e-12
    expansion = -0.5 * math.pi - 0.5772156649015329 * y
    assert abs(got - expansion) <= 0.5 * y ** 3


@given(st.complex_numbers(min_magnitude=0.01, max_magnitude=19.0,
                          allow_infinity=False, allow_nan=False))
@settings(max_examples=120, deadline=None)
def test_log_gamma_recurrence(z):
    if z.imag == 0.0 and z.real <= 0.0:
        return
    lhs = log_gamma(z + 1.0)
    rhs = log_gamma(z) + cmath.log(z)
    diff = lhs - rhs
    # imaginary parts may differ by a multiple of 2 pi only off the principal
    # region; on the shifted path they agree exactly
    assert abs(diff.real) <= 1e-12 * max(1.0, abs(lhs.real))
    assert abs(math.remainder(diff.imag, 2.0 * math.pi)) <= 1e-11


def test_log_gamma_pole():
    for z in (0.0, -1.0, -7.0):
        with pytest.raises(PoleError):
            log_gamma(z)


# Parabolic cylinder ---------------------------------------------------------

# (nu, z, D_nu(z), dD_nu/dz) frozen from the 30-digit oracle
PCF_TABLE = [
    ((0 - 0.0458j), (1.0 + 0.5j),
     (0.81238096393322811 - 0.21987706324634255j),
     (-0.47369123606740618 - 0.11425013718318040j)),
    ((0.3 + 0j), (-2.0 + 3.0j),
     (-4.4528813659219104 - 2.4851362383541396j),
     (-8.2267945660356394 + 4.5731665633796174j)),
    ((1 + 0.2j), (4.0 - 4.0j),
     (1.9128248443062615 + 6.3581527686005601j),
     (-17.299871936029325 - 7.9737386158398118j)),
    ((-0.5 + 0.1j), (7.4 + 0.3j),
     (2.5283487158293466e-7 - 3.3744905849847814e-7j),
     (-9.9735260852017452e-7 + 1.2365998978886890e-6j)),
    ((-0.5 + 0.1j), (7.6 + 0.3j),
     (1.1362129189114184e-7 - 1.6047567211436617e-7j),
     (-4.6063558834682008e-7 + 6.0469774378782825e-7j)),
    ((0 - 0.142j), 12.0j,
     (5057126260348442.3 - 1859523356293102.4j),
     (-11217429708132700.0 - 30320658297658977.0j)),
    ((0 - 0.142j), (-11.0 + 0.5j),
     (325137353463.47842 - 281351537065.46184j),
     (-1690213980828.1766 + 1599698126028.5580j)),
    ((2 + 0j), (-9.0 - 9.0j),
     (55.075010140495011 - 152.35400637339463j),
     (944.38120396814771 - 414.77541102586082j)),
    ((0.7 - 0.7j), (3.0 - 3.0j),
     (-1.5496845510053813 + 0.28599529977879550j),
     (1.5211065039884749 - 2.6762418902611211j)),
]


@pytest.mark.parametrize("nu,z,val_ref,der_ref", PCF_TABLE)
def test_pcf_reference_values(nu, z, val_ref, der_ref):
    val, der = pcf_d(nu, z)
    assert abs(val - val_ref) <= 1e-10 * abs(val_ref)
    assert abs(der - der_ref) <= 1e-10 * abs(der_ref)


def test_pcf_gaussian_identity():
    # D_0(z) = e^{-z^2/4}
    for z in (1.3, -2.0 + 0.7j, 4.0j, 6.0, -5.5):
        val, der = pcf_d(0.0, z)
        want = cmath.exp(-complex(z) ** 2 / 4.0)
        assert abs(val - want) <= 1e-14 * abs(want) + 1e-300
        assert abs(der - (-0.5 * complex(z)) * want) <= 1e-12 * max(abs(want), 1e-30)


def test_pcf_dminus1_at_zero():
    val, _ = pcf_d(-1.0, 0.0)
    assert abs(val - math.sqrt(math.pi / 2.0)) <= 1e-13


@pytest.mark.parametrize("nu", [-0.5j, 0.3, 1 + 0.2j])
def test_pcf_recurrences(nu):
    # three-term recurrence and the derivative relation, sampled over the
    # square [-4, 4] x [-4, 4]
    zs = [complex(x, y) for x in (-4.0, -1.5, 0.5, 2.5, 4.0)
          for y in (-4.0, -1.0, 0.0, 2.0, 4.0)]
    for z in zs:
        v_hi, _ = pcf_d(nu + 1.0, z)
        v_mid, d_mid = pcf_d(nu, z)
        v_lo, _ = pcf_d(nu - 1.0, z)
        scale = max(1.0, abs(v_hi), abs(v_mid), abs(v_lo))
        assert abs(v_hi - z * v_mid + nu * v_lo) <= 1e-10 * scale
        assert abs(d_mid + 0.5 * z * v_mid - nu * v_lo) <= 1e-10 * scale


def test_pcf_range_guard():
    with pytest.raises(SpecFunRangeError):
        pcf_d(0.3, 60.0)
    with pytest.raises(ValueError):
        pcf_d(complex("nan"), 1.0)
