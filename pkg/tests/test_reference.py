import math

import numpy as np
import pytest
from scipy.integrate import quad

from planarfrac import reference
from planarfrac.reference import _tables as T

EP = 35.2e9
MU_P = 12 * 8.3e-5
Q = 0.01


def test_radial_m_volume_identity():
    # conservation is the correctness gate for the frozen table
    for t in (10.0, 1170.0, 2e6):
        s = reference.radial_m(t, EP, MU_P, Q)
        vol, err = quad(lambda r: 2 * math.pi * r * float(s.width(r)),
                        0.0, s.radius, limit=300)
        assert vol == pytest.approx(Q * t, rel=1e-4)


def test_radial_m_scaling_exponent():
    t = 500.0
    a = reference.radial_m(t, EP, MU_P, Q)
    b = reference.radial_m(16 * t, EP, MU_P, Q)
    assert b.radius / a.radius == pytest.approx(16 ** (4 / 9), rel=1e-12)


def test_radial_m_regression_value():
    # frozen after first computation; guards the tabulated constants
    s = reference.radial_m(1170.0, EP, MU_P, Q)
    want = T.RADIAL_M_GAMMA * (EP * Q ** 3 * 1170.0 ** 4 / MU_P) ** (1 / 9)
    assert s.radius == pytest.approx(want, rel=1e-14)
    assert s.radius == pytest.approx(111.2256, rel=1e-4)
    assert float(s.width(1e-3)) == pytest.approx(5.4979e-4, rel=1e-3)


def test_radial_m_tip_behavior():
    s = reference.radial_m(1000.0, EP, MU_P, Q)
    assert float(s.width(s.radius * 1.001)) == 0.0
    w_near = float(s.width(s.radius * 0.999))
    assert w_near > 0.0
    # net pressure is negative near the tip, positive near the source
    assert float(s.net_pressure(0.05 * s.radius)) > 0.0
    assert float(s.net_pressure(0.995 * s.radius)) < 0.0


def test_radial_m_time_inversion():
    t = 777.0
    s = reference.radial_m(t, EP, MU_P, Q)
    assert reference.radial_m_time_of_radius(s.radius, EP, MU_P, Q) == \
        pytest.approx(t, rel=1e-12)


def test_radial_k_defining_conditions():
    kp = math.sqrt(32 / math.pi) * 1.5e6
    for t in (10.0, 1e4):
        s = reference.radial_k(t, EP, kp, Q)
        # volume balance is exact
        vol, _ = quad(lambda r: 2 * math.pi * r * float(s.width(r)),
                      0.0, s.radius, limit=200)
        assert vol == pytest.approx(Q * t, rel=1e-10)
        # K_I from uniform pressure on a circular crack equals K_Ic
        k_ic = kp * math.sqrt(math.pi / 32)
        p = float(s.net_pressure(0.3 * s.radius))
        k_i = 2 * p * math.sqrt(s.radius / math.pi)
        assert k_i == pytest.approx(k_ic, rel=1e-12)


def test_radial_k_scaling():
    kp = math.sqrt(32 / math.pi) * 1.5e6
    a = reference.radial_k(3.0, EP, kp, Q)
    b = reference.radial_k(96.0, EP, kp, Q)
    assert b.radius / a.radius == pytest.approx(32 ** (2 / 5), rel=1e-12)


def test_radial_regime_prefactors():
    # dimensionless radius prefactors of the two limiting regimes
    assert T.RADIAL_M_GAMMA == pytest.approx(0.6980, abs=2e-3)
    kp = 1.0
    t = 1.0
    s = reference.radial_k(t, 1.0, kp, 1.0)
    gamma_k = s.radius  # E'=Q=K'=t=1
    assert gamma_k == pytest.approx((3 * math.sqrt(2) / (2 * math.pi)) ** 0.4, rel=1e-12)
    assert gamma_k == pytest.approx(0.8546, abs=2e-3)


def test_pkn_volume_identity():
    h = 2.3
    mu = 1.1e-3
    for t in (5.0, 140.0):
        s = reference.pkn(t, EP, mu, 1e-3, h)
        # two wings of elliptic cross-section: V = 2 * (pi/4) h Int w dx
        vol, _ = quad(lambda x: math.pi / 4 * h * float(s.width(x)),
                      -s.half_length, s.half_length, limit=300)
        assert vol == pytest.approx(1e-3 * t, rel=2e-3)


def test_pkn_scaling_and_regression():
    h = 2.3
    mu = 1.1e-3
    a = reference.pkn(4.0, EP, mu, 1e-3, h)
    b = reference.pkn(128.0, EP, mu, 1e-3, h)
    assert b.half_length / a.half_length == pytest.approx(32 ** (4 / 5), rel=1e-12)
    assert b.inlet_width / a.inlet_width == pytest.approx(32 ** (1 / 5), rel=1e-12)

    s = reference.pkn(140.0, EP, mu, 1e-3, h)
    lam, bw = reference.pkn_prefactors(EP, mu, 1e-3, h)
    assert s.half_length == pytest.approx(lam * 140 ** 0.8, rel=1e-14)
    # frozen regression values from the similarity integration
    assert s.half_length == pytest.approx(81.343, rel=1e-4)
    assert s.inlet_width == pytest.approx(6.3254e-4, rel=1e-4)


def test_pkn_profile_ode_residual():
    # the frozen profile satisfies its similarity ODE away from the ends
    eta = T.PKN_ETA
    v = T.PKN_V
    v4 = v ** 4
    d2 = np.gradient(np.gradient(v4, eta), eta)
    lhs = 0.2 * v - 0.8 * eta * np.gradient(v, eta)
    sel = (eta > 0.05) & (eta < 0.9)
    resid = np.abs(T.PKN_D * d2[sel] - lhs[sel])
    assert np.max(resid) < 5e-3 * np.max(np.abs(lhs))


def test_leakoff_scaling_exponent_fits():
    t = np.geomspace(1e3, 1e6, 30)
    assert reference.leakoff_scaling_exponent(t, 3.0 * t ** 0.25) == \
        pytest.approx(0.25, abs=1e-12)
    assert reference.leakoff_scaling_exponent(t, 0.7 * t ** (4 / 9)) == \
        pytest.approx(4 / 9, abs=1e-12)
    with pytest.raises(ValueError):
        reference.leakoff_scaling_exponent(t[:4], t[:4])


def test_regime_crossover_ordering():
    # the physical radius follows the lower envelope: the viscous curve
    # (t^(4/9)) sits below the toughness curve (t^(2/5)) early on and
    # overtakes it at a finite crossover time
    kp = math.sqrt(32 / math.pi) * 0.156e6
    rm = reference.radial_m(1.0, EP, MU_P, Q).radius
    rk = reference.radial_k(1.0, EP, kp, Q).radius
    assert rm < rk
    assert reference.radial_m(1e9, EP, MU_P, Q).radius > \
        reference.radial_k(1e9, EP, kp, Q).radius
