import logging
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import on_sphere_point, random_sphere_curve
from hdruled.curves import Curve3, HyperDualCurve, curve_from_frame_lanes, frame_field_curve, helix, circle
from hdruled.study import (BaseMismatchError, Line3, MembershipError, PreconditionError,
                           RuledSurface3, build_couple, decompose, dual_det_identity_residual,
                           dual_to_line, helix_reference_dual_vectors, inverse_pair,
                           is_developable_dual, is_developable_r3, line_to_dual,
                           pair_from_unit_gamma, ruled_from_gamma)
from hdruled.scalars import Dual
from hdruled.vectors import E1, E2, E3, ZERO, DualVec3, HyperDualVec3, on_unit_dual_sphere, on_unit_hyperdual_sphere


def const(v):
    return Curve3.constant(v, (0.0, 1.0))


def const_gamma(*vs):
    return HyperDualCurve([const(v) for v in vs], (0.0, 1.0))


def test_line_to_dual_examples():
    A = line_to_dual(Line3(E3, ZERO))
    assert np.array_equal(A.a, E3) and not np.any(A.a_star)
    B = line_to_dual(Line3.through((1, 0, 0), E3))
    assert np.allclose(B.a_star, -E2) and on_unit_dual_sphere(B)


def test_dual_to_line_examples():
    L = dual_to_line(DualVec3(E3, -E2))
    assert np.allclose(L.closest_point, [1, 0, 0])
    with pytest.raises(MembershipError):
        dual_to_line(DualVec3(E3, E3))


vec = st.lists(st.floats(-5, 5), min_size=3, max_size=3).map(np.array)


@given(vec, vec)
def test_line_round_trip(p, d):
    if np.linalg.norm(d) < 1e-3:
        return
    L = Line3.through(p, d)
    back = dual_to_line(line_to_dual(L))
    assert np.allclose(back.direction, L.direction, atol=1e-12)
    assert np.allclose(back.moment, L.moment, atol=1e-12)


def test_line_invariants_enforced():
    with pytest.raises(ValueError):
        Line3(2 * E1, ZERO)
    with pytest.raises(ValueError):
        Line3(E1, E1)


def test_ruled_from_gamma_examples(caplog):
    S = ruled_from_gamma(const_gamma(E1, ZERO, E2, ZERO))
    assert np.allclose(S.base(0.3).a, E3) and not np.any(S.base(0.3).a_star)
    assert np.allclose(S.director(0.3).a, E1)
    G = curve_from_frame_lanes(helix(1, 1), "t,n,b,n")
    S = ruled_from_gamma(G)
    n = frame_field_curve(helix(1, 1), "n")
    assert np.allclose(S.base(0.8).a, -n(0.8))
    cone = ruled_from_gamma(const_gamma(E1, ZERO, ZERO, ZERO))
    assert not np.any(cone.base(0.1).a)
    val = cone(0.1, Dual(2.0, 1.0))
    assert np.allclose(val.a, 2 * E1) and np.allclose(val.a_star, E1)
    with caplog.at_level(logging.WARNING):
        ruled_from_gamma(const_gamma(E1, E1, E1, ZERO))
    assert "off the hyper-dual sphere" in caplog.text


def test_decompose_frenet_helix():
    h = helix(1, 1)
    G = curve_from_frame_lanes(h, "t,n,b,n")
    I, cong = decompose(G)
    t_, n_, b_ = (frame_field_curve(h, x) for x in "tnb")
    for s in (0.0, 1.3):
        assert np.allclose(I(s, 0.7), -n_(s) + 0.7 * t_(s))
        assert np.allclose(cong.base(s), t_(s) + b_(s))
        assert np.allclose(cong(s, 1.0, 2.0), t_(s) + b_(s) + n_(s) + 2 * t_(s))


def test_decompose_zero_dual_lanes():
    _, cong = decompose(const_gamma(E1, ZERO, E2, ZERO))
    assert not np.any(cong.base(0.5)) and np.allclose(cong(0.5, 3.0, 2.0), 2 * E1)


def test_developability_r3_examples():
    for r, c in ((1, 1), (2, 0.5)):
        K = helix(r, c)
        tan = RuledSurface3(K, frame_field_curve(K, "t"))
        nor = RuledSurface3(K, frame_field_curve(K, "n"))
        for s in K.sample_params(50):
            assert is_developable_r3(tan, s)
            assert is_developable_r3(nor, s).residual == pytest.approx(c, abs=1e-9)
    cyl = RuledSurface3(circle(1.0), const(E3))
    assert is_developable_r3(cyl, 0.4)


def test_developability_dual_examples():
    assert is_developable_dual(const_gamma(E1, E2, E3, ZERO), 0.2)
    r, c = 2.0, 0.5
    G = curve_from_frame_lanes(helix(r, c), "t,n,b,n")
    res = is_developable_dual(G, 1.0)
    assert not res and res.real == pytest.approx(-r * c / (r * r + c * c), abs=1e-12)
    planar = curve_from_frame_lanes(circle(2.0), "t,n,b,n")
    assert abs(is_developable_dual(planar, 0.3).real) <= 1e-12


def test_det_identity_sign_on_frenet_helix():
    G = curve_from_frame_lanes(helix(1, 1), "t,n,b,n")
    for s in G.sample_params(50):
        r = dual_det_identity_residual(G, s)
        assert r.plus_size <= 1e-9 and r.minus_size > 1e-3
    zero = dual_det_identity_residual(const_gamma(E1, E2, E3, ZERO), 0.0)
    assert zero.plus_size == 0 and zero.minus_size == 0


@pytest.mark.parametrize("seed", range(5))
def test_det_identity_sign_random(seed):
    G = random_sphere_curve(random.Random(seed), unit=bool(seed % 2))
    for s in G.sample_params(40):
        assert dual_det_identity_residual(G, s).plus_size <= 1e-9


@pytest.mark.parametrize("pattern,expected", [("t,n,b,n", "b-t"), ("n,c,w,c", "w-n")])
def test_pair_bases_from_frames(pattern, expected):
    h = helix(1, 1)
    pair = pair_from_unit_gamma(curve_from_frame_lanes(h, pattern))
    first, second = expected.split("-")
    fa, fb = frame_field_curve(h, first), frame_field_curve(h, second)
    for s in h.sample_params(50):
        assert np.allclose(pair.base_k(s), fa(s) - fb(s), atol=1e-12)
        assert abs(pair.phi1.director(s) @ pair.phi2.director(s)) <= 1e-12


@pytest.mark.parametrize("beta", [0.0, 1.5, -2.0])
def test_pair_constant_witness(beta):
    pair = pair_from_unit_gamma(const_gamma(E1, E2, E3, beta * E2), samples=3)
    assert np.allclose(pair.base_k(0.5), E3 - beta * E1)
    assert pair.f(0.5) == pytest.approx(-beta) and pair.g(0.5) == pytest.approx(1.0)


def test_pair_rejects_off_sphere():
    with pytest.raises(MembershipError):
        pair_from_unit_gamma(const_gamma(E1, E2, E2, ZERO), samples=3)


def test_pair_base_mismatch_is_reported():
    # near-sphere points pass membership at a loose tol while the two base
    # expressions already disagree by more than that tol
    rng = np.random.default_rng(0)
    tol = 1e-3
    for _ in range(20000):
        lanes = [v + rng.normal(size=3) * tol for v in on_sphere_point(rng).lanes]
        a0, a1, a2, a3 = lanes
        k1 = np.cross(a0, a1) + (np.cross(a2, a3) @ a0) * a0
        k2 = np.cross(a2, a3) + (np.cross(a0, a1) @ a2) * a2
        if on_unit_hyperdual_sphere(HyperDualVec3(*lanes), tol) and np.max(np.abs(k1 - k2)) > 2 * tol:
            break
    else:
        pytest.fail("no witness found")
    with pytest.raises(BaseMismatchError):
        pair_from_unit_gamma(const_gamma(*lanes), samples=3, tol=tol)


@settings(max_examples=200)
@given(st.integers(0, 2 ** 32 - 1))
def test_common_base_identity_pointwise(seed):
    g = on_sphere_point(np.random.default_rng(seed))
    a0, a1, a2, a3 = g.lanes
    k1 = np.cross(a0, a1) + (np.cross(a2, a3) @ a0) * a0
    k2 = np.cross(a2, a3) + (np.cross(a0, a1) @ a2) * a2
    assert np.max(np.abs(k1 - k2)) <= 1e-9


def test_couple_frenet():
    h = helix(1, 1)
    G = curve_from_frame_lanes(h, "t,n,b,n")
    first, cong = build_couple(G)
    t_, n_, b_ = (frame_field_curve(h, x) for x in "tnb")
    for s in (0.2, 2.5):
        assert np.allclose(first.base(s), -n_(s) + t_(s))
    couple = build_couple(G, lambda s: 0.5)
    a0, a1, a2, a3 = (lane(1.0) for lane in G.lanes)
    assert couple.f(1.0) == pytest.approx(np.cross(a1, a2) @ a0 + 0.5)
    assert couple.g(1.0) == pytest.approx(np.cross(a0, a2 - a3) @ a1)
    second = couple.second_surface()
    expect = np.cross(a1, a2) + np.cross(a0, a3) + couple.g(1.0) * a1 + 0.5 * a0 + 2.0 * a1
    assert np.allclose(second(1.0, 2.0), expect)


def test_couple_constant_lanes():
    first, cong = build_couple(const_gamma(E1, E2, E3, ZERO))
    assert np.allclose(first.base(0.1), first.base(0.9))
    assert np.allclose(cong.base(0.1), cong.base(0.9))


def test_inverse_helix():
    r, c = 1.0, 1.0
    K = helix(r, c)
    tK, nK = frame_field_curve(K, "t"), frame_field_curve(K, "n")
    g1, g2 = inverse_pair(K, tK, nK)
    for s in K.sample_params(50):
        A_pr, As_pr = helix_reference_dual_vectors(s, r, c)
        x = g1(s)
        assert np.allclose(x.a2, As_pr.a, atol=1e-12) and np.allclose(x.a3, As_pr.a_star, atol=1e-12)
        assert np.allclose(x.a1, np.cross(K(s), tK(s)), atol=1e-12)
        assert on_unit_hyperdual_sphere(x) and on_unit_hyperdual_sphere(g2(s))
        assert np.array_equal(g2(s).a0, x.a2)


def test_inverse_pencil_through_origin():
    g1, _ = inverse_pair(const([0, 0, 0]), const(E1), const(E2), samples=3)
    v = g1(0.5)
    assert not np.any(v.a1) and not np.any(v.a3)


def test_inverse_precondition():
    with pytest.raises(PreconditionError) as info:
        inverse_pair(const([0, 0, 1]), const(E1), const(E1), samples=3)
    assert info.value.t == 0.0


def test_developability_equivalence_on_witnesses():
    h = helix(1, 1)
    for pattern in ("t,n,b,n", "n,c,w,c"):
        G = curve_from_frame_lanes(h, pattern)
        I, _ = decompose(G)
        ts = G.sample_params(40)
        dual_dev = all(is_developable_dual(G, s) for s in ts)
        r3 = all(is_developable_r3(I, s) for s in ts)
        eps_lane = all(abs(dual_det_identity_residual(G, s).det.du) <= 1e-9 for s in ts)
        assert dual_dev == (r3 and eps_lane)
