"""Smoke tests for the python bindings."""

import math

import pytest

import hexflip as hf


def test_sample_validate_roundtrip():
    pts = hf.sample_random(42, 1.0)
    assert len(pts) == 6
    ok, residual, sign = hf.validate(pts)
    assert ok
    assert residual < 1e-10
    assert sign in (-1, 1)
    # deterministic
    assert hf.sample_random(42, 1.0) == pts


def test_braid_moves_preserve_relation():
    pts = hf.sample_random(7, 1.0)
    moved = hf.apply_word(pts, [1, 2, -3, 5, 6, -1])
    ok, residual, _ = hf.validate(moved)
    assert ok and residual < 1e-9
    rot = hf.cyclic_rot(pts)
    a, b, _f = hf.sizes(pts)
    a2, b2, _f2 = hf.sizes(rot)
    assert a2 == pytest.approx(b, abs=1e-12)
    assert b2 == pytest.approx(a, abs=1e-12)


def test_reduce_reaches_singular():
    pts = hf.sample_random(3, 0.8)
    verdict, final, trace, _reason = hf.reduce(pts, 1e-3, 100000)
    assert verdict == "reduced"
    a, b, _ = hf.sizes(final)
    assert a + b <= 2e-3
    assert len(trace) >= 1


def test_classify_and_component():
    singular = [0j] * 6
    assert hf.classify_config(singular) == "singular"
    assert hf.component_of(hf.sample_random(5, 1.0)) == "X0"


def test_euclidean_model():
    v = hf.sample_cone_direction(11)
    q1, q2, q3 = hf.q_routes(v)
    assert q1 == pytest.approx(q2, abs=1e-12)
    assert q2 == pytest.approx(q3, abs=1e-12)
    assert abs(q2) < 1e-9  # cone direction
    assert hf.signature_of_h() == (2, 2)
    ranks = hf.distribution_rank(v)
    assert ranks == (5, 7, 4, 6)


def test_lift_and_trace_limit():
    v = hf.sample_cone_direction(23)
    pts = hf.lift_to_sextuple(v, 1e-3)
    ok, residual, _ = hf.validate(pts)
    assert ok and residual < 1e-10
    qg = hf.q_gamma(v, 1, 2, 3)
    if abs(qg) > 0.02:
        limit, sign, qv, rel = hf.taylor_f_gamma(v, 1, 2, 3)
        assert rel < 0.05
        assert sign in (-1, 1)


def test_twist_flow_periodicity():
    v = hf.sample_cone_direction(31)
    pts = hf.lift_to_sextuple(v, 0.05)
    back = hf.phi_flow(pts, 1, 2, 3, 2 * math.pi)
    assert max(abs(a - b) for a, b in zip(back, pts)) < 1e-9
    th = hf.theta(pts, 1, 2, 3)
    assert 0 <= th < 2 * math.pi


def test_lagrangian_roundtrip():
    v = hf.sample_cone_direction(41)
    basis, gram = hf.lagrangian_map(v)
    w = hf.lagrangian_inverse(basis, gram)
    # equal up to a global phase
    corr = sum(a * b.conjugate() for a, b in zip(v, w))
    phase = corr / abs(corr)
    assert max(abs(a - phase * b) for a, b in zip(v, w)) < 1e-9


def test_json_roundtrip():
    pts = hf.sample_random(2, 1.0)
    text = hf.sextuple_to_json(pts)
    assert "poincare_disc" in text
    assert hf.sextuple_from_json(text) == pts
