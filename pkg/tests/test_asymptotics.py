import numpy as np
import pytest

from feketelab.asymptotics import (
    LENGTH_CUBIC,
    RECORD_CUBIC,
    Region,
    hj_specialization,
    limit_l4_normalized,
    minimize_u,
    normalize_R,
    ratio_limit_u,
    record_constants,
    region_classify,
    solve_cubic_root,
    u4_closed_form,
    _golden_min,
)

# Frozen from the bisection oracle; cross-checked below against the
# companion-matrix roots.
T0_EXPECTED = 1.0578279068478236
R0_EXPECTED = 0.2210860465760882
C_EXPECTED = 1.157677431123647


def test_limit_examples():
    assert ratio_limit_u(0.25, 1.0) == pytest.approx(7 / 6, abs=1e-14)
    assert limit_l4_normalized(0.0, 0.5) == pytest.approx(1 / 3, abs=1e-14)
    assert ratio_limit_u(0.0, 0.5) == pytest.approx(4 / 3, abs=1e-14)
    assert ratio_limit_u(0.75, 1.0) == ratio_limit_u(0.25, 1.0)


def test_limit_rejects_nonpositive_T():
    with pytest.raises(ValueError):
        limit_l4_normalized(0.1, 0.0)
    with pytest.raises(ValueError):
        ratio_limit_u(0.1, -1.0)


def test_limit_lattice_windows_are_wide_enough():
    # widening the windows further must not change the value
    def wide(R, T):
        first = sum(max(0.0, T - abs(n)) ** 2 for n in range(-50, 51))
        second = sum(max(0.0, T - abs(T + 2 * R - n)) ** 2 for n in range(-50, 51))
        return -4 * T**3 / 3 + 2 * first + second

    rng = np.random.RandomState(2)
    for _ in range(500):
        R = rng.uniform(-3, 3)
        T = rng.uniform(0.05, 3.0)
        assert limit_l4_normalized(R, T) == pytest.approx(wide(R, T), abs=1e-12)


@pytest.mark.parametrize("r,expected", [(0.25, 0.25), (0.75, 0.25), (-0.1, 0.4)])
def test_normalize_R_examples(r, expected):
    assert normalize_R(r) == pytest.approx(expected, abs=1e-15)
    assert 0.0 <= normalize_R(r) < 0.5


def test_normalize_R_preserves_u():
    rng = np.random.RandomState(8)
    for _ in range(2000):
        R = rng.uniform(-5, 5)
        T = rng.uniform(0.05, 3.0)
        assert ratio_limit_u(R, T) == pytest.approx(
            ratio_limit_u(normalize_R(R), T), abs=1e-10
        )


def test_region_classify_examples():
    rc = record_constants()
    assert region_classify(rc.R0, rc.T0) is Region.D4
    assert region_classify(0.25, 1.0) is Region.D3  # boundary tie, lowest index
    assert region_classify(0.0, 0.5) is Region.D1
    assert region_classify(0.3, 0.4) is Region.OUTSIDE
    assert region_classify(0.3, 1.6) is Region.OUTSIDE


def test_region_classify_covers_the_box():
    rng = np.random.RandomState(13)
    for _ in range(5000):
        R = rng.uniform(0, 0.5)
        T = rng.uniform(0.5, 1.5)
        assert region_classify(R, T) is not Region.OUTSIDE


def test_u4_closed_form_examples():
    rc = record_constants()
    assert u4_closed_form(0.25, 1.0) == pytest.approx(7 / 6, abs=1e-14)
    assert u4_closed_form(rc.R0, rc.T0) == pytest.approx(rc.c, abs=1e-12)
    with pytest.raises(ValueError):
        u4_closed_form(0.0, 0.9)
    with pytest.raises(ValueError):
        u4_closed_form(0.49, 1.45)


def test_u4_ridge_polynomial_identity():
    for T in np.linspace(1.0, 1.25, 300):
        R = (3 - 2 * T) / 4
        ridge = (-8 * T**3 + 48 * T**2 - 60 * T + 27) / (6 * T**2)
        assert u4_closed_form(R, T) == pytest.approx(ridge, abs=1e-13)


def test_u4_matches_lattice_evaluator_on_cell():
    rng = np.random.RandomState(17)
    for _ in range(5000):
        T = rng.uniform(1.0, 1.5)
        R = rng.uniform(0.0, 1.5 - T)
        assert u4_closed_form(R, T) == pytest.approx(ratio_limit_u(R, T), abs=1e-12)


def test_solve_cubic_root_examples():
    t0 = solve_cubic_root(*LENGTH_CUBIC, 1.0, 1.1)
    assert t0 == pytest.approx(T0_EXPECTED, abs=1e-12)
    c = solve_cubic_root(*RECORD_CUBIC, 1.1, 1.16)
    assert c == pytest.approx(C_EXPECTED, abs=1e-12)
    assert solve_cubic_root(1, 0, 0, -1, 0.0, 2.0) == pytest.approx(1.0, abs=1e-14)


def test_solve_cubic_root_residual_contract():
    for coeffs, lo, hi in ((LENGTH_CUBIC, 1.0, 1.5), (RECORD_CUBIC, 1.0, 22 / 19)):
        c3, c2, c1, c0 = coeffs
        x = solve_cubic_root(c3, c2, c1, c0, lo, hi)
        residual = abs(((c3 * x + c2) * x + c1) * x + c0)
        assert residual <= 1e-14 * max(1.0, abs(c3), abs(c2), abs(c1), abs(c0))


def test_solve_cubic_root_requires_sign_change():
    with pytest.raises(ValueError):
        solve_cubic_root(1, 0, 0, 1, 0.0, 1.0)


def test_record_constants_values():
    rc = record_constants()
    assert rc.T0 == pytest.approx(T0_EXPECTED, abs=1e-12)
    assert rc.R0 == pytest.approx(R0_EXPECTED, abs=1e-12)
    assert rc.c == pytest.approx(C_EXPECTED, abs=1e-12)
    assert rc.c < 22 / 19
    assert rc.merit_factor_limit > 6.34
    assert rc.R0 == pytest.approx((3 - 2 * rc.T0) / 4, abs=1e-15)


def test_record_constants_against_companion_matrix_roots():
    length_roots = np.sort(np.roots(LENGTH_CUBIC).real)
    record_roots = np.sort(np.roots(RECORD_CUBIC).real)
    rc = record_constants()
    assert rc.T0 == pytest.approx(length_roots[1], abs=1e-9)  # middle root
    assert rc.c == pytest.approx(record_roots[0], abs=1e-9)  # smallest root
    assert 1.0 < rc.T0 < 1.5


def test_u_at_record_point_equals_c():
    rc = record_constants()
    assert abs(ratio_limit_u(rc.R0, rc.T0) - rc.c) < 1e-10


@pytest.mark.parametrize(
    "r,expected", [(0.25, 7 / 6), (0.0, 5 / 3), (-0.25, 7 / 6)]
)
def test_hj_specialization_examples(r, expected):
    assert hj_specialization(r) == pytest.approx(expected, abs=1e-15)


def test_hj_specialization_rejects_large_R():
    with pytest.raises(ValueError):
        hj_specialization(0.51)


def test_hj_matches_lattice_on_grid():
    for r in np.linspace(-0.5, 0.5, 1000):
        assert abs(ratio_limit_u(r, 1.0) - hj_specialization(r)) < 1e-12


def test_minimize_u_recovers_record_point():
    rc = record_constants()
    r_star, t_star, u_star = minimize_u(1 / 128, 1e-10)
    assert abs(r_star - rc.R0) < 1e-6
    assert abs(t_star - rc.T0) < 1e-6
    assert abs(u_star - rc.c) < 1e-8


def test_minimize_u_validates_arguments():
    with pytest.raises(ValueError):
        minimize_u(1 / 32, 1e-9)
    with pytest.raises(ValueError):
        minimize_u(1 / 128, 0.0)


def test_restricted_minimum_on_unit_T_line():
    r_star = _golden_min(lambda x: ratio_limit_u(x, 1.0), 0.0, 0.5, 1e-12)
    assert abs(r_star - 0.25) < 1e-6
    assert ratio_limit_u(r_star, 1.0) == pytest.approx(7 / 6, abs=1e-13)


def test_small_T_stays_above_four_thirds():
    rng = np.random.RandomState(29)
    for _ in range(3000):
        R = rng.uniform(0, 0.5)
        T = rng.uniform(0.01, 0.4999)
        assert ratio_limit_u(R, T) > 4 / 3


def test_lower_bound_everywhere():
    rng = np.random.RandomState(31)
    for _ in range(5000):
        R = rng.uniform(-2, 2)
        T = rng.uniform(0.01, 3.0)
        assert ratio_limit_u(R, T) >= 2 - 4 * T / 3 - 1e-12


def test_reflection_symmetries():
    rng = np.random.RandomState(37)
    for _ in range(3000):
        T = rng.uniform(0.5, 1.0)
        R = rng.uniform(0.0, 1.0 - T)  # D1 u D2
        assert ratio_limit_u(R, T) == pytest.approx(
            ratio_limit_u(1.0 - R - T, T), abs=1e-10
        )
        T = rng.uniform(1.0, 1.5)
        R = rng.uniform(max(0.0, 1.5 - T), 0.5)  # D5 u D6
        assert ratio_limit_u(R, T) == pytest.approx(
            ratio_limit_u(2.0 - R - T, T), abs=1e-10
        )


def test_continuity_modulus():
    rng = np.random.RandomState(43)
    delta = 1e-6
    for _ in range(10_000):
        R = rng.uniform(0, 0.5)
        T = rng.uniform(0.5, 1.5)
        jump = abs(ratio_limit_u(R, T) - ratio_limit_u(R + delta, T + delta))
        assert jump <= 100 * delta


def test_grid_scan_never_undercuts_c():
    rc = record_constants()
    step = 1 / 64
    for i in range(33):
        for k in range(65):
            R = min(i * step, 0.5)
            T = min(0.5 + k * step, 1.5)
            assert ratio_limit_u(R, T) >= rc.c - 1e-8
