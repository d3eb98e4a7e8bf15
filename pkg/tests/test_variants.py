"""Crossing counts and spurious-root structure of the rewritten equations."""

from __future__ import annotations

import math

import pytest

from semiwell import (
    DomainError,
    VariantKind,
    cot,
    count_bound_states,
    enumerate_intersections,
    filtered_equivalence,
    solve_all,
    variant_residual,
)

EXACT_Z = 3.0 * math.pi / 4.0
EXACT_Z0 = math.sqrt(2.0) * EXACT_Z


def test_variant_residual_reference_points():
    # sin form at z = pi leaves only the linear term
    assert variant_residual(VariantKind.SIN, math.pi, 15.0) == pytest.approx(
        math.pi, abs=1e-13
    )
    # |sin| form balances at the closed-form family root
    assert abs(variant_residual(VariantKind.ABS_SIN, EXACT_Z, EXACT_Z0)) < 1e-12
    # wrong-branch form is off by twice the sine term there
    assert variant_residual(VariantKind.NEG_SIN, EXACT_Z, EXACT_Z0) == pytest.approx(
        3.0 * math.pi / 2.0, rel=1e-13
    )
    assert abs(variant_residual(VariantKind.CORRECT, EXACT_Z, EXACT_Z0)) < 1e-12


def test_variant_residual_rejects_nonpositive_z():
    with pytest.raises(DomainError):
        variant_residual(VariantKind.SIN, 0.0, 15.0)
    with pytest.raises(DomainError):
        variant_residual(VariantKind.CORRECT, -2.0, 15.0)


@pytest.mark.parametrize(
    "kind,z0,total,spurious_positions",
    [
        (VariantKind.SIN, 15.0, 5, [2, 4]),
        (VariantKind.SIN, 25.0, 7, [2, 4, 6]),
        (VariantKind.ABS_SIN, 15.0, 9, [2, 4, 6, 8]),
        (VariantKind.ABS_SIN, 25.0, 15, [2, 4, 6, 8, 10, 12, 14]),
        (VariantKind.NEG_SIN, 15.0, 4, [1, 3]),
        (VariantKind.NEG_SIN, 25.0, 8, [1, 3, 5, 7]),
    ],
)
def test_flawed_forms_cross_in_the_wrong_places(kind, z0, total, spurious_positions):
    report = enumerate_intersections(kind, z0)
    assert report.n_total == total
    assert report.spurious_positions() == spurious_positions


@pytest.mark.parametrize("z0,valid,total", [(15.0, 3, 5), (25.0, 4, 7)])
def test_sin_form_keeps_too_few_crossings(z0, valid, total):
    # only the second-quadrant crossings survive filtering, so the sin
    # form cannot reach the even-band states at all
    report = enumerate_intersections(VariantKind.SIN, z0)
    assert report.n_total == total
    assert len(report.genuine_roots()) == valid
    assert valid < count_bound_states(z0)


@pytest.mark.parametrize("z0", [5.0, 15.0, 25.0, 40.0])
def test_correct_form_has_no_spurious_crossings(z0):
    report = enumerate_intersections(VariantKind.CORRECT, z0)
    assert report.n_spurious == 0
    assert report.n_total == count_bound_states(z0)


def test_crossings_are_sorted_and_confined():
    for kind in VariantKind:
        report = enumerate_intersections(kind, 25.0)
        zs = [i.z for i in report.intersections]
        assert zs == sorted(zs)
        assert all(0.0 < z <= 25.0 for z in zs)


def test_spurious_flag_matches_cot_sign():
    report = enumerate_intersections(VariantKind.ABS_SIN, 25.0)
    for item in report.intersections:
        assert item.spurious == (cot(item.z) > 0.0)


def test_sin_form_crosses_even_in_a_stateless_well():
    # z0 = 1.3 < pi/2 holds no bound state, yet z = z0 sin(z) still crosses
    assert count_bound_states(1.3) == 0
    report = enumerate_intersections(VariantKind.SIN, 1.3)
    assert report.n_total >= 1
    assert all(i.spurious for i in report.intersections)


def test_correct_form_in_a_stateless_well_finds_nothing():
    report = enumerate_intersections(VariantKind.CORRECT, 1.5)
    assert report.n_total == 0


@pytest.mark.parametrize("z0", [5.0, 15.0, 25.0, 40.0])
@pytest.mark.parametrize("kind", [VariantKind.ABS_SIN, VariantKind.CORRECT])
def test_filtering_recovers_spectrum_for_sign_safe_forms(kind, z0):
    assert filtered_equivalence(kind, z0)


def test_filtering_cannot_rescue_the_wrong_branch():
    # the -sin form has no crossing at all in odd bands, so filtering
    # leaves it short of the true spectrum
    assert not filtered_equivalence(VariantKind.NEG_SIN, 25.0)
    assert not filtered_equivalence(VariantKind.SIN, 15.0)


@pytest.mark.parametrize("z0", [2.0, 3.3, 7.7, 10.0, 13.1, 18.6, 25.0, 33.3, 40.0])
def test_kept_crossings_track_solver_roots(z0):
    true_roots = [s.z for s in solve_all(z0)]
    for kind in (VariantKind.ABS_SIN, VariantKind.CORRECT):
        kept = enumerate_intersections(kind, z0).genuine_roots()
        assert len(kept) == len(true_roots)
        for a, b in zip(kept, true_roots):
            assert abs(a - b) <= 1e-9
