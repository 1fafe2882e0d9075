from fractions import Fraction

import numpy as np
import pytest

from conftest import enneper_inversion_closed_form, fd_mean_curvature, inverted
from willmore.branch import (
    BranchExpansion,
    EndStructure,
    ParityViolation,
    ShapeMismatch,
    cancellation_check,
    extract_expansion,
    jorge_meeks,
    predicted_energy,
    second_residue,
)
from willmore.series import GaussRat, InsufficientOrder

TEMPLATE_PAIRS = ["<A0,A0>", "<A0,A1>", "<conj A0,A1>", "<A0,C1>", "<A1,C1>", "|C1|^2 <A1,A1>"]


def test_inverted_enneper_expansion():
    e = extract_expansion(inverted("enneper"))
    assert e.theta0 == 3
    assert e.A0 == [-9, GaussRat(0, -9), 0]
    assert e.A1 == [0, 0, 0]
    assert e.consistency
    assert e.gamma0 == [0, 0, 0]
    assert e.t2 * sum(a * a.conjugate() for a in e.A0) == Fraction(1, 2)


def test_inverted_enneper_pairings():
    checks = cancellation_check(extract_expansion(inverted("enneper")))
    for key in TEMPLATE_PAIRS:
        assert checks[key]["zero"], key
    # C1 is parallel to A0 here, so this pairing is |A0|^2 times a nonzero factor
    assert checks["<conj A0,C1>"]["value"] == -9


def test_inverted_enneper_leaves_the_template():
    m = inverted("enneper")
    e = extract_expansion(m)
    assert (-2, 6, 0) in e.template_violations
    assert (0, 3, 0) in e.template_violations
    with pytest.raises(ShapeMismatch):
        extract_expansion(m, strict=True)


def test_inverted_enneper_second_residue():
    m = inverted("enneper")
    assert second_residue(m) == 2
    H3 = m.geo.H[2]
    assert H3.coeff(-2, 0) == Fraction(1, 6)
    assert H3.coeff(0, -2) == Fraction(1, 6)


def test_inverted_enneper_mean_curvature_blows_up_like_inverse_square():
    """Independent check of the growth rate of ``|H|`` along a ray."""
    psi = enneper_inversion_closed_form()
    scaled = []
    for r in (0.08, 0.04, 0.02):
        H, _, _ = fd_mean_curvature(psi, r * np.exp(0.3j), r * 1e-3)
        scaled.append(np.linalg.norm(H) * r * r)
    assert abs(scaled[-1] - scaled[-2]) < 0.1 * abs(scaled[-1] - scaled[0]) + 1e-3
    assert scaled[-1] > 0.1


def test_inverted_catenoid_first_residue_is_orthogonal_to_a0():
    e = extract_expansion(inverted("catenoid"))
    assert e.theta0 == 1
    assert any(e.gamma0)
    assert sum(a * g for a, g in zip(e.A0, e.gamma0)) == 0
    assert second_residue(inverted("catenoid")) == 0


def test_round_sphere_has_no_second_residue():
    m = inverted("plane", 8)
    assert second_residue(m) == 0
    e = extract_expansion(m)
    assert e.template_violations == []


def test_scaling_does_not_change_the_pattern():
    m = inverted("enneper")
    s = m.scaled(3)
    a, b = cancellation_check(extract_expansion(m)), cancellation_check(extract_expansion(s))
    assert {k: v["zero"] for k, v in a.items()} == {k: v["zero"] for k, v in b.items()}
    assert extract_expansion(s).theta0 == 3
    assert second_residue(s) == second_residue(m)


def test_synthetic_conformality_violation_is_flagged():
    one, zero = GaussRat(1), GaussRat()
    e = BranchExpansion(3, [one, zero, zero], [zero] * 3, [zero] * 3, [zero] * 3, [0, 0, 0], Fraction(1, 2), True)
    assert not cancellation_check(e)["<A0,A0>"]["zero"]


def test_extraction_needs_enough_terms():
    m = inverted("enneper").phi.with_trunc(5)
    from willmore.surface import SurfaceModel

    short = SurfaceModel(m, theta0=3, kind="willmore_branch")
    with pytest.raises(InsufficientOrder):
        extract_expansion(short)


@pytest.mark.parametrize(
    "ends, deg, total",
    [
        (EndStructure(0, (1, 1)), 1, -4),
        (EndStructure(0, (3,)), 1, -4),
        (EndStructure(0, (3, 3), (2, 2, 2, 2)), 1, -4),
    ],
)
def test_jorge_meeks(ends, deg, total):
    r = jorge_meeks(ends)
    assert r["deg_gauss"] == deg
    assert r["total_curvature_pi"] == total


def test_parity_violation():
    with pytest.raises(ParityViolation):
        jorge_meeks(EndStructure(0, (2,)))


@pytest.mark.parametrize("ends, energy", [((3,), 12), ((1, 1), 8), ((3, 3), 24), ((1,), 4)])
def test_predicted_energy(ends, energy):
    assert predicted_energy(EndStructure(0, ends)) == energy


def test_energy_exceeds_curvature_by_four_pi_or_more():
    for ends in ((1, 1), (3,), (1, 1, 1)):
        e = EndStructure(0, ends)
        assert predicted_energy(e) - jorge_meeks(e)["inverted_curvature_pi"] >= 4
