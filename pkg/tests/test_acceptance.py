"""One test per acceptance criterion, each printing a PASS/FAIL line."""

import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, inverted, model, spec
from test_forms import complex_curve
from willmore.branch import (
    EndStructure,
    cancellation_check,
    extract_expansion,
    jorge_meeks,
    predicted_energy,
    second_residue,
)
from willmore.forms import bryant_quartic, montiel_cubic, octic_literal, octic_projected, quartic_coefficient, quartic_via_gauss_coefficient
from willmore.geometry import codazzi_defect, conformality_defect, liouville_defect
from willmore.invariants import KINDS, closedness_defect, correspondence_check, correspondence_holds, noether_current, residues
from willmore.io import load_surface
from willmore.numerics import quad_residue, willmore_energy
from willmore.series import GaussRat, LaurentLogSeries
from willmore.surface import stereo_to_sphere
from willmore.vectors import dot

CORPUS = ["plane", "catenoid", "enneper", "trinoid", "henneberg_cover"]
Q = Fraction

QUAD_TOL = 1e-9
ENERGY_RTOL = 5e-3
ENERGY_SECONDS = 10
BUILD_SECONDS = 5
PROPERTY_EXAMPLES = 1000


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_minimal_and_conformal():
    t0 = time.perf_counter()
    bad = []
    for name in CORPUS:
        m = load_surface(name).model(12)
        if not (m.geo.H.is_zero() and conformality_defect(m).is_zero()):
            bad.append(name)
    dt = time.perf_counter() - t0
    record(1, not bad and dt < BUILD_SECONDS, f"H = 0 and <dphi,dphi> = 0 on {len(CORPUS)} surfaces, {dt:.2f}s, failures {bad}")


def test_criterion_2_residue_table():
    cat, inv = residues(model("catenoid")), residues(inverted("catenoid"))
    ok = (
        cat.gamma0 == [0, 0, 0]
        and all(v == 0 for v in cat.gamma1.values())
        and cat.gamma2 == 0
        and cat.gamma3 == [0, 0, Q(1, 4)]
        and cat.flux == [0, 0, Q(1, 4)]
        and inv.gamma0 == [0, 0, Q(1, 4)]
        and inv.gamma3 == [0, 0, 0]
    )
    report, a, b = correspondence_check(inverted("catenoid").translated([Q(1, 3), Q(-1, 2), Q(1)]))
    flip = correspondence_holds(report) and a.gamma2 != 0 and a.gamma2 == -b.gamma2
    worst = 0.0
    for m in (model("catenoid"), inverted("catenoid")):
        for kind in KINDS:
            worst = max(worst, quad_residue(noether_current(m, kind)).max_diff)
    record(2, ok and flip and worst <= QUAD_TOL, f"table exact {ok}, gamma2 flip {flip}, quadrature max diff {worst:.1e}")


def test_criterion_3_closedness():
    bad = []
    for name in ("catenoid", "enneper"):
        for m in (model(name), inverted(name)):
            for kind in KINDS:
                if not closedness_defect(noether_current(m, kind)).is_zero():
                    bad.append((name, m.kind, kind))
    record(3, not bad, f"Re dbar F = 0 for 4 currents on 4 surfaces, failures {bad}")


def test_criterion_4_quartic():
    zero = all(bryant_quartic(inverted(n)).value.is_zero() for n in ("catenoid", "enneper"))
    agree = True
    for name in ("catenoid", "trinoid"):
        m = stereo_to_sphere(inverted(name, 10))
        a, b = quartic_coefficient(m), quartic_via_gauss_coefficient(m)
        n = min(a.trunc, b.trunc)
        agree = agree and a.with_trunc(n) == b.with_trunc(n)
    record(4, zero and agree, f"Q = 0 on inversions {zero}, intrinsic = pseudo-Gauss {agree}")


@pytest.mark.xfail(
    strict=True,
    reason="inverted Enneper: observed second residue 2 and <conj A0, C1> = -9 (nonzero); see the decisions ledger",
)
def test_criterion_5_enneper_branch():
    m = inverted("enneper")
    e = extract_expansion(m)
    checks = cancellation_check(e)
    pairs = ["<A0,A0>", "<A0,A1>", "<conj A0,A1>", "<A0,C1>", "<conj A0,C1>", "<A1,C1>"]
    nonzero = {k: str(checks[k]["value"]) for k in pairs if not checks[k]["zero"]}
    alpha = second_residue(m)
    record(5, e.theta0 == 3 and alpha == 1 and not nonzero, f"theta0 {e.theta0}, alpha {alpha} (expected 1), nonzero pairings {nonzero}")


def test_criterion_6_energies():
    rows, ok = [], True
    for name, expected in (("enneper", 12), ("catenoid", 8), ("plane", 4)):
        s = spec(name)
        t0 = time.perf_counter()
        value, _ = willmore_energy(s.data, s.center_floats())
        dt = time.perf_counter() - t0
        rel = abs(value / (expected * math.pi) - 1)
        ok = ok and rel <= ENERGY_RTOL and dt < ENERGY_SECONDS
        rows.append(f"{name} {value / math.pi:.6f}pi ({dt:.2f}s)")
    ends = EndStructure(0, (3, 3), (2, 2, 2, 2))
    jm = jorge_meeks(ends)
    row = jm["deg_gauss"] == 1 and predicted_energy(ends) == 24
    record(6, ok and row, f"{', '.join(rows)}; Henneberg deg {jm['deg_gauss']}, W {predicted_energy(ends)}pi")


def test_criterion_7_codazzi_liouville():
    bad = []
    for name in CORPUS:
        for m in (model(name), inverted(name)):
            if not (codazzi_defect(m).is_zero() and liouville_defect(m).is_zero()):
                bad.append((name, m.kind))
    record(7, not bad, f"Codazzi and Liouville defects vanish on corpus and inversions, failures {bad}")


def test_criterion_8_r4_forms():
    padded = all(montiel_cubic(inverted(n, 10).padded(4)).value.is_zero() for n in ("catenoid", "enneper"))
    m = complex_curve()
    g = m.geo
    h = g.h0
    Jh = g.J(h)
    j_ok = (g.J(Jh) + h).is_zero() and dot(Jh, h).is_zero()
    octic = (octic_projected(m) - octic_literal(m)).is_zero()
    record(8, padded and j_ok and octic, f"T = 0 on padded {padded}, J^2 = -id and <Jh,h> = 0 {j_ok}, octic routes agree {octic}")


def _random_series(rng, trunc):
    terms = {}
    for _ in range(rng.randint(0, 5)):
        key = (rng.randint(-2, 3), rng.randint(-2, 3), rng.randint(0, 2))
        terms[key] = GaussRat(Fraction(rng.randint(-9, 9), rng.randint(1, 6)), Fraction(rng.randint(-9, 9), rng.randint(1, 6)))
    return LaurentLogSeries(terms, trunc)


def _random_invertible(rng):
    a, b = rng.randint(-1, 2), rng.randint(-1, 2)
    s = _random_series(rng, a + b + rng.randint(1, 5))
    terms = {k: v for k, v in s.terms.items() if k[0] + k[1] > a + b}
    terms[(a, b, 0)] = GaussRat(rng.choice([-3, -1, 1, 2]), rng.randint(-2, 2))
    return LaurentLogSeries(terms, s.trunc)


def test_criterion_9_property_suites():
    rng = random.Random(20261016)
    fails = 0
    for _ in range(PROPERTY_EXAMPLES):
        f, g = _random_series(rng, rng.randint(3, 6)), _random_series(rng, rng.randint(3, 6))
        lhs, rhs = (f * g).d_z(), f.d_z() * g + f * g.d_z()
        n = min(lhs.trunc, rhs.trunc)
        fails += lhs.with_trunc(n) != rhs.with_trunc(n)
        fails += LaurentLogSeries.from_json(f.to_json()) != f
        u = _random_invertible(rng)
        p = u * u.invert()
        fails += p != LaurentLogSeries.constant(1, p.trunc)
    stable = True
    for name in ("catenoid", "trinoid"):
        for build in (model, inverted):
            stable = stable and residues(build(name, 12)).to_json() == residues(build(name, 16)).to_json()
    record(9, fails == 0 and stable, f"{PROPERTY_EXAMPLES} random exact series x 3 laws, {fails} failures; residues stable N=12 -> 16 {stable}")
