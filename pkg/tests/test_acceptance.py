"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest -v tests/test_acceptance.py`` or as a script.
"""

import sys
import time
from math import gcd

import pytest

from amitsur.algebra import division_sample, preset, verify_group_embedding
from amitsur.arith import euler_phi, mult_order
from amitsur.classify import CANDIDATE, FORCED_CYCLIC, exceptional_orders, scan_odd_orders
from amitsur.cyclotomic import field
from amitsur.groupring import identity_factor, ordered_product, sum_of_b_powers, telescope_step, verify_eq_3_4
from amitsur.groups import (
    are_isomorphic,
    center,
    enumerate_presentations,
    hbz_representation,
    is_cyclic,
    is_sylow_cyclic_direct,
    validate,
)

from conftest import presentations_up_to


RESULTS = []


def report(label, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def desk_range():
    for m in range(1, 31):
        for n in range(2, 13):
            for r in range(m):
                if gcd(r, m) == 1 and pow(r, n, m) == 1 % m:
                    yield validate(m, n, r)


def test_criterion_1_odd_order_scan():
    t0 = time.perf_counter()
    reports = scan_odd_orders(171, jobs=1)
    elapsed = time.perf_counter() - t0
    exc = exceptional_orders(reports)
    others_cyclic = all(
        (
            r.order_verdict is not None
            and r.order_verdict.outcome == FORCED_CYCLIC
            or all(v.outcome != CANDIDATE for _, v in r.classes)
        )
        for r in reports
        if r.order not in (63, 117)
    )
    ok = exc == [63, 117] and others_cyclic and elapsed < 60 and all(r.order % 2 for r in reports)
    report("criterion 1: scan-odd --max 171 -> {63, 117}", ok, f"exceptional={exc}, {elapsed:.2f} s")


def test_criterion_2_order_63_census():
    classes = enumerate_presentations(63)
    expected = [validate(63, 1, 1), validate(21, 3, 1), validate(21, 3, 16), validate(7, 9, 2)]
    matched = all(sum(are_isomorphic(c.representative, H) for c in classes) == 1 for H in expected)
    sylow = sum(c.sylow_cyclic for c in classes)
    from amitsur.classify import classify_presentation

    candidates = [
        c for c in classes if not is_cyclic(c.representative) and classify_presentation(c.representative).outcome == CANDIDATE
    ]
    ok = len(classes) == 4 and matched and sylow == 2 and len(candidates) == 1
    report(
        "criterion 2: order-63 census",
        ok,
        f"{len(classes)} classes, {sylow} Sylow-cyclic, {len(candidates)} noncyclic candidate",
    )


def test_criterion_3_certificate_equivalence():
    t0 = time.perf_counter()
    count = mismatches = 0
    for G in desk_range():
        x = sum_of_b_powers(G)
        for _ in range(G.n - 1):
            x = telescope_step(x)
        count += 1
        if x != ordered_product(G):
            mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 120
    report("criterion 3: telescoped element = ordered product", ok, f"{count} presentations, {mismatches} mismatches, {elapsed:.2f} s")


def test_criterion_4_soundness():
    checked = bad = 0
    for G in desk_range():
        if mult_order(G.r, G.m) != G.n:
            continue
        checked += 1
        if any(identity_factor(G, i).is_zero() for i in range(1, G.n)):
            bad += 1
    cert = verify_eq_3_4(validate(7, 9, 2))
    vanishes_at_3 = identity_factor(validate(7, 9, 2), 3).is_zero() and 3 in cert.vanishing_indices
    ok = checked > 0 and bad == 0 and vanishes_at_3
    report("criterion 4: factors nonzero when o(r) = n; G(7,9,2) vanishes at i=3", ok, f"{checked} checked, {bad} bad")


def test_criterion_5_construction_63():
    P = preset("63")
    K = P.algebra
    a, b, one = K.zeta(3), K.b, K.one()
    omega = K.scalar(field(21).zeta(7))
    relations = a**7 == one and b**3 == omega and b**9 == one and b * a == a**2 * b
    cert = verify_group_embedding(K, a, b, validate(7, 9, 2))
    from amitsur.algebra import center_probe

    c = center_probe(K)
    polys = sorted(q["min_poly"] for q in c.to_dict()["quadratic_elements"])
    ok = (
        K.dim_Q == 36
        and relations
        and cert.group.order == 63
        and cert.isomorphic is True
        and c.ok
        and c.computed_dim == 4
        and polys == ["t^2 + 3", "t^2 + 7"]
    )
    report("criterion 5: (21, 16, zeta^7) algebra", ok, f"dim {K.dim_Q}, |G| {cert.group.order}, center {c.computed_dim}, {polys}")


@pytest.mark.parametrize("name", ["63", "117"])
def test_criterion_6_division_evidence(name):
    t0 = time.perf_counter()
    rep = division_sample(preset(name).algebra, 1000, height=10, seed=0)
    elapsed = time.perf_counter() - t0
    ok = rep.invertible == 1000 and not rep.singular and elapsed < 150
    report(f"criterion 6: preset {name}, 1000 samples at height 10", ok, f"{rep.invertible} invertible, {elapsed:.1f} s")


def test_criterion_6_split_control():
    t0 = time.perf_counter()
    rep = division_sample(preset("split-63").algebra, 1000, height=10, seed=0)
    elapsed = time.perf_counter() - t0
    ok = len(rep.singular) >= 1
    report("criterion 6: split control finds a singular sample", ok, f"{len(rep.singular)} singular of 1000, {elapsed:.1f} s")


def test_criterion_7_cross_oracles():
    hbz_bad = center_bad = total = 0
    for G in presentations_up_to(200):
        total += 1
        if (hbz_representation(G) is not None) != is_sylow_cyclic_direct(G):
            hbz_bad += 1
        pairs = list(G.pairs())
        brute = {x for x in pairs if all(G.mul_pair(x, y) == G.mul_pair(y, x) for y in pairs)}
        if center(G).elements != brute:
            center_bad += 1
    ok = hbz_bad == 0 and center_bad == 0
    report("criterion 7: HBZ vs Sylow-cyclic, center formula vs brute force", ok, f"{total} presentations, {hbz_bad}+{center_bad} mismatches")


def test_criterion_8_primitives():
    bad = 0
    for m in range(1, 1001):
        for r in range(m):
            if gcd(r, m) != 1:
                continue
            k, x = 1, r % m
            while x != 1 % m:
                x = x * r % m
                k += 1
            bad += mult_order(r, m) != k
    for k in range(1, 1001):
        bad += euler_phi(k) != sum(1 for a in range(1, k + 1) if gcd(a, k) == 1)
    report("criterion 8: mult_order and euler_phi", bad == 0, f"{bad} mismatches")


if __name__ == "__main__":
    sys.exit(pytest.main(["-q", __file__]))
