"""Acceptance gate: one test per criterion, each printing a pass/fail line."""

import io
import json
import random
import time
from math import gcd

import pytest

from bettycone.cli import main, trigraded_results
from bettycone.cone2 import (
    decompose,
    extremal_rays,
    min_extract,
    order_ideals,
    ray_polynomials,
    region_points,
    verify_pair,
)
from bettycone.diagram import BettiDiagram, hilbert_function, hk_check, pure_type
from bettycone.multipoly import LaurentPoly, inflate, xi
from bettycone.realize2 import (
    GradedMatrix,
    MinorWitness,
    build_beta,
    degreewise_exactness,
    generic_alpha,
    realize,
    triple_generators,
    verify_composition,
)
from bettycone.trigraded import equivariant_diagram

from conftest import EQUIVARIANT_121, EQUIVARIANT_23, MONOMIAL_QUOTIENT_23


def report(number, ok, detail=""):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, detail


def gens_of(diagram_json):
    D = BettiDiagram.from_json(diagram_json)
    return [sorted(D.generators(h)) for h in range(3)]


@pytest.mark.criterion(1, "type (2, 3) ray tables")
def test_criterion_1_type_23_ray_tables():
    start = time.perf_counter()
    out = io.StringIO()
    code = main(["rays", "--e1", "2", "--e2", "3", "--json"], out=out)
    elapsed = time.perf_counter() - start
    rays = json.loads(out.getvalue())["rays"]
    by_label = {r["label"]: gens_of(r["diagram"]) for r in rays}
    expected = {
        "equivariant": [sorted(g) for g in EQUIVARIANT_23],
        "monomial-quotient": [sorted(g) for g in MONOMIAL_QUOTIENT_23],
    }
    ok = code == 0 and len(rays) == 2 and by_label == expected and elapsed < 1.0
    report(1, ok, f"{len(rays)} rays, {elapsed:.3f}s")


@pytest.mark.criterion(2, "ray identity property")
def test_criterion_2_ray_identity():
    start = time.perf_counter()
    checked = 0
    bad = []
    for p in range(2, 8):
        for q in range(2, 8):
            if gcd(p, q) != 1:
                continue
            for T in order_ideals(p, q):
                A, B = ray_polynomials(T, p, q)
                coeffs = [c for _, c in A] + [c for _, c in B]
                exps = [e for (e,), _ in A] + [e for (e,), _ in B]
                if (A * xi(q) != B * xi(p) or any(c != 1 for c in coeffs)
                        or any(e < 0 for e in exps)):
                    bad.append((p, q, T))
                checked += 1
    elapsed = time.perf_counter() - start
    report(2, not bad and elapsed < 5.0, f"{checked} ideals, {len(bad)} bad, {elapsed:.3f}s")


def random_member(rng, p, q, m):
    ideals = order_ideals(p, q)
    A = LaurentPoly.zero(1)
    B = LaurentPoly.zero(1)
    for _ in range(rng.randint(1, 5)):
        T = rng.choice(ideals)
        shift, g = rng.randint(-5, 5), rng.randint(1, 5)
        AT, BT = ray_polynomials(T, p, q)
        A = A + inflate(AT, m).shift(shift).scale(g)
        B = B + inflate(BT, m).shift(shift).scale(g)
    return A, B


@pytest.mark.criterion(3, "decomposition round-trip")
def test_criterion_3_decomposition_round_trip():
    rng = random.Random(2024)
    cases = [(pq, m) for pq in [(2, 3), (3, 4), (2, 5), (3, 5)] for m in (1, 2)]
    start = time.perf_counter()
    failures = 0
    for k in range(100):
        (p, q), m = cases[k % len(cases)]
        A, B = random_member(rng, p, q, m)
        dec = decompose(A, B, p, q, m)
        region = region_points(p, q)
        if not (dec.resum() == (A, B) and all(t.gamma > 0 for t in dec.terms)
                and all(t.T.points <= region for t in dec.terms)):
            failures += 1
    elapsed = time.perf_counter() - start
    report(3, failures == 0 and elapsed < 10.0, f"100 cases, {failures} failures, {elapsed:.3f}s")


def conjugate(lam, length):
    return tuple(sum(1 for part in lam if part > i) for i in range(length))


@pytest.mark.criterion(4, "extraction correctness")
def test_criterion_4_extraction():
    checked = 0
    bad = []
    for e1 in range(1, 9):
        for e2 in range(1, 9):
            for ray in extremal_rays(e1, e2):
                p, q = ray.p, ray.q
                A, B = ray_polynomials(ray.T, p, q)
                A_min, lam, A_plus = min_extract(A, p, q)
                B_min, mu, B_plus = min_extract(B, q, p)
                if A_plus or B_plus or A_min != A or B_min != B or None in lam or None in mu:
                    bad.append((e1, e2, ray.T))
                elif conjugate(lam, q) != mu or conjugate(mu, p) != lam:
                    bad.append((e1, e2, ray.T))
                checked += 1
    report(4, not bad, f"{checked} rays, {len(bad)} bad")


@pytest.mark.criterion(5, "realization")
def test_criterion_5_realization():
    start = time.perf_counter()
    reseeds = 0
    bad = []
    count = 0
    for e1, e2 in [(2, 3), (3, 4), (2, 5), (4, 6)]:
        for ray in extremal_rays(e1, e2):
            cert = realize(ray.triple, seed=0)
            count += 1
            reseeds += cert.attempts - 1
            checks = cert.checks
            minors = [checks[k] for k in ("alpha_minor_x", "alpha_minor_y",
                                          "beta_minor_x", "beta_minor_y")]
            pure = all(isinstance(w, MinorWitness) and w.scalar != 0 for w in minors)
            pure = pure and all(w.monomial[1] == 0 for w in minors[0::2])
            pure = pure and all(w.monomial[0] == 0 for w in minors[1::2])
            d2 = pure_type(ray.diagram).d[2]
            exact = degreewise_exactness(cert.alpha, cert.beta, d2)
            hilb = hilbert_function(ray.diagram, d2)
            vanish = all(v == 0 for deg, v in hilb.items() if sum(deg) >= d2 - 1)
            if not (verify_composition(cert.alpha, cert.beta) and pure and exact.ok and vanish):
                bad.append((e1, e2, ray.T))
    elapsed = time.perf_counter() - start
    report(5, not bad and reseeds <= 3 and elapsed < 30.0,
           f"{count} realizations, {len(bad)} bad, {reseeds} reseeds, {elapsed:.3f}s")


@pytest.mark.criterion(6, "trigraded example")
def test_criterion_6_trigraded():
    start = time.perf_counter()
    beta = equivariant_diagram((1, 2, 1), 3)
    shape_ok = beta.ranks() == (3, 6, 6, 3) and beta == BettiDiagram.from_generators(EQUIVARIANT_121)
    shape_ok = shape_ok and sum(len(beta.degrees(h)) for h in range(4)) == 18
    cand, alpha, fired, _ = trigraded_results()
    cand_ok = (cand["nonnegative"] and not cand["hk_violations"]
               and any(a[:2] == (3, 1) and k == 3 for a, k in fired))
    alpha_ok = (alpha["nonnegative"] and not alpha["hk_violations"]
                and not any(alpha["obstructions"].values()))
    elapsed = time.perf_counter() - start
    report(6, shape_ok and cand_ok and alpha_ok and elapsed < 1.0,
           f"beta {shape_ok}, candidate {cand_ok}, alpha {alpha_ok}, {elapsed:.3f}s")


@pytest.mark.criterion(7, "negative controls")
def test_criterion_7_negative_controls(e23):
    deletions = [(h, deg) for (h, deg), _ in e23.entries()]
    hk_ok = all(hk_check(e23.without(h, deg)) for h, deg in deletions)

    alpha = generic_alpha(e23, seed=0)
    beta = build_beta(alpha, triple_generators(e23)[2])
    perturbed = []
    for key in beta.entries:
        for delta in (1, -1):
            entries = dict(beta.entries)
            entries[key] += delta
            perturbed.append(verify_composition(
                alpha, GradedMatrix(beta.row_degs, beta.col_degs, entries)))
    beta_ok = verify_composition(alpha, beta) and not any(perturbed)

    one = LaurentPoly.constant(1, 1)
    pair_ok = not verify_pair(one, one, 3, 2)
    report(7, hk_ok and beta_ok and pair_ok,
           f"{len(deletions)} deletions, {len(perturbed)} perturbations, pair rejected {pair_ok}")
