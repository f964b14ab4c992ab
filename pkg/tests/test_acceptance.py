"""Acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line
per criterion.  Every sub-check of a criterion is evaluated before the
line is printed, so a failing line lists everything that went wrong.
"""

import random
import time

import pytest

from cayleyfn.cayley import Status, digraph_cayley_finite, zupnik_finite
from cayleyfn.centralizer import (build_phi, check_centralizer, idempotent_structure,
                                  main_theorem_finite, random_commuting, random_idempotent,
                                  verify_lemmas)
from cayleyfn.constructions import (TWO_BRANCH_DOUBLE_RAY, closing_construction,
                                    unknown_but_cayley_pair, worked_example)
from cayleyfn.digraph import decompose
from cayleyfn.oracle import is_associative, is_cayley_bruteforce
from cayleyfn.symbolic import (BranchSpec, DoubleRayDescriptor, RroDescriptor, SymStatus,
                               check_doubleray_theorem, check_no_infinite_branch_case,
                               check_rro_condition, interior_rro_check, materialize,
                               phi_doubleray_theorem)
from cayleyfn.transformation import Transformation, commutes

from conftest import all_idempotents, all_maps, double_ray_census

PAIRS = 1000
RESULTS = []  # summary lines, printed again at the end of the session by conftest


def verdict(number, title, failures, elapsed, limit):
    if elapsed >= limit:
        failures.append(f"runtime {elapsed:.2f}s exceeds {limit}s")
    status = "PASS" if not failures else "FAIL"
    line = (f"{status} criterion {number} ({title}) in {elapsed:.2f}s"
            + "".join(f"\n    - {f}" for f in failures))
    RESULTS.append(line)
    print("\n" + line)
    assert not failures, "; ".join(failures)


def seeded_pairs():
    for seed in range(PAIRS):
        n = 1 + seed % 12
        eps = random_idempotent(n, seed)
        yield seed, eps, random_commuting(eps, seed + 100_000)


def test_criterion_1_worked_example():
    t0 = time.perf_counter()
    failures = []
    alpha, eps = worked_example()
    if alpha.size != 13:
        failures.append(f"carrier has {alpha.size} points")
    if not commutes(alpha, eps):
        failures.append("alpha does not commute with epsilon")
    struct = idempotent_structure(eps)
    names = [eps.label(c.fixed_vertex) for c in struct.components]
    if names != list("abcde") or struct.satellite_counts() != [2, 3, 2, 0, 1]:
        failures.append(f"components {names} with satellites {struct.satellite_counts()}")
    phi = build_phi(alpha, eps).base
    if phi.map != (1, 2, 3, 4, 1):
        failures.append(f"Phi = {phi.map}")
    v = main_theorem_finite(alpha, eps)
    if (v.status, v.M, v.s) != (Status.CAYLEY, frozenset({4}), 1):
        failures.append(f"main theorem {v.to_record()}")
    if not zupnik_finite(alpha).is_cayley:
        failures.append("zupnik_finite does not agree")
    verdict(1, "worked example", failures, time.perf_counter() - t0, 1.0)


def test_criterion_2_exhaustive_oracle_equivalence():
    t0 = time.perf_counter()
    failures = []
    count = 0
    for n in (1, 2, 3):
        for t in all_maps(n):
            count += 1
            z = zupnik_finite(t).is_cayley
            d = digraph_cayley_finite(t).is_cayley
            o = is_cayley_bruteforce(t) is not None
            if not z == d == o:
                failures.append(f"{t.map}: zupnik={z} digraph={d} oracle={o}")
    if count != 32:
        failures.append(f"{count} maps checked, expected 32")
    verdict(2, "oracle equivalence for n <= 3", failures, time.perf_counter() - t0, 60.0)


def test_criterion_3_n4_spot_checks():
    t0 = time.perf_counter()
    failures = []
    swap = Transformation((0, 0, 3, 2))
    for name, fn in (("zupnik", zupnik_finite), ("digraph", digraph_cayley_finite)):
        if fn(swap).status is not Status.NOT_CAYLEY:
            failures.append(f"{name} says {fn(swap).status.value} for 0,0,3,2")
    table = is_cayley_bruteforce(swap)
    if table is not None:
        failures.append(
            f"oracle found a witness for 0,0,3,2: element {table.element}, "
            f"table {table.table}, associative={is_associative(table.table)}, "
            f"row equals map={table.row(table.element) == swap}")
    branched = Transformation((1, 0, 2, 0))
    w = is_cayley_bruteforce(branched)
    if w is None or not w.is_associative() or w.row(w.element) != branched:
        failures.append("no valid witness table for (0 1)(2) with 3 -> 0")
    if not zupnik_finite(branched).is_cayley or not digraph_cayley_finite(branched).is_cayley:
        failures.append("deciders reject (0 1)(2) with 3 -> 0")
    verdict(3, "n = 4 spot checks", failures, time.perf_counter() - t0, 600.0)


def test_criterion_4_idempotents():
    t0 = time.perf_counter()
    failures = []
    for n in (1, 2, 3, 4):
        for e in all_idempotents(n):
            if not (zupnik_finite(e).is_cayley and digraph_cayley_finite(e).is_cayley):
                failures.append(f"idempotent {e.map} not classified Cayley")
    verdict(4, "idempotents are Cayley", failures, time.perf_counter() - t0, 60.0)


def test_criterion_5_lemma_suite():
    t0 = time.perf_counter()
    failures = []
    rng = random.Random(0)
    strict = {"L1", "L2", "L3"}
    for seed, eps, alpha in seeded_pairs():
        other = Transformation(tuple(rng.randrange(eps.size) for _ in range(eps.size)))
        for candidate in (alpha, other):
            if bool(check_centralizer(candidate, eps)) != commutes(candidate, eps):
                failures.append(f"seed {seed}: centralizer test differs from commutation")
        for c in verify_lemmas(alpha, eps):
            if c.lemma_id in strict and not c.passed:
                failures.append(f"seed {seed}: {c.lemma_id} {c.check} ({c.detail})")
    verdict(5, f"lemma suite on {PAIRS} pairs", failures[:10], time.perf_counter() - t0, 60.0)


def test_criterion_6_sufficiency_and_non_necessity():
    t0 = time.perf_counter()
    failures = []
    contradictions = []
    sufficient = 0
    for seed, eps, alpha in seeded_pairs():
        if main_theorem_finite(alpha, eps).status is Status.CAYLEY:
            sufficient += 1
            if not zupnik_finite(alpha).is_cayley:
                contradictions.append((seed, alpha.map, eps.map))
    if contradictions:
        seed, a, e = contradictions[0]
        failures.append(f"{len(contradictions)} of {sufficient} sufficiency verdicts "
                        f"contradicted by zupnik_finite; first: seed {seed}, "
                        f"alpha {a}, epsilon {e}")
    alpha, eps = unknown_but_cayley_pair()
    if main_theorem_finite(alpha, eps).status is not Status.UNKNOWN:
        failures.append("constructed pair is not Unknown under the sufficiency test")
    if not zupnik_finite(alpha).is_cayley:
        failures.append("constructed pair is not Cayley under zupnik_finite")
    verdict(6, "sufficiency and non-necessity", failures, time.perf_counter() - t0, 60.0)


def _random_trivial_tail_rro(rng):
    prefix = tuple(tuple(BranchSpec.finite(rng.randint(1, 10), rng.randint(1, 2))
                         for _ in range(rng.randint(0, 2)))
                   for _ in range(rng.randint(1, 10)))
    return RroDescriptor(prefix)


def test_criterion_7_symbolic_suite():
    t0 = time.perf_counter()
    failures = []
    v = check_doubleray_theorem(TWO_BRANCH_DOUBLE_RAY, 0)
    if v.status is not SymStatus.VIOLATED or v.witness_position is None:
        failures.append(f"two-branch double ray: {v.to_record()}")
    for s in (0, 1, 2):
        cc = closing_construction(s, 10)
        census = double_ray_census(cc)
        lengths = [length for _, length in census]
        problems = []
        if not commutes(cc.alpha, cc.epsilon):
            problems.append("alpha not in C(epsilon)")
        cycles = decompose(cc.alpha).components
        if any(c.cycle_length != 1 or c.cycle[0] not in cc.boundary for c in cycles):
            problems.append("interior cycle")
        if max(lengths, default=0) != s:
            problems.append(f"sup_b {max(lengths, default=0)}")
        alpha_desc = DoubleRayDescriptor(tuple(
            tuple(BranchSpec.finite(n) for p_, n in census if p_ == p)
            for p in range(-cc.radius, cc.radius + 1)))
        if check_no_infinite_branch_case(alpha_desc, s).status is not SymStatus.SATISFIED:
            problems.append("alpha double ray lacks a branch of length s")
        if phi_doubleray_theorem(cc.phi_descriptor, s).alpha_status is not Status.UNKNOWN:
            problems.append("Phi-level theorem not inconclusive")
        if problems:
            failures.append(f"closing construction s={s}: {', '.join(problems)}")
    rng = random.Random(7)
    for k in range(50):
        d = _random_trivial_tail_rro(rng)
        sym = check_rro_condition(d).status
        brute = interior_rro_check(materialize(d, 30)).status
        if sym is not brute:
            failures.append(f"descriptor {k}: symbolic {sym.value}, brute force {brute.value}")
    verdict(7, "symbolic suite", failures, time.perf_counter() - t0, 60.0)
