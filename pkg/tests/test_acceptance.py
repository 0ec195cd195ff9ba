"""The twelve acceptance criteria, each printing one PASS/FAIL line."""

import random
import time

import pytest

from bvhat.braid import BraidWord, Flavor, delete_strand_steps, free_reduce, garside_eq, handle_eq
from bvhat.forest import leaf_count, word_to_forest
from bvhat.fraction import (
    FractionTriple,
    embed_mono,
    fatten,
    frac_eq,
    frac_inv,
    frac_mul,
    highest,
    identity,
    lowest,
    project_to_V,
    random_triple,
    reduce,
    shuffled,
    triple,
)
from bvhat.hedge import hedge_mul
from bvhat.prefixmap import as_prefix_map
from bvhat.rewrite import FOREST_RULES, HEDGE_INVERSE_RULES, HEDGE_RULES, check_local_confluence
from bvhat.subgroup import is_member, member_type, verify_presentation
from bvhat.textio import parse_monoid
from bvhat.zappa import check_zappa_axioms, coaction_identities, mono_eq, random_braid, split, try_unsplit
from oracles import random_word, scramble

B, S = Flavor.BRAID, Flavor.SYMMETRIC


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail):
        with capsys.disabled():
            print(f"\nCRITERION {k}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return emit


def test_criterion_01_worked_identity(report):
    t0 = time.perf_counter()
    lhs, rhs = parse_monoid("l0 s0 l0 s0"), parse_monoid("l0 l1 s0 s1 s0")
    as_monoid = mono_eq(lhs, rhs)
    as_fraction = frac_eq(embed_mono(lhs), embed_mono(rhs)) and reduce(embed_mono(lhs)).key() == reduce(embed_mono(rhs)).key()
    dt = time.perf_counter() - t0
    report(1, as_monoid and as_fraction and dt < 1.0, f"monoid={as_monoid} fraction={as_fraction} time={dt:.3f}s")


def test_criterion_02_spark_chain(report):
    stages = [(e.letters, q, r.letters) for e, q, r in delete_strand_steps(BraidWord((1, 2, 1)), 1)]
    # d1 s0 s1 s0 = d0 s1 s0 = s0 d0 s0 = s0 d1
    expected = [((), 1, (1, 2, 1)), ((), 0, (2, 1)), ((1,), 0, (1,)), ((1,), 1, ())]
    report(2, stages == expected, f"stages={stages}")


def test_criterion_03_confluence(report):
    t0 = time.perf_counter()
    failures = peaks = 0
    for system in (FOREST_RULES, HEDGE_RULES, HEDGE_INVERSE_RULES):
        for b in range(2, 11):
            rep = check_local_confluence(system, b)
            peaks += len(rep.results)
            failures += sum(not r.joined for r in rep.results)
    dt = time.perf_counter() - t0
    report(3, failures == 0 and dt < 10.0, f"critical pairs={peaks} failures={failures} time={dt:.2f}s")


def test_criterion_04_zappa_axioms(report):
    bad = []
    checked = 0
    for flavor in (B, S):
        rep = check_zappa_axioms(1000, 8, flavor, seed=4)
        checked += rep.checked
        bad += rep.failures
    co_bad = [(q, m, f) for q in range(9) for m in range(9) for f in (B, S) if coaction_identities(q, m, f) != (True, True)]
    report(4, not bad and not co_bad, f"axiom instances={checked} failures={len(bad)} coaction failures={len(co_bad)}")


def test_criterion_05_split_round_trip(report):
    rng = random.Random(5)
    bad = 0
    for _ in range(1000):
        beta = random_braid(rng, 10, 8)
        i = rng.randint(0, 7)
        back = try_unsplit(split(beta, i), i)
        if back is None or not handle_eq(back.letters, beta.letters):
            bad += 1
    absent = try_unsplit(BraidWord((1,)), 0) is None
    report(5, bad == 0 and absent, f"round-trip failures={bad} unsplit(s0,0) absent={absent}")


def test_criterion_06_dual_backends(report):
    t0 = time.perf_counter()
    disagree = equal_pairs = 0
    for n in (4, 6):
        rng = random.Random(60 + n)
        for k in range(1000):
            u = random_word(rng, 10, n)
            v = scramble(u, rng, 10, n) if k % 2 else random_word(rng, 10, n)
            u, v = free_reduce(u), free_reduce(v)
            g = garside_eq(u, v)
            equal_pairs += g
            disagree += g != handle_eq(u, v)
    dt = time.perf_counter() - t0
    report(6, disagree == 0 and dt < 60.0, f"pairs=2000 equal={equal_pairs} disagreements={disagree} time={dt:.2f}s")


def test_criterion_07_normal_form_uniqueness(report):
    rng = random.Random(7)
    bad = 0
    for k in range(500):
        t = random_triple(rng, B if k % 2 else S)
        J = word_to_forest(sorted(rng.randint(0, 4) for _ in range(rng.randint(0, 3))))
        f = fatten(t, J, BraidWord(random_word(rng, 4, 6), t.flavor))
        a, b = reduce(f, lowest), reduce(f, highest)
        c = reduce(f, shuffled(k))
        bad += not (a.key() == b.key() == c.key() == reduce(t).key())
    report(7, bad == 0, f"triples=500 mismatches={bad}")


def test_criterion_08_group_axioms(report):
    bad = 0
    for flavor in (B, S):
        rng = random.Random(8)
        e = identity(flavor)
        xs = [random_triple(rng, flavor) for _ in range(500)]
        for i, x in enumerate(xs):
            y, z = xs[(i + 1) % 500], xs[(i + 7) % 500]
            bad += not frac_eq(frac_mul(frac_mul(x, y), z), frac_mul(x, frac_mul(y, z)))
            bad += not (frac_eq(frac_mul(e, x), x) and frac_eq(frac_mul(x, e), x))
            bad += not (frac_eq(frac_mul(x, frac_inv(x)), e) and frac_eq(frac_mul(frac_inv(x), x), e))
    report(8, bad == 0, f"triples=500 per flavor failures={bad}")


def test_criterion_09_presentation(report):
    t0 = time.perf_counter()
    reps = [verify_presentation(6, f) for f in (B, S)]
    dt = time.perf_counter() - t0
    checked = sum(r.checked for r in reps)
    failed = sum(len(r.failures) for r in reps)
    report(9, failed == 0 and dt < 30.0, f"relations={checked} failures={failed} time={dt:.2f}s")


def test_criterion_10_semantic_oracle(report):
    rng = random.Random(10)
    disagree = engineered = 0
    for k in range(500):
        a = random_triple(rng, S)
        if k % 5 == 0:
            J = word_to_forest(sorted(rng.randint(0, 4) for _ in range(rng.randint(1, 3))))
            f = fatten(a, J, BraidWord(random_word(rng, 4, 6), S))
            b = FractionTriple(f.numerator, BraidWord(scramble(f.braid.letters, rng, 10), S), f.denominator)
            engineered += 1
        else:
            b = random_triple(rng, S)
        disagree += frac_eq(a, b) != (as_prefix_map(a) == as_prefix_map(b))
    x = triple([0], [1], [0], S)
    example = not frac_eq(x, identity(S)) and str(as_prefix_map(x)) == "{0.0↦0.1, 0.1↦0.0}"
    report(10, disagree == 0 and engineered == 100 and example, f"pairs=500 engineered={engineered} disagreements={disagree} example={example}")


def _random_balanced(rng):
    k = rng.randint(0, 3)
    F = word_to_forest([rng.randint(0, j) for j in range(k)])
    G = word_to_forest([rng.randint(0, j) for j in range(k)])
    return triple(F, random_word(rng, 5, k + 1) if k else (), G)


def test_criterion_11_bv_closure(report):
    rng = random.Random(11)
    elts = [_random_balanced(rng) for _ in range(500)]
    bad = sum(not (is_member(x) and is_member(frac_inv(x)) and member_type(project_to_V(x)) is not None) for x in elts)
    for _ in range(200):
        x, y = rng.sample(elts, 2)
        bad += not is_member(frac_mul(x, y))
    report(11, bad == 0, f"elements=500 products=200 failures={bad}")


def test_criterion_12_homomorphisms(report):
    rng = random.Random(12)
    bad_hedge = 0
    for _ in range(1000):
        F = word_to_forest(rng.randint(0, 5) for _ in range(rng.randint(0, 5)))
        G = word_to_forest(rng.randint(0, 5) for _ in range(rng.randint(0, 5)))
        bad_hedge += leaf_count(F * G) != hedge_mul(leaf_count(F), leaf_count(G))
    bad_proj = 0
    for _ in range(500):
        x, y = random_triple(rng), random_triple(rng)
        bad_proj += project_to_V(frac_mul(x, y)).key() != frac_mul(project_to_V(x), project_to_V(y)).key()
    report(12, bad_hedge == 0 and bad_proj == 0, f"hedge failures={bad_hedge}/1000 projection failures={bad_proj}/500")
