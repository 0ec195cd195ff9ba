import random

import pytest
from hypothesis import given, strategies as st

from bvhat import garside, handle
from bvhat.braid import (
    BraidWord,
    Flavor,
    Perm,
    braid_eq,
    braid_from_json,
    braid_to_json,
    canonical_form,
    canonical_word,
    delete_strand,
    delete_strand_steps,
    delete_strand_tracked,
    delta_normalize,
    format_braid,
    free_reduce,
    garside_eq,
    handle_eq,
    in_Bk,
    min_strands,
    perm_images,
    perm_of,
    restrict,
    sigma,
)
from oracles import artin_eq, perm_by_tracing, random_word, scramble

B, S = Flavor.BRAID, Flavor.SYMMETRIC


def bw(*letters, flavor=B):
    return BraidWord(tuple(letters), flavor)


letters4 = st.lists(st.integers(1, 3).flatmap(lambda i: st.sampled_from((i, -i))), max_size=8)
letters6 = st.lists(st.integers(1, 5).flatmap(lambda i: st.sampled_from((i, -i))), max_size=8)


# -- words and permutations ---------------------------------------------------


def test_word_basics():
    w = bw(1, -3)
    assert w.width == 4
    assert bw().width == 1
    assert w.inverse().letters == (3, -1)
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert free_reduce((1, 1), S) == ()
    assert bw(-2, flavor=S).letters == (2,)
    with pytest.raises(ValueError):
        bw(1) * bw(1, flavor=S)
    with pytest.raises(ValueError):
        BraidWord((0,))


def test_perm_examples():
    assert perm_of(bw()) == Perm()
    assert perm_of(bw(1)).as_mapping() == {0: 1, 1: 0}
    assert perm_of(bw(1, 2, 1)).as_mapping() == {0: 2, 2: 0}


@given(letters6)
def test_perm_matches_strand_tracing(w):
    n = 6
    assert perm_images(w, n) == perm_by_tracing(w, n)


@given(letters6, letters6)
def test_perm_homomorphism(u, v):
    assert perm_of(u + v) == perm_of(u) * perm_of(v)
    assert perm_of(bw(*u).inverse()) == perm_of(u).inverse()


# -- equality -----------------------------------------------------------------


def test_braid_eq_examples():
    assert braid_eq(bw(1, -1), bw())
    assert braid_eq(bw(1, 3), bw(3, 1))
    assert not braid_eq(bw(1, 1), bw())
    assert braid_eq(bw(1, 1, flavor=S), bw(flavor=S))
    assert braid_eq(bw(1, 2, 1), bw(2, 1, 2))


def test_canonical_form_examples():
    assert canonical_form(bw()) == (1, 0, ())
    assert canonical_form(bw(1, 2, 1), 3) == canonical_form(bw(2, 1, 2), 3)


@given(letters4, letters4)
def test_braid_eq_agrees_with_artin_representation(u, v):
    assert braid_eq(bw(*u), bw(*v)) == artin_eq(u, v)


def test_braid_eq_on_engineered_equal_pairs():
    rng = random.Random(7)
    for _ in range(300):
        w = random_word(rng, 8, 5)
        v = scramble(w, rng, 25, 5)
        assert artin_eq(w, v)
        assert braid_eq(bw(*w), bw(*v))
        assert canonical_word(bw(*w)) == canonical_word(bw(*v))


@pytest.mark.parametrize("n", [4, 6])
def test_dual_backends_agree(n):
    rng = random.Random(n)
    for k in range(1000):
        u = random_word(rng, 10, n)
        v = scramble(u, rng, 10, n) if k % 2 else random_word(rng, 10, n)
        a, b = free_reduce(u), free_reduce(v)
        assert garside_eq(a, b) == handle_eq(a, b)


@given(letters4, letters4, letters4, letters4)
def test_braid_eq_is_a_congruence(u, v, x, y):
    if braid_eq(bw(*u), bw(*v)):
        assert braid_eq(bw(*x, *u, *y), bw(*x, *v, *y))


@given(letters6)
def test_braid_eq_equivalence(u):
    w = bw(*u)
    assert braid_eq(w, w)
    assert braid_eq(w * w.inverse(), bw())
    assert braid_eq(w.inverse() * w, bw())


def test_unknown_backend():
    with pytest.raises(ValueError):
        braid_eq(bw(1, 2), bw(2, 1, 2, -1, -2), backend="nope")


# -- Garside normal form and handle reduction ---------------------------------


def test_left_normal_form_of_delta():
    dw = tuple(i + 1 for i in garside.reduced_word(garside.delta(4)))
    assert garside.left_normal_form(dw, 4) == (1, ())
    assert garside.left_normal_form(tuple(-x for x in reversed(dw)), 4) == (-1, ())


@given(letters4)
def test_normal_form_word_represents_the_braid(u):
    inf, factors = garside.left_normal_form(u, 4)
    w = garside.normal_form_word(inf, factors, 4)
    assert artin_eq(u, w)
    assert garside.left_normal_form(w, 4) == (inf, factors)


@given(letters4)
def test_normal_form_factors_are_left_weighted(u):
    _, factors = garside.left_normal_form(u, 4)
    for a, b in zip(factors, factors[1:]):
        assert garside.left_descents(b) <= garside.right_descents(a)


def test_handle_reduction():
    # s0 s1 s0^-1 is a handle and becomes s1^-1 s0 s1
    assert handle.reduce_handles((1, 2, -1)) == (-2, 1, 2)
    assert handle.reduce_handles((1, 2)) == (1, 2)
    assert handle.is_trivial((1, 2, 1, -2, -1, -2))
    assert not handle.is_trivial((1, 1))
    with pytest.raises(handle.HandleFuelExhausted):
        handle.reduce_handles((1, 2, 1, -2, -1, -2), fuel=0)


# -- deletion -----------------------------------------------------------------


def test_delete_strand_examples():
    assert delete_strand_tracked(bw(1, 2, 1), 1) == (bw(1), 1)
    assert delete_strand(bw(), 4) == bw()
    assert delete_strand(bw(4), 0) == bw(3)


def test_spark_chain_step_by_step():
    stages = delete_strand_steps(bw(1, 2, 1), 1)
    got = [(e.letters, q, r.letters) for e, q, r in stages]
    assert got == [((), 1, (1, 2, 1)), ((), 0, (2, 1)), ((1,), 0, (1,)), ((1,), 1, ())]


@given(letters6, st.integers(0, 6))
def test_deletion_respects_equality(u, q):
    # deleting the strand with top q from equal braids gives equal braids
    w = bw(*u)
    rng = random.Random(len(u) * 7 + q)
    v = bw(*scramble(u, rng, 8, 6))
    assert braid_eq(delete_strand(w, q), delete_strand(v, q))
    assert delete_strand_tracked(w, q)[1] == perm_of(w).inverse()(q)


@given(letters6, st.integers(0, 5))
def test_deletion_of_unused_strand_is_identity(u, q):
    w = bw(*(x for x in u if abs(x) - 1 < q - 1 or abs(x) - 1 > q)) if q else bw()
    # letters away from strand q shift down only above q
    out = delete_strand(w, q)
    assert braid_eq(out, bw(*(x if abs(x) - 1 < q else (x - 1 if x > 0 else x + 1) for x in w.letters)))


def test_in_Bk_examples():
    assert in_Bk(bw(1), 1)
    assert not in_Bk(bw(2), 1)
    assert in_Bk(bw(2, -2, 1), 1)
    assert in_Bk(bw(3, 2, -3, -2, -3, 2, 3, -2), 1) == braid_eq(bw(3, 2, -3, -2, -3, 2, 3, -2), bw())
    with pytest.raises(ValueError):
        in_Bk(bw(), -1)


def test_in_Bk_hidden_support():
    # s1 s0 s1 s0^-1 s1^-1 = s0 lies in B_2 although the word uses s1
    w = bw(2, 1, 2, -1, -2, -1, 1)
    assert in_Bk(w, 1)
    assert min_strands(w) == 2
    assert restrict(w, 1).width <= 2


@given(letters6, st.integers(0, 6))
def test_in_Bk_monotone_and_restrict(u, k):
    w = bw(*u)
    if in_Bk(w, k):
        assert in_Bk(w, k + 1)
    assert restrict(w, k).width <= k + 1
    if max((abs(x) for x in u), default=0) <= k:
        assert in_Bk(w, k)


def test_in_Bk_symmetric():
    assert in_Bk(bw(2, 2, flavor=S), 0)
    assert not in_Bk(bw(2, flavor=S), 1)


# -- canonical words ----------------------------------------------------------


@given(letters6)
def test_canonical_word_is_equal_and_idempotent(u):
    w = bw(*u)
    c = canonical_word(w)
    assert braid_eq(c, w)
    assert canonical_word(c) == c
    assert c.width <= min_strands(w)


@given(letters6)
def test_canonical_word_symmetric(u):
    w = bw(*u, flavor=S)
    c = canonical_word(w)
    assert perm_of(c) == perm_of(w)
    assert canonical_word(bw(*scramble(u, random.Random(1)), flavor=S)) == c


def test_delta_normalize_examples():
    assert delta_normalize([1, 0]) == (0, 2)
    assert delta_normalize([]) == ()
    assert delta_normalize([0, 0]) == (0, 1)


# -- text and JSON ------------------------------------------------------------


def test_format_and_json():
    assert format_braid(bw(1, -3)) == "s0 s2'"
    assert format_braid(bw()) == "1"
    assert str(sigma(2, -1)) == "s2'"
    w = bw(1, -3, 2)
    assert braid_from_json(braid_to_json(w)) == w
