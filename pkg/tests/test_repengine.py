"""Representation engine.  Oracles: word evaluation over s3 is replayed with
honest permutation composition; matrices are recounted with a pure-Python
point loop; cylinder operations are recomputed by explicit enumeration."""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest

from autcosets.automorphisms import (
    compose,
    identity_automorphism,
    nielsen_invert,
    nielsen_right_mult,
    nielsen_swap,
    random_automorphism,
)
from autcosets.cosets import block_size, coset_product, theta, triple_product_disjoint
from autcosets.errors import SizeLimitError, SupportViolation
from autcosets.groups import Subgroup, TupleIndex, builtin_group
from autcosets.ratmat import RationalMatrix
from autcosets.repengine import (
    CylinderFunction,
    action_map,
    compress_to_invariants,
    conjugation_orbits,
    cylinder_inner_product,
    delta_cylinder,
    eval_word,
    markov_matrix,
    project_cylinder,
    projection_matrix,
    translate_by_permutation,
    weak_limit_check,
)
from autcosets.words import parse_word

C2 = builtin_group("c2")
C3 = builtin_group("c3")
S3 = builtin_group("s3")


def rand_aut(seed, length, m_fix=0, max_index=4):
    return random_automorphism(m_fix, max_index, length, seed)


# --- eval_word ----------------------------------------------------------

PERMS3 = sorted(itertools.permutations(range(3)))


def s3_eval_oracle(word, point):
    """Evaluate over s3 by composing honest permutations, bypassing the
    multiplication table."""
    acc = (0, 1, 2)
    for gen, sign in word:
        p = PERMS3[point[gen - 1]]
        if sign < 0:
            q = [0, 0, 0]
            for i in range(3):
                q[p[i]] = i
            p = tuple(q)
        acc = tuple(acc[p[i]] for i in range(3))
    return PERMS3.index(acc)


def test_eval_word_frozen():
    assert eval_word(C3, parse_word("x1 x2"), (1, 2)) == 0
    assert eval_word(C3, parse_word("x1^-1"), (1, 0)) == 2
    assert eval_word(C2, (), (0, 1)) == 0


def test_eval_word_matches_permutation_oracle():
    rng = np.random.RandomState(0)
    for _ in range(200):
        length = int(rng.randint(0, 8))
        word = tuple(
            (int(rng.randint(1, 4)), int(rng.choice((1, -1)))) for _ in range(length)
        )
        point = tuple(int(x) for x in rng.randint(0, 6, size=3))
        assert eval_word(S3, word, point) == s3_eval_oracle(word, point)


def test_eval_word_rejects_short_points():
    with pytest.raises(SupportViolation):
        eval_word(C2, parse_word("x3"), (0, 1))


# --- action_map ---------------------------------------------------------

def test_action_map_of_swap_permutes_coordinates():
    act = action_map(C2, nielsen_swap(1, 2), 2)
    assert act((0, 1)) == (1, 0)
    assert act((1, 1)) == (1, 1)


def test_action_map_is_right_action():
    g = rand_aut(5, 6)
    h = rand_aut(6, 6)
    n = max(g.support_bound(), h.support_bound(), compose(g, h).support_bound())
    tg = action_map(C2, g, n).table
    th = action_map(C2, h, n).table
    tgh = action_map(C2, compose(g, h), n).table
    assert np.array_equal(tgh, th[tg])


def test_action_map_bijections():
    for seed in range(20):
        g = rand_aut(seed, 8)
        n = max(g.support_bound(), 1)
        table = action_map(C2, g, n).table
        assert len(np.unique(table)) == len(table)


def test_action_map_rejects_undersized_cube():
    g = rand_aut(3, 6, max_index=5)
    with pytest.raises(SupportViolation):
        action_map(C2, g, g.support_bound() - 1)


# --- markov_matrix ------------------------------------------------------

def brute_markov(K, g, m, n_coords=None):
    n = K.order
    cover = max(g.support_bound(), m)
    big = cover if n_coords is None else n_coords
    assert big >= cover
    dim = n**m
    counts = [[0] * dim for _ in range(dim)]
    for point in itertools.product(range(n), repeat=big):
        row = sum(point[c] * n**c for c in range(m))
        col = sum(
            eval_word(K, g.image(c + 1), point) * n**c for c in range(m)
        )
        counts[row][col] += 1
    den = n ** (big - m)
    return RationalMatrix([[Fraction(c, den) for c in r] for r in counts])


def test_markov_frozen_worked_value():
    g = nielsen_right_mult(1, 2)
    m = markov_matrix(C2, g, 1)
    assert m.to_strings() == [["1/2", "1/2"], ["1/2", "1/2"]]


def test_markov_matches_brute_force():
    cases = [
        (C2, rand_aut(1, 7), 1),
        (C2, rand_aut(2, 9), 2),
        (C3, rand_aut(3, 7), 1),
        (C3, rand_aut(4, 5, max_index=3), 2),
        (S3, rand_aut(5, 6, max_index=3), 1),
        (S3, nielsen_invert(1), 1),
        (C2, identity_automorphism(), 2),
    ]
    for K, g, m in cases:
        assert markov_matrix(K, g, m) == brute_markov(K, g, m)


def test_markov_for_stabilizer_elements_is_identity():
    for K in (C2, C3, S3):
        for m in (1, 2):
            assert markov_matrix(K, theta(m, 2), m) == RationalMatrix.identity(K.order**m)
            h = rand_aut(9, 6, m_fix=m, max_index=m + 2)
            assert markov_matrix(K, h, m) == RationalMatrix.identity(K.order**m)


def test_markov_truncation_invariance():
    g = rand_aut(11, 7)
    base = markov_matrix(C3, g, 1)
    deeper = markov_matrix(C3, g, 1, truncation=g.support_bound() + 2)
    assert base == deeper
    with pytest.raises(SupportViolation):
        markov_matrix(C3, g, 1, truncation=g.support_bound() - 1)


def test_markov_homomorphism_small():
    for seed in range(5):
        g = rand_aut(seed, 6)
        h = rand_aut(50 + seed, 6)
        prod = coset_product(1, g, h)
        assert markov_matrix(C2, prod.rep, 1) == markov_matrix(C2, g, 1) @ markov_matrix(C2, h, 1)


def test_markov_m_zero_is_trivial():
    g = rand_aut(13, 6)
    assert markov_matrix(C2, g, 0) == RationalMatrix([[1]])


def test_markov_doubly_stochastic():
    for seed in range(6):
        g = rand_aut(seed, 8)
        assert markov_matrix(C3, g, 1).is_doubly_stochastic()


# --- guardrail ----------------------------------------------------------

def test_size_guardrail():
    g = rand_aut(17, 6)
    with pytest.raises(SizeLimitError):
        markov_matrix(C2, g, 1, truncation=30)
    with pytest.raises(SizeLimitError):
        action_map(C2, g, 40)
    with pytest.raises(SizeLimitError):
        markov_matrix(C3, g, 1, truncation=10, max_points=3**9)
    # exactly at the budget is allowed
    markov_matrix(C3, g, 1, truncation=9, max_points=3**9)
    with pytest.raises(ValueError):
        markov_matrix(C3, g, 1, max_points=0)


# --- projection ---------------------------------------------------------

def test_projection_frozen_m0():
    p = projection_matrix(C2, 0, 1)
    assert p.to_strings() == [["1/2", "1/2"], ["1/2", "1/2"]]


def test_projection_idempotent_and_stochastic():
    for m, n_coords in ((0, 2), (1, 2), (2, 2), (1, 3)):
        p = projection_matrix(C2, m, n_coords)
        assert p @ p == p
        assert p.is_doubly_stochastic()
        assert p.transpose() == p
    with pytest.raises(ValueError):
        projection_matrix(C2, 3, 2)


# --- conjugation orbits and compression ---------------------------------

def test_conjugation_orbits_are_s3_classes():
    orbit_of, orbits = conjugation_orbits(S3, Subgroup.whole(S3), 1)
    assert orbits == [(0,), (1, 2, 5), (3, 4)]
    assert orbit_of[4] == 2


def test_trivial_subgroup_compression_is_identity_map():
    g = rand_aut(23, 6)
    m = markov_matrix(C3, g, 1)
    assert compress_to_invariants(C3, Subgroup.trivial(C3), 1, m) == m


def test_compression_preserves_identity_and_products():
    whole = Subgroup.whole(S3)
    assert compress_to_invariants(
        S3, whole, 1, RationalMatrix.identity(6)
    ) == RationalMatrix.identity(3)
    for seed in range(3):
        g = rand_aut(seed, 5, max_index=3)
        h = rand_aut(70 + seed, 5, max_index=3)
        prod = coset_product(1, g, h)
        big = compress_to_invariants(S3, whole, 1, markov_matrix(S3, prod.rep, 1))
        small = compress_to_invariants(S3, whole, 1, markov_matrix(S3, g, 1)) @ compress_to_invariants(
            S3, whole, 1, markov_matrix(S3, h, 1)
        )
        assert big == small


def test_compression_rejects_non_invariant_matrix():
    rows = [[Fraction(0)] * 6 for _ in range(6)]
    rows[0][1] = Fraction(1)  # couples the unit to a single transposition
    with pytest.raises(ValueError):
        compress_to_invariants(S3, Subgroup.whole(S3), 1, RationalMatrix(rows))
    with pytest.raises(ValueError):
        compress_to_invariants(S3, Subgroup.whole(S3), 1, RationalMatrix.identity(5))


# --- cylinder functions -------------------------------------------------

def brute_inner(K, n_coords, f, fp):
    n = K.order
    ti = TupleIndex(n, n_coords)
    total = Fraction(0)
    for idx in range(ti.n_points):
        total += f.values[idx % n**f.level] * fp.values[idx % n**fp.level]
    return total / ti.n_points


def test_delta_and_inner_product():
    fa = delta_cylinder(C2, (0, 1))
    fb = delta_cylinder(C2, (0, 1))
    fc = delta_cylinder(C2, (1, 1))
    assert cylinder_inner_product(C2, 2, fa, fb) == Fraction(1, 4)
    assert cylinder_inner_product(C2, 5, fa, fb) == Fraction(1, 4)
    assert cylinder_inner_product(C2, 2, fa, fc) == 0
    with pytest.raises(ValueError):
        cylinder_inner_product(C2, 1, fa, fb)


def test_inner_product_matches_brute_enumeration():
    f = CylinderFunction(1, (Fraction(1, 2), Fraction(-1, 3), Fraction(2)))
    fp = CylinderFunction(2, tuple(Fraction(i, 7) for i in range(9)))
    for n_coords in (2, 3):
        assert cylinder_inner_product(C3, n_coords, f, fp) == brute_inner(
            C3, n_coords, f, fp
        )


def test_project_cylinder():
    f = delta_cylinder(C2, (0, 1, 1))
    p = project_cylinder(C2, 1, f)
    assert p.level == 1
    assert p.values == (Fraction(1, 4), Fraction(0))
    assert project_cylinder(C2, 5, f) is f
    # projection is averaging: inner products against low cylinders agree
    g = delta_cylinder(C2, (0,))
    assert cylinder_inner_product(C2, 3, f, g) == cylinder_inner_product(C2, 3, p, g)


def test_translate_by_permutation_oracle():
    f = delta_cylinder(C3, (1, 2))
    swap = {1: 3, 3: 1}
    t = translate_by_permutation(C3, swap, f, 3)
    ti = TupleIndex(3, 3)
    for idx in range(27):
        point = ti.decode(idx)
        looked_up = (point[2], point[1])  # coordinates 3 and 2
        expected = f.values[TupleIndex(3, 2).encode(looked_up)]
        assert t.values[idx] == expected


def test_translate_validation():
    f = delta_cylinder(C2, (0, 1))
    with pytest.raises(SupportViolation):
        translate_by_permutation(C2, {2: 4, 4: 2}, f, 3)
    with pytest.raises(ValueError):
        translate_by_permutation(C2, {1: 2}, f, 3)


def test_weak_limit_frozen_values():
    # m=1, margin 1, j=1 over c2: matched value 1/8; j=0 gives 1/4 vs 1/8
    fa = delta_cylinder(C2, (0, 0))
    swap = {2: 3, 3: 2}
    t = translate_by_permutation(C2, swap, fa, 3)
    assert cylinder_inner_product(C2, 3, t, fa) == Fraction(1, 8)
    p = project_cylinder(C2, 1, fa)
    assert cylinder_inner_product(C2, 3, p, p) == Fraction(1, 8)
    assert cylinder_inner_product(C2, 2, fa, fa) == Fraction(1, 4)


def test_weak_limit_threshold():
    for margin in (1, 2):
        for j in range(margin):
            assert not weak_limit_check(C2, 1, margin, j)
        for j in range(margin, margin + 3):
            assert weak_limit_check(C2, 1, margin, j)


def test_weak_limit_other_groups_and_trivial_cases():
    assert weak_limit_check(C3, 1, 1, 1)
    assert not weak_limit_check(C3, 1, 1, 0)
    assert weak_limit_check(C2, 0, 1, 1)
    assert weak_limit_check(C2, 2, 0, 0)  # margin 0: nothing to separate
    assert weak_limit_check(builtin_group("c1"), 1, 2, 0)  # trivial group


# --- associativity through the matrices ---------------------------------

def test_triple_product_matches_bracketings_in_matrices():
    for seed in range(4):
        m = 1 + seed % 2
        g = rand_aut(seed, 6, max_index=m + 2)
        h = rand_aut(40 + seed, 6, max_index=m + 2)
        f = rand_aut(80 + seed, 6, max_index=m + 2)
        left = coset_product(m, coset_product(m, g, h).rep, f).rep
        right = coset_product(m, g, coset_product(m, h, f).rep).rep
        trip = triple_product_disjoint(m, g, h, f)
        mats = [markov_matrix(C2, a, m) for a in (left, right, trip)]
        assert mats[0] == mats[1] == mats[2]
