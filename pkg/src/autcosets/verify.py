"""Seeded self-check suites behind the CLI ``verify`` verb.

Each suite runs randomized structural checks with a deterministic seed and
returns one CheckResult per law checked.  These are quick smoke checks; the
test suite carries the heavier case counts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .automorphisms import (
    compose,
    identity_automorphism,
    is_in_H,
    nielsen_invert,
    nielsen_right_mult,
    nielsen_swap,
    permutation_automorphism,
    random_automorphism,
)
from .cosets import (
    block_size,
    coset_product,
    product_formula_direct,
    stability_witness,
    star_vs_pair_check,
    theta,
    witness_left,
    witness_right,
)
from .groups import Subgroup, builtin_group
from .ratmat import RationalMatrix
from .repengine import action_map, compress_to_invariants, markov_matrix, weak_limit_check
from .words import format_word, invert_word, concat, parse_word, reduce


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


SUITES = ("words", "automorphisms", "cosets", "representation")


def _random_word(rng: random.Random, max_gen: int, length: int):
    return [(rng.randint(1, max_gen), rng.choice((1, -1))) for _ in range(length)]


def _suite_words(seed: int, max_points) -> list[CheckResult]:
    rng = random.Random(seed)
    cases = 500
    idempotent = True
    inverse_law = True
    roundtrip = True
    for _ in range(cases):
        raw = _random_word(rng, 6, rng.randint(0, 30))
        w = reduce(raw)
        idempotent &= reduce(w) == w
        inverse_law &= concat(w, invert_word(w)) == ()
        roundtrip &= parse_word(format_word(w)) == w
    return [
        CheckResult("words.reduce_idempotent", idempotent, f"{cases} random words"),
        CheckResult("words.inverse_cancels", inverse_law, f"{cases} random words"),
        CheckResult("words.text_roundtrip", roundtrip, f"{cases} random words"),
    ]


def _suite_automorphisms(seed: int, max_points) -> list[CheckResult]:
    rng = random.Random(seed)
    cases = 40
    assoc = True
    inv_ok = True
    for _ in range(cases):
        a = random_automorphism(0, 4, rng.randint(0, 8), rng.randrange(1 << 30))
        b = random_automorphism(0, 4, rng.randint(0, 8), rng.randrange(1 << 30))
        c = random_automorphism(0, 4, rng.randint(0, 8), rng.randrange(1 << 30))
        assoc &= compose(compose(a, b), c) == compose(a, compose(b, c))
        inv_ok &= compose(a, a.inverse()).is_identity()
    gens_ok = all(
        compose(move, move.inverse()).is_identity()
        for move in (nielsen_swap(1, 3), nielsen_invert(2), nielsen_right_mult(2, 5))
    )
    perm_ok = True
    for _ in range(cases):
        idx = rng.sample(range(1, 8), 4)
        shuffled = idx[:]
        rng.shuffle(shuffled)
        p = permutation_automorphism(dict(zip(idx, shuffled)))
        perm_ok &= compose(p, p.inverse()).is_identity()
    theta_ok = all(is_in_H(theta(m, j), m) for m in range(3) for j in range(4))
    return [
        CheckResult("automorphisms.associative", assoc, f"{cases} random triples"),
        CheckResult("automorphisms.inverse_verified", inv_ok, f"{cases} random elements"),
        CheckResult("automorphisms.nielsen_generators", gens_ok, "3 generators"),
        CheckResult("automorphisms.permutations", perm_ok, f"{cases} random permutations"),
        CheckResult("automorphisms.block_swap_fixes_base", theta_ok, "m<3, j<4"),
    ]


def _suite_cosets(seed: int, max_points) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []

    cross = True
    for _ in range(25):
        m = rng.choice((1, 2))
        g = random_automorphism(0, m + 2, rng.randint(0, 8), rng.randrange(1 << 30))
        h = random_automorphism(0, m + 2, rng.randint(0, 8), rng.randrange(1 << 30))
        prod = coset_product(m, g, h)
        cross &= product_formula_direct(m, prod.block, g, h) == prod.rep
    out.append(CheckResult("cosets.direct_formula_agrees", cross, "25 random pairs"))

    wit = True
    for _ in range(15):
        m = rng.choice((1, 2))
        n = rng.randint(1, 3)
        g = random_automorphism(0, m + n, rng.randint(0, 6), rng.randrange(1 << 30))
        h = random_automorphism(0, m + n, rng.randint(0, 6), rng.randrange(1 << 30))
        r = random_automorphism(m, m + n, rng.randint(0, 6), rng.randrange(1 << 30))
        th = theta(m, n)
        r_box = witness_left(m, n, r, g, h)
        wit &= compose(g, compose(th, compose(r, h))) == compose(r_box, compose(g, compose(th, h)))
        q_tri = witness_right(m, n, r, g, h)
        wit &= compose(g, compose(r, compose(th, h))) == compose(
            compose(g, compose(th, h)), q_tri.inverse()
        )
    out.append(CheckResult("cosets.witnesses_absorb", wit, "15 random quadruples"))

    stab = True
    for _ in range(10):
        m = rng.choice((1, 2))
        g = random_automorphism(0, m + 2, rng.randint(0, 6), rng.randrange(1 << 30))
        h = random_automorphism(0, m + 2, rng.randint(0, 6), rng.randrange(1 << 30))
        n = block_size(m, g, h)
        p = rng.choice((1, 2))
        pi, s = stability_witness(m, n, p, g, h)
        padded = compose(g, compose(theta(m, n + p), h))
        stab &= compose(pi, compose(padded, compose(s, pi.inverse()))) == compose(
            g, compose(theta(m, n), h)
        )
    out.append(CheckResult("cosets.block_size_stable", stab, "10 random pairs"))

    star = True
    for _ in range(25):
        m = rng.choice((1, 2))
        g = random_automorphism(0, m + 2, rng.randint(0, 8), rng.randrange(1 << 30))
        h = random_automorphism(0, m + 2, rng.randint(0, 8), rng.randrange(1 << 30))
        star &= star_vs_pair_check(m, g, h)
    out.append(CheckResult("cosets.star_matches_pairs", star, "25 random pairs"))
    return out


def _suite_representation(seed: int, max_points) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []

    hom = True
    stoch = True
    for key, m, cases in (("c2", 1, 6), ("c3", 1, 4), ("s3", 1, 3)):
        K = builtin_group(key)
        for _ in range(cases):
            g = random_automorphism(0, m + 2, rng.randint(0, 6), rng.randrange(1 << 30))
            h = random_automorphism(0, m + 2, rng.randint(0, 6), rng.randrange(1 << 30))
            prod = coset_product(m, g, h)
            left = markov_matrix(K, prod.rep, m, max_points=max_points)
            right = markov_matrix(K, g, m, max_points=max_points) @ markov_matrix(
                K, h, m, max_points=max_points
            )
            hom &= left == right
            stoch &= left.is_doubly_stochastic()
    out.append(CheckResult("representation.product_to_matrix_product", hom, "13 pairs, 3 groups"))
    out.append(CheckResult("representation.doubly_stochastic", stoch, "13 matrices"))

    K = builtin_group("s3")
    comp = True
    whole = Subgroup.whole(K)
    for _ in range(3):
        g = random_automorphism(0, 3, rng.randint(0, 6), rng.randrange(1 << 30))
        h = random_automorphism(0, 3, rng.randint(0, 6), rng.randrange(1 << 30))
        prod = coset_product(1, g, h)
        left = compress_to_invariants(
            K, whole, 1, markov_matrix(K, prod.rep, 1, max_points=max_points)
        )
        right = compress_to_invariants(
            K, whole, 1, markov_matrix(K, g, 1, max_points=max_points)
        ) @ compress_to_invariants(K, whole, 1, markov_matrix(K, h, 1, max_points=max_points))
        comp &= left == right
    out.append(CheckResult("representation.compressed_product", comp, "3 pairs over s3"))

    K2 = builtin_group("c2")
    ident_ok = markov_matrix(K2, theta(1, 2), 1, max_points=max_points) == RationalMatrix.identity(2)
    out.append(CheckResult("representation.stabilizer_acts_trivially", ident_ok, "block swap over c2"))

    weak = (
        not weak_limit_check(K2, 1, 1, 0, max_points=max_points)
        and weak_limit_check(K2, 1, 1, 1, max_points=max_points)
        and weak_limit_check(K2, 1, 1, 2, max_points=max_points)
    )
    out.append(CheckResult("representation.weak_limit_threshold", weak, "c2, margin 1, j<3"))

    bij = True
    for _ in range(10):
        g = random_automorphism(0, 4, rng.randint(0, 8), rng.randrange(1 << 30))
        try:
            action_map(K2, g, 4, max_points=max_points)
        except ValueError:
            bij = False
    out.append(CheckResult("representation.point_maps_bijective", bij, "10 random maps on c2^4"))
    return out


_SUITE_FUNCS = {
    "words": _suite_words,
    "automorphisms": _suite_automorphisms,
    "cosets": _suite_cosets,
    "representation": _suite_representation,
}


def run_suites(name: str = "all", seed: int = 0, max_points=None) -> list[CheckResult]:
    """Run one named suite (or all of them) and return the check results."""
    if name == "all":
        names = SUITES
    elif name in _SUITE_FUNCS:
        names = (name,)
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    results: list[CheckResult] = []
    for suite in names:
        results.extend(_SUITE_FUNCS[suite](seed, max_points))
    return results
