"""Block-stabilized products of free-group automorphisms.

Fix m >= 0 and let H be the pointwise stabilizer of x_1..x_m.  Two
automorphisms g, h are multiplied by first pushing their supports apart with
the block swap ``theta(m, N)`` (N large enough to cover both supports) and
then composing:

    product representative = g . theta(m, N) . h        (h acts first)

The resulting double coset H*rep*H does not depend on the choice of N, which
is what makes this an associative product on cosets; ``stability_witness``
returns the pair of permutations realizing that independence, and
``witness_left`` / ``witness_right`` produce the stabilizer elements that
absorb H-factors sitting between g and h.  ``star_product`` is the variant
with a trailing block swap, invariant on conjugacy classes, and
``tuple_product`` runs k coordinates through one shared block swap.

Block layout used throughout, for given m and N:

    x block: 1..m          (never moved by theta)
    y block: m+1..m+N
    z block: m+N+1..m+2N
    u block: m+2N+1..m+3N  (triple products only)
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .automorphisms import (
    Automorphism,
    Endomorphism,
    compose,
    identity_automorphism,
    is_in_H,
    permutation_automorphism,
)
from .errors import SupportViolation
from .words import Word, generator_word, substitute


def theta(m: int, j: int) -> Automorphism:
    """Involution fixing x_1..x_m and swapping x_{m+k} <-> x_{m+j+k} for
    k = 1..j.  theta(m, 0) is the identity."""
    if m < 0 or j < 0:
        raise ValueError("block parameters must be non-negative")
    mapping: dict[int, int] = {}
    for k in range(1, j + 1):
        mapping[m + k] = m + j + k
        mapping[m + j + k] = m + k
    return permutation_automorphism(mapping)


def block_size(m: int, *autos: Automorphism) -> int:
    """Smallest N >= 0 such that every argument is supported on 1..m+N."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    top = m
    for a in autos:
        bound = a.support_bound()
        if bound > top:
            top = bound
    return top - m


def _require_support(m: int, n: int, *autos: Automorphism) -> None:
    for a in autos:
        if a.support_bound() > m + n:
            raise SupportViolation(
                f"automorphism moves generators above {m + n} "
                f"(support bound {a.support_bound()})"
            )


@dataclass(frozen=True)
class DoubleCosetRep:
    """A two-sided H-coset, carried by a concrete representative.

    ``block`` records the stabilized block size N the representative was
    built with; it is bookkeeping, not part of the value, so it is excluded
    from equality.
    """

    m: int
    rep: Automorphism
    block: int = field(compare=False)


@dataclass(frozen=True)
class ConjClassRep:
    """An H-conjugation orbit of cosets, carried by a representative."""

    m: int
    rep: Automorphism
    block: int = field(compare=False)


@dataclass(frozen=True)
class TupleRep:
    """A k-tuple of coset representatives sharing one block size."""

    m: int
    reps: tuple[Automorphism, ...]
    block: int = field(compare=False)


def coset_product(m: int, g: Automorphism, h: Automorphism) -> DoubleCosetRep:
    """Product of the cosets HgH and HhH, as a representative.

    Uses the canonical block size N = block_size(m, g, h)."""
    n = block_size(m, g, h)
    rep = compose(g, compose(theta(m, n), h))
    return DoubleCosetRep(m, rep, n)


def _pattern_images(m: int, n: int, outer: Endomorphism, inner: Endomorphism) -> dict[int, Word]:
    """Generator images of the two-factor disjoint-block pattern.

    The inner factor's images on the x and y blocks are rewritten by the
    substitution sending x_j to the outer factor's x_j-image and renaming
    the y block to the z block; the z block then receives the outer
    factor's y-images verbatim.
    """
    mapping: dict[int, Word] = {i: outer.image(i) for i in range(1, m + 1)}
    for t in range(1, n + 1):
        mapping[m + t] = generator_word(m + n + t)
    images: dict[int, Word] = {}
    for i in range(1, m + 1):
        images[i] = substitute(mapping, inner.image(i))
    for k in range(1, n + 1):
        images[m + k] = substitute(mapping, inner.image(m + k))
        images[m + n + k] = outer.image(m + k)
    return images


def product_formula_direct(m: int, n: int, g: Automorphism, h: Automorphism) -> Automorphism:
    """The coset-product representative computed by direct substitution over
    the block layout, never calling the composition engine.

    Cross-checks coset_product: for n = block_size(m, g, h) the two agree
    exactly.  The inverse is built from the same pattern with the factors
    inverted and swapped.
    """
    if m < 0 or n < 0:
        raise ValueError("block parameters must be non-negative")
    _require_support(m, n, g, h)
    fwd = _pattern_images(m, n, g.fwd, h.fwd)
    inv = _pattern_images(m, n, h.inv, g.inv)
    return Automorphism(fwd, inv)


def witness_left(m: int, n: int, r: Automorphism, g: Automorphism, h: Automorphism) -> Automorphism:
    """Stabilizer element r_box absorbing an H-factor r inserted between the
    block swap and h:

        g . theta(m,n) . r . h  =  r_box . (g . theta(m,n) . h)

    (composition right-to-left: h acts first).  Requires r in H, and r, g, h
    supported on 1..m+n.  r_box moves only the z block: its image of
    x_{m+n+k} is r's image of x_{m+k} rewritten by x_j -> g(x_j),
    x_{m+t} -> x_{m+n+t}; it depends only on r and g, with h entering the
    identity but not the construction."""
    if not is_in_H(r, m):
        raise SupportViolation("witness factor must fix x_1..x_m")
    _require_support(m, n, r, g, h)
    mapping: dict[int, Word] = {i: g.image(i) for i in range(1, m + 1)}
    for t in range(1, n + 1):
        mapping[m + t] = generator_word(m + n + t)
    fwd = {m + n + k: substitute(mapping, r.fwd.image(m + k)) for k in range(1, n + 1)}
    inv = {m + n + k: substitute(mapping, r.inv.image(m + k)) for k in range(1, n + 1)}
    return Automorphism(fwd, inv)


def witness_right(m: int, n: int, q: Automorphism, g: Automorphism, h: Automorphism) -> Automorphism:
    """Stabilizer element q_tri absorbing an H-factor q inserted between g
    and the block swap:

        g . q . theta(m,n) . h  =  (g . theta(m,n) . h) . q_tri^-1

    Obtained from witness_left by passing to inverses: q_tri is the left
    witness of q^-1 against the pair (h^-1, g^-1), so it depends only on q
    and h."""
    if not is_in_H(q, m):
        raise SupportViolation("witness factor must fix x_1..x_m")
    _require_support(m, n, q, g, h)
    return witness_left(m, n, q.inverse(), h.inverse(), g.inverse())


def stability_witness(
    m: int, n: int, p: int, g: Automorphism, h: Automorphism
) -> tuple[Automorphism, Automorphism]:
    """Permutations (pi, s), both in H, realizing block-size stability:

        pi . (g.theta(m, n+p).h) . s . pi^-1  =  g.theta(m, n).h

    s swaps x_{m+n+t} <-> x_{m+2n+p+t} for t = 1..p; pi renames
    x_{m+n+t} -> x_{m+2n+t} (t <= p) and x_{m+n+p+k} -> x_{m+n+k} (k <= n).
    For p = 0 both are the identity."""
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    _require_support(m, n, g, h)
    swap: dict[int, int] = {}
    for t in range(1, p + 1):
        swap[m + n + t] = m + 2 * n + p + t
        swap[m + 2 * n + p + t] = m + n + t
    s = permutation_automorphism(swap)
    rename: dict[int, int] = {}
    for t in range(1, p + 1):
        rename[m + n + t] = m + 2 * n + t
    for k in range(1, n + 1):
        rename[m + n + p + k] = m + n + k
    pi = permutation_automorphism(rename)
    return pi, s


def star_product(m: int, g: Automorphism, h: Automorphism) -> ConjClassRep:
    """Product on H-conjugation classes of cosets: representative
    g . theta . h . theta with the canonical block size."""
    n = block_size(m, g, h)
    th = theta(m, n)
    rep = compose(g, compose(th, compose(h, th)))
    return ConjClassRep(m, rep, n)


def tuple_product(m: int, gs, hs) -> TupleRep:
    """Coordinatewise product of two k-tuples through one shared block swap.

    The shared block size covers every component of both tuples, so each
    coordinate is the coset product of its factors computed at a common N."""
    gs = tuple(gs)
    hs = tuple(hs)
    if len(gs) != len(hs):
        raise ValueError("tuple factors must have the same length")
    if not gs:
        raise ValueError("tuples must have at least one component")
    n = block_size(m, *gs, *hs)
    th = theta(m, n)
    reps = tuple(compose(g, compose(th, h)) for g, h in zip(gs, hs))
    return TupleRep(m, reps, n)


def star_vs_pair_check(m: int, g: Automorphism, h: Automorphism) -> bool:
    """Consistency of the class product with the pair embedding.

    Runs (g, id) x (h, id) through tuple_product, getting (A, B); B must lie
    in H, and A.B^-1 must equal the star_product representative exactly."""
    e = identity_automorphism()
    pair = tuple_product(m, (g, e), (h, e))
    a, b = pair.reps
    if not is_in_H(b, m):
        raise SupportViolation("second pair component escaped the stabilizer")
    return compose(a, b.inverse()) == star_product(m, g, h).rep


def _shift_upper_block(a: Automorphism, m: int, n: int, offset: int) -> Automorphism:
    """Rename generators m+1..m+n to m+offset+1..m+offset+n inside ``a``
    (keys and image letters alike).  This is conjugation by the renaming
    permutation, so the result is again a verified automorphism."""
    _require_support(m, n, a)

    def relabel(i: int) -> int:
        return i + offset if i > m else i

    def relabel_endo(e: Endomorphism) -> dict[int, Word]:
        return {
            relabel(k): tuple((relabel(g), s) for g, s in w)
            for k, w in e.images.items()
        }

    return Automorphism(relabel_endo(a.fwd), relabel_endo(a.inv))


def triple_product_disjoint(
    m: int, g: Automorphism, h: Automorphism, f: Automorphism
) -> Automorphism:
    """Three-factor product with pairwise disjoint upper blocks.

    g's upper block is renamed to the u block and h's to the z block; f
    keeps the y block.  The composite (g', h' and f acting in that order,
    f first) represents (HgH . HhH) . HfH = HgH . (HhH . HfH) at block
    size n = block_size(m, g, h, f)."""
    n = block_size(m, g, h, f)
    g_sep = _shift_upper_block(g, m, n, 2 * n)
    h_sep = _shift_upper_block(h, m, n, n)
    return compose(g_sep, compose(h_sep, f))
