"""Finitely supported endomorphisms and verified automorphisms of the free
group on generators x1, x2, x3, ...

An endomorphism stores images only for the generators it actually moves; all
other generators are fixed.  An automorphism is an endomorphism bundled with
a certified inverse — the pair is checked on construction, so invertibility
never has to be decided after the fact.

Composition follows the usual convention for maps: ``compose(a, b)`` sends
x_i to ``a(b(x_i))``, i.e. ``b`` acts first.
"""

from __future__ import annotations

import random
from typing import Iterable, Mapping

from .words import (
    Letter,
    Word,
    format_word,
    generator_word,
    max_generator,
    reduce,
    substitute,
)


class InverseVerificationError(ValueError):
    """A claimed (forward, inverse) endomorphism pair failed verification."""


class Endomorphism:
    """Generator-image map.  Generators absent from ``images`` are fixed."""

    __slots__ = ("_images",)

    def __init__(self, images: Mapping[int, Iterable[Letter]] | None = None):
        normalized: dict[int, Word] = {}
        if images:
            for key, img in images.items():
                key = int(key)
                if key < 1:
                    raise ValueError(f"generator index must be >= 1, got {key}")
                word = reduce(img)
                if word != ((key, 1),):
                    normalized[key] = word
        self._images = normalized

    @property
    def images(self) -> dict[int, Word]:
        """Copy of the moved-generator image map."""
        return dict(self._images)

    def image(self, index: int) -> Word:
        """Image word of x_index (x_index itself when fixed)."""
        if index < 1:
            raise ValueError(f"generator index must be >= 1, got {index}")
        return self._images.get(index, ((index, 1),))

    def apply(self, w: Word) -> Word:
        """Apply to a reduced word; returns a reduced word."""
        return substitute(self._images, w)

    def support_bound(self) -> int:
        """Smallest B such that every generator above B is fixed and no image
        mentions a generator above B."""
        bound = 0
        for key, word in self._images.items():
            if key > bound:
                bound = key
            top = max_generator(word)
            if top > bound:
                bound = top
        return bound

    def is_identity(self) -> bool:
        return not self._images

    def moved_generators(self) -> tuple[int, ...]:
        return tuple(sorted(self._images))

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self._images == other._images

    def __hash__(self):
        return hash(frozenset(self._images.items()))

    def __mul__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return compose_endomorphisms(self, other)

    def __repr__(self):
        if not self._images:
            return "Endomorphism(identity)"
        body = ", ".join(
            f"x{k} -> {format_word(w) or '1'}" for k, w in sorted(self._images.items())
        )
        return f"Endomorphism({body})"


def compose_endomorphisms(a: Endomorphism, b: Endomorphism) -> Endomorphism:
    """Endomorphism sending x_i to a(b(x_i))."""
    images: dict[int, Word] = {}
    for key, word in b._images.items():
        images[key] = substitute(a._images, word)
    for key, word in a._images.items():
        if key not in b._images:
            images[key] = word
    return Endomorphism(images)


def verify_inverse_pair(f: Endomorphism, g: Endomorphism) -> bool:
    """True iff f(g(x_i)) = x_i = g(f(x_i)) for every i up to the joint
    support bound (hence for every i)."""
    bound = max(f.support_bound(), g.support_bound())
    for i in range(1, bound + 1):
        xi = ((i, 1),)
        if f.apply(g.image(i)) != xi:
            return False
        if g.apply(f.image(i)) != xi:
            return False
    return True


class Automorphism:
    """Invertible finitely supported map, stored as a verified pair
    (forward, inverse) of endomorphisms."""

    __slots__ = ("fwd", "inv")

    def __init__(self, fwd, inv):
        fwd = fwd if isinstance(fwd, Endomorphism) else Endomorphism(fwd)
        inv = inv if isinstance(inv, Endomorphism) else Endomorphism(inv)
        if not verify_inverse_pair(fwd, inv):
            raise InverseVerificationError(
                "forward and inverse endomorphisms do not compose to the identity"
            )
        self.fwd = fwd
        self.inv = inv

    def image(self, index: int) -> Word:
        return self.fwd.image(index)

    def apply(self, w: Word) -> Word:
        return self.fwd.apply(w)

    def support_bound(self) -> int:
        return max(self.fwd.support_bound(), self.inv.support_bound())

    def inverse(self) -> "Automorphism":
        return Automorphism(self.inv, self.fwd)

    def is_identity(self) -> bool:
        return self.fwd.is_identity()

    def __invert__(self):
        return self.inverse()

    def __mul__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        # the inverse is determined by the forward map, but compare both to
        # catch construction bugs early
        return self.fwd == other.fwd and self.inv == other.inv

    def __hash__(self):
        return hash(self.fwd)

    def __repr__(self):
        return f"Automorphism({self.fwd!r}, {self.inv!r})"


def compose(a, b):
    """Composite sending x_i to a(b(x_i)) — ``b`` acts first.

    Accepts two Endomorphisms or two Automorphisms; the automorphism case
    carries the inverse pair along (inverse composes in reverse order).
    """
    if isinstance(a, Automorphism) and isinstance(b, Automorphism):
        return Automorphism(
            compose_endomorphisms(a.fwd, b.fwd),
            compose_endomorphisms(b.inv, a.inv),
        )
    if isinstance(a, Endomorphism) and isinstance(b, Endomorphism):
        return compose_endomorphisms(a, b)
    raise TypeError("compose expects two Endomorphisms or two Automorphisms")


def invert(a: Automorphism) -> Automorphism:
    """Inverse automorphism (just swaps the verified pair)."""
    if not isinstance(a, Automorphism):
        raise TypeError("invert expects an Automorphism")
    return a.inverse()


def identity_endomorphism() -> Endomorphism:
    return Endomorphism()


def identity_automorphism() -> Automorphism:
    return Automorphism(Endomorphism(), Endomorphism())


def _check_index(i: int) -> None:
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")


def nielsen_swap(i: int, j: int) -> Automorphism:
    """Transposition x_i <-> x_j (i != j)."""
    _check_index(i)
    _check_index(j)
    if i == j:
        raise ValueError("swap needs two distinct indices")
    return permutation_automorphism({i: j, j: i})


def nielsen_invert(i: int) -> Automorphism:
    """x_i -> x_i^-1, all other generators fixed.  Self-inverse."""
    _check_index(i)
    images = {i: ((i, -1),)}
    return Automorphism(images, images)


def nielsen_right_mult(i: int, j: int) -> Automorphism:
    """x_i -> x_i x_j with i != j, all other generators fixed."""
    _check_index(i)
    _check_index(j)
    if i == j:
        raise ValueError("right multiplication needs two distinct indices")
    return Automorphism({i: ((i, 1), (j, 1))}, {i: ((i, 1), (j, -1))})


def permutation_automorphism(mapping: Mapping[int, int]) -> Automorphism:
    """Automorphism permuting generators according to ``mapping``.

    The mapping may list fixed points; after dropping them it must be a
    bijection of its moved set.
    """
    moved: dict[int, int] = {}
    for key, val in mapping.items():
        key = int(key)
        val = int(val)
        _check_index(key)
        _check_index(val)
        if key != val:
            if key in moved:
                raise ValueError(f"duplicate image for generator {key}")
            moved[key] = val
    values = set(moved.values())
    if len(values) != len(moved) or values != set(moved):
        raise ValueError("mapping is not a permutation of its moved generators")
    fwd = {k: generator_word(v) for k, v in moved.items()}
    inv = {v: generator_word(k) for k, v in moved.items()}
    return Automorphism(fwd, inv)


def is_in_H(a: Automorphism, m: int) -> bool:
    """Whether ``a`` fixes each of x_1 .. x_m (membership in the pointwise
    stabilizer of the first m generators)."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    xfixed = a.fwd._images
    return all(i not in xfixed for i in range(1, m + 1))


def random_automorphism(m_fix: int, max_index: int, length: int, seed: int) -> Automorphism:
    """Composition of ``length`` random Nielsen moves touching only the
    generators m_fix+1 .. max_index.  Deterministic in ``seed``."""
    if m_fix < 0:
        raise ValueError(f"m_fix must be >= 0, got {m_fix}")
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    lo = m_fix + 1
    if max_index < lo:
        raise ValueError("max_index leaves no generators free to move")
    rng = random.Random(seed)
    indices = list(range(lo, max_index + 1))
    result = identity_automorphism()
    for _ in range(length):
        if len(indices) == 1:
            kind = "invert"
        else:
            kind = rng.choice(("swap", "invert", "right_mult"))
        if kind == "invert":
            move = nielsen_invert(rng.choice(indices))
        else:
            i, j = rng.sample(indices, 2)
            move = nielsen_swap(i, j) if kind == "swap" else nielsen_right_mult(i, j)
        result = compose(move, result)
    return result


def _endo_to_dict(e: Endomorphism) -> dict:
    return {str(k): [[g, s] for g, s in w] for k, w in sorted(e._images.items())}


def automorphism_to_dict(a: Automorphism) -> dict:
    """JSON-ready form: {"images": {...}, "inverse_images": {...}} with
    letter lists [index, sign] and string generator keys."""
    return {"images": _endo_to_dict(a.fwd), "inverse_images": _endo_to_dict(a.inv)}


def _endo_from_dict(data, field: str) -> Endomorphism:
    if not isinstance(data, dict):
        raise ValueError(f"{field} must be an object mapping indices to letter lists")
    images: dict[int, list[Letter]] = {}
    for key, letters in data.items():
        try:
            index = int(key)
        except (TypeError, ValueError):
            raise ValueError(f"bad generator key {key!r} in {field}") from None
        if not isinstance(letters, (list, tuple)):
            raise ValueError(f"image of x{index} in {field} must be a list of letters")
        word = []
        for item in letters:
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise ValueError(f"bad letter {item!r} in image of x{index}")
            word.append((int(item[0]), int(item[1])))
        images[index] = word
    return Endomorphism(images)


def automorphism_from_dict(data) -> Automorphism:
    """Inverse of automorphism_to_dict; verifies the pair on load."""
    if not isinstance(data, dict):
        raise ValueError("automorphism JSON must be an object")
    missing = {"images", "inverse_images"} - set(data)
    if missing:
        raise ValueError(f"automorphism JSON missing {sorted(missing)}")
    fwd = _endo_from_dict(data["images"], "images")
    inv = _endo_from_dict(data["inverse_images"], "inverse_images")
    return Automorphism(fwd, inv)
