"""Seeded random element generation for suites and sampled estimates.

Everything here is a pure function of the supplied ``random.Random`` state,
so any report that records its seed is reproducible.
"""

from __future__ import annotations

from random import Random

from .descriptors import (
    MATRIX_FAMILIES,
    PERMUTATION_FAMILIES,
    WREATH_FAMILIES,
    GroupDescriptor,
)
from .elements import (
    Element,
    _perm_parity,
    affz_element,
    binary_word,
    compose,
    elementary,
    free_word,
    identity,
)


def random_permutation(d: GroupDescriptor, rng: Random) -> Element:
    images = list(range(d.n))
    rng.shuffle(images)
    if d.family == "an" and _perm_parity(tuple(images)) and d.n >= 2:
        images[0], images[1] = images[1], images[0]
    return Element(d, tuple(images))


def random_word(d: GroupDescriptor, rng: Random, length: int) -> Element:
    """Uniform-ish reduced word of exactly the requested length."""
    letters: list[int] = []
    for _ in range(length):
        while True:
            x = rng.randint(1, d.n) * rng.choice((1, -1))
            if not letters or letters[-1] != -x:
                break
        letters.append(x)
    return free_word(d, letters)


def random_element(d: GroupDescriptor, rng: Random, size: int = 8) -> Element:
    """One seeded element; ``size`` caps word lengths and similar knobs."""
    f = d.family
    if f in PERMUTATION_FAMILIES:
        return random_permutation(d, rng)
    if f == "free":
        return random_word(d, rng, rng.randint(0, size))
    if f == "z2inf":
        return binary_word(rng.randint(0, 1) for _ in range(rng.randint(0, size)))
    if f == "aff-z":
        return affz_element(rng.randint(-size, size), rng.randint(0, 1))
    if f in MATRIX_FAMILIES:
        out = identity(d)
        for _ in range(rng.randint(1, max(1, size // 2))):
            i = rng.randint(1, d.n)
            j = rng.randint(1, d.n - 1)
            j = j if j < i else j + 1
            out = compose(out, elementary(d, i, j, rng.choice((-2, -1, 1, 2))))
        return out
    if f in WREATH_FAMILIES:
        ring = d.n if f == "wreath-zn" else size
        coords = range(ring)
        lamps = {}
        for i in coords:
            if rng.random() < 0.5:
                g = random_element(d.base, rng, size)
                if not g.is_identity():
                    lamps[i] = g
        shift = rng.randrange(ring) if f == "wreath-zn" else rng.randint(-size, size)
        return Element(d, (tuple(sorted(lamps.items())), shift))
    if f == "bar":
        return Element(d, (random_element(d.base, rng, size),
                           random_element(d.base, rng, size),
                           rng.randint(0, 1)))
    return Element(d, tuple(random_element(p, rng, size) for p in d.parts))
