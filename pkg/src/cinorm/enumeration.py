"""Exhaustive enumeration, closures and derived data for finite families.

Enumeration order is lexicographic on canonical payloads, so every listing,
witness and coset representative in the library is reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product as iter_product
from typing import Iterable

from . import descriptors as gd
from .descriptors import GroupDescriptor
from .elements import (
    Element,
    _perm_parity,
    compose,
    elementary,
    identity,
    invert,
    sort_key,
)
from .errors import GuardExceededError, InfiniteGroupError

#: Default ceiling on exhaustive element counts.
ENUMERATION_GUARD = 10_000_000


@dataclass(frozen=True)
class SubgroupSpec:
    """A subgroup given by generators inside one ambient group."""

    generators: tuple[Element, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValueError("subgroup needs at least one generator")
        d = self.generators[0].descriptor
        if any(g.descriptor != d for g in self.generators):
            raise ValueError("subgroup generators must share one descriptor")

    @property
    def descriptor(self) -> GroupDescriptor:
        return self.generators[0].descriptor


def _checked_order(d: GroupDescriptor, limit: int | None) -> int:
    size = gd.order(d)
    if size is None:
        raise InfiniteGroupError(f"{d} is infinite")
    guard = ENUMERATION_GUARD if limit is None else limit
    if size > guard:
        raise GuardExceededError(f"|{d}| = {size} exceeds the guard {guard}")
    return size


def enumerate_elements(d: GroupDescriptor, limit: int | None = None) -> list[Element]:
    """All elements of a finite group, each exactly once, in payload order."""
    size = _checked_order(d, limit)
    f = d.family
    if f == "sn":
        elems = [Element(d, p) for p in permutations(range(d.n))]
    elif f == "an":
        elems = [Element(d, p) for p in permutations(range(d.n))
                 if not _perm_parity(p)]
    elif f == "slp":
        gens = [elementary(d, i, j, s)
                for i in range(1, d.n + 1) for j in range(1, d.n + 1)
                if i != j for s in (1, d.p - 1)]
        elems = sorted(subgroup_closure(gens, limit=size), key=sort_key)
    elif f == "wreath-zn":
        base_elems = enumerate_elements(d.base, limit)
        elems = []
        for shift in range(d.n):
            for combo in iter_product(base_elems, repeat=d.n):
                lamps = tuple((i, g) for i, g in enumerate(combo)
                              if not g.is_identity())
                elems.append(Element(d, (lamps, shift)))
        elems.sort(key=sort_key)
    elif f == "bar":
        base_elems = enumerate_elements(d.base, limit)
        elems = [Element(d, (g1, g2, e))
                 for e in (0, 1) for g1 in base_elems for g2 in base_elems]
        elems.sort(key=sort_key)
    elif f == "product":
        part_lists = [enumerate_elements(p, limit) for p in d.parts]
        elems = [Element(d, combo) for combo in iter_product(*part_lists)]
        elems.sort(key=sort_key)
    else:
        raise InfiniteGroupError(f"{d} cannot be enumerated")
    assert len(elems) == size
    return elems


def subgroup_closure(generators: Iterable[Element],
                     limit: int = ENUMERATION_GUARD) -> set[Element]:
    """Subgroup generated by the elements; raises once ``limit`` is passed."""
    gens = list(generators)
    if not gens:
        raise ValueError("closure needs at least one generator")
    d = gens[0].descriptor
    step = {g for g in gens} | {invert(g) for g in gens}
    seen = {identity(d)}
    frontier = [identity(d)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in step:
                h = compose(g, s)
                if h not in seen:
                    if len(seen) >= limit:
                        raise GuardExceededError(
                            f"subgroup closure exceeded {limit} elements")
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def closure_of(spec: SubgroupSpec, limit: int = ENUMERATION_GUARD) -> set[Element]:
    return subgroup_closure(spec.generators, limit)


def conjugacy_closure(base: Iterable[Element], d: GroupDescriptor,
                      limit: int | None = None) -> set[Element]:
    """All conjugates of ``base`` and its inverses; closed under conjugation."""
    seeds = set(base)
    seeds |= {invert(b) for b in seeds}
    out: set[Element] = set()
    for phi in enumerate_elements(d, limit):
        phi_inv = invert(phi)
        for b in seeds:
            out.add(compose(compose(phi, b), phi_inv))
    return out


def commutator_pool(elements: Iterable[Element]) -> set[Element]:
    """The set of simple commutators ``[a, b]`` over all pairs."""
    elems = list(elements)
    inverses = {g: invert(g) for g in elems}
    out = set()
    for a in elems:
        a_inv = inverses[a]
        for b in elems:
            out.add(compose(compose(a, b), compose(a_inv, inverses[b])))
    return out


def derived_subgroup(d: GroupDescriptor, limit: int | None = None) -> set[Element]:
    """Subgroup generated by all simple commutators, by brute force."""
    elems = enumerate_elements(d, limit)
    pool = commutator_pool(elems)
    return subgroup_closure(pool, limit=len(elems))


def abelianization_order(d: GroupDescriptor, limit: int | None = None) -> int | None:
    """Order of the abelian quotient; ``None`` means infinite.

    Finite families are handled by enumeration; infinite families carry the
    analytic answer of their presentation.
    """
    f = d.family
    if f in ("free", "z2inf", "wreath-z"):
        return None
    if f == "aff-z":
        return 4
    if f == "slz":
        return 12 if d.n == 2 else 1
    if f == "product":
        total = 1
        for part in d.parts:
            o = abelianization_order(part, limit)
            if o is None:
                return None
            total *= o
        return total
    size = gd.order(d)
    if size is None:
        raise InfiniteGroupError(f"no analytic abelianization for {d}")
    return size // len(derived_subgroup(d, limit))


def in_class_g(d: GroupDescriptor) -> bool:
    """Whether the abelian quotient of the group is finite."""
    return abelianization_order(d) is not None
