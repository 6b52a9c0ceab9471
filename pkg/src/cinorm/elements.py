"""Canonical-form elements and exact arithmetic for all supported group families.

Every element is an immutable (descriptor, payload) pair.  Payloads are kept
canonical at all times -- words freely reduced, wreath supports sorted and
free of identity lamps, binary words without trailing zeros, matrices of
exact determinant one -- so structural equality and hashing decide group
equality, which is what makes set-based breadth-first searches exact.

Payload shapes:

* ``sn`` / ``an``   -- image tuple ``(g(0), ..., g(n-1))``; ``a*b`` acts as
  the function composition ``a after b``.
* ``free``          -- tuple of non-zero letters, letter ``+(i+1)`` is
  generator ``i`` and ``-(i+1)`` its inverse.
* ``aff-z``         -- pair ``(a, e)`` for the normal form ``z^a t^e``.
* ``z2inf``         -- 0/1 tuple with no trailing zeros.
* ``slz`` / ``slp`` -- tuple of row tuples (``slp`` entries reduced mod p).
* ``wreath-*``      -- ``(lamps, shift)`` with ``lamps`` a sorted tuple of
  ``(coordinate, base Element)`` pairs.
* ``bar``           -- ``(g1, g2, e)``, the normal form ``(g1, g2) t^e``.
* ``product``       -- tuple of component Elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable, Mapping

from .descriptors import (
    MATRIX_FAMILIES,
    PERMUTATION_FAMILIES,
    WREATH_FAMILIES,
    GroupDescriptor,
)
from .errors import DescriptorMismatchError


@dataclass(frozen=True)
class Element:
    descriptor: GroupDescriptor
    payload: Any

    def __mul__(self, other: "Element") -> "Element":
        return compose(self, other)

    def __pow__(self, k: int) -> "Element":
        return power(self, k)

    def inverse(self) -> "Element":
        return invert(self)

    def is_identity(self) -> bool:
        return self.payload == _identity_payload(self.descriptor)

    def conjugated_by(self, by: "Element") -> "Element":
        return conjugate_of(self, by)

    def __repr__(self) -> str:
        return f"Element({self.descriptor}, {self.payload!r})"


# ---------------------------------------------------------------------------
# core operations


def compose(a: Element, b: Element) -> Element:
    """Canonical product ``ab``."""
    if a.descriptor != b.descriptor:
        raise DescriptorMismatchError(
            f"cannot compose {a.descriptor} with {b.descriptor}")
    return Element(a.descriptor, _compose_payload(a.descriptor, a.payload, b.payload))


def invert(a: Element) -> Element:
    """Canonical inverse; ``compose(a, invert(a))`` is the identity."""
    return Element(a.descriptor, _invert_payload(a.descriptor, a.payload))


def conjugate_of(g: Element, by: Element) -> Element:
    """``by . g . by^-1`` in canonical form."""
    return compose(compose(by, g), invert(by))


def commutator_of(a: Element, b: Element) -> Element:
    """``a b a^-1 b^-1`` in canonical form."""
    return compose(compose(a, b), compose(invert(a), invert(b)))


def power(a: Element, k: int) -> Element:
    """``a^k`` by squaring; negative exponents invert first."""
    if k < 0:
        return power(invert(a), -k)
    result = identity(a.descriptor)
    base = a
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def identity(d: GroupDescriptor) -> Element:
    return Element(d, _identity_payload(d))


def element_order(a: Element, cap: int = 1_000_000) -> int | None:
    """Multiplicative order of ``a``; ``None`` when not found within ``cap``."""
    cur = a
    for n in range(1, cap + 1):
        if cur.is_identity():
            return n
        cur = compose(cur, a)
    return None


def sort_key(e: Element):
    """Total order on canonical payloads within one family; used for all
    deterministic tie-breaking (enumeration order, coset representatives,
    reported witnesses)."""
    return _key(e.payload)


def _key(p):
    if isinstance(p, Element):
        return _key(p.payload)
    if isinstance(p, tuple):
        return tuple(_key(x) for x in p)
    return p


# ---------------------------------------------------------------------------
# payload arithmetic


@lru_cache(maxsize=None)
def _identity_payload(d: GroupDescriptor):
    f = d.family
    if f in PERMUTATION_FAMILIES:
        return tuple(range(d.n))
    if f == "free" or f == "z2inf":
        return ()
    if f == "aff-z":
        return (0, 0)
    if f in MATRIX_FAMILIES:
        return tuple(tuple(1 if i == j else 0 for j in range(d.n)) for i in range(d.n))
    if f in WREATH_FAMILIES:
        return ((), 0)
    if f == "bar":
        return (identity(d.base), identity(d.base), 0)
    return tuple(identity(p) for p in d.parts)


def _compose_payload(d: GroupDescriptor, a, b):
    f = d.family
    if f in PERMUTATION_FAMILIES:
        return tuple(map(a.__getitem__, b))
    if f == "free":
        out = list(a)
        for x in b:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return tuple(out)
    if f == "aff-z":
        aa, ae = a
        ba, be = b
        return (aa + ba if ae == 0 else aa - ba, (ae + be) & 1)
    if f == "z2inf":
        la, lb = len(a), len(b)
        bits = [(a[i] if i < la else 0) ^ (b[i] if i < lb else 0)
                for i in range(max(la, lb))]
        while bits and bits[-1] == 0:
            bits.pop()
        return tuple(bits)
    if f == "slz":
        return _mat_mul(a, b, 0)
    if f == "slp":
        return _mat_mul(a, b, d.p)
    if f in WREATH_FAMILIES:
        ring = d.n if f == "wreath-zn" else 0
        lamps_a, s = a
        lamps_b, u = b
        lamps = dict(lamps_a)
        for j, g in lamps_b:
            i = j + s if ring == 0 else (j + s) % ring
            cur = lamps.get(i)
            if cur is None:
                lamps[i] = g
            else:
                v = compose(cur, g)
                if v.is_identity():
                    del lamps[i]
                else:
                    lamps[i] = v
        shift = s + u if ring == 0 else (s + u) % ring
        return (tuple(sorted(lamps.items())), shift)
    if f == "bar":
        g1, g2, e = a
        f1, f2, fe = b
        if e:
            f1, f2 = f2, f1
        return (compose(g1, f1), compose(g2, f2), (e + fe) & 1)
    return tuple(compose(x, y) for x, y in zip(a, b))


def _invert_payload(d: GroupDescriptor, a):
    f = d.family
    if f in PERMUTATION_FAMILIES:
        out = [0] * len(a)
        for i, j in enumerate(a):
            out[j] = i
        return tuple(out)
    if f == "free":
        return tuple(-x for x in reversed(a))
    if f == "aff-z":
        aa, e = a
        return (-aa, 0) if e == 0 else (aa, 1)
    if f == "z2inf":
        return a
    if f == "slz":
        return _mat_adjugate(a, 0)
    if f == "slp":
        return _mat_adjugate(a, d.p)
    if f in WREATH_FAMILIES:
        ring = d.n if f == "wreath-zn" else 0
        lamps, s = a
        out = {}
        for i, g in lamps:
            j = i - s if ring == 0 else (i - s) % ring
            out[j] = invert(g)
        return (tuple(sorted(out.items())), -s if ring == 0 else (-s) % ring)
    if f == "bar":
        g1, g2, e = a
        if e == 0:
            return (invert(g1), invert(g2), 0)
        return (invert(g2), invert(g1), 1)
    return tuple(invert(x) for x in a)


def _mat_mul(a, b, mod: int):
    n = len(a)
    rng = range(n)
    rows = []
    for i in rng:
        ai = a[i]
        if mod:
            rows.append(tuple(sum(ai[k] * b[k][j] for k in rng) % mod for j in rng))
        else:
            rows.append(tuple(sum(ai[k] * b[k][j] for k in rng) for j in rng))
    return tuple(rows)


def _mat_det(rows) -> int:
    # Bareiss fraction-free elimination: exact over the integers.
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _mat_adjugate(a, mod: int):
    # with determinant one the adjugate is the exact inverse
    n = len(a)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [[a[r][c] for c in range(n) if c != i]
                     for r in range(n) if r != j]
            v = _mat_det(minor) if n > 1 else 1
            if (i + j) & 1:
                v = -v
            row.append(v % mod if mod else v)
        rows.append(tuple(row))
    return tuple(rows)


# ---------------------------------------------------------------------------
# validated constructors


def normalized(d: GroupDescriptor, payload):
    """Bring a raw payload into canonical form (idempotent by construction)."""
    f = d.family
    if f in PERMUTATION_FAMILIES:
        return tuple(int(x) for x in payload)
    if f == "slp":
        return tuple(tuple(int(x) % d.p for x in row) for row in payload)
    if f == "slz":
        return tuple(tuple(int(x) for x in row) for row in payload)
    if f == "free":
        out: list[int] = []
        for x in payload:
            x = int(x)
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return tuple(out)
    if f == "aff-z":
        a, e = payload
        return (int(a), int(e) & 1)
    if f == "z2inf":
        bits = [int(b) & 1 for b in payload]
        while bits and bits[-1] == 0:
            bits.pop()
        return tuple(bits)
    if f in WREATH_FAMILIES:
        lamps, shift = payload
        ring = d.n if f == "wreath-zn" else 0
        out_l: dict[int, Element] = {}
        for i, g in (lamps.items() if isinstance(lamps, Mapping) else lamps):
            i = int(i) if ring == 0 else int(i) % ring
            cur = out_l.get(i)
            g2 = g if cur is None else compose(cur, g)
            if g2.is_identity():
                out_l.pop(i, None)
            else:
                out_l[i] = g2
        shift = int(shift) if ring == 0 else int(shift) % ring
        return (tuple(sorted(out_l.items())), shift)
    if f == "bar":
        g1, g2, e = payload
        return (g1, g2, int(e) & 1)
    return tuple(payload)


def permutation(d: GroupDescriptor, images: Iterable[int]) -> Element:
    """Permutation from its image tuple (0-based)."""
    if d.family not in PERMUTATION_FAMILIES:
        raise ValueError(f"{d} is not a permutation family")
    imgs = tuple(int(x) for x in images)
    if sorted(imgs) != list(range(d.n)):
        raise ValueError(f"not a permutation of 0..{d.n - 1}: {imgs}")
    if d.family == "an" and _perm_parity(imgs):
        raise ValueError("odd permutation is not in the alternating group")
    return Element(d, imgs)


def _perm_parity(images: tuple[int, ...]) -> int:
    seen = [False] * len(images)
    parity = 0
    for i in range(len(images)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def perm_from_cycles(d: GroupDescriptor, *cycles: Iterable[int],
                     one_based: bool = True) -> Element:
    """Permutation from disjoint cycles, 1-based points by default."""
    images = list(range(d.n))
    off = 1 if one_based else 0
    for cycle in cycles:
        pts = [int(x) - off for x in cycle]
        for k, pt in enumerate(pts):
            if not 0 <= pt < d.n or images[pt] != pt:
                raise ValueError(f"bad or overlapping cycle point {pt + off}")
            images[pt] = pts[(k + 1) % len(pts)]
    return permutation(d, images)


def free_word(d: GroupDescriptor, letters: Iterable[int]) -> Element:
    """Reduced word from signed letters: ``+(i+1)`` generator i, negative inverse."""
    if d.family != "free":
        raise ValueError(f"{d} is not a free group")
    letters = tuple(int(x) for x in letters)
    for x in letters:
        if x == 0 or abs(x) > d.n:
            raise ValueError(f"letter {x} outside rank-{d.n} alphabet")
    return Element(d, normalized(d, letters))


def affz_element(a: int, e: int = 0) -> Element:
    from .descriptors import aff_z
    return Element(aff_z(), (int(a), int(e) & 1))


def binary_word(bits: Iterable[int]) -> Element:
    from .descriptors import z2_infinity
    d = z2_infinity()
    return Element(d, normalized(d, tuple(bits)))


def int_matrix(d: GroupDescriptor, rows) -> Element:
    if d.family != "slz":
        raise ValueError(f"{d} is not an integer SL family")
    payload = normalized(d, rows)
    if len(payload) != d.n or any(len(r) != d.n for r in payload):
        raise ValueError(f"matrix is not {d.n}x{d.n}")
    if _mat_det(payload) != 1:
        raise ValueError("matrix determinant is not 1")
    return Element(d, payload)


def mod_matrix(d: GroupDescriptor, rows) -> Element:
    if d.family != "slp":
        raise ValueError(f"{d} is not a modular SL family")
    payload = normalized(d, rows)
    if len(payload) != d.n or any(len(r) != d.n for r in payload):
        raise ValueError(f"matrix is not {d.n}x{d.n}")
    if _mat_det(payload) % d.p != 1:
        raise ValueError("matrix determinant is not 1 mod p")
    return Element(d, payload)


def elementary(d: GroupDescriptor, i: int, j: int, p: int = 1) -> Element:
    """Elementary matrix with entry ``p`` at 1-based position (i, j)."""
    if d.family not in MATRIX_FAMILIES:
        raise ValueError(f"{d} is not a matrix family")
    if i == j or not (1 <= i <= d.n and 1 <= j <= d.n):
        raise ValueError("elementary position must be off-diagonal and in range")
    rows = [[1 if r == c else 0 for c in range(d.n)] for r in range(d.n)]
    rows[i - 1][j - 1] = p
    return int_matrix(d, rows) if d.family == "slz" else mod_matrix(d, rows)


def wreath_element(d: GroupDescriptor, lamps: Mapping[int, Element] | Iterable,
                   shift: int = 0) -> Element:
    if d.family not in WREATH_FAMILIES:
        raise ValueError(f"{d} is not a wreath family")
    items = tuple(lamps.items() if isinstance(lamps, Mapping) else lamps)
    for _, g in items:
        if g.descriptor != d.base:
            raise DescriptorMismatchError("lamp element is not in the base group")
    return Element(d, normalized(d, (items, shift)))


def bar_element(d: GroupDescriptor, g1: Element, g2: Element, e: int = 0) -> Element:
    if d.family != "bar":
        raise ValueError(f"{d} is not a bar family")
    if g1.descriptor != d.base or g2.descriptor != d.base:
        raise DescriptorMismatchError("bar coordinates must lie in the base group")
    return Element(d, (g1, g2, int(e) & 1))


def product_element(d: GroupDescriptor, components: Iterable[Element]) -> Element:
    if d.family != "product":
        raise ValueError(f"{d} is not a product family")
    comps = tuple(components)
    if len(comps) != len(d.parts) or any(
            c.descriptor != p for c, p in zip(comps, d.parts)):
        raise DescriptorMismatchError("component descriptors do not match the product")
    return Element(d, comps)


def moved_points(e: Element) -> int:
    """Number of non-fixed points of a permutation."""
    if e.descriptor.family not in PERMUTATION_FAMILIES:
        raise ValueError("moved_points needs a permutation payload")
    return sum(1 for i, x in enumerate(e.payload) if i != x)
