"""Element arithmetic against independent oracles.

The wreath and bar multiplication laws are checked exhaustively against
faithful permutation actions built from generator images only; the affine
family is checked against its action on the integers.  None of the oracles
uses the library's own multiplication on the family under test.
"""

import random
from itertools import product as iproduct

import pytest
from hypothesis import given, settings, strategies as st

from cinorm import (
    DescriptorMismatchError,
    Element,
    affz_element,
    alternating,
    aff_z,
    bar,
    bar_element,
    binary_word,
    commutator_of,
    compose,
    conjugate_of,
    element_order,
    elementary,
    enumerate_elements,
    free_group,
    free_word,
    identity,
    int_matrix,
    invert,
    perm_from_cycles,
    permutation,
    power,
    product,
    product_element,
    sl_mod,
    sl_z,
    symmetric,
    wreath_zn,
    z2_infinity,
)
from cinorm.elements import normalized
from cinorm.sampling import random_element

S3 = symmetric(3)
AFFZ = aff_z()

FAMILIES = [
    symmetric(4),
    alternating(4),
    free_group(2),
    aff_z(),
    z2_infinity(),
    sl_z(3),
    sl_mod(2, 5),
    wreath_zn(S3, 3),
    bar(S3),
    product(S3, free_group(1)),
]


def seeded(d, seed, size=6):
    return random_element(d, random.Random(seed), size=size)


# ---------------------------------------------------------------------------
# spec'd examples


def test_transposition_squares_to_identity():
    a = perm_from_cycles(S3, (1, 2))
    assert compose(a, a).is_identity()


def test_affz_zt_squared_is_identity():
    zt = affz_element(1, 1)
    assert compose(zt, zt).is_identity()


def test_bar_mixed_product_normal_form():
    d = bar(S3)
    h1, h2 = perm_from_cycles(S3, (1, 2)), perm_from_cycles(S3, (1, 3))
    f1, f2 = perm_from_cycles(S3, (1, 2, 3)), perm_from_cycles(S3, (2, 3))
    h = bar_element(d, h1, h2, 1)
    f = bar_element(d, f1, f2, 0)
    assert compose(h, f) == bar_element(d, compose(h1, f2), compose(h2, f1), 1)


def test_inverses():
    assert invert(identity(S3)).is_identity()
    f2 = free_group(2)
    w = free_word(f2, (1, 2, -1))
    assert invert(w) == free_word(f2, (1, -2, -1))
    e12 = elementary(sl_z(2), 1, 2)
    assert invert(e12).payload == ((1, -1), (0, 1))


def test_conjugation_examples():
    g = perm_from_cycles(S3, (1, 2))
    assert conjugate_of(g, identity(S3)) == g
    assert conjugate_of(g, perm_from_cycles(S3, (1, 3))) == perm_from_cycles(S3, (2, 3))
    t = affz_element(0, 1)
    for n in range(1, 30):
        # conjugating by z^-n appends z^{2n}
        assert conjugate_of(t, affz_element(-n, 0)) == \
            compose(t, affz_element(2 * n, 0))


def test_commutator_examples():
    a = seeded(S3, 1)
    assert commutator_of(a, a).is_identity()
    d3 = sl_z(3)
    for p in (-7, -1, 2, 13):
        assert commutator_of(elementary(d3, 1, 2),
                             power(elementary(d3, 2, 3), p)) == \
            power(elementary(d3, 1, 3), p)
    t, z = affz_element(0, 1), affz_element(1, 0)
    assert commutator_of(t, z) == affz_element(-2, 0)


def test_descriptor_mismatch_raises():
    with pytest.raises(DescriptorMismatchError):
        compose(identity(S3), identity(symmetric(4)))


# ---------------------------------------------------------------------------
# AffZ against its affine action on the integers


def affz_action(payload, x):
    a, e = payload
    return a + (x if e == 0 else -x)


def test_affz_law_matches_affine_action():
    window = [(a, e) for a in range(-3, 4) for e in (0, 1)]
    points = range(-4, 5)
    for pa in window:
        for pb in window:
            prod = compose(Element(AFFZ, pa), Element(AFFZ, pb)).payload
            for x in points:
                assert affz_action(prod, x) == affz_action(pa, affz_action(pb, x))


def test_affz_presentation_relations():
    t, z = affz_element(0, 1), affz_element(1, 0)
    assert compose(t, t).is_identity()
    assert compose(t, z) == compose(invert(z), t)
    for n in range(-20, 21):
        zn = affz_element(n, 0)
        assert compose(t, zn) == compose(invert(zn), t)


# ---------------------------------------------------------------------------
# Bar law against a faithful 6-point action


def _bar_pi(payload):
    """Permutation of {0,1} x {0,1,2} built from generator images only."""
    g1, g2, e = payload
    pts = list(iproduct((0, 1), (0, 1, 2)))

    def act(pt):
        b, p = pt
        if e:  # swap applied first
            b = 1 - b
        g = (g1, g2)[b]
        return (b, g.payload[p])

    return tuple(act(pt) for pt in pts)


def test_bar_law_matches_block_action_exhaustively():
    d = bar(S3)
    elems = enumerate_elements(d)
    assert len(elems) == 72
    pi = {h: _bar_pi(h.payload) for h in elems}
    images = set(pi.values())
    assert len(images) == 72  # the action is faithful
    pts = list(iproduct((0, 1), (0, 1, 2)))
    index = {pt: i for i, pt in enumerate(pts)}
    for h in elems:
        ph = pi[h]
        for f in elems:
            pf = pi[f]
            composed = tuple(ph[index[pt]] for pt in pf)
            assert composed == pi[compose(h, f)]


# ---------------------------------------------------------------------------
# wreath law against a faithful 9-point action


def _wreath_pi(payload, ring, base_n):
    lamps, s = payload
    lamp_map = dict(lamps)
    pts = list(iproduct(range(ring), range(base_n)))

    def act(pt):
        j, p = pt
        jj = (j + s) % ring
        g = lamp_map.get(jj)
        return (jj, p if g is None else g.payload[p])

    return tuple(act(pt) for pt in pts)


def test_wreath_law_matches_block_action_exhaustively():
    d = wreath_zn(S3, 3)
    elems = enumerate_elements(d)
    assert len(elems) == 648
    pi = {h: _wreath_pi(h.payload, 3, 3) for h in elems}
    assert len(set(pi.values())) == 648
    pts = list(iproduct(range(3), range(3)))
    index = {pt: i for i, pt in enumerate(pts)}
    for h in elems:
        ph = pi[h]
        for f in elems:
            composed = tuple(ph[index[pt]] for pt in pi[f])
            assert composed == pi[compose(h, f)]


def test_wreath_semidirect_law_components():
    # shifts add, base parts compose after index translation
    d = wreath_zn(S3, 3)
    rng = random.Random(11)
    for _ in range(200):
        a, b = seeded(d, rng.randrange(10 ** 6)), seeded(d, rng.randrange(10 ** 6))
        (la, sa), (lb, sb) = a.payload, b.payload
        prod = compose(a, b)
        lamps, s = prod.payload
        assert s == (sa + sb) % 3
        da, db, dp = dict(la), dict(lb), dict(lamps)
        for i in range(3):
            expected = compose(da.get(i, identity(S3)),
                               db.get((i - sa) % 3, identity(S3)))
            got = dp.get(i, identity(S3))
            assert got == expected


# ---------------------------------------------------------------------------
# generic group laws and canonical form, across all families


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(range(len(FAMILIES))), st.integers(0, 10 ** 9))
def test_associativity_and_inverse(idx, seed):
    d = FAMILIES[idx]
    rng = random.Random(seed)
    a, b, c = (random_element(d, rng, size=5) for _ in range(3))
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, invert(a)).is_identity()
    assert compose(identity(d), a) == a == compose(a, identity(d))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(range(len(FAMILIES))), st.integers(0, 10 ** 9))
def test_canonical_idempotence(idx, seed):
    d = FAMILIES[idx]
    g = random_element(d, random.Random(seed), size=5)
    assert normalized(d, g.payload) == g.payload


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9), st.integers(-6, 6), st.integers(-6, 6))
def test_power_laws(seed, i, j):
    d = FAMILIES[seed % len(FAMILIES)]
    g = random_element(d, random.Random(seed), size=4)
    assert compose(power(g, i), power(g, j)) == power(g, i + j)
    assert power(g, -1) == invert(g)


def test_free_reduction():
    f2 = free_group(2)
    assert free_word(f2, (1, -1)).is_identity()
    assert free_word(f2, (1, 2, -2, -1, 1)) == free_word(f2, (1,))
    w = free_word(f2, (1, 2))
    assert compose(w, invert(w)).is_identity()


def test_binary_word_canonical():
    assert binary_word((1, 0, 1, 1, 0)).payload == (1, 0, 1, 1)
    assert binary_word((0, 0)).is_identity()
    w = binary_word((1, 1))
    assert compose(w, w).is_identity()


def test_matrix_det_validation():
    d = sl_z(2)
    with pytest.raises(ValueError):
        int_matrix(d, [[1, 0], [0, 2]])
    m = int_matrix(d, [[2, 1], [1, 1]])
    assert compose(m, invert(m)).is_identity()


def test_element_order():
    assert element_order(perm_from_cycles(S3, (1, 2, 3))) == 3
    assert element_order(affz_element(0, 1)) == 2
    assert element_order(affz_element(1, 0), cap=50) is None


def test_alternating_rejects_odd():
    with pytest.raises(ValueError):
        permutation(alternating(4), (1, 0, 2, 3))


def test_product_componentwise():
    d = product(S3, free_group(1))
    a = product_element(d, (perm_from_cycles(S3, (1, 2)), free_word(free_group(1), (1,))))
    b = product_element(d, (perm_from_cycles(S3, (1, 3)), free_word(free_group(1), (1, 1))))
    ab = compose(a, b)
    assert ab.payload[0] == compose(a.payload[0], b.payload[0])
    assert ab.payload[1].payload == (1, 1, 1)
