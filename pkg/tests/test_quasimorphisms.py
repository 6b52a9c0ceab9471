"""Quasi-morphism machinery; frozen values were derived by hand from the
reduced-word combinatorics (no cancellation in the test words)."""

import random
from fractions import Fraction

import pytest

from cinorm import (
    QuasiMorphism,
    SubgroupSpec,
    alternating,
    bar,
    bar_defect_decomposition,
    bar_element,
    bar_extension,
    commutator_length,
    commutator_of,
    commutator_sup,
    compose,
    counting_qm,
    defect,
    enumerate_elements,
    exponent_sum_qm,
    free_group,
    free_word,
    homogenize,
    identity,
    invert,
    perm_from_cycles,
    product,
    product_element,
    scl_bounds,
    symmetric,
    verify_bar_splitting,
    verify_witness_additivity,
)
from cinorm.quasimorphisms import check_homogeneity
from cinorm.sampling import random_element

F2 = free_group(2)
AB = free_word(F2, (1, 2))


def test_counting_values():
    q = counting_qm(AB)
    assert q(identity(F2)) == 0
    assert q(free_word(F2, (1, 2, 1, 2))) == 2
    assert q(free_word(F2, (-2, -1))) == -1
    assert q(invert(AB)) == -1
    assert q.notes["occurrences"] == "all overlapping"


def test_counting_rejects_bad_patterns():
    with pytest.raises(ValueError):
        counting_qm(identity(F2))
    with pytest.raises(ValueError):
        counting_qm(perm_from_cycles(symmetric(3), (1, 2)))


def test_homomorphism_defect_zero():
    q = exponent_sum_qm(F2)
    est = defect(q, "sampled", budget=400, seed=3)
    assert est.value == 0
    assert est.certified == "sampled_lower_bound"
    assert check_homogeneity(q, [free_word(F2, (1,)), free_word(F2, (1, 2))])


def test_defect_exact_on_finite_domain():
    s3 = symmetric(3)
    zero = QuasiMorphism(s3, lambda g: Fraction(0), kind="homomorphism",
                         homogeneous=True, name="zero")
    est = defect(zero, "exact")
    assert est.value == 0 and est.certified == "exact"


def test_homogeneous_on_finite_group_vanishes():
    # torsion forces any homogeneous quasi-morphism to vanish identically;
    # the zero function is the only sample and the check must accept it
    s3 = symmetric(3)
    zero = QuasiMorphism(s3, lambda g: Fraction(0), homogeneous=True)
    assert check_homogeneity(zero, enumerate_elements(s3))


def test_defect_sampled_reproducible_and_monotone():
    q = counting_qm(AB)
    a = defect(q, "sampled", budget=300, seed=11)
    b = defect(q, "sampled", budget=300, seed=11)
    c = defect(q, "sampled", budget=900, seed=11)
    assert a.value == b.value
    assert c.value >= a.value
    assert a.seed == 11 and a.sample_count == 300


def test_homogenize_intervals():
    q = exponent_sum_qm(F2)
    g = free_word(F2, (1, 1))
    iv = homogenize(q, g, 16, defect_upper=Fraction(0))
    assert iv.center == 2 and iv.radius == 0 and iv.certified
    # (abab)^64 contains 128 copies of the pattern and none of its inverse
    qc = counting_qm(AB)
    iv2 = homogenize(qc, free_word(F2, (1, 2, 1, 2)), 64, Fraction(6))
    assert iv2.center == 2 and iv2.radius == Fraction(6, 64)
    # torsion element: interval must straddle zero
    s3 = symmetric(3)
    one_if = QuasiMorphism(s3, lambda g: Fraction(0 if g.is_identity() else 1))
    r = perm_from_cycles(s3, (1, 2, 3))
    iv3 = homogenize(one_if, r, 9, defect_upper=Fraction(2))
    assert iv3.low <= 0 <= iv3.high


def test_bar_extension_values_and_defect():
    q = counting_qm(AB)
    bF = bar(F2)
    rbar = bar_extension(q, bF)
    g = free_word(F2, (1, 2, 1))
    assert rbar(bar_element(bF, g, identity(F2), 0)) == q(g)
    rng = random.Random(8)
    for _ in range(500):
        h = random_element(bF, rng, size=7)
        f = random_element(bF, rng, size=7)
        row = bar_defect_decomposition(q, rbar, h, f)
        assert row.ok


def test_bar_extension_of_homomorphism_additive():
    q = exponent_sum_qm(F2)
    bF = bar(F2)
    rbar = bar_extension(q, bF)
    rng = random.Random(2)
    for _ in range(200):
        h = random_element(bF, rng, size=6)
        f = random_element(bF, rng, size=6)
        assert rbar(compose(h, f)) == rbar(h) + rbar(f)


def test_bar_splitting_cases():
    s5 = symmetric(5)
    b5 = bar(s5)
    g1 = perm_from_cycles(s5, (1, 2, 3, 4, 5))
    g2 = perm_from_cycles(s5, (1, 3))
    plain = bar_element(b5, g1, g2, 0)
    rep = verify_bar_splitting(plain, 20)
    assert rep.passed and rep.case == 0
    assert rep.w1.payload[0] == g1 and rep.w2.payload[1] == g2
    swapped = bar_element(b5, g1, g2, 1)
    rep2 = verify_bar_splitting(swapped, 20)
    assert rep2.passed and rep2.case == 1
    assert rep2.w1.payload[0] == compose(g1, g2)
    assert rep2.w2.payload[1] == compose(g2, g1)
    assert verify_bar_splitting(identity(b5), 5).passed


def test_commutator_sup():
    zero = QuasiMorphism(F2, lambda g: Fraction(0), name="zero")
    est = commutator_sup(zero, mode="sampled", budget=100, seed=0)
    assert est.value == 0
    hom = exponent_sum_qm(F2)
    est2 = commutator_sup(hom, mode="sampled", budget=300, seed=0)
    assert est2.value == 0  # homomorphisms vanish on commutators
    q = counting_qm(AB)
    est3 = commutator_sup(q, mode="sampled", budget=600, seed=1, size=8)
    assert est3.value >= 1
    for x, y in est3.witnesses:
        assert q(commutator_of(x, y)) == est3.value
    s3 = symmetric(3)
    one_if = QuasiMorphism(s3, lambda g: Fraction(0 if g.is_identity() else 1))
    h = SubgroupSpec((perm_from_cycles(s3, (1, 2)), perm_from_cycles(s3, (1, 2, 3))))
    est4 = commutator_sup(one_if, h, mode="exact")
    assert est4.certified == "exact" and est4.value == 1


def _emb(P, i, e, n):
    comps = [identity(F2)] * n
    comps[i] = e
    return product_element(P, comps)


def test_witness_additivity():
    P = product(F2, F2)
    q = QuasiMorphism(P, lambda g: counting_qm(AB)(g.payload[0])
                      + counting_qm(AB)(g.payload[1]), name="sum")
    factors = [SubgroupSpec((_emb(P, i, free_word(F2, (1,)), 2),
                             _emb(P, i, free_word(F2, (2,)), 2)))
               for i in range(2)]
    witnesses = [(_emb(P, 0, free_word(F2, (1,)), 2),
                  _emb(P, 0, free_word(F2, (2,)), 2)),
                 (_emb(P, 1, free_word(F2, (1, 2)), 2),
                  _emb(P, 1, free_word(F2, (2,)), 2))]
    rep = verify_witness_additivity(q, factors, witnesses)
    assert rep.ok
    assert rep.combined == sum(rep.factor_values)
    trivial_wit = [(identity(P), identity(P))] * 2
    rep0 = verify_witness_additivity(q, factors, trivial_wit)
    assert rep0.ok and rep0.combined == 0


def test_witness_additivity_rejects_noncommuting_factors():
    P = product(F2, F2)
    q = QuasiMorphism(P, lambda g: Fraction(0))
    bad = [SubgroupSpec((_emb(P, 0, free_word(F2, (1,)), 2),)),
           SubgroupSpec((_emb(P, 0, free_word(F2, (2,)), 2),))]
    with pytest.raises(ValueError):
        verify_witness_additivity(q, bad, [(identity(P), identity(P))] * 2)


def test_scl_bounds_commutator():
    q = counting_qm(AB)
    w = commutator_of(free_word(F2, (1,)), free_word(F2, (2,)))
    sb = scl_bounds(w, q, defect_upper=Fraction(6), n=64)
    assert sb.lower == Fraction(29, 384)  # (1 - 6/64) / 12, by hand
    assert sb.lower > 0  # certifies stably unbounded commutator length
    assert sb.upper is None
    assert sb.lower_provenance["defect_upper"] == "6"


def test_scl_bounds_trivial_qm():
    zero = QuasiMorphism(F2, lambda g: Fraction(0), name="zero")
    w = commutator_of(free_word(F2, (1,)), free_word(F2, (2,)))
    sb = scl_bounds(w, zero, defect_upper=Fraction(1), n=8)
    assert sb.lower == 0


def test_scl_bounds_finite_group_degenerate():
    a5 = alternating(5)
    cl = commutator_length(a5)
    zero = QuasiMorphism(a5, lambda g: Fraction(0), name="zero")
    w = perm_from_cycles(a5, (1, 2, 3))
    sb = scl_bounds(w, zero, defect_upper=Fraction(1),
                    cl_oracle=lambda g: int(cl.values[g]), powers=(1, 2, 3, 6))
    assert sb.upper == 0  # torsion: cl(w^3)/3 = 0
    assert sb.lower == 0


def test_scl_bounds_zero_defect_contradiction():
    q = counting_qm(AB)
    with pytest.raises(ValueError):
        scl_bounds(free_word(F2, (1, 2)), q, defect_upper=Fraction(0))
