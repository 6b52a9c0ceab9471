"""Displaceability and packing against plain brute-force tuple searches."""

from itertools import permutations

from cinorm import (
    Element,
    SubgroupSpec,
    compose,
    disjunction_energy,
    displacement_energy,
    find_strong_displacer,
    invert,
    packing_number,
    perm_from_cycles,
    subgroups_commute,
    support_norm,
    support_norm_table,
    symmetric,
    trivial_norm_table,
    verify_disjunction_inequality,
    verify_master_inequalities,
)

S5 = symmetric(5)
S6 = symmetric(6)
S8 = symmetric(8)


def sym_block(d, points):
    pts = list(points)
    return SubgroupSpec((perm_from_cycles(d, pts[:2]),
                         perm_from_cycles(d, pts)),
                        label="Sym{" + ",".join(map(str, pts)) + "}")


def test_subgroups_commute_examples():
    a = sym_block(S6, (1, 2, 3))
    b = sym_block(S6, (4, 5, 6))
    c = sym_block(S6, (3, 4, 5))
    assert subgroups_commute(a, b)
    assert not subgroups_commute(a, c)
    trivial = SubgroupSpec((Element(S6, tuple(range(6))),))
    assert subgroups_commute(a, trivial)


def test_strong_displacer_s6():
    h = sym_block(S6, (1, 2, 3))
    rep = find_strong_displacer(S6, h, 1)
    assert rep.found
    assert rep.witnesses[0].payload == (3, 4, 5, 0, 1, 2)
    rep2 = find_strong_displacer(S6, h, 2)
    assert not rep2.found and rep2.witnesses == ()


def test_strong_displacer_s9_shift():
    s9 = symmetric(9)
    h = sym_block(s9, (1, 2, 3))
    rep = find_strong_displacer(s9, h, 2)
    assert rep.found
    assert rep.witnesses[0].payload == (3, 4, 5, 6, 7, 8, 0, 1, 2)


def brute_force_weak_displaceable(d, h, m):
    """Plain tuple search over all conjugator m-tuples, as slow as it looks."""
    gens = [g.payload for g in h.generators]
    n = d.n

    def mul(a, b):
        return tuple(map(a.__getitem__, b))

    def inv(a):
        out = [0] * len(a)
        for i, j in enumerate(a):
            out[j] = i
        return tuple(out)

    def conj_gens(phi):
        pi = inv(phi)
        return [mul(mul(phi, g), pi) for g in gens]

    def commute(ga, gb):
        return all(mul(x, y) == mul(y, x) for x in ga for y in gb)

    base = [tuple(range(n))]
    stacks = [[conj_gens(b) for b in base]]

    def search(chosen, depth):
        if depth == m:
            return True
        for phi in permutations(range(n)):
            cg = conj_gens(phi)
            if all(commute(cg, prev) for prev in chosen):
                if search(chosen + [cg], depth + 1):
                    return True
        return False

    return search([conj_gens(tuple(range(n)))], 0)


def test_packing_s6_cross_checked():
    h = sym_block(S6, (1, 2, 3))
    res = packing_number(S6, h)
    assert res.p == 2 and res.exhausted and not res.degenerate
    assert res.certificate is not None and len(res.certificate.witnesses) == 1
    # plain brute force agrees: 1-displaceable but not weakly 2-displaceable
    assert brute_force_weak_displaceable(S6, h, 1)
    assert not brute_force_weak_displaceable(S6, h, 2)


def test_packing_s5_is_one():
    h = sym_block(S5, (1, 2, 3))
    res = packing_number(S5, h)
    assert res.p == 1 and res.exhausted
    assert not brute_force_weak_displaceable(S5, h, 1)


def test_packing_abelian_degenerate():
    h = SubgroupSpec((perm_from_cycles(S6, (1, 2), (3, 4)),))
    res = packing_number(S6, h)
    assert res.degenerate and res.p is None
    e = displacement_energy(S6, h, 3, support_norm_table(S6))
    assert e.value == 0 and e.minimizer.is_identity()


def test_packing_not_below_strong_search():
    h = sym_block(S6, (1, 2, 3))
    res = packing_number(S6, h)
    strong_best = 0
    for m in (1, 2):
        if find_strong_displacer(S6, h, m).found:
            strong_best = m
    assert res.p >= 1 + strong_best


def test_energy_s6_support():
    h = sym_block(S6, (1, 2, 3))
    table = support_norm_table(S6)
    e1 = displacement_energy(S6, h, 1, table)
    assert e1.value == 6
    assert e1.minimizer.payload == (3, 4, 5, 0, 1, 2)
    e2 = displacement_energy(S6, h, 2, table)
    assert e2.value is None and e2.minimizer is None


def test_energy_monotone_in_m():
    s9 = symmetric(9)
    h = sym_block(s9, (1, 2, 3))
    e1 = displacement_energy(s9, h, 1, support_norm)
    e2 = displacement_energy(s9, h, 2, support_norm)
    assert e1.value == 6
    assert e2.value == 9  # a strong 2-displacer must move every point
    assert e1.value <= e2.value


def test_master_inequalities_trivial_norm():
    h = sym_block(S6, (1, 2, 3))
    rep = verify_master_inequalities(S6, h, 1, trivial_norm_table(S6))
    assert rep.ok and rep.ambient_cl_checked
    assert any(r.label == "cl_ambient(x) <= 2" for r in rep.rows)


def test_master_inequalities_support_norm():
    h = sym_block(S6, (1, 2, 3))
    rep = verify_master_inequalities(S6, h, 1, support_norm_table(S6))
    assert rep.ok
    assert rep.energy.value == 6
    # H' of Sym{1,2,3} is the 3-cycles: their support is 3 <= 4*6
    xs = [r for r in rep.rows if r.label.startswith("v(x)")]
    assert len(xs) == 2
    assert all(r.lhs == 3 for r in xs)
    assert len(rep.chain_rows) == 6 * 6 + 6


def test_disjunction_energy_s8():
    h1 = sym_block(S8, (1, 2, 3))
    h2 = sym_block(S8, (2, 3, 4))
    e = disjunction_energy(S8, h1, h2, support_norm)
    # phi must move {2,3,4} off {1,2,3}; 4 may stay put, so 4 points suffice
    assert e.value == 4
    conj = SubgroupSpec(tuple(compose(compose(e.minimizer, g), invert(e.minimizer))
                              for g in h2.generators))
    assert subgroups_commute(h1, conj)
    rep = verify_disjunction_inequality(S8, h1, h2, support_norm, energy=e)
    assert rep.ok
    assert len(rep.rows) == 36


def test_witness_revalidation_runs():
    # the library re-checks witnesses with the public commutation predicate;
    # returned reports therefore always carry valid witnesses
    s9 = symmetric(9)
    h = sym_block(s9, (1, 2, 3))
    rep = find_strong_displacer(s9, h, 1)
    conj = SubgroupSpec(tuple(compose(compose(rep.witnesses[0], g),
                                      invert(rep.witnesses[0]))
                              for g in h.generators))
    assert subgroups_commute(h, conj)
