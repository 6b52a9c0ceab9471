"""Construction, exact BFS computation and axiomatic verification of
conjugation-invariant norms, pseudo-norms and quasi-norms on the supported
group families.

All values are exact rationals; there is no floating point anywhere in a
table, so every verification below is a zero-tolerance check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from . import descriptors as gd
from .descriptors import GroupDescriptor, PERMUTATION_FAMILIES
from .elements import (
    Element,
    compose,
    identity,
    invert,
    moved_points,
    sort_key,
)
from .enumeration import (
    commutator_pool,
    conjugacy_closure,
    enumerate_elements,
    subgroup_closure,
)
from .errors import InfiniteGroupError, NotCGeneratingError
from .literals import to_literal

ZERO = Fraction(0)


@dataclass
class NormTableMeta:
    name: str
    diameter: Fraction | None = None  # None marks unbounded / not applicable
    fine: bool = False
    discrete: bool = True
    generator_set: tuple[str, ...] = ()
    notes: dict = field(default_factory=dict)


@dataclass
class NormTable:
    """Exact map from every element of a finite group to a rational value."""

    descriptor: GroupDescriptor
    values: dict[Element, Fraction]
    meta: NormTableMeta

    def value(self, g: Element) -> Fraction:
        return self.values[g]

    def __contains__(self, g: Element) -> bool:
        return g in self.values

    def domain(self) -> list[Element]:
        return sorted(self.values, key=sort_key)


NormLike = NormTable | Mapping | Callable[[Element], Fraction]


def norm_value_fn(norm: NormLike) -> Callable[[Element], Fraction]:
    """Uniform accessor: tables and mappings for finite groups, callables for
    windowed infinite-family norms."""
    if isinstance(norm, NormTable):
        return norm.values.__getitem__
    if isinstance(norm, Mapping):
        return norm.__getitem__
    return norm


# ---------------------------------------------------------------------------
# axiom verification


@dataclass
class AxiomReport:
    passed: bool
    violations: list[tuple[str, tuple[Element, ...]]]
    pairs_checked: int
    domain_size: int


def verify_norm_axioms(table: NormTable, max_violations: int = 25) -> AxiomReport:
    """Exhaustively check all five norm axioms on the table's domain.

    Reports violations instead of raising.  For tables on a subgroup the
    conjugators range over that subgroup.
    """
    vals = table.values
    violations: list[tuple[str, tuple[Element, ...]]] = []

    def record(axiom: str, *witness: Element) -> bool:
        violations.append((axiom, witness))
        return len(violations) >= max_violations

    elems = table.domain()
    one = identity(table.descriptor)
    if vals.get(one, ZERO) != 0:
        record("i", one)
    full = True
    for g in elems:
        if vals[g] != vals[invert(g)]:
            full = not record("ii", g)
            if not full:
                break
        if g != one and vals[g] <= 0:
            full = not record("v", g)
            if not full:
                break
    pairs = 0
    if full:
        inverses = {g: invert(g) for g in elems}
        for f in elems:
            f_inv = inverses[f]
            vf = vals[f]
            for g in elems:
                pairs += 1
                fg = compose(f, g)
                if fg not in vals:
                    full = not record("domain", f, g)
                    break
                if vals[fg] > vf + vals[g]:
                    full = not record("iii", f, g)
                    break
                conj = compose(compose(f, g), f_inv)
                if vals.get(conj) != vals[g]:
                    full = not record("iv", f, g)
                    break
            if not full:
                break
    return AxiomReport(not violations, violations, pairs, len(elems))


# ---------------------------------------------------------------------------
# conjugation-generated norms


@dataclass(frozen=True)
class CGenSpec:
    """A candidate conjugation-generating set and its conjugacy closure."""

    members: tuple[Element, ...]
    closure: frozenset[Element]


def cgen_spec(d: GroupDescriptor, K: Iterable[Element]) -> CGenSpec:
    members = tuple(sorted(set(K), key=sort_key))
    if not members:
        raise ValueError("conjugation-generating set must be non-empty")
    return CGenSpec(members, frozenset(conjugacy_closure(members, d)))


def _bfs_distances(d: GroupDescriptor, step: Iterable[Element]) -> dict[Element, int]:
    gens = sorted(step, key=sort_key)
    dist = {identity(d): 0}
    frontier = [identity(d)]
    n = 0
    while frontier:
        n += 1
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(g, s)
                if h not in dist:
                    dist[h] = n
                    nxt.append(h)
        frontier = nxt
    return dist


def c_generates(d: GroupDescriptor, K: Iterable[Element]) -> bool:
    spec = cgen_spec(d, K)
    return len(_bfs_distances(d, spec.closure)) == gd.order(d)


def qk_norm(d: GroupDescriptor, K: Iterable[Element],
            limit: int | None = None) -> NormTable:
    """Minimal number of conjugates of ``K``-members (or their inverses)
    multiplying to each element: BFS distance from the identity over the
    conjugacy closure of ``K``."""
    spec = cgen_spec(d, K)
    size = gd.order(d)
    if size is None:
        raise InfiniteGroupError(f"{d} is infinite")
    dist = _bfs_distances(d, spec.closure)
    if len(dist) != size:
        missing = [g for g in enumerate_elements(d) if g not in dist]
        sample = ", ".join(to_literal(g) for g in missing[:5])
        raise NotCGeneratingError(
            f"K reaches only {len(dist)} of {size} elements of {d}; "
            f"unreached include {sample}")
    values = {g: Fraction(n) for g, n in dist.items()}
    meta = NormTableMeta(
        name="q_K[" + "; ".join(to_literal(k) for k in spec.members) + "]",
        diameter=max(values.values()),
        generator_set=tuple(to_literal(k) for k in spec.members),
    )
    return NormTable(d, values, meta)


def commutator_length_over(elements: Iterable[Element], d: GroupDescriptor,
                           name: str = "cl") -> NormTable:
    """Commutator length on the derived subgroup of the given subgroup:
    BFS over the set of its simple commutators."""
    pool = commutator_pool(elements)
    dist = _bfs_distances(d, pool)
    values = {g: Fraction(n) for g, n in dist.items()}
    meta = NormTableMeta(name=name, diameter=max(values.values()))
    return NormTable(d, values, meta)


def commutator_length(d: GroupDescriptor, limit: int | None = None) -> NormTable:
    """Commutator length on the derived subgroup of a finite group; the
    table's diameter is the commutator length diameter."""
    return commutator_length_over(enumerate_elements(d, limit), d, name="cl")


# ---------------------------------------------------------------------------
# concrete norms


def trivial_norm_table(d: GroupDescriptor, limit: int | None = None) -> NormTable:
    """1 on every non-identity element."""
    values = {g: Fraction(0 if g.is_identity() else 1)
              for g in enumerate_elements(d, limit)}
    return NormTable(d, values, NormTableMeta(name="trivial", diameter=Fraction(1)))


def support_norm(g: Element) -> Fraction:
    """Moved points of a permutation, or the number of set bits of a binary
    word (its word length)."""
    f = g.descriptor.family
    if f in PERMUTATION_FAMILIES:
        return Fraction(moved_points(g))
    if f == "z2inf":
        return Fraction(sum(g.payload))
    raise ValueError(f"support norm undefined for family {f!r}")


def support_norm_table(d: GroupDescriptor, limit: int | None = None) -> NormTable:
    values = {g: support_norm(g) for g in enumerate_elements(d, limit)}
    return NormTable(d, values, NormTableMeta(name="support",
                                              diameter=max(values.values())))


# ---------------------------------------------------------------------------
# generator filtration norm on abelian models


def generator_filtration_norm(g: Element, generators: Iterable[Element]) -> int:
    """Smallest k with ``g`` in the span of the first k generators.

    Unbounded as a norm when the family's generator list is infinite.
    """
    gens = list(generators)
    if g.is_identity():
        return 0
    d = g.descriptor
    if not gd.is_abelian(d):
        raise ValueError("filtration norm is defined on abelian models only")
    for k in range(1, len(gens) + 1):
        if _in_abelian_span(g, gens[:k]):
            return k
    raise ValueError("element lies outside the span of the generator list")


def _in_abelian_span(g: Element, gens: list[Element]) -> bool:
    d = g.descriptor
    if d.family == "z2inf":
        # GF(2) linear basis over int masks, keyed by leading bit
        pivots: dict[int, int] = {}
        for x in gens:
            b = _bit_mask(x)
            while b:
                h = b.bit_length() - 1
                if h in pivots:
                    b ^= pivots[h]
                else:
                    pivots[h] = b
                    break
        t = _bit_mask(g)
        while t:
            h = t.bit_length() - 1
            if h not in pivots:
                return False
            t ^= pivots[h]
        return True
    if _is_free_abelian(d):
        return _lattice_contains([_exponent_vector(x) for x in gens],
                                 _exponent_vector(g))
    if gd.finite(d):
        return g in subgroup_closure(gens, limit=gd.order(d))
    raise ValueError(f"span membership is undecidable for {d}")


def _bit_mask(g: Element) -> int:
    return sum(b << i for i, b in enumerate(g.payload))


def _is_free_abelian(d: GroupDescriptor) -> bool:
    if d.family == "free":
        return d.n == 1
    return d.family == "product" and all(_is_free_abelian(p) for p in d.parts)


def _exponent_vector(g: Element) -> tuple[int, ...]:
    d = g.descriptor
    if d.family == "free":
        return (sum(1 if x > 0 else -1 for x in g.payload),)
    out: list[int] = []
    for c in g.payload:
        out.extend(_exponent_vector(c))
    return tuple(out)


def _lattice_contains(rows: list[tuple[int, ...]], target: tuple[int, ...]) -> bool:
    """Integer row-span membership via gcd echelon reduction."""
    work = [list(r) for r in rows if any(r)]
    t = list(target)
    cols = len(t)
    r = 0
    echelon: list[list[int]] = []
    for c in range(cols):
        while True:
            nz = [i for i in range(r, len(work)) if work[i][c] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(work[i][c]))
            i0 = nz[0]
            for i in nz[1:]:
                q = work[i][c] // work[i0][c]
                if q:
                    work[i] = [x - q * y for x, y in zip(work[i], work[i0])]
        nz = [i for i in range(r, len(work)) if work[i][c] != 0]
        if not nz:
            continue
        work[r], work[nz[0]] = work[nz[0]], work[r]
        echelon.append(work[r])
        r += 1
    for row in echelon:
        c = next(i for i, v in enumerate(row) if v != 0)
        if t[c] % row[c] != 0:
            return False
        q = t[c] // row[c]
        t = [x - q * y for x, y in zip(t, row)]
    return not any(t)


# ---------------------------------------------------------------------------
# quasi-norms


@dataclass
class QuasiNormSpec:
    """A quasi-subadditive, quasi-conjugation-invariant function with its
    declared constants.  ``table`` for finite groups, ``fn`` for windowed
    verification on infinite families."""

    descriptor: GroupDescriptor
    c_add: Fraction
    c_conj: Fraction
    table: dict[Element, Fraction] | None = None
    fn: Callable[[Element], Fraction] | None = None
    name: str = "q"
    notes: dict = field(default_factory=dict)

    def value(self, g: Element) -> Fraction:
        if self.table is not None:
            return self.table[g]
        return Fraction(self.fn(g))


@dataclass
class QuasiNormReport:
    passed: bool
    max_subadd_slack: Fraction
    max_conj_gap: Fraction           # sup |q(b^-1 a b) - q(a)|, checked
    max_conj_gap_alt: Fraction       # sup |q(b^-1 a b) - q(b)|, reported only
    violations: list[tuple[str, tuple[Element, ...]]]
    pairs_checked: int


def verify_quasinorm(q: QuasiNormSpec, pairs: Iterable[tuple[Element, Element]],
                     max_violations: int = 25) -> QuasiNormReport:
    """Check quasi-subadditivity and quasi-conjugation-invariance exactly on
    the supplied pairs.

    The conjugation axiom is checked in the form ``|q(b^-1 a b) - q(a)|``;
    the variant comparing against ``q(b)`` is measured and reported but not
    graded, since only the first form is what the conversion construction
    needs.
    """
    slack_add = ZERO
    gap = ZERO
    gap_alt = ZERO
    violations: list[tuple[str, tuple[Element, ...]]] = []
    count = 0
    for a, b in pairs:
        count += 1
        qa, qb = q.value(a), q.value(b)
        s = q.value(compose(a, b)) - qa - qb
        slack_add = max(slack_add, s)
        if s > q.c_add and len(violations) < max_violations:
            violations.append(("subadditivity", (a, b)))
        conj = compose(compose(invert(b), a), b)
        qc = q.value(conj)
        g = abs(qc - qa)
        gap = max(gap, g)
        if g > q.c_conj and len(violations) < max_violations:
            violations.append(("conjugation", (a, b)))
        gap_alt = max(gap_alt, abs(qc - qb))
    return QuasiNormReport(not violations, slack_add, gap, gap_alt,
                           violations, count)


def quasinorm_to_norm(q: QuasiNormSpec, d: GroupDescriptor,
                      limit: int | None = None) -> NormTable:
    """Convert a quasi-norm into a genuine norm on a finite group:
    symmetrize with the inverse, replace by the maximum over the conjugacy
    class, then add ``c_add + c_conj + 1`` to every non-identity value."""
    elems = enumerate_elements(d, limit)
    sym = {a: max(q.value(a), q.value(invert(a))) for a in elems}
    inverses = {b: invert(b) for b in elems}
    conj_sup: dict[Element, Fraction] = {}
    for a in elems:
        best = sym[a]
        for b in elems:
            c = compose(compose(b, a), inverses[b])
            if sym[c] > best:
                best = sym[c]
        conj_sup[a] = best
    const = q.c_add + q.c_conj + 1
    one = identity(d)
    values = {a: (ZERO if a == one else conj_sup[a] + const) for a in elems}
    meta = NormTableMeta(
        name=f"normed[{q.name}]",
        diameter=max(values.values()),
        notes={"added_constant": str(const)},
    )
    return NormTable(d, values, meta)


def pullback_qnorm(q: QuasiNormSpec, epi: Callable[[Element], Element],
                   domain: GroupDescriptor,
                   spot_samples: Iterable[tuple[Element, Element]] = ()) -> QuasiNormSpec:
    """Pull a quasi-norm back along a homomorphism onto the target group.

    The homomorphism property is spot-verified on the supplied sample pairs.
    """
    for a, b in spot_samples:
        if epi(compose(a, b)) != compose(epi(a), epi(b)):
            raise ValueError("map is not a homomorphism on the sample pairs")
    return QuasiNormSpec(domain, q.c_add, q.c_conj,
                         fn=lambda g: q.value(epi(g)),
                         name=f"pullback[{q.name}]")


def coset_extension_qnorm(d: GroupDescriptor,
                          reps: list[Element] | None = None,
                          limit: int | None = None) -> QuasiNormSpec:
    """Extend commutator length from the derived subgroup across a finite-index
    transversal: ``q(hs) = cl(h)``.

    Representatives default to the least canonical form per coset.  The
    additivity constant is ``1 + C`` with C the worst commutator length of the
    derived part of a representative product; conjugation moves the value by
    at most 1 because it multiplies the derived part by one commutator.
    """
    if d.family == "aff-z":
        def value(g: Element) -> Fraction:
            a, _ = g.payload
            return Fraction(0 if a - (a % 2) == 0 else 1)
        return QuasiNormSpec(
            d, c_add=Fraction(2), c_conj=Fraction(1), fn=value,
            name="coset-extension",
            notes={"C": "1", "transversal": ("1", "z^1", "t", "z^1 t")})
    cl = commutator_length(d, limit)
    derived = set(cl.values)
    elems = sorted(enumerate_elements(d, limit), key=sort_key)
    if reps is None:
        reps = []
        for g in elems:
            if not any(compose(g, invert(r)) in derived for r in reps):
                reps.append(g)
    else:
        seen = set()
        for r in reps:
            key = frozenset(compose(h, r) for h in derived)
            if key in seen:
                raise ValueError("representative list is not a transversal")
            seen.add(key)
        if len(reps) * len(derived) != len(elems):
            raise ValueError("representative list is not a transversal")

    def rep_of(g: Element) -> Element:
        for r in reps:
            if compose(g, invert(r)) in derived:
                return r
        raise AssertionError("transversal failed to cover the group")

    table = {g: cl.values[compose(g, invert(rep_of(g)))] for g in elems}
    c_big = ZERO
    for s1 in reps:
        for s2 in reps:
            prod = compose(s1, s2)
            c_big = max(c_big, cl.values[compose(prod, invert(rep_of(prod)))])
    return QuasiNormSpec(
        d, c_add=1 + c_big, c_conj=Fraction(1), table=table,
        name="coset-extension",
        notes={"C": str(c_big),
               "transversal": tuple(to_literal(r) for r in reps)})


# ---------------------------------------------------------------------------
# stabilization and domination


@dataclass
class StabilizationEstimate:
    element: Element
    upper: Fraction
    exact_zero: bool
    n_max: int


def stabilization_upper(norm: NormLike, f: Element, n_max: int) -> StabilizationEstimate:
    """Certified upper bound for the stabilized norm ``lim v(f^n)/n``.

    The sequence ``v(f^n)`` is subadditive, so the limit equals the infimum
    and any prefix minimum of ``v(f^n)/n`` is a true upper bound; it hits 0
    exactly when a power of ``f`` is the identity within the horizon.
    """
    value = norm_value_fn(norm)
    best: Fraction | None = None
    cur = f
    for n in range(1, n_max + 1):
        if cur.is_identity():
            return StabilizationEstimate(f, ZERO, True, n_max)
        v = Fraction(value(cur)) / n
        if best is None or v < best:
            best = v
        cur = compose(cur, f)
    return StabilizationEstimate(f, best if best is not None else ZERO, False, n_max)


@dataclass
class DominationReport:
    norm_name: str
    lam: Fraction
    witness_checked: int


def check_extremal_domination(q: NormTable, K: Iterable[Element]) -> DominationReport:
    """Verify the extremal property of conjugation-generated norms: any norm
    bounded on K is dominated by ``lambda * q_K`` with lambda its maximum on
    the conjugacy closure of K."""
    d = q.descriptor
    spec = cgen_spec(d, K)
    base = qk_norm(d, spec.members)
    lam = max(q.values[c] for c in spec.closure)
    checked = 0
    for g, v in q.values.items():
        if v > lam * base.values[g]:
            raise AssertionError(
                f"domination failed at {to_literal(g)}: {v} > {lam} * {base.values[g]}")
        checked += 1
    return DominationReport(q.meta.name, lam, checked)
