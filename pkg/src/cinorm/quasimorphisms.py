"""Quasi-morphism machinery: defect estimation, homogenization with certified
error intervals, the swap-extension to the two-coordinate cover, commutator
suprema, witness-level additivity checks and stable-commutator-length bounds.

Certification discipline: sampled suprema are always labelled as lower
bounds; a certified scl lower bound requires a *declared* defect upper bound
and is never promoted from sampling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import descriptors as gd
from .descriptors import GroupDescriptor
from .elements import (
    Element,
    commutator_of,
    compose,
    identity,
    invert,
    power,
    sort_key,
)
from .enumeration import SubgroupSpec, closure_of, enumerate_elements
from .errors import InfiniteGroupError
from .literals import to_literal
from .sampling import random_element

ZERO = Fraction(0)


@dataclass
class QuasiMorphism:
    """Rational-valued function with uniformly bounded additivity defect."""

    domain: GroupDescriptor
    fn: Callable[[Element], Fraction]
    kind: str = "user"  # homomorphism | counting | bar_extension | user
    homogeneous: bool = False
    name: str = "qm"
    notes: dict = field(default_factory=dict)

    def __call__(self, g: Element) -> Fraction:
        if g.descriptor != self.domain:
            raise ValueError(f"{self.name} is defined on {self.domain}, not {g.descriptor}")
        return Fraction(self.fn(g))


def check_homogeneity(q: QuasiMorphism, samples: Iterable[Element],
                      powers: Sequence[int] = (2, 3, 5)) -> bool:
    """Spot-check ``q(g^n) = n q(g)`` on sample elements."""
    for g in samples:
        for n in powers:
            if q(power(g, n)) != n * q(g):
                return False
    return True


# ---------------------------------------------------------------------------
# counting quasi-morphisms on free groups


def _occurrences(word: tuple, pattern: tuple) -> int:
    k = len(pattern)
    if k == 0 or k > len(word):
        return 0
    return sum(1 for i in range(len(word) - k + 1) if word[i:i + k] == pattern)


def counting_qm(pattern: Element) -> QuasiMorphism:
    """Signed count of pattern occurrences in the reduced word: occurrences of
    the pattern minus occurrences of its inverse.  All overlapping occurrences
    count; the convention is recorded because defect values depend on it.
    """
    if pattern.descriptor.family != "free":
        raise ValueError("counting quasi-morphisms live on free groups")
    if not pattern.payload:
        raise ValueError("pattern must be non-empty")
    pat = pattern.payload
    pat_inv = invert(pattern).payload

    def fn(g: Element) -> Fraction:
        w = g.payload
        return Fraction(_occurrences(w, pat) - _occurrences(w, pat_inv))

    return QuasiMorphism(pattern.descriptor, fn, kind="counting",
                         name=f"count[{to_literal(pattern)}]",
                         notes={"occurrences": "all overlapping"})


def exponent_sum_qm(d: GroupDescriptor, generator: int = 1) -> QuasiMorphism:
    """Exponent-sum homomorphism of one generator: a true homomorphism, hence
    a quasi-morphism with defect zero."""
    def fn(g: Element) -> Fraction:
        return Fraction(sum(1 if x == generator else -1 if x == -generator else 0
                            for x in g.payload))
    return QuasiMorphism(d, fn, kind="homomorphism", homogeneous=True,
                         name=f"exp[{generator}]")


# ---------------------------------------------------------------------------
# defect


@dataclass
class DefectEstimate:
    value: Fraction
    certified: str  # exact | sampled_lower_bound | declared_upper_bound
    sample_count: int = 0
    seed: int | None = None


def defect(q: QuasiMorphism, mode: str = "exact", budget: int = 2000,
           seed: int = 0, size: int = 12) -> DefectEstimate:
    """Additivity defect ``sup |q(ab) - q(a) - q(b)|``.

    Exact mode enumerates all pairs of a finite domain; sampled mode draws
    ``budget`` seeded pairs and yields a true lower bound of the supremum.
    """
    if mode == "exact":
        if not gd.finite(q.domain):
            raise InfiniteGroupError("exact defect needs a finite domain")
        elems = enumerate_elements(q.domain)
        vals = {g: q(g) for g in elems}
        best = ZERO
        for a in elems:
            for b in elems:
                best = max(best, abs(vals[compose(a, b)] - vals[a] - vals[b]))
        return DefectEstimate(best, "exact", len(elems) ** 2, None)
    if mode != "sampled":
        raise ValueError(f"unknown defect mode {mode!r}")
    import random
    rng = random.Random(seed)
    best = ZERO
    for _ in range(budget):
        a = random_element(q.domain, rng, size=size)
        b = random_element(q.domain, rng, size=size)
        best = max(best, abs(q(compose(a, b)) - q(a) - q(b)))
    return DefectEstimate(best, "sampled_lower_bound", budget, seed)


# ---------------------------------------------------------------------------
# homogenization


@dataclass
class HomogenizationInterval:
    element: Element
    n: int
    center: Fraction
    radius: Fraction | None  # None marks a heuristic (uncertified) interval
    certified: bool

    @property
    def low(self) -> Fraction:
        return self.center - (self.radius or ZERO)

    @property
    def high(self) -> Fraction:
        return self.center + (self.radius or ZERO)


def homogenize(q: QuasiMorphism, g: Element, n: int,
               defect_upper: Fraction | None = None) -> HomogenizationInterval:
    """Estimate the homogenization limit by ``q(g^n)/n``.

    With a declared defect upper bound D the subadditivity argument pins the
    limit inside ``q(g^n)/n +- D/n``; without one the radius is heuristic.
    """
    if n < 1:
        raise ValueError("n must be positive")
    center = q(power(g, n)) / n
    if defect_upper is None:
        return HomogenizationInterval(g, n, center, None, False)
    return HomogenizationInterval(g, n, center, Fraction(defect_upper) / n, True)


# ---------------------------------------------------------------------------
# the swap extension


def bar_extension(r: QuasiMorphism, bar_descriptor: GroupDescriptor | None = None) -> QuasiMorphism:
    """Extend a quasi-morphism to the two-coordinate swap cover by summing the
    normal form's coordinates."""
    bd = bar_descriptor if bar_descriptor is not None else gd.bar(r.domain)
    if bd.family != "bar" or bd.base != r.domain:
        raise ValueError("target descriptor must be the bar cover of the domain")

    def fn(h: Element) -> Fraction:
        g1, g2, _ = h.payload
        return r(g1) + r(g2)

    return QuasiMorphism(bd, fn, kind="bar_extension", name=f"bar[{r.name}]")


@dataclass
class DefectDecompositionRow:
    left: Element
    right: Element
    lhs: Fraction
    rhs: Fraction
    ok: bool


def bar_defect_decomposition(r: QuasiMorphism, rbar: QuasiMorphism,
                             h: Element, f: Element) -> DefectDecompositionRow:
    """Pointwise inequality bounding the extension's defect by the two
    component defects of the normal-form product, exact in rationals."""
    h1, h2, he = h.payload
    f1, f2, _ = f.payload
    if he:
        f1, f2 = f2, f1
    lhs = abs(rbar(compose(h, f)) - rbar(h) - rbar(f))
    rhs = (abs(r(compose(h1, f1)) - r(h1) - r(f1))
           + abs(r(compose(h2, f2)) - r(h2) - r(f2)))
    return DefectDecompositionRow(h, f, lhs, rhs, lhs <= rhs)


@dataclass
class SplittingReport:
    element: Element
    case: int  # 0: plain pair, 1: swap bit set
    w1: Element
    w2: Element
    checks: int
    passed: bool
    failures: list[int]


def verify_bar_splitting(w: Element, k: int) -> SplittingReport:
    """Verify the power-splitting identities in the swap cover by exact
    multiplication: ``w^j = w1^j w2^j`` for a plain pair, and
    ``w^(2j) = w1^j w2^j`` when the swap bit is set, for all j up to k."""
    d = w.descriptor
    if d.family != "bar":
        raise ValueError("splitting check needs a bar-family element")
    g1, g2, e = w.payload
    one = identity(d.base)
    if e == 0:
        w1 = Element(d, (g1, one, 0))
        w2 = Element(d, (one, g2, 0))
    else:
        w1 = Element(d, (compose(g1, g2), one, 0))
        w2 = Element(d, (one, compose(g2, g1), 0))
    failures = []
    for j in range(1, k + 1):
        lhs = power(w, j if e == 0 else 2 * j)
        rhs = compose(power(w1, j), power(w2, j))
        if lhs != rhs:
            failures.append(j)
    return SplittingReport(w, e, w1, w2, k, not failures, failures)


# ---------------------------------------------------------------------------
# commutator suprema and witness additivity


@dataclass
class CommutatorSupEstimate:
    value: Fraction
    witnesses: list[tuple[Element, Element]]
    certified: str  # exact | sampled_lower_bound
    sample_count: int = 0
    seed: int | None = None


def commutator_sup(q: QuasiMorphism, h: SubgroupSpec | None = None,
                   mode: str = "exact", budget: int = 2000, seed: int = 0,
                   size: int = 8, max_witnesses: int = 5) -> CommutatorSupEstimate:
    """Supremum of ``q([x, y])``.

    Exact over a finite subgroup closure; otherwise a seeded sampled lower
    bound over the whole domain.
    """
    best = ZERO
    witnesses: list[tuple[Element, Element]] = []

    def consider(x: Element, y: Element) -> None:
        nonlocal best, witnesses
        v = q(commutator_of(x, y))
        if v > best:
            best = v
            witnesses = [(x, y)]
        elif v == best and v > 0 and len(witnesses) < max_witnesses:
            witnesses.append((x, y))

    if mode == "exact":
        if h is None:
            raise ValueError("exact mode needs a subgroup")
        elems = sorted(closure_of(h), key=sort_key)
        for x in elems:
            for y in elems:
                consider(x, y)
        return CommutatorSupEstimate(best, witnesses, "exact", len(elems) ** 2)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    import random
    rng = random.Random(seed)
    for _ in range(budget):
        consider(random_element(q.domain, rng, size=size),
                 random_element(q.domain, rng, size=size))
    return CommutatorSupEstimate(best, witnesses, "sampled_lower_bound",
                                 budget, seed)


@dataclass
class WitnessAdditivityReport:
    combined: Fraction
    factor_values: list[Fraction]
    ok: bool
    commutation_checked: bool


def verify_witness_additivity(q: QuasiMorphism, factors: Sequence[SubgroupSpec],
                         witnesses: Sequence[tuple[Element, Element]]) -> WitnessAdditivityReport:
    """Check that commutator witnesses drawn from pairwise-commuting subgroups
    achieve exactly the sum of their individual values under ``q``.

    This certifies the lower-bound half of additivity of the commutator
    supremum over a commuting product; the upper half is a supremum over an
    unbounded set and is not certified here.
    """
    from .displacement import subgroups_commute
    if len(factors) != len(witnesses):
        raise ValueError("one witness pair per factor is required")
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if not subgroups_commute(factors[i], factors[j]):
                raise ValueError(f"factors {i} and {j} do not commute")
    x_all = identity(q.domain)
    y_all = identity(q.domain)
    parts = []
    for (x, y) in witnesses:
        x_all = compose(x_all, x)
        y_all = compose(y_all, y)
        parts.append(q(commutator_of(x, y)))
    combined = q(commutator_of(x_all, y_all))
    return WitnessAdditivityReport(combined, parts,
                                   combined == sum(parts, ZERO), True)


# ---------------------------------------------------------------------------
# scl bounds


@dataclass
class SclBounds:
    element: Element
    lower: Fraction | None
    lower_provenance: dict
    upper: Fraction | None
    upper_provenance: dict


def scl_bounds(w: Element, q: QuasiMorphism,
               defect_upper: Fraction | None = None, *, n: int = 64,
               cl_oracle: Callable[[Element], int] | None = None,
               powers: Sequence[int] = (1, 2, 4, 8)) -> SclBounds:
    """Certified-elementary bounds for the stable commutator length.

    Lower: the low end of the homogenization interval divided by twice the
    *declared* defect upper bound (clamped at zero, which scl always
    satisfies).  Upper: the best ``cl(w^k)/k`` an oracle provides; on finite
    groups this degenerates to zero.
    """
    lower = None
    lower_prov: dict = {}
    if defect_upper is not None:
        defect_upper = Fraction(defect_upper)
        if defect_upper == 0:
            if q(w) != 0:
                raise ValueError(
                    "defect 0 makes q a homomorphism, so q(w) != 0 is inconsistent")
            lower = ZERO
            lower_prov = {"qm": q.name, "defect_upper": "0/1", "n": n}
        else:
            interval = homogenize(q, w, n, defect_upper)
            lower = max(ZERO, interval.low / (2 * defect_upper))
            lower_prov = {"qm": q.name,
                          "defect_upper": str(defect_upper),
                          "n": n, "certified": True}
    upper = None
    upper_prov: dict = {}
    if cl_oracle is not None:
        for k in powers:
            v = Fraction(cl_oracle(power(w, k)), k)
            if upper is None or v < upper:
                upper = v
                upper_prov = {"n": k, "cl": str(Fraction(cl_oracle(power(w, k))))}
    if lower is not None and upper is not None:
        assert lower <= upper, "certified lower bound exceeded the upper bound"
    return SclBounds(w, lower, lower_prov, upper, upper_prov)
