"""Headline lattice predicates and the theorem-level verifiers.

Two independent characterizations of d-lattices, complementedness in
two computed forms, the seven equivalent conditions for non-
complementedness of a d-lattice, constructive witnesses for two of the
implications, and an end-to-end verdict plus a full classification
report for a single lattice.

The seven conditions are computed independently of one another, so
tests can check each implication arrow between them in isolation, and
lattices outside the d-lattice scope still get a full (possibly
divergent) condition vector as a negative control.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .congruences import (
    Congruence,
    all_congruences,
    is_balanced_congruence,
    principal_congruence,
)
from .core import (
    FiniteLattice,
    LatticeError,
    LatticeHomomorphism,
    SizeMismatch,
    canonical_form,
    is_homomorphism,
    is_surjective,
    quotient,
    standard_lattice,
    validate,
)
from .ideals import (
    ElementSet,
    annihilator_filter,
    annihilator_ideal,
    enumerate_filters,
    enumerate_ideals,
    filter_generated_by,
    ideal_generated_by,
    is_filter,
    is_ideal,
    is_maximal_filter,
    is_maximal_ideal,
    is_prime_filter,
    is_prime_ideal,
)


class NotNestedPrimes(LatticeError):
    """The two sets are not prime ideals in strict containment."""


class HomomorphismCheckFailed(LatticeError):
    """A constructed map failed verification; indicates an internal bug."""


class HasComplement(LatticeError):
    """A non-complemented element was required."""


class NotDLattice(LatticeError):
    """The operation is only defined on d-lattices."""


@dataclass(frozen=True)
class SevenConditions:
    """The seven equivalent ways a d-lattice can fail to be complemented.

    c1: some maximal filter's complement is not a maximal ideal
    c2: some maximal ideal's complement is not a maximal filter
    c3: there are prime ideals I1 strictly inside I2
    c4: there are prime filters F1 strictly inside F2
    c5: the lattice maps onto the 3-element chain
    c6: the lattice is not balanced
    c7: the lattice is not complemented
    """

    c1: bool
    c2: bool
    c3: bool
    c4: bool
    c5: bool
    c6: bool
    c7: bool

    def as_tuple(self) -> tuple[bool, ...]:
        return (self.c1, self.c2, self.c3, self.c4, self.c5, self.c6, self.c7)

    def all_equal(self) -> bool:
        return len(set(self.as_tuple())) == 1

    def to_dict(self) -> dict[str, bool]:
        return {f"c{i}": v for i, v in enumerate(self.as_tuple(), start=1)}


@dataclass(frozen=True)
class ReportCounts:
    ideals: int
    filters: int
    prime_ideals: int
    prime_filters: int
    congruences: int

    def to_dict(self) -> dict[str, int]:
        return {
            "congruences": self.congruences,
            "filters": self.filters,
            "ideals": self.ideals,
            "prime_filters": self.prime_filters,
            "prime_ideals": self.prime_ideals,
        }


@dataclass(frozen=True)
class ReportWitnesses:
    """Least witnesses (in the fixed element/enumeration order), when any.

    Each field is populated exactly when the matching report boolean
    makes it meaningful: nested primes for c3, the complementless
    element for c7, the unbalanced congruence for c6, and a non-prime
    maximal ideal or filter when the lattice is not a d-lattice.
    """

    nested_prime_ideals: Optional[tuple[ElementSet, ElementSet]] = None
    noncomplemented_element: Optional[int] = None
    unbalanced_congruence: Optional[Congruence] = None
    nonprime_maximal_ideal: Optional[ElementSet] = None
    nonprime_maximal_filter: Optional[ElementSet] = None

    def to_dict(self) -> dict[str, object]:
        nested = self.nested_prime_ideals
        return {
            "nested_prime_ideals": (
                None if nested is None else [str(nested[0]), str(nested[1])]
            ),
            "noncomplemented_element": self.noncomplemented_element,
            "nonprime_maximal_filter": (
                None if self.nonprime_maximal_filter is None else str(self.nonprime_maximal_filter)
            ),
            "nonprime_maximal_ideal": (
                None if self.nonprime_maximal_ideal is None else str(self.nonprime_maximal_ideal)
            ),
            "unbalanced_congruence": (
                None if self.unbalanced_congruence is None else str(self.unbalanced_congruence)
            ),
        }


@dataclass(frozen=True)
class PropertyReport:
    """Everything this package can say about one lattice."""

    size: int
    is_bounded: bool
    is_d_lattice: bool
    is_balanced: bool
    is_complemented: bool
    is_distributive: bool
    seven: SevenConditions
    counts: ReportCounts
    witnesses: ReportWitnesses
    convention_note: Optional[str] = None

    def to_dict(self) -> dict[str, object]:
        return {
            "convention_note": self.convention_note,
            "counts": self.counts.to_dict(),
            "is_balanced": self.is_balanced,
            "is_bounded": self.is_bounded,
            "is_complemented": self.is_complemented,
            "is_d_lattice": self.is_d_lattice,
            "is_distributive": self.is_distributive,
            "seven_conditions": self.seven.to_dict(),
            "size": self.size,
            "witnesses": self.witnesses.to_dict(),
        }


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of checking the seven-way equivalence on one lattice.

    Lattices that are not d-lattices are out of the theorem's scope;
    they pass vacuously and carry scope="not-a-d-lattice" so reports
    stay explicit about why nothing was asserted.
    """

    scope: str
    passed: bool
    seven: SevenConditions
    balanced: bool
    complemented: bool

    def to_dict(self) -> dict[str, object]:
        return {
            "balanced": self.balanced,
            "complemented": self.complemented,
            "passed": self.passed,
            "scope": self.scope,
            "seven_conditions": self.seven.to_dict(),
        }


@dataclass(frozen=True)
class NonComplementedWitness:
    """The constructive chain from a complementless element to condition c1.

    element has no complement; seed_filter is the filter generated by
    everything that joins it to top, together with the element itself;
    maximal_filter extends the seed; residual_ideal is the complement of
    the maximal filter and is provably not a maximal ideal, because
    extended_ideal (generated by the residual plus the element) is a
    proper ideal strictly above it.
    """

    element: int
    seed_filter: ElementSet
    maximal_filter: ElementSet
    residual_ideal: ElementSet
    extended_ideal: ElementSet


def is_d_lattice_definition(lattice: FiniteLattice) -> bool:
    """The defining implications, checked over all element pairs.

    For all a, c: if (a, top) lies in the congruence generated by
    (bottom, c) then a∨c = top, and dually with the roles of the bounds
    swapped.
    """
    n = lattice.size
    bottom, top = lattice.bottom, lattice.top
    meet, join = lattice.meet, lattice.join
    for c in range(n):
        from_bottom = principal_congruence(lattice, bottom, c)
        for a in range(n):
            if from_bottom.related(a, top) and join[a][c] != top:
                return False
        from_top = principal_congruence(lattice, top, c)
        for a in range(n):
            if from_top.related(a, bottom) and meet[a][c] != bottom:
                return False
    return True


def is_d_lattice_maximal_prime(lattice: FiniteLattice) -> bool:
    """Characterization: all maximal ideals and maximal filters are prime."""
    for ideal in enumerate_ideals(lattice):
        if is_maximal_ideal(lattice, ideal) and not is_prime_ideal(lattice, ideal):
            return False
    for filt in enumerate_filters(lattice):
        if is_maximal_filter(lattice, filt) and not is_prime_filter(lattice, filt):
            return False
    return True


def is_d_lattice(lattice: FiniteLattice) -> bool:
    """The defining-implications form (the characterization is cross-checked in tests)."""
    return is_d_lattice_definition(lattice)


def complements_of(lattice: FiniteLattice, a: int) -> ElementSet:
    """All b with a∧b = bottom and a∨b = top."""
    if not 0 <= a < lattice.size:
        raise SizeMismatch(f"element {a} outside lattice of size {lattice.size}")
    bottom, top = lattice.bottom, lattice.top
    meets, joins = lattice.meet[a], lattice.join[a]
    return ElementSet.from_iterable(
        lattice.size,
        (b for b in lattice.elements() if meets[b] == bottom and joins[b] == top),
    )


def is_complemented(lattice: FiniteLattice) -> bool:
    """Every element has a complement.

    Computed both as the direct two-equation scan and as nonemptiness of
    the intersection of the two annihilator sets; the forms are asserted
    to agree.
    """
    direct = all(len(complements_of(lattice, a)) > 0 for a in lattice.elements())
    via_annihilators = all(
        annihilator_filter(lattice, a).mask & annihilator_ideal(lattice, a).mask
        for a in lattice.elements()
    )
    assert direct == via_annihilators, "complement scans disagree"
    return direct


def is_distributive(lattice: FiniteLattice) -> bool:
    """Full triple scan of x∧(y∨z) = (x∧y)∨(x∧z)."""
    n = lattice.size
    meet, join = lattice.meet, lattice.join
    return all(
        meet[x][join[y][z]] == join[meet[x][y]][meet[x][z]]
        for x in range(n)
        for y in range(n)
        for z in range(n)
    )


def _maximal_filters(lattice: FiniteLattice) -> list[ElementSet]:
    return [f for f in enumerate_filters(lattice) if is_maximal_filter(lattice, f)]


def _maximal_ideals(lattice: FiniteLattice) -> list[ElementSet]:
    return [i for i in enumerate_ideals(lattice) if is_maximal_ideal(lattice, i)]


def _prime_ideals(lattice: FiniteLattice) -> list[ElementSet]:
    return [i for i in enumerate_ideals(lattice) if is_prime_ideal(lattice, i)]


def _prime_filters(lattice: FiniteLattice) -> list[ElementSet]:
    return [f for f in enumerate_filters(lattice) if is_prime_filter(lattice, f)]


def _nested_pair(sets: Sequence[ElementSet]) -> Optional[tuple[ElementSet, ElementSet]]:
    """First strictly-nested pair in enumeration order, if any."""
    for small in sets:
        for big in sets:
            if small.mask != big.mask and small.issubset(big):
                return (small, big)
    return None


def _maps_onto_three_chain(
    lattice: FiniteLattice, congruences: Sequence[Congruence]
) -> bool:
    """Some congruence has a quotient isomorphic to the 3-element chain."""
    three = standard_lattice("chain", 3)
    target = canonical_form(three)
    for cong in congruences:
        if cong.num_blocks != 3:
            continue
        image, _ = quotient(lattice, cong)
        if canonical_form(image) == target:
            return True
    return False


def seven_conditions(
    lattice: FiniteLattice, congruences: Optional[Sequence[Congruence]] = None
) -> SevenConditions:
    """All seven conditions, each computed by its own independent scan.

    ``congruences`` may be supplied to reuse an already-computed Con(L);
    it must equal all_congruences(lattice).
    """
    congs = all_congruences(lattice) if congruences is None else congruences

    c1 = False
    for filt in _maximal_filters(lattice):
        comp = filt.complement()
        if not is_ideal(lattice, comp) or not is_maximal_ideal(lattice, comp):
            c1 = True
            break
    c2 = False
    for ideal in _maximal_ideals(lattice):
        comp = ideal.complement()
        if not is_filter(lattice, comp) or not is_maximal_filter(lattice, comp):
            c2 = True
            break
    c3 = _nested_pair(_prime_ideals(lattice)) is not None
    c4 = _nested_pair(_prime_filters(lattice)) is not None
    c5 = _maps_onto_three_chain(lattice, congs)
    c6 = not all(is_balanced_congruence(lattice, c) for c in congs)
    c7 = not is_complemented(lattice)
    return SevenConditions(c1, c2, c3, c4, c5, c6, c7)


def three_chain_quotient_from_nested_primes(
    lattice: FiniteLattice, inner: ElementSet, outer: ElementSet
) -> LatticeHomomorphism:
    """The surjection onto chain(3) induced by prime ideals inner ⊊ outer.

    Maps inner to 0, outer∖inner to 1, and the rest to 2; the
    homomorphism property and surjectivity are machine-checked before
    the map is returned.
    """
    try:
        inner_prime = is_prime_ideal(lattice, inner)
        outer_prime = is_prime_ideal(lattice, outer)
    except LatticeError as exc:
        raise NotNestedPrimes(str(exc)) from exc
    if not inner_prime or not outer_prime:
        raise NotNestedPrimes("both sets must be prime ideals")
    if inner.mask == outer.mask or not inner.issubset(outer):
        raise NotNestedPrimes("first prime ideal must lie strictly inside the second")
    three = standard_lattice("chain", 3)
    levels = tuple(
        0 if x in inner else 1 if x in outer else 2 for x in lattice.elements()
    )
    hom = LatticeHomomorphism(lattice, three, levels)
    if not is_homomorphism(hom) or not is_surjective(hom):
        raise HomomorphismCheckFailed("three-level map failed verification")
    return hom


def witness_from_noncomplemented(lattice: FiniteLattice, a: int) -> NonComplementedWitness:
    """Build and verify the filter/ideal chain showing condition c1.

    Requires a d-lattice and an element with no complement.  The maximal
    filter is grown greedily: repeatedly adjoin the least element whose
    filter closure stays proper.  Every witness invariant is re-checked
    before returning.
    """
    if not is_d_lattice(lattice):
        raise NotDLattice("witness construction is defined on d-lattices only")
    blockers = annihilator_filter(lattice, a)
    killers = annihilator_ideal(lattice, a)
    if blockers.mask & killers.mask:
        raise HasComplement(f"element {a} has a complement")

    n = lattice.size
    full = (1 << n) - 1
    seed = filter_generated_by(lattice, blockers.with_element(a))
    maximal = seed
    grew = True
    while grew:
        grew = False
        for e in range(n):
            if e in maximal:
                continue
            candidate = filter_generated_by(lattice, maximal.with_element(e))
            if candidate.mask != full:
                maximal = candidate
                grew = True
                break
    residual = maximal.complement()
    extended = ideal_generated_by(lattice, residual.with_element(a))

    assert seed.isdisjoint(killers), "seed filter meets the annihilator ideal"
    assert is_maximal_filter(lattice, maximal), "greedy extension is not maximal"
    assert is_ideal(lattice, residual), "complement of the maximal filter is not an ideal"
    assert extended.mask != full, "extended ideal is improper"
    assert residual.issubset(extended) and residual.mask != extended.mask, (
        "extended ideal does not strictly contain the residual"
    )
    assert extended.isdisjoint(blockers), "extended ideal meets the annihilator filter"
    assert not is_maximal_ideal(lattice, residual), "residual ideal is maximal"
    return NonComplementedWitness(
        element=a,
        seed_filter=seed,
        maximal_filter=maximal,
        residual_ideal=residual,
        extended_ideal=extended,
    )


def verify_theorem(lattice: FiniteLattice) -> TheoremVerdict:
    """Check the seven-way equivalence plus balanced ⇔ complemented.

    On a d-lattice the verdict fails iff any two conditions differ or
    the balanced/complemented booleans split; off-scope lattices pass
    vacuously with an explicit scope marker.
    """
    congs = all_congruences(lattice)
    seven = seven_conditions(lattice, congs)
    balanced = not seven.c6
    complemented = not seven.c7
    if not is_d_lattice(lattice):
        return TheoremVerdict("not-a-d-lattice", True, seven, balanced, complemented)
    passed = seven.all_equal() and (balanced == complemented)
    return TheoremVerdict("d-lattice", passed, seven, balanced, complemented)


def classify(lattice: FiniteLattice) -> PropertyReport:
    """Aggregate every predicate, count, and least witness for one lattice."""
    congs = all_congruences(lattice)
    seven = seven_conditions(lattice, congs)
    d_lattice = is_d_lattice(lattice)

    ideals = enumerate_ideals(lattice)
    filters = enumerate_filters(lattice)
    counts = ReportCounts(
        ideals=len(ideals),
        filters=len(filters),
        prime_ideals=len(_prime_ideals(lattice)),
        prime_filters=len(_prime_filters(lattice)),
        congruences=len(congs),
    )

    nested = _nested_pair(_prime_ideals(lattice)) if seven.c3 else None
    bad_element = None
    if seven.c7:
        bad_element = next(
            a for a in lattice.elements() if len(complements_of(lattice, a)) == 0
        )
    unbalanced = None
    if seven.c6:
        unbalanced = next(
            c for c in congs if not is_balanced_congruence(lattice, c)
        )
    bad_ideal = None
    bad_filter = None
    if not d_lattice:
        bad_ideal = next(
            (
                i
                for i in ideals
                if is_maximal_ideal(lattice, i) and not is_prime_ideal(lattice, i)
            ),
            None,
        )
        bad_filter = next(
            (
                f
                for f in filters
                if is_maximal_filter(lattice, f) and not is_prime_filter(lattice, f)
            ),
            None,
        )
    note = None
    if lattice.size == 1:
        note = (
            "one-element lattice: d-lattice, complemented and balanced "
            "hold by convention (all defining implications are vacuous)"
        )
    return PropertyReport(
        size=lattice.size,
        is_bounded=not validate(lattice),
        is_d_lattice=d_lattice,
        is_balanced=not seven.c6,
        is_complemented=not seven.c7,
        is_distributive=is_distributive(lattice),
        seven=seven,
        counts=counts,
        witnesses=ReportWitnesses(
            nested_prime_ideals=nested,
            noncomplemented_element=bad_element,
            unbalanced_congruence=unbalanced,
            nonprime_maximal_ideal=bad_ideal,
            nonprime_maximal_filter=bad_filter,
        ),
        convention_note=note,
    )
