"""Strong Groebner bases over the integers for homogeneous ideals.

The rings in this package carry essential torsion (relations like 2*gamma = 0
and 3*alpha2 = 0), so field-coefficient bases are useless here.  A *strong*
basis over ZZ guarantees that every leading term of the ideal is divisible,
monomial and coefficient alike, by the leading term of some basis element;
completion therefore processes gcd combinations alongside the classical
s-polynomials.  Normal forms reduce every coefficient to its smallest
nonnegative residue, which makes them unique and path-independent.
"""

from __future__ import annotations

import heapq
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Sequence

from .ring import IntPolynomial, Ring, RingMismatchError

_MAX_PAIR_STEPS = 200_000
# Completion over ZZ can suffer severe coefficient growth on adversarial
# inputs (unlike the small torsion ideals this package actually computes
# with).  Rather than grinding on huge integers, completion aborts cleanly
# once a basis element's coefficients pass this bit size; the bound sits far
# above anything a graded Chow-ring presentation produces.
_MAX_COEFF_BITS = 32_768


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = s*a + t*b and g = gcd(a, b) > 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class Ideal:
    """A homogeneous ideal, given by generators over a common ring.

    Degree-0 generators (integer constants) are allowed; they present
    coefficient reduction, which is how mod-p quotients are encoded.
    """

    __slots__ = ("ring", "generators")

    def __init__(self, ring: Ring, generators: Iterable[IntPolynomial]):
        gens = tuple(generators)
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError(f"generator {g!r} is not over {ring!r}")
            g.weighted_degree()  # raises InhomogeneousError on mixed degrees
        self.ring = ring
        self.generators = gens

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.generators)
        return f"Ideal({inner})"

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.ring == other.ring
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.ring, self.generators))

    def plus(self, *extra: IntPolynomial) -> "Ideal":
        return Ideal(self.ring, self.generators + tuple(extra))


def _monomial_divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


class StrongGroebnerBasis:
    """A completed, interreduced strong basis with unique normal forms."""

    order = "grevlex"

    __slots__ = ("ring", "elements", "_leads")

    def __init__(self, ring: Ring, elements: Sequence[IntPolynomial]):
        self.ring = ring
        self.elements = tuple(elements)
        self._leads = tuple(
            (exps, coeff, g) for g in self.elements for exps, coeff in [g.leading_term()]
        )

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.elements)
        return f"StrongGroebnerBasis({inner})"

    def normal_form(self, p: IntPolynomial) -> IntPolynomial:
        """The unique fully reduced remainder of p; zero iff p is in the ideal."""
        if p.ring != self.ring:
            raise RingMismatchError(f"{p!r} is not over {self.ring!r}")
        return _reduce(p, self._leads)

    def contains(self, p: IntPolynomial) -> bool:
        return not self.normal_form(p)

    def verify_complete(self) -> None:
        """Check closure: every s- and gcd-combination reduces to zero."""
        elems = self.elements
        for i in range(len(elems)):
            for j in range(i + 1, len(elems)):
                for comb in _critical_combinations(elems[i], elems[j]):
                    if _reduce(comb, self._leads):
                        raise AssertionError(
                            f"basis not closed: pair ({elems[i]}, {elems[j]})"
                        )


def _neg_key(key: tuple) -> tuple:
    # Reverses the order of monomial keys, so a min-heap pops the largest.
    return (-key[0], tuple(-x for x in key[1]))


def _reduce(p: IntPolynomial, leads) -> IntPolynomial:
    ring = p.ring
    key = ring.monomial_key
    work = p.term_map()
    heap = [(_neg_key(key(m)), m) for m in work]
    heapq.heapify(heap)
    out: dict[tuple, int] = {}
    while heap:
        _, mono = heapq.heappop(heap)
        if mono not in work:
            continue
        coeff = work[mono]
        best = None
        for lexps, lcoeff, g in leads:
            if _monomial_divides(lexps, mono):
                cand = (lcoeff, key(lexps))
                if best is None or cand < best[0]:
                    best = (cand, lexps, lcoeff, g)
        if best is None:
            out[mono] = coeff
            del work[mono]
            continue
        _, lexps, lcoeff, g = best
        q, r = divmod(coeff, lcoeff)
        if q:
            shift = tuple(a - b for a, b in zip(mono, lexps))
            for gexps, gcoeff in g.term_map().items():
                tgt = tuple(a + b for a, b in zip(shift, gexps))
                v = work.get(tgt, 0) - q * gcoeff
                if v:
                    if tgt not in work:
                        heapq.heappush(heap, (_neg_key(key(tgt)), tgt))
                    work[tgt] = v
                else:
                    work.pop(tgt, None)
        if r:
            out[mono] = r
            work.pop(mono, None)
    return IntPolynomial(ring, out, _trusted=True)


def _normalize_sign(p: IntPolynomial) -> IntPolynomial:
    _, c = p.leading_term()
    return -p if c < 0 else p


def _critical_combinations(f: IntPolynomial, g: IntPolynomial):
    """The gcd-polynomial of f and g (when neither leading coefficient
    divides the other) followed by their s-polynomial.

    The gcd combination comes first: adding it shrinks the leading
    coefficients available for reduction, which tames the coefficient growth
    the s-polynomial's lcm multipliers would otherwise amplify.
    """
    ring = f.ring
    (fe, fc), (ge, gc) = f.leading_term(), g.leading_term()
    lcm_exps = tuple(max(a, b) for a, b in zip(fe, ge))
    shift_f = tuple(a - b for a, b in zip(lcm_exps, fe))
    shift_g = tuple(a - b for a, b in zip(lcm_exps, ge))
    mono_f = IntPolynomial(ring, {shift_f: 1}, _trusted=True)
    mono_g = IntPolynomial(ring, {shift_g: 1}, _trusted=True)
    if fc % gc and gc % fc:
        d, s, t = _xgcd(fc, gc)
        yield s * mono_f * f + t * mono_g * g
    c = fc * gc // gcd(fc, gc)
    yield (c // fc) * mono_f * f - (c // gc) * mono_g * g


def strong_groebner(ideal: Ideal) -> StrongGroebnerBasis:
    """Complete the generators to a strong Groebner basis over ZZ.

    The working basis stays interreduced: a new element retires every live
    element whose leading term it divides, and the retired elements are fed
    back through reduction.  Correctness does not depend on these heuristics:
    the final basis is certified by closure of all critical combinations and
    by reducing every original generator to zero.  Termination is guaranteed
    (the ring is Noetherian); a step cap guards against implementation bugs.
    """
    ring = ideal.ring
    basis: list[IntPolynomial] = []     # append-only; alive flags what counts
    alive: list[bool] = []
    live_leads: list[tuple] = []        # (lead exps, lead coeff, poly) of live ones
    queue: list[tuple] = []
    counter = 0

    def rebuild_leads():
        live_leads.clear()
        for ok, g in zip(alive, basis):
            if ok:
                exps, coeff = g.leading_term()
                live_leads.append((exps, coeff, g))

    def push_pairs(new_index: int):
        nonlocal counter
        ge, _ = basis[new_index].leading_term()
        for i in range(new_index):
            if not alive[i]:
                continue
            fe, _ = basis[i].leading_term()
            lcm_exps = tuple(max(a, b) for a, b in zip(fe, ge))
            counter += 1
            heapq.heappush(
                queue, (ring.monomial_degree(lcm_exps), counter, i, new_index)
            )

    def add(p0: IntPolynomial):
        stack = [p0]
        while stack:
            p = _reduce(stack.pop(), live_leads)
            if not p:
                continue
            p = _normalize_sign(p)
            if max(abs(c) for c in p.term_map().values()).bit_length() > _MAX_COEFF_BITS:
                raise RuntimeError(
                    "coefficient growth exceeded the configured bound;"
                    " this ideal is outside the engine's intended regime"
                )
            pexps, pcoeff = p.leading_term()
            for i, g in enumerate(basis):
                if not alive[i]:
                    continue
                gexps, gcoeff = g.leading_term()
                if _monomial_divides(pexps, gexps) and gcoeff % pcoeff == 0:
                    alive[i] = False
                    stack.append(g)
            basis.append(p)
            alive.append(True)
            rebuild_leads()
            push_pairs(len(basis) - 1)

    for g in ideal.generators:
        if g:
            add(g)

    steps = 0
    while queue:
        steps += 1
        if steps > _MAX_PAIR_STEPS:
            raise RuntimeError("Groebner completion exceeded the step cap")
        _, _, i, j = heapq.heappop(queue)
        # Pairs of retired elements are still processed: their combinations
        # are ideal members, so at worst they reduce to zero.
        for comb in _critical_combinations(basis[i], basis[j]):
            remainder = _reduce(comb, live_leads)
            if remainder:
                add(remainder)

    reduced = _interreduce(ring, [g for ok, g in zip(alive, basis) if ok])
    result = StrongGroebnerBasis(ring, reduced)
    result.verify_complete()
    for g in ideal.generators:
        if result.normal_form(g):
            raise AssertionError("completed basis does not contain a generator")
    return result


def _interreduce(ring: Ring, basis: list[IntPolynomial]) -> list[IntPolynomial]:
    elems = [_normalize_sign(g) for g in basis if g]
    for _ in range(200):
        elems.sort(key=lambda g: ring.monomial_key(g.leading_term()[0]))
        changed = False
        for i in range(len(elems)):
            others = [
                (e, c, g)
                for k, g in enumerate(elems)
                if k != i and g
                for e, c in [g.leading_term()]
            ]
            r = _reduce(elems[i], others)
            if r != elems[i]:
                changed = True
                elems[i] = _normalize_sign(r) if r else ring.zero()
        elems = [g for g in elems if g]
        if not changed:
            break
    else:
        raise RuntimeError("interreduction did not stabilize")
    elems.sort(key=lambda g: ring.monomial_key(g.leading_term()[0]))
    return elems


def normal_form(p: IntPolynomial, basis: StrongGroebnerBasis) -> IntPolynomial:
    return basis.normal_form(p)


def ideal_contains(ideal_or_basis, p: IntPolynomial) -> bool:
    """Membership via normal form (true iff the normal form vanishes)."""
    basis = (
        ideal_or_basis
        if isinstance(ideal_or_basis, StrongGroebnerBasis)
        else strong_groebner(ideal_or_basis)
    )
    return basis.contains(p)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Mutual containment of generators, hence equality of ideals."""
    if I.ring != J.ring:
        raise RingMismatchError("ideals live over different rings")
    basis_i = strong_groebner(I)
    basis_j = strong_groebner(J)
    return all(basis_j.contains(g) for g in I.generators) and all(
        basis_i.contains(g) for g in J.generators
    )


class RingSpec:
    """A graded ring presentation: weighted variables plus a relation ideal.

    This is the universal container for every Chow ring in the pipeline.
    ``aliases`` records intended renamings (for example the Hodge classes
    standing in for the doubled-torus classes) without affecting any
    computation.
    """

    __slots__ = ("ring", "relations", "aliases", "__dict__")

    def __init__(self, ring: Ring, relations: Ideal, aliases: Mapping[str, str] | None = None):
        if relations.ring != ring:
            raise RingMismatchError("relations live over a different ring")
        self.ring = ring
        self.relations = relations
        self.aliases = dict(aliases or {})

    @classmethod
    def build(
        cls,
        variables: Sequence[tuple],
        relation_texts: Sequence[str] = (),
        aliases: Mapping[str, str] | None = None,
    ) -> "RingSpec":
        ring = Ring(*variables)
        gens = [ring.parse(text) for text in relation_texts]
        return cls(ring, Ideal(ring, gens), aliases)

    def __repr__(self):
        return f"RingSpec({self.ring!r}, {self.relations!r})"

    @cached_property
    def groebner(self) -> StrongGroebnerBasis:
        return strong_groebner(self.relations)

    def normal_form(self, p: IntPolynomial) -> IntPolynomial:
        return self.groebner.normal_form(p)

    def contains(self, p: IntPolynomial) -> bool:
        return self.groebner.contains(p)

    def same_ideal(self, other: "Ideal | RingSpec") -> bool:
        ideal = other.relations if isinstance(other, RingSpec) else other
        return ideal_equal(self.relations, ideal)

    def with_relations(self, *extra: IntPolynomial) -> "RingSpec":
        return RingSpec(self.ring, self.relations.plus(*extra), self.aliases)

    def parse(self, text: str) -> IntPolynomial:
        return self.ring.parse(text)
