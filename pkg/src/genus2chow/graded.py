"""Graded pieces of quotient rings as finitely generated abelian groups.

A degree-d piece of ZZ[x1..xk]/I is presented by the lattice of degree-d
multiples of the relation generators inside the free module on the degree-d
monomials; Smith normal form of that lattice yields the free rank, the
torsion invariants and explicit coordinates.  This route is independent of
the Groebner engine and doubles as its oracle: a class is zero in the graded
piece exactly when its normal form vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import intlinalg
from .groebner import RingSpec
from .ring import IntPolynomial, Ring


class InfiniteKernelError(ValueError):
    """Enumeration was requested for a kernel with positive free rank."""


def vector_of(monomials: Sequence[tuple], p: IntPolynomial) -> list[int]:
    """Coefficient vector of a homogeneous polynomial in a monomial basis."""
    index = {m: i for i, m in enumerate(monomials)}
    vec = [0] * len(monomials)
    for exps, coeff in p.term_map().items():
        vec[index[exps]] = coeff
    return vec


def polynomial_of(ring: Ring, monomials: Sequence[tuple], vec: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(ring, {m: c for m, c in zip(monomials, vec) if c})


def relation_rows(
    spec: RingSpec, d: int, extra: Iterable[IntPolynomial] = ()
) -> tuple[list[tuple], list[list[int]]]:
    """Degree-d monomial basis and the lattice rows of degree-d relation multiples."""
    ring = spec.ring
    monomials = ring.monomials_of_degree(d)
    rows = []
    for g in list(spec.relations.generators) + list(extra):
        if not g:
            continue
        e = g.weighted_degree()
        if e > d:
            continue
        for mult in ring.monomials_of_degree(d - e):
            mono = IntPolynomial(ring, {mult: 1}, _trusted=True)
            rows.append(vector_of(monomials, mono * g))
    return monomials, rows


@dataclass(frozen=True)
class GradedPieceGroup:
    """One graded piece, as ZZ^free_rank plus cyclic torsion summands.

    ``basis_change`` maps coefficient vectors in the monomial basis to
    Smith-normal coordinates (vector times matrix); coordinate i is read
    modulo ``diagonal[i]`` (0 meaning a free coordinate).
    """

    degree: int
    monomial_basis: tuple[tuple, ...]
    free_rank: int
    torsion_invariants: tuple[int, ...]
    basis_change: tuple[tuple, ...]
    diagonal: tuple[int, ...]
    ring: Ring = field(compare=False)

    def coordinates(self, p: IntPolynomial) -> list[int]:
        deg = p.weighted_degree()
        if deg is not None and deg != self.degree:
            raise ValueError(f"expected degree {self.degree}, got {deg}")
        vec = vector_of(self.monomial_basis, p)
        return intlinalg.matvec_left(vec, [list(r) for r in self.basis_change])

    def residue(self, p: IntPolynomial) -> tuple[int, ...]:
        """Canonical coordinates: entry i reduced modulo diagonal[i]."""
        coords = self.coordinates(p)
        return tuple(
            c % d if d else c for c, d in zip(coords, self.diagonal)
        )

    def is_zero(self, p: IntPolynomial) -> bool:
        return not any(self.residue(p))

    def order(self) -> int | None:
        """Number of elements, or None when the free rank is positive."""
        if self.free_rank:
            return None
        n = 1
        for t in self.torsion_invariants:
            n *= t
        return n


def graded_piece(
    spec: RingSpec, d: int, extra: Iterable[IntPolynomial] = ()
) -> GradedPieceGroup:
    """The degree-d piece of the quotient ring, by Smith normal form."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    monomials, rows = relation_rows(spec, d, extra)
    n = len(monomials)
    if rows:
        snf = intlinalg.smith_normal_form(rows, ncols=n)
        diagonal = list(snf.diagonal) + [0] * (n - len(snf.diagonal))
        basis_change = snf.V
    else:
        diagonal = [0] * n
        basis_change = intlinalg.identity(n)
    return GradedPieceGroup(
        degree=d,
        monomial_basis=tuple(monomials),
        free_rank=sum(1 for x in diagonal if x == 0),
        torsion_invariants=tuple(x for x in diagonal if x >= 2),
        basis_change=tuple(tuple(r) for r in basis_change),
        diagonal=tuple(diagonal),
        ring=spec.ring,
    )


def membership_matches_normal_form(spec: RingSpec, d: int) -> bool:
    """Oracle agreement in degree d: for every monomial, vanishing in the
    graded piece coincides with vanishing of the Groebner normal form."""
    piece = graded_piece(spec, d)
    ring = spec.ring
    for exps in piece.monomial_basis:
        mono = IntPolynomial(ring, {exps: 1}, _trusted=True)
        if piece.is_zero(mono) != spec.contains(mono):
            return False
    return True


# -- kernels of multiplication maps -----------------------------------------------


def _kernel_lattice(
    spec: RingSpec, m: IntPolynomial, d: int
) -> tuple[list[tuple], list[list[int]], list[list[int]]]:
    """Monomial basis in degree d, rows of the degree-d relation lattice, and
    a basis of the lattice of vectors whose product with m lies in the
    relation lattice one degree up."""
    ring = spec.ring
    monomials, rel_rows = relation_rows(spec, d)
    n = len(monomials)
    if not m:
        return monomials, rel_rows, intlinalg.identity(n)
    e = m.weighted_degree()
    target_monomials, target_rel_rows = relation_rows(spec, d + e)
    mult_rows = []
    for exps in monomials:
        mono = IntPolynomial(ring, {exps: 1}, _trusted=True)
        mult_rows.append(vector_of(target_monomials, mono * m))
    stacked = mult_rows + target_rel_rows
    kernel = intlinalg.left_kernel(stacked, ncols=len(target_monomials))
    projected = [row[:n] for row in kernel]
    basis = intlinalg.lattice_basis(projected, n)
    return monomials, rel_rows, basis


@dataclass
class KernelPiece:
    """The kernel of multiplication by a fixed class, in one degree."""

    degree: int
    monomials: list[tuple]
    lattice: list[list[int]]          # basis of preimage lattice in ZZ^n
    relation_lattice: list[list[int]]
    free_rank: int
    torsion_invariants: tuple[int, ...]
    generators: list[IntPolynomial]   # lifts of the quotient-group generators
    generator_orders: list[int]       # 0 marks a free generator
    generated_by_candidates: bool | None = None

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion_invariants


def _quotient_group(
    ring: Ring,
    monomials: Sequence[tuple],
    lattice: list[list[int]],
    sub_rows: list[list[int]],
) -> tuple[int, tuple[int, ...], list[IntPolynomial], list[int]]:
    """Structure of lattice / <sub_rows> with polynomial lifts of generators."""
    if not lattice:
        return 0, (), [], []
    coeff_rows = []
    for x in intlinalg.solve_left_many(lattice, sub_rows):
        if x is None:
            raise AssertionError("sublattice is not contained in the lattice")
        coeff_rows.append(x)
    s = len(lattice)
    if coeff_rows:
        snf = intlinalg.smith_normal_form(coeff_rows, ncols=s)
        diagonal = list(snf.diagonal) + [0] * (s - len(snf.diagonal))
        vinv = snf.Vinv
    else:
        diagonal = [0] * s
        vinv = intlinalg.identity(s)
    generators = []
    orders = []
    for i, dval in enumerate(diagonal):
        if dval == 1:
            continue
        vec = intlinalg.matvec_left(vinv[i], lattice)
        generators.append(polynomial_of(ring, monomials, vec))
        orders.append(dval)
    free_rank = sum(1 for dv in diagonal if dv == 0)
    torsion = tuple(dv for dv in diagonal if dv >= 2)
    return free_rank, torsion, generators, orders


def multiplication_kernel(
    spec: RingSpec,
    m: IntPolynomial,
    d_max: int,
    candidates: Sequence[IntPolynomial] = (),
) -> list[KernelPiece]:
    """Kernel of multiplication by m on each graded piece of degree <= d_max.

    When candidate classes are supplied, each piece also records whether the
    candidates generate it over the ring, i.e. whether the degree-d lattice
    spanned by all monomial multiples of the candidates together with the
    relations equals the full kernel lattice.
    """
    ring = spec.ring
    pieces = []
    for d in range(d_max + 1):
        monomials, rel_rows, kernel_basis = _kernel_lattice(spec, m, d)
        free_rank, torsion, gens, orders = _quotient_group(
            ring, monomials, kernel_basis, rel_rows
        )
        piece = KernelPiece(
            degree=d,
            monomials=monomials,
            lattice=kernel_basis,
            relation_lattice=rel_rows,
            free_rank=free_rank,
            torsion_invariants=torsion,
            generators=gens,
            generator_orders=orders,
        )
        if candidates:
            spanned = [list(r) for r in rel_rows]
            for cand in candidates:
                e = cand.weighted_degree()
                if e is None or e > d:
                    continue
                for mult in ring.monomials_of_degree(d - e):
                    mono = IntPolynomial(ring, {mult: 1}, _trusted=True)
                    spanned.append(vector_of(monomials, mono * cand))
            piece.generated_by_candidates = intlinalg.lattice_basis(
                spanned, len(monomials)
            ) == intlinalg.lattice_basis(kernel_basis, len(monomials))
        pieces.append(piece)
    return pieces


def enumerate_kernel_elements(
    spec: RingSpec, m: IntPolynomial, d: int
) -> list[IntPolynomial]:
    """All nonzero elements of the degree-d kernel of multiplication by m,
    as canonical normal forms.

    Raises InfiniteKernelError when the kernel piece has positive free rank.
    """
    ring = spec.ring
    monomials, rel_rows, kernel_basis = _kernel_lattice(spec, m, d)
    free_rank, torsion, gens, orders = _quotient_group(
        ring, monomials, kernel_basis, rel_rows
    )
    if free_rank:
        raise InfiniteKernelError(
            f"kernel in degree {d} has free rank {free_rank}; not enumerable"
        )
    elements: set[IntPolynomial] = set()
    combos = [[]]
    for order in orders:
        combos = [c + [k] for c in combos for k in range(order)]
    for combo in combos:
        acc = ring.zero()
        for k, g in zip(combo, gens):
            acc = acc + k * g
        nf = spec.normal_form(acc)
        if nf:
            elements.add(nf)
    expected = 1
    for t in torsion:
        expected *= t
    if len(elements) != expected - 1:
        raise AssertionError("kernel classes did not reduce to distinct normal forms")
    return sorted(
        elements, key=lambda p: ring.monomial_key(p.leading_term()[0]), reverse=True
    )
