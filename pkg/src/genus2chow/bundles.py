"""Pushforward calculus for projective bundles of rank-2 bundles.

The multiplication maps (P E)^j x P(Sym^(r-j) E) -> P(Sym^r E) admit a
distinguished system of classes s_r^j, computed by a two-term recurrence in
the hyperplane class.  In this basis the pushforwards along multiplication,
squaring and cubing (Veronese) maps, diagonals, subbundle inclusions and the
Segre map are all given by small universal formulas, which this module
implements as exact polynomial operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

from .ring import IntPolynomial, Ring, RingMismatchError


@dataclass(frozen=True)
class BundleClasses:
    """First and second Chern classes of a rank-2 bundle."""

    c1: IntPolynomial
    c2: IntPolynomial

    def __post_init__(self):
        if self.c1.ring != self.c2.ring:
            raise RingMismatchError("c1 and c2 must live in one ring")
        d1 = self.c1.weighted_degree()
        d2 = self.c2.weighted_degree()
        if d1 not in (None, 1) or d2 not in (None, 2):
            raise ValueError("c1 must have degree 1 and c2 degree 2")

    @property
    def ring(self) -> Ring:
        return self.c1.ring


@dataclass(frozen=True)
class SrjTable:
    """The classes s_r^0 .. s_r^r expanded in the hyperplane class."""

    r: int
    hyperplane: str
    classes: BundleClasses
    entries: tuple[IntPolynomial, ...]

    def __getitem__(self, j: int) -> IntPolynomial:
        return self.entries[j]


def srj_table(r: int, classes: BundleClasses, hyperplane: str = "t") -> SrjTable:
    """Build the s_r^j table from the recurrence
    s_r^0 = 1,  s_r^(j+1) = (t + j c1) s_r^j + j (r + 1 - j) c2 s_r^(j-1).
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    ring = classes.ring
    t = ring.var(hyperplane)
    entries = [ring.one()]
    for j in range(r):
        prev = entries[j]
        prev2 = entries[j - 1] if j >= 1 else ring.zero()
        entries.append((t + j * classes.c1) * prev + j * (r + 1 - j) * classes.c2 * prev2)
    return SrjTable(r=r, hyperplane=hyperplane, classes=classes, entries=tuple(entries))


def mult_pushforward(a: int, alpha: int, b: int, beta: int) -> tuple[int, tuple[int, int]]:
    """Pushforward of s_a^alpha x s_b^beta along the multiplication map:
    the binomial coefficient on s_(a+b)^(alpha+beta)."""
    if not (0 <= alpha <= a and 0 <= beta <= b):
        raise ValueError(f"indices out of range: ({alpha},{a}), ({beta},{b})")
    coefficient = comb(a - alpha + b - beta, a - alpha)
    return coefficient, (alpha + beta, a + b)


class SClassCombo:
    """A ZZ[base]-linear combination of the classes s_r^0 .. s_r^r."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs: Sequence[IntPolynomial]):
        if len(coeffs) != r + 1:
            raise ValueError(f"need {r + 1} coefficients for r = {r}")
        self.r = r
        self.coeffs = tuple(coeffs)

    @property
    def ring(self) -> Ring:
        return self.coeffs[0].ring

    @classmethod
    def unit(cls, ring: Ring, r: int, j: int) -> "SClassCombo":
        coeffs = [ring.zero()] * (r + 1)
        coeffs[j] = ring.one()
        return cls(r, coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, SClassCombo)
            and self.r == other.r
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.r, self.coeffs))

    def __add__(self, other: "SClassCombo") -> "SClassCombo":
        if self.r != other.r:
            raise ValueError("cannot add combinations for different r")
        return SClassCombo(self.r, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "SClassCombo") -> "SClassCombo":
        if self.r != other.r:
            raise ValueError("cannot subtract combinations for different r")
        return SClassCombo(self.r, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, factor) -> "SClassCombo":
        return SClassCombo(self.r, [factor * c for c in self.coeffs])

    def push_multiply(self, other: "SClassCombo") -> "SClassCombo":
        """Pushforward of the product along multiplication to r = self.r + other.r."""
        ring = self.ring
        r = self.r + other.r
        out = [ring.zero()] * (r + 1)
        for i, ci in enumerate(self.coeffs):
            if not ci:
                continue
            for j, cj in enumerate(other.coeffs):
                if not cj:
                    continue
                coefficient, (index, _) = mult_pushforward(self.r, i, other.r, j)
                out[index] = out[index] + coefficient * ci * cj
        return SClassCombo(r, out)

    def expand(self, table: SrjTable) -> IntPolynomial:
        """Polynomial in the hyperplane class, via an expanded table."""
        if table.r != self.r:
            raise ValueError("table does not match this combination")
        acc = self.ring.zero()
        for c, entry in zip(self.coeffs, table.entries):
            if c:
                acc = acc + c * entry
        return acc

    def __str__(self):
        parts = [f"({c})*s{self.r}^{j}" for j, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"


def to_combo(p: IntPolynomial, table: SrjTable) -> SClassCombo:
    """Express a polynomial of hyperplane-degree <= r in the s_r^j basis.

    The table entries are monic of degree j in the hyperplane class, so the
    conversion is exact triangular back-substitution with integer polynomial
    coefficients.
    """
    ring = p.ring
    t_index = ring.index(table.hyperplane)
    remainder = p
    coeffs = [ring.zero()] * (table.r + 1)
    for j in range(table.r, -1, -1):
        cj_terms = {}
        for exps, c in remainder.term_map().items():
            if exps[t_index] == j:
                reduced = list(exps)
                reduced[t_index] = 0
                cj_terms[tuple(reduced)] = c
        if not cj_terms:
            continue
        cj = IntPolynomial(ring, cj_terms, _trusted=True)
        coeffs[j] = cj
        remainder = remainder - cj * table.entries[j]
    if remainder:
        raise ValueError(f"hyperplane degree exceeds r = {table.r}")
    return SClassCombo(table.r, coeffs)


def diagonal_class(n: int, classes: BundleClasses, hyperplanes: Sequence[str]) -> IntPolynomial:
    """Class of the small diagonal of (P E)^n, for n = 2 or 3."""
    ring = classes.ring
    if n == 2:
        x1, x2 = (ring.var(h) for h in hyperplanes)
        return x1 + x2 + classes.c1
    if n == 3:
        x1, x2, x3 = (ring.var(h) for h in hyperplanes)
        return (
            (x1 * x2 + x2 * x3 + x3 * x1)
            + (x1 + x2 + x3) * classes.c1
            + classes.c1 * classes.c1
            - classes.c2
        )
    raise ValueError(f"unsupported diagonal arity {n}")


def veronese_pushforward(k: int, j: int, classes: BundleClasses) -> SClassCombo:
    """Pushforward of s_1^j along the squaring (k = 2) or cubing (k = 3) map,
    as a combination of s_k classes."""
    ring = classes.ring
    c1, c2 = classes.c1, classes.c2
    if k == 2 and j == 0:
        return SClassCombo(2, [2 * c1, ring.const(2), ring.zero()])
    if k == 2 and j == 1:
        return SClassCombo(2, [-2 * c2, ring.zero(), ring.one()])
    if k == 3 and j == 0:
        return SClassCombo(3, [6 * (c1 * c1 - c2), 6 * c1, ring.const(3), ring.zero()])
    if k == 3 and j == 1:
        return SClassCombo(3, [-6 * c1 * c2, -6 * c2, ring.zero(), ring.one()])
    raise ValueError(f"unsupported Veronese indices k = {k}, j = {j}")


def subbundle_class(quotient_chern: Sequence[IntPolynomial], hyperplane: str) -> IntPolynomial:
    """Class of P(V) inside P(W): the Chern polynomial of W/V evaluated at
    the hyperplane class, x^d + c1 x^(d-1) + ... + cd."""
    if not quotient_chern:
        raise ValueError("need at least one Chern class")
    ring = quotient_chern[0].ring
    for i, c in enumerate(quotient_chern):
        deg = c.weighted_degree()
        if deg is not None and deg != i + 1:
            raise ValueError(f"Chern class {i + 1} has degree {deg}")
    x = ring.var(hyperplane)
    d = len(quotient_chern)
    acc = x ** d
    for i, c in enumerate(quotient_chern):
        acc = acc + c * x ** (d - i - 1)
    return acc


def segre_pushforward(
    class_index: str,
    e1: BundleClasses,
    e2: BundleClasses,
    hyperplane: str,
) -> IntPolynomial:
    """Pushforward along the Segre map P E1 x P E2 -> P(E1 (x) E2) of 1, x1,
    x2 or x1*x2, in the target hyperplane class."""
    ring = e1.ring
    if e2.ring != ring:
        raise RingMismatchError("both bundles must live over one ring")
    x = ring.var(hyperplane)
    c11, c21 = e1.c1, e1.c2
    c12, c22 = e2.c1, e2.c2
    if class_index == "1":
        return 2 * x + c11 + c12
    if class_index == "x1":
        return x * x + c12 * x + c22 - c21
    if class_index == "x2":
        return x * x + c11 * x + c21 - c22
    if class_index == "x1x2":
        return (
            x ** 3
            + (c11 + c12) * x ** 2
            + (c21 + c11 * c12 + c22) * x
            + c11 * c22 + c21 * c12
        )
    raise ValueError(f"unsupported Segre class index {class_index!r}")


def push_multiplication_power(
    p: IntPolynomial, xvars: Sequence[str], classes: BundleClasses
) -> SClassCombo:
    """Pushforward along the r-fold multiplication map (P E)^r -> P(Sym^r E).

    Powers x_i^2 are first rewritten through the fiberwise relation
    x_i^2 = -c1 x_i - c2; a squarefree product of j distinct hyperplane
    classes then pushes to (r - j)! s_r^j.
    """
    ring = p.ring
    r = len(xvars)
    idx = [ring.index(x) for x in xvars]

    work = p
    while True:
        offending = None
        for exps in work.term_map():
            for pos, i in enumerate(idx):
                if exps[i] >= 2:
                    offending = (exps, i)
                    break
            if offending:
                break
        if not offending:
            break
        exps, i = offending
        coeff = work.coefficient(exps)
        reduced = list(exps)
        reduced[i] -= 2
        base = IntPolynomial(ring, {tuple(reduced): coeff}, _trusted=True)
        x_i = ring.var(ring.names[i])
        work = work - base * x_i ** 2 + base * (-classes.c1 * x_i - classes.c2)

    out = [ring.zero()] * (r + 1)
    for exps, coeff in work.term_map().items():
        j = sum(exps[i] for i in idx)
        rest = list(exps)
        for i in idx:
            rest[i] = 0
        base = IntPolynomial(ring, {tuple(rest): coeff * factorial(r - j)}, _trusted=True)
        out[j] = out[j] + base
    return SClassCombo(r, out)
