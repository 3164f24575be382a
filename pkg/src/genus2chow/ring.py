"""Sparse multivariate polynomial arithmetic over ZZ with weighted gradings.

Every Chow-ring computation in this package reduces to exact arithmetic with
graded integer polynomials: products, graded substitutions, rewriting of
symmetric expressions in elementary symmetric classes, and truncated quotients
of total Chern series.  Polynomials are immutable values; all operations are
pure functions, so results can be shared freely.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingMismatchError(ValueError):
    """An operation mixed polynomials over different variable sets."""


class InhomogeneousError(ValueError):
    """A polynomial expected to be homogeneous mixes weighted degrees.

    ``witness`` holds a pair of exponent tuples of different weights.
    """

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class GradingError(ValueError):
    """A substitution image does not have the weight of the replaced variable."""


class NotSymmetricError(ValueError):
    """An input is not invariant under the requested root swaps.

    ``orbit`` holds an offending exponent tuple together with its image
    under the swap that breaks the symmetry.
    """

    def __init__(self, message: str, orbit: tuple = ()):
        super().__init__(message)
        self.orbit = orbit


@dataclass(frozen=True)
class VariableSpec:
    """A graded variable: an identifier plus its weight in the grading."""

    name: str
    degree: int

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")
        if self.degree < 1:
            raise ValueError(f"variable {self.name!r}: degree must be >= 1, got {self.degree}")


class Ring:
    """An ordered list of weighted variables over the integers.

    The declaration order fixes the graded reverse lexicographic monomial
    order used by the ideal machinery, so normal forms (but no ideal-level
    answer) depend on it.
    """

    __slots__ = ("variables", "_index", "_weights", "_mons_cache", "_key_cache")

    def __init__(self, *variables: Union[VariableSpec, tuple]):
        specs = tuple(v if isinstance(v, VariableSpec) else VariableSpec(*v) for v in variables)
        names = [s.name for s in specs]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.variables = specs
        self._index = {s.name: i for i, s in enumerate(specs)}
        self._weights = tuple(s.degree for s in specs)
        self._mons_cache: dict[int, list] = {}
        self._key_cache: dict[tuple, tuple] = {}

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        inner = ", ".join(f"{v.name}:{v.degree}" for v in self.variables)
        return f"Ring({inner})"

    # -- variable bookkeeping -------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    @property
    def weights(self) -> tuple[int, ...]:
        return self._weights

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable {name!r} in {self!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def extend(self, *variables) -> "Ring":
        return Ring(*self.variables, *variables)

    # -- monomials -------------------------------------------------------

    def monomial_degree(self, exps: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self._weights, exps))

    def monomial_key(self, exps: tuple):
        """Sort key realizing graded reverse lexicographic order (memoized)."""
        cached = self._key_cache.get(exps)
        if cached is None:
            cached = (self.monomial_degree(exps), tuple(-e for e in reversed(exps)))
            self._key_cache[exps] = cached
        return cached

    def monomials_of_degree(self, d: int) -> list[tuple[int, ...]]:
        """All exponent tuples of weighted degree exactly d, in a fixed order."""
        if d < 0:
            return []
        if d in self._mons_cache:
            return self._mons_cache[d]
        out: list[tuple[int, ...]] = []
        n = self.nvars
        current = [0] * n

        def rec(i: int, remaining: int):
            if i == n:
                if remaining == 0:
                    out.append(tuple(current))
                return
            w = self._weights[i]
            for e in range(remaining // w + 1):
                current[i] = e
                rec(i + 1, remaining - e * w)
            current[i] = 0

        rec(0, d)
        out.sort(key=self.monomial_key, reverse=True)
        self._mons_cache[d] = out
        return out

    # -- element constructors ---------------------------------------------

    def zero(self) -> "IntPolynomial":
        return IntPolynomial(self, {})

    def one(self) -> "IntPolynomial":
        return self.const(1)

    def const(self, n: int) -> "IntPolynomial":
        if n == 0:
            return self.zero()
        return IntPolynomial(self, {(0,) * self.nvars: n})

    def var(self, name: str) -> "IntPolynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return IntPolynomial(self, {tuple(exps): 1})

    def polynomial(self, terms: Mapping[tuple, int]) -> "IntPolynomial":
        return IntPolynomial(self, terms)

    def parse(self, text: str) -> "IntPolynomial":
        from .parse import parse_polynomial

        return parse_polynomial(self, text)


class IntPolynomial:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients.

    Terms are stored as a map from exponent tuples (one entry per ring
    variable) to nonzero coefficients; two polynomials are equal exactly when
    their term maps agree.
    """

    __slots__ = ("ring", "_terms", "_hash", "_lt")

    def __init__(self, ring: Ring, terms: Mapping[tuple, int], _trusted: bool = False):
        self.ring = ring
        if _trusted:
            self._terms = dict(terms)
        else:
            clean: dict[tuple, int] = {}
            n = ring.nvars
            for exps, coeff in terms.items():
                if not isinstance(coeff, int):
                    raise TypeError(f"coefficient {coeff!r} is not an integer")
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 or not isinstance(e, int) for e in exps):
                    raise ValueError(f"bad exponent tuple {exps} for {ring!r}")
                if coeff:
                    clean[exps] = clean.get(exps, 0) + coeff
                    if not clean[exps]:
                        del clean[exps]
            self._terms = clean
        self._hash = None
        self._lt = None

    # -- inspection -------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Terms in descending monomial order."""
        key = self.ring.monomial_key
        for exps in sorted(self._terms, key=key, reverse=True):
            yield exps, self._terms[exps]

    def term_map(self) -> dict[tuple, int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        """Greatest term under the ring's monomial order. Raises on zero."""
        if self._lt is None:
            if not self._terms:
                raise ValueError("zero polynomial has no leading term")
            exps = max(self._terms, key=self.ring.monomial_key)
            self._lt = (exps, self._terms[exps])
        return self._lt

    def weighted_degree(self):
        """Common weighted degree of all terms.

        Returns None for the zero polynomial (its degree is unconstrained);
        raises InhomogeneousError carrying two offending monomials otherwise.
        """
        seen: dict[int, tuple] = {}
        for exps in self._terms:
            seen.setdefault(self.ring.monomial_degree(exps), exps)
            if len(seen) > 1:
                (d1, m1), (d2, m2) = sorted(seen.items())[:2]
                raise InhomogeneousError(
                    f"mixed weighted degrees {d1} and {d2}", witness=(m1, m2)
                )
        if not seen:
            return None
        return next(iter(seen))

    def is_homogeneous(self) -> bool:
        try:
            self.weighted_degree()
            return True
        except InhomogeneousError:
            return False

    def homogeneous_components(self) -> dict[int, "IntPolynomial"]:
        parts: dict[int, dict] = {}
        for exps, c in self._terms.items():
            parts.setdefault(self.ring.monomial_degree(exps), {})[exps] = c
        return {
            d: IntPolynomial(self.ring, t, _trusted=True) for d, t in sorted(parts.items())
        }

    # -- arithmetic ---------------------------------------------------------

    def _check_ring(self, other: "IntPolynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"cannot combine {self.ring!r} with {other.ring!r}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check_ring(other)
        result = dict(self._terms)
        for exps, c in other._terms.items():
            v = result.get(exps, 0) + c
            if v:
                result[exps] = v
            elif exps in result:
                del result[exps]
        return IntPolynomial(self.ring, result, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(self.ring, {e: -c for e, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero()
            return IntPolynomial(
                self.ring, {e: other * c for e, c in self._terms.items()}, _trusted=True
            )
        self._check_ring(other)
        result: dict[tuple, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                v = result.get(key, 0) + c1 * c2
                if v:
                    result[key] = v
                elif key in result:
                    del result[key]
        return IntPolynomial(self.ring, result, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * self.ring.nvars: other}
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        from .parse import render_polynomial

        return render_polynomial(self)

    def __repr__(self):
        return f"<{self}>"

    # -- homomorphisms ----------------------------------------------------------

    def substitute(
        self,
        images: Mapping[str, Union["IntPolynomial", int]],
        target: Ring | None = None,
    ) -> "IntPolynomial":
        """Apply the graded ring homomorphism sending each named variable to
        its image.

        Unnamed variables map to the variable of the same name (and weight)
        in the target ring.  Every image must be homogeneous of the replaced
        variable's weight; zero counts as homogeneous of any weight.
        """
        ring = self.ring
        if target is None:
            target = ring
            for img in images.values():
                if isinstance(img, IntPolynomial):
                    target = img.ring
                    break
        used = set()
        for exps in self._terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(i)
        image_list: list[IntPolynomial | None] = [None] * ring.nvars
        for i in sorted(used):
            spec = ring.variables[i]
            if spec.name in images:
                img = images[spec.name]
                if isinstance(img, int):
                    img = target.const(img)
                elif img.ring != target:
                    raise RingMismatchError(
                        f"image of {spec.name} lives in {img.ring!r}, not {target!r}"
                    )
                d = img.weighted_degree()
                if d is not None and d != spec.degree:
                    raise GradingError(
                        f"image of {spec.name} has degree {d}, expected {spec.degree}"
                    )
            else:
                if spec.name not in target or target.variables[target.index(spec.name)] != spec:
                    raise GradingError(
                        f"variable {spec.name} has no graded counterpart in {target!r}"
                    )
                img = target.var(spec.name)
            image_list[i] = img

        powers: list[dict[int, IntPolynomial]] = [
            {0: target.one()} for _ in range(ring.nvars)
        ]

        def power(i: int, e: int) -> IntPolynomial:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * image_list[i]
            return cache[e]

        acc = target.zero()
        for exps, c in self._terms.items():
            piece = target.const(c)
            for i, e in enumerate(exps):
                if e:
                    piece = piece * power(i, e)
            acc = acc + piece
        return acc

    def into(self, target: Ring) -> "IntPolynomial":
        """Reinterpret in a ring containing the same named, like-graded variables."""
        return self.substitute({}, target=target)


# -- symmetric rewriting ----------------------------------------------------


def elementary_symmetric(ring: Ring, names: Sequence[str], k: int) -> IntPolynomial:
    """The k-th elementary symmetric polynomial in the named variables."""
    acc = ring.zero()
    for combo in itertools.combinations(names, k):
        term = ring.one()
        for name in combo:
            term = term * ring.var(name)
        acc = acc + term
    return acc


SymmetricFamilies = Sequence[tuple[Sequence[str], Sequence[str]]]


def symmetrize_to_elementary(p: IntPolynomial, families: SymmetricFamilies) -> IntPolynomial:
    """Rewrite a polynomial, symmetric within each family of degree-1 roots,
    as a polynomial in the matching elementary symmetric target variables.

    ``families`` lists (root names, target names) pairs; the i-th target of a
    family must have weight i+1.  The result carries no root variables, and
    the rewriting is verified by substituting the elementary symmetric
    polynomials back in.
    """
    ring = p.ring
    for roots, targets in families:
        if len(set(roots)) != len(roots):
            raise ValueError("repeated root variables")
        if len(targets) != len(roots):
            raise ValueError("need one target per elementary symmetric degree")
        for r in roots:
            if ring.variables[ring.index(r)].degree != 1:
                raise ValueError(f"root {r} must have degree 1")
        for i, t in enumerate(targets):
            if ring.variables[ring.index(t)].degree != i + 1:
                raise ValueError(f"target {t} must have degree {i + 1}")
        _check_symmetry(p, roots)

    result = p
    for roots, targets in families:
        result = _eliminate_family(result, list(roots), list(targets))

    # Targets may legitimately occur in the input (they already denote the
    # elementary symmetrics of their roots there); congruence is therefore
    # verified after retracting targets onto the elementary polynomials.
    back = {
        t: elementary_symmetric(ring, list(roots), i + 1)
        for roots, targets in families
        for i, t in enumerate(targets)
    }
    if result.substitute(back) != p.substitute(back):
        raise AssertionError("internal error: back-substitution check failed")
    return result


def _check_symmetry(p: IntPolynomial, roots: Sequence[str]):
    ring = p.ring
    idx = [ring.index(r) for r in roots]
    for a, b in zip(idx, idx[1:]):
        for exps, c in p._terms.items():
            if exps[a] == exps[b]:
                continue
            swapped = list(exps)
            swapped[a], swapped[b] = swapped[b], swapped[a]
            if p._terms.get(tuple(swapped), 0) != c:
                raise NotSymmetricError(
                    f"not symmetric under {roots} swap", orbit=(exps, tuple(swapped))
                )


def _eliminate_family(p: IntPolynomial, roots: list[str], targets: list[str]) -> IntPolynomial:
    ring = p.ring
    idx = [ring.index(r) for r in roots]
    k = len(roots)
    elem = [elementary_symmetric(ring, roots, i + 1) for i in range(k)]
    tvars = [ring.var(t) for t in targets]

    done = ring.zero()
    work = p
    while work:
        # Split off the terms free of the roots; rewrite the lex-leading rest.
        free = {e: c for e, c in work._terms.items() if all(e[i] == 0 for i in idx)}
        if free:
            part = IntPolynomial(ring, free, _trusted=True)
            done = done + part
            work = work - part
            continue
        exps, coeff = max(
            ((e, c) for e, c in work._terms.items()),
            key=lambda item: tuple(item[0][i] for i in idx),
        )
        profile = [exps[i] for i in idx]
        if sorted(profile, reverse=True) != profile:
            raise AssertionError("lex-leading exponents of a symmetric input must descend")
        cofactor_exps = tuple(0 if i in idx else e for i, e in enumerate(exps))
        cofactor = IntPolynomial(ring, {cofactor_exps: coeff}, _trusted=True)
        in_targets = ring.one()
        in_roots = ring.one()
        for i in range(k):
            step = profile[i] - (profile[i + 1] if i + 1 < k else 0)
            if step:
                in_targets = in_targets * tvars[i] ** step
                in_roots = in_roots * elem[i] ** step
        done = done + cofactor * in_targets
        work = work - cofactor * in_roots
    return done


# -- truncated Chern series ---------------------------------------------------


def chern_series_quotient(
    numerator: Sequence[IntPolynomial],
    denominator: Sequence[IntPolynomial],
    k: int,
) -> IntPolynomial:
    """Degree-k component of the quotient of two total-class series.

    Each series is a list of homogeneous components by degree, with component
    0 equal to 1; missing high components are treated as zero.  The quotient
    is computed by truncated formal inversion of the denominator.
    """
    if k < 0:
        raise ValueError("truncation degree must be >= 0")
    if not numerator or not denominator:
        raise ValueError("series need at least their constant component")
    ring = numerator[0].ring
    for series in (numerator, denominator):
        if series[0] != 1:
            raise ValueError("series must have constant component 1")
        for d, part in enumerate(series):
            deg = part.weighted_degree()
            if deg is not None and deg != d:
                raise InhomogeneousError(
                    f"series component {d} has weighted degree {deg}"
                )

    def component(series, d):
        return series[d] if d < len(series) else ring.zero()

    inverse = [ring.one()]
    for j in range(1, k + 1):
        acc = ring.zero()
        for i in range(1, j + 1):
            acc = acc + component(denominator, i) * inverse[j - i]
        inverse.append(-acc)
    acc = ring.zero()
    for i in range(0, k + 1):
        acc = acc + component(numerator, i) * inverse[k - i]
    return acc
