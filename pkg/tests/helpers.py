"""Shared test utilities: random graded polynomials and independent oracles."""

from __future__ import annotations

import random

from genus2chow.ring import IntPolynomial, Ring


def random_homogeneous(
    ring: Ring,
    degree: int,
    rng: random.Random,
    max_terms: int = 4,
    coeff_bound: int = 10**6,
) -> IntPolynomial:
    """A random homogeneous polynomial of the given weighted degree."""
    monomials = ring.monomials_of_degree(degree)
    if not monomials:
        return ring.zero()
    chosen = rng.sample(monomials, k=min(len(monomials), rng.randint(1, max_terms)))
    terms = {m: rng.randint(-coeff_bound, coeff_bound) for m in chosen}
    return IntPolynomial(ring, terms)


def naive_product(terms_a, terms_b):
    """Schoolbook expansion over explicit term lists, independent of the
    library's polynomial type: [(coeff, exps)] x [(coeff, exps)] -> dict."""
    acc: dict[tuple, int] = {}
    for ca, ea in terms_a:
        for cb, eb in terms_b:
            key = tuple(x + y for x, y in zip(ea, eb))
            acc[key] = acc.get(key, 0) + ca * cb
    return {k: v for k, v in acc.items() if v}


def as_term_list(p: IntPolynomial):
    return [(c, e) for e, c in p.term_map().items()]
