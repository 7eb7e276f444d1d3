"""Shared test helpers: random polynomial generation and a cofactor-expansion
determinant oracle kept independent of the production determinant path."""

import random
from fractions import Fraction

import pytest

from gaql import groebner
from gaql.poly import Polynomial, Ring


@pytest.fixture(autouse=True)
def verify_groebner_bases():
    """Check the Buchberger criterion on every basis computed during tests."""
    groebner.set_basis_verification(True)
    yield
    groebner.set_basis_verification(False)


def rand_poly(rng: random.Random, ring: Ring, max_degree=3, max_terms=4,
              coeff_bound=6) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * ring.arity
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(ring.arity)] += 1
        num = rng.randint(-coeff_bound, coeff_bound)
        den = rng.randint(1, 4)
        terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) + Fraction(num, den)
    return Polynomial(ring, terms)


def rand_nonzero_poly(rng, ring, **kw) -> Polynomial:
    while True:
        p = rand_poly(rng, ring, **kw)
        if not p.is_zero:
            return p


def cofactor_det(rows) -> Polynomial:
    """Laplace expansion along the first row; the independent oracle."""
    n = len(rows)
    assert all(len(r) == n for r in rows)
    if n == 1:
        return rows[0][0]
    ring = rows[0][0].ring
    total = ring.zero()
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        contrib = entry * cofactor_det(minor)
        total = total + contrib if j % 2 == 0 else total - contrib
    return total
