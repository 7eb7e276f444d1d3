"""Reduced Groebner bases and the ideal-theoretic decision procedures.

Plain Buchberger with the normal selection strategy and the two classical
pair-skipping criteria (coprime leading terms, chain criterion), followed by
full interreduction.  The reduced basis is unique for a given monomial order,
so identical inputs always produce identical bases.

Decision procedures built on top: ideal membership, unit-ideal test,
elimination via block orders, combinatorial Krull dimension, radical
membership (Rabinowitsch trick), and subalgebra membership via tag
variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import (
    Polynomial,
    Ring,
    RingMismatchError,
    embed,
    fresh_names,
    grevlex_key,
)

_verify_bases = False


def set_basis_verification(flag: bool):
    """Toggle checking the Buchberger criterion on every computed basis."""
    global _verify_bases
    _verify_bases = bool(flag)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: lex, grevlex, or a block order.

    The block order compares the first `front_size` exponents (grevlex)
    before the rest (grevlex), so it eliminates the front variables.
    """

    kind: str
    front_size: int | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order kind: {self.kind!r}")
        if self.kind == "block":
            if self.front_size is None or self.front_size < 1:
                raise ValueError("block order needs front_size >= 1")
        elif self.front_size is not None:
            raise ValueError(f"{self.kind} order takes no front_size")

    def key(self, exponents: Sequence[int]):
        """Sort key: bigger key means bigger monomial."""
        if self.kind == "lex":
            return tuple(exponents)
        if self.kind == "grevlex":
            return grevlex_key(exponents)
        k = self.front_size
        return (grevlex_key(exponents[:k]), grevlex_key(exponents[k:]))

    def __str__(self):
        if self.kind == "block":
            return f"block({self.front_size})"
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(front_size: int) -> MonomialOrder:
    return MonomialOrder("block", front_size)


def _monomial_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def leading_term(p: Polynomial, order: MonomialOrder):
    """(exponents, coefficient) of the order-largest term; p must be nonzero."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no leading term")
    return max(p.terms(), key=lambda kv: order.key(kv[0]))


def poly_sort_key(p: Polynomial, order: MonomialOrder):
    """Canonical tie-breaking key: term list sorted descending by the order."""
    return tuple(
        (order.key(e), c)
        for e, c in sorted(p.terms(), key=lambda kv: order.key(kv[0]), reverse=True)
    )


def reduce(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Normal form of p modulo basis: full multivariate division.

    No term of the result is divisible by any basis leading term, and
    p minus the result lies in the ideal generated by the basis.
    """
    divisors = []
    for b in basis:
        if b.ring != p.ring:
            raise RingMismatchError("basis polynomial over a different ring")
        if not b.is_zero:
            divisors.append((*leading_term(b, order), b))
    if not divisors:
        return p
    ring = p.ring
    remainder = ring.zero()
    h = p
    while not h.is_zero:
        hm, hc = leading_term(h, order)
        for bm, bc, b in divisors:
            if _monomial_divides(bm, hm):
                shift = tuple(x - y for x, y in zip(hm, bm))
                h = h - b.mul_monomial(shift, hc / bc)
                break
        else:
            moved = Polynomial(ring, {hm: hc})
            remainder = remainder + moved
            h = h - moved
    return remainder


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    fm, fc = leading_term(f, order)
    gm, gc = leading_term(g, order)
    lcm = _monomial_lcm(fm, gm)
    return f.mul_monomial(
        tuple(a - b for a, b in zip(lcm, fm)), Fraction(1) / fc
    ) - g.mul_monomial(tuple(a - b for a, b in zip(lcm, gm)), Fraction(1) / gc)


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    generators: tuple[Polynomial, ...]
    basis: tuple[Polynomial, ...]

    @property
    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant and not self.basis[0].is_zero

    def contains(self, p: Polynomial) -> bool:
        return reduce(p, self.basis, self.order).is_zero


def buchberger_criterion_holds(gb: GroebnerBasis) -> bool:
    """Every S-polynomial of basis pairs reduces to zero against the basis."""
    basis = gb.basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = s_polynomial(basis[i], basis[j], gb.order)
            if not reduce(s, basis, gb.order).is_zero:
                return False
    return True


def _monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    _, c = leading_term(p, order)
    return p * (Fraction(1) / c)


def _interreduce(polys: list[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    """Minimalize and fully reduce, yielding the unique reduced basis."""
    monic = sorted(
        (_monic(p, order) for p in polys if not p.is_zero),
        key=lambda p: order.key(leading_term(p, order)[0]),
    )
    minimal: list[Polynomial] = []
    for p in monic:
        lm = leading_term(p, order)[0]
        if not any(_monomial_divides(leading_term(q, order)[0], lm) for q in minimal):
            minimal.append(p)
    reduced = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(_monic(reduce(p, others, order), order))
    reduced.sort(key=lambda p: order.key(leading_term(p, order)[0]), reverse=True)
    return tuple(reduced)


def groebner_basis(gens: Iterable[Polynomial], order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    Buchberger's algorithm, normal selection (smallest lcm first); pairs with
    coprime leading terms are skipped, as are pairs covered by the chain
    criterion.  Deterministic: ties are broken by the canonical polynomial
    sort key, and the final interreduction makes the output unique anyway.
    """
    gens = tuple(gens)
    if gens:
        ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generators over different rings")
    work = sorted(
        (g for g in gens if not g.is_zero), key=lambda p: poly_sort_key(p, order)
    )
    if not work:
        return GroebnerBasis(order, gens, ())

    basis: list[Polynomial] = list(work)
    lms = [leading_term(g, order)[0] for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def pair_key(pair):
        i, j = pair
        return (order.key(_monomial_lcm(lms[i], lms[j])), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        lcm = _monomial_lcm(lms[i], lms[j])
        if lcm == tuple(a + b for a, b in zip(lms[i], lms[j])):
            continue  # coprime leading terms
        chain = any(
            k != i
            and k != j
            and _monomial_divides(lms[k], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        )
        if chain:
            continue
        h = reduce(s_polynomial(basis[i], basis[j], order), basis, order)
        if h.is_zero:
            continue
        basis.append(h)
        lms.append(leading_term(h, order)[0])
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))

    result = GroebnerBasis(order, gens, _interreduce(basis, order))
    if _verify_bases and not buchberger_criterion_holds(result):
        raise AssertionError("computed basis fails the Buchberger criterion")
    return result


def ideal_membership(p: Polynomial, gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    """True iff p lies in the ideal generated by gens."""
    return groebner_basis(gens, order).contains(p)


def is_unit_ideal(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    """True iff the generated ideal is the whole ring (no common zero)."""
    if not gens:
        return False
    return groebner_basis(gens, order).is_unit


def eliminate(gens: Sequence[Polynomial], drop: Iterable[int]) -> tuple[Polynomial, ...]:
    """Generators of the elimination ideal with the given variables removed.

    Computed with a block order placing the dropped variables first; the
    returned polynomials live in the original ring but involve none of the
    dropped variables.
    """
    gens = tuple(gens)
    if not gens:
        return ()
    ring = gens[0].ring
    drop = sorted(set(drop))
    for i in drop:
        if not 0 <= i < ring.arity:
            raise IndexError(f"variable index {i} out of range")
    if not drop:
        return tuple(groebner_basis(gens).basis)
    keep = [i for i in range(ring.arity) if i not in drop]
    perm = drop + keep  # position p in the permuted ring holds variable perm[p]
    permuted = Ring(tuple(ring.variables[i] for i in perm))

    def to_permuted(p: Polynomial) -> Polynomial:
        return Polynomial(
            permuted, {tuple(e[i] for i in perm): c for e, c in p.terms()}
        )

    inverse = [0] * ring.arity
    for pos, i in enumerate(perm):
        inverse[i] = pos

    def to_original(p: Polynomial) -> Polynomial:
        return Polynomial(
            ring, {tuple(e[inverse[i]] for i in range(ring.arity)): c for e, c in p.terms()}
        )

    gb = groebner_basis([to_permuted(g) for g in gens], block_order(len(drop)))
    kept = [
        to_original(p)
        for p in gb.basis
        if all(e[pos] == 0 for e, _ in p.terms() for pos in range(len(drop)))
    ]
    return tuple(kept)


def dimension(
    gens: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    ring: Ring | None = None,
) -> int:
    """Krull dimension of the quotient ring; -1 for the unit ideal.

    `ring` is only needed to give the zero ideal (no generators) a home.
    """
    gens = tuple(gens)
    if not gens:
        if ring is None:
            raise ValueError("dimension of the zero ideal needs an explicit ring")
        return ring.arity
    return dimension_of(groebner_basis(gens, order))


def dimension_of(gb: GroebnerBasis) -> int:
    """Dimension from a computed basis: the largest variable subset meeting
    no leading monomial's support (combinatorial dimension); -1 if unit."""
    if gb.is_unit:
        return -1
    if not gb.basis:
        if not gb.generators:
            raise ValueError("dimension of the zero ideal needs an explicit ring")
        return gb.generators[0].ring.arity
    n = gb.basis[0].ring.arity
    supports = [
        frozenset(i for i, e in enumerate(leading_term(p, gb.order)[0]) if e)
        for p in gb.basis
    ]
    best = 0
    for mask in range(1 << n):
        subset = frozenset(i for i in range(n) if mask >> i & 1)
        if len(subset) <= best:
            continue
        if all(not s <= subset for s in supports):
            best = len(subset)
    return best


def radical_membership(p: Polynomial, gens: Sequence[Polynomial]) -> bool:
    """True iff some power of p lies in the ideal (Rabinowitsch trick)."""
    ring = p.ring
    (w,) = fresh_names(("w",), ring.variables)
    big = ring.extended((w,))
    w_var = big.var(big.arity - 1)
    lifted = [embed(g, big) for g in gens]
    lifted.append(big.one() - w_var * embed(p, big))
    return is_unit_ideal(lifted)


def subalgebra_membership(
    g: Polynomial,
    fs: Sequence[Polynomial],
    target_names: Sequence[str] | None = None,
) -> Polynomial | None:
    """Express g as a polynomial in fs, if possible.

    Adjoins one tag variable per f, computes a basis of (tag_i - f_i) under
    a block order eliminating the original variables, and takes the normal
    form of g.  If that normal form involves only tag variables it is the
    witness S with S(f_1, .., f_m) = g, returned over the tag ring; otherwise
    None.
    """
    ring = g.ring
    fs = tuple(fs)
    if not fs:
        raise ValueError("subalgebra membership needs at least one generator")
    for f in fs:
        if f.ring != ring:
            raise RingMismatchError("generators over a different ring")
    names = tuple(target_names) if target_names else tuple(
        f"t{i + 1}" for i in range(len(fs))
    )
    if len(names) != len(fs):
        raise ValueError("one tag name per generator required")
    collisions = set(names) & set(ring.variables)
    if collisions:
        raise ValueError(f"tag names collide with ring variables: {sorted(collisions)}")
    big = ring.extended(names)
    n = ring.arity
    tags = [big.var(n + i) for i in range(len(fs))]
    gens = [tags[i] - embed(f, big) for i, f in enumerate(fs)]
    order = block_order(n)
    gb = groebner_basis(gens, order)
    nf = reduce(embed(g, big), gb.basis, order)
    if any(any(e[i] for i in range(n)) for e, _ in nf.terms()):
        return None
    target = Ring(names)
    return Polynomial(target, {e[n:]: c for e, c in nf.terms()})
