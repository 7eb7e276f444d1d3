"""Quotient-map constructions: the Jacobian derivation of a polynomial map,
local-slice search, expression of the slice coefficient in the map's
components, and verification of the localization identity and of claimed
invariant generators.

For a map F = (f_1, .., f_{n-1}) on an n-variable ring, the associated
derivation sends R to the Jacobian determinant of (R, f_1, .., f_{n-1}).
Every component of F is annihilated (a repeated row), so when the
derivation is certified locally nilpotent its flow leaves F invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .action import GaAction, is_invariant
from .derivation import Derivation, apply, kernel_check
from .groebner import subalgebra_membership
from .poly import (
    PolyMap,
    Polynomial,
    Ring,
    RingMismatchError,
    fresh_names,
    grevlex_key,
    jacobian_det,
)

DEFAULT_SLICE_DEGREE_BOUND = 3
DEFAULT_POWER_BOUND = 8


def jacobian_derivation(F: PolyMap) -> Derivation:
    """The derivation R -> det Jacobian(R, f_1, .., f_{n-1}).

    Its image on x_i is the Jacobian determinant with first row the gradient
    of x_i; by multilinearity of the determinant this pins down the whole
    derivation.
    """
    F.require_hypersurface_count()
    ring = F.ring
    images = [
        jacobian_det([ring.var(i), *F.components]) for i in range(ring.arity)
    ]
    return Derivation(ring, tuple(images))


def check_map_invariant(A: GaAction, F: PolyMap) -> bool:
    """True iff every component of F is invariant under the flow."""
    if F.ring != A.ring:
        raise RingMismatchError("map over a different ring than the action")
    return all(is_invariant(A, f) for f in F.components)


@dataclass(frozen=True)
class LocalSlice:
    """A polynomial f with D(f) = c nonzero and D(c) = 0.

    P, when known, expresses c in the components of the quotient map:
    c = P(f_1, .., f_m).
    """

    f: Polynomial
    c: Polynomial
    P: Polynomial | None = None


def _monomials_upto(ring: Ring, degree: int):
    """Exponent tuples of total degree <= degree: degree ascending, and the
    order-largest monomial first within each degree."""
    by_degree: dict[int, list] = {d: [] for d in range(degree + 1)}

    def walk(prefix, remaining, pos):
        if pos == ring.arity - 1:
            for d in range(remaining + 1):
                exps = prefix + (d,)
                by_degree[sum(exps)].append(exps)
            return
        for d in range(remaining + 1):
            walk(prefix + (d,), remaining - d, pos + 1)

    walk((), degree, 0)
    out = []
    for d in range(degree + 1):
        out.extend(sorted(by_degree[d], key=grevlex_key, reverse=True))
    return out


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the exact nullspace via reduced row echelon form.

    One basis vector per free column, in column order, each with entry 1 at
    its free column.
    """
    m = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    basis = []
    pivot_set = set(pivots)
    for col in range(ncols):
        if col in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[col] = Fraction(1)
        for row_idx, pcol in enumerate(pivots):
            vec[pcol] = -m[row_idx][col]
        basis.append(vec)
    return basis


def _integral_normalize(p: Polynomial) -> Polynomial:
    """Scale to integer coefficients with content 1 and positive lead."""
    coeffs = [c for _, c in p.terms()]
    if not coeffs:
        return p
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    nums = [c.numerator * (denom_lcm // c.denominator) for c in coeffs]
    content = 0
    for v in nums:
        content = gcd(content, abs(v))
    scale = Fraction(denom_lcm, content)
    if next(iter(p.terms()))[1] < 0:
        scale = -scale
    return p * scale


def find_local_slice(
    D: Derivation, degree_bound: int = DEFAULT_SLICE_DEGREE_BOUND
) -> LocalSlice | None:
    """Search polynomials of bounded degree for f with D(f) != 0, D^2(f) = 0.

    The second condition is linear in the coefficients of f, so the search
    solves one exact linear system and scans the nullspace basis.  Linearity
    makes the basis scan complete: if no basis vector has a nonzero image
    under D, neither does any combination.
    """
    if D.is_zero:
        raise ValueError("the zero derivation admits no slice")
    if degree_bound < 1:
        raise ValueError("degree bound must be at least 1")
    ring = D.ring
    candidates = _monomials_upto(ring, degree_bound)
    images = []  # D^2 of each candidate monomial
    row_monomials: dict = {}
    for exps in candidates:
        q = apply(D, Polynomial(ring, {exps: Fraction(1)}), 2)
        images.append(q)
        for e, _ in q.terms():
            row_monomials.setdefault(e, len(row_monomials))
    rows = [[Fraction(0)] * len(candidates) for _ in range(len(row_monomials))]
    for col, q in enumerate(images):
        for e, c in q.terms():
            rows[row_monomials[e]][col] = c
    for vec in _nullspace(rows, len(candidates)):
        f = Polynomial(
            ring, {exps: vec[i] for i, exps in enumerate(candidates) if vec[i]}
        )
        c = apply(D, f)
        if not c.is_zero:
            f = _integral_normalize(f)
            return LocalSlice(f=f, c=apply(D, f))
    return None


def slice_coefficient_as_P(
    D: Derivation, slc: LocalSlice, F: PolyMap
) -> Polynomial | None:
    """Express the slice coefficient c in F's components, when possible.

    Requires c to be annihilated by D and F to be componentwise invariant;
    the witness P satisfies P(f_1, .., f_m) = c and lives over F's target
    ring.
    """
    if not kernel_check(D, slc.c):
        raise ValueError("slice coefficient is not annihilated by the derivation")
    for f in F.components:
        if not kernel_check(D, f):
            raise ValueError("map component is not annihilated by the derivation")
    return subalgebra_membership(slc.c, F.components, F.target_names)


def verify_localization_identity(
    D: Derivation,
    slc: LocalSlice,
    F: PolyMap,
    R: Polynomial,
    power_bound: int = DEFAULT_POWER_BOUND,
) -> tuple[int, Polynomial] | None:
    """Smallest k with c^k R expressible in (f, f_1, .., f_m), plus the witness.

    The witness T lives over the tag ring whose first variable stands for the
    slice polynomial f and whose remaining variables are F's target names, so
    c^k R = T(f, f_1, .., f_m) exactly.  None if no k up to the bound works.
    """
    if slc.P is None:
        raise ValueError("slice coefficient must first be expressed in the map")
    if power_bound < 0:
        raise ValueError("power bound must be nonnegative")
    (slice_tag,) = fresh_names(("s",), F.target_names)
    tags = (slice_tag,) + F.target_names
    gens = (slc.f,) + F.components
    power = R.ring.one()
    for k in range(power_bound + 1):
        witness = subalgebra_membership(power * R, gens, tags)
        if witness is not None:
            return k, witness
        power = power * slc.c
    return None


@dataclass(frozen=True)
class CandidateCheck:
    candidate: Polynomial
    invariant: bool
    in_subalgebra: bool
    witness: Polynomial | None


def verify_invariant_generators(
    A: GaAction, F: PolyMap, candidates
) -> tuple[CandidateCheck, ...]:
    """Check each candidate for invariance and membership in the subalgebra
    generated by F's components.

    This certifies containment only; it cannot show that the components
    generate the full ring of invariants.
    """
    checks = []
    for p in candidates:
        invariant = is_invariant(A, p)
        witness = subalgebra_membership(p, F.components, F.target_names)
        checks.append(
            CandidateCheck(
                candidate=p,
                invariant=invariant,
                in_subalgebra=witness is not None,
                witness=witness,
            )
        )
    return tuple(checks)
