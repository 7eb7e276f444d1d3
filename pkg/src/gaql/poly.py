"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial lives in a fixed ring Q[x_1, .., x_n] and is stored as a map
from exponent tuples to Fraction coefficients.  Zero coefficients are never
stored, and terms are kept in descending graded reverse lexicographic
(grevlex) order so that iteration, printing, and hashing are deterministic.

All operations are pure: values are immutable after construction and safe
to share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Exponents = tuple[int, ...]

NEG_INF = float("-inf")

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingMismatchError(ValueError):
    """Raised when operands or arguments belong to different rings."""


def grevlex_key(exponents: Sequence[int]):
    """Sort key realizing grevlex: higher key means bigger monomial."""
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


def fresh_names(bases: Sequence[str], avoid: Iterable[str]) -> tuple[str, ...]:
    """Variant of each base name not colliding with `avoid` or each other."""
    taken = set(avoid)
    out = []
    for base in bases:
        name = base
        while name in taken:
            name += "_"
        taken.add(name)
        out.append(name)
    return tuple(out)


@dataclass(frozen=True)
class Ring:
    """An ordered tuple of variable names fixing the ambient polynomial ring."""

    variables: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(self.variables) < 1:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"variable names must be distinct: {self.variables}")
        for name in self.variables:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name: {name!r}")

    @property
    def arity(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in ring {self.variables}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, value) -> "Polynomial":
        c = Fraction(value)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.arity: c})

    def var(self, i: int) -> "Polynomial":
        if not 0 <= i < self.arity:
            raise IndexError(f"variable index {i} out of range for arity {self.arity}")
        exps = [0] * self.arity
        exps[i] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.arity))

    def from_terms(self, terms: Mapping[Sequence[int], object]) -> "Polynomial":
        return Polynomial(self, {tuple(e): Fraction(c) for e, c in terms.items()})

    def extended(self, extra: Sequence[str]) -> "Ring":
        return Ring(self.variables + tuple(extra))

    def __str__(self) -> str:
        return "Q[" + ", ".join(self.variables) + "]"


class Polynomial:
    """Immutable sparse polynomial over a Ring with Fraction coefficients."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: Ring, terms: Mapping[Exponents, Fraction]):
        cleaned = {}
        for exps, coeff in terms.items():
            if coeff == 0:
                continue
            if len(exps) != ring.arity:
                raise ValueError(
                    f"exponent tuple {exps} does not match ring arity {ring.arity}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            cleaned[exps] = coeff
        ordered = dict(
            sorted(cleaned.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)
        )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", ordered)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- inspection ---------------------------------------------------------

    def terms(self) -> Iterator[tuple[Exponents, Fraction]]:
        """Iterate (exponents, coefficient) pairs in descending grevlex order."""
        return iter(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def num_terms(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_value(self) -> Fraction:
        return self._terms.get((0,) * self.ring.arity, Fraction(0))

    @property
    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self._terms)

    def total_degree(self):
        """Total degree; NEG_INF for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        return max(sum(exps) for exps in self._terms)

    def degree_in(self, i: int):
        """Degree in variable i; NEG_INF for the zero polynomial."""
        if not 0 <= i < self.ring.arity:
            raise IndexError(f"variable index {i} out of range")
        if not self._terms:
            return NEG_INF
        return max(exps[i] for exps in self._terms)

    def support_variables(self) -> set[int]:
        """Indices of variables actually occurring."""
        seen: set[int] = set()
        for exps in self._terms:
            seen.update(i for i, e in enumerate(exps) if e)
        return seen

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"operands over different rings: {self.ring} vs {other.ring}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in q._terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in q._terms.items():
            out[exps] = out.get(exps, Fraction(0)) - coeff
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q - self

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in q._terms.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                out[key] = out.get(key, Fraction(0)) + ca * cb
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"polynomial power must be a nonnegative integer: {n}")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def mul_monomial(self, exps: Sequence[int], coeff: Fraction) -> "Polynomial":
        """Multiply by coeff * x^exps in one pass."""
        exps = tuple(exps)
        if coeff == 0:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {
                tuple(a + b for a, b in zip(e, exps)): c * coeff
                for e, c in self._terms.items()
            },
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, tuple(self._terms.items())))

    # -- calculus and substitution ------------------------------------------

    def partial_derivative(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to variable i."""
        if not 0 <= i < self.ring.arity:
            raise IndexError(f"variable index {i} out of range")
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            e = exps[i]
            if e == 0:
                continue
            key = exps[:i] + (e - 1,) + exps[i + 1 :]
            out[key] = out.get(key, Fraction(0)) + coeff * e
        return Polynomial(self.ring, out)

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute images[i] for variable i; images share one target ring."""
        if len(images) != self.ring.arity:
            raise ValueError(
                f"expected {self.ring.arity} images, got {len(images)}"
            )
        target = images[0].ring
        for img in images:
            if img.ring != target:
                raise RingMismatchError("images must share one target ring")
        result = target.zero()
        power_cache: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = images[i] ** e
            return power_cache[key]

        for exps, coeff in self._terms.items():
            term = target.const(coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.ring.arity:
            raise ValueError(
                f"expected {self.ring.arity} coordinates, got {len(point)}"
            )
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term *= v**e
            total += term
        return total

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        """Canonical form: descending grevlex terms, explicit '*' and '^'."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for exps, coeff in self._terms.items():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.variables, exps)
                if e
            )
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def embed(p: Polynomial, ring: Ring) -> Polynomial:
    """Reinterpret p in a larger ring, matching variables by name."""
    positions = [ring.index(name) for name in p.ring.variables]
    out: dict[Exponents, Fraction] = {}
    for exps, coeff in p.terms():
        big = [0] * ring.arity
        for pos, e in zip(positions, exps):
            big[pos] = e
        out[tuple(big)] = coeff
    return Polynomial(ring, out)


def _exact_div(p: Polynomial, q: Polynomial) -> Polynomial:
    """Quotient p/q when q divides p exactly; internal to the determinant."""
    if q.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = p.ring
    quotient: dict[Exponents, Fraction] = {}
    q_lead, q_coeff = next(iter(q.terms()))
    rem = p
    while not rem.is_zero:
        r_lead, r_coeff = next(iter(rem.terms()))
        exps = tuple(a - b for a, b in zip(r_lead, q_lead))
        if any(e < 0 for e in exps):
            raise ValueError("inexact polynomial division")
        c = r_coeff / q_coeff
        quotient[exps] = quotient.get(exps, Fraction(0)) + c
        rem = rem - q.mul_monomial(exps, c)
    return Polynomial(ring, quotient)


def det(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a square polynomial matrix.

    Fraction-free Gaussian elimination (Bareiss): every intermediate division
    is exact over the polynomial ring, which controls coefficient swell.
    """
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("determinant needs a nonempty square matrix")
    ring = rows[0][0].ring
    m = [list(r) for r in rows]
    for row in m:
        for entry in row:
            if entry.ring != ring:
                raise RingMismatchError("matrix entries over different rings")
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if not m[r][k].is_zero), None)
        if pivot_row is None:
            return ring.zero()
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact_div(num, prev)
            m[i][k] = ring.zero()
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def jacobian_det(fs: Sequence[Polynomial]) -> Polynomial:
    """Determinant of the Jacobian matrix of n polynomials in n variables.

    Rows follow the argument order, columns the ring's variable order.
    """
    if not fs:
        raise ValueError("jacobian_det needs at least one polynomial")
    ring = fs[0].ring
    if len(fs) != ring.arity:
        raise ValueError(
            f"expected {ring.arity} polynomials for ring {ring}, got {len(fs)}"
        )
    for f in fs:
        if f.ring != ring:
            raise RingMismatchError("polynomials over different rings")
    matrix = [[f.partial_derivative(j) for j in range(ring.arity)] for f in fs]
    return det(matrix)


@dataclass(frozen=True)
class PolyMap:
    """An ordered tuple of polynomials (f_1, .., f_m) on a common source ring."""

    ring: Ring
    components: tuple[Polynomial, ...]
    target_names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("a polynomial map needs at least one component")
        for f in self.components:
            if f.ring != self.ring:
                raise RingMismatchError("map components over different rings")
        names = tuple(self.target_names) or tuple(
            f"t{i + 1}" for i in range(len(self.components))
        )
        if len(names) != len(self.components):
            raise ValueError("one target name per component required")
        if len(set(names)) != len(names):
            raise ValueError(f"target names must be distinct: {names}")
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid target name: {name!r}")
        object.__setattr__(self, "target_names", names)

    @property
    def arity(self) -> int:
        return len(self.components)

    @property
    def target_ring(self) -> Ring:
        return Ring(self.target_names)

    def require_hypersurface_count(self):
        """Check m = n - 1, the shape quotient-map operations need."""
        n = self.ring.arity
        if len(self.components) != n - 1:
            raise ValueError(
                f"expected {n - 1} components over a {n}-variable ring, "
                f"got {len(self.components)}"
            )

    def jacobian_matrix(self) -> list[list[Polynomial]]:
        """m x n matrix of partial derivatives, one row per component."""
        return [
            [f.partial_derivative(j) for j in range(self.ring.arity)]
            for f in self.components
        ]

    def evaluate(self, point: Sequence) -> tuple[Fraction, ...]:
        return tuple(f.evaluate(point) for f in self.components)
