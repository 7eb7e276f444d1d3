"""Derivations of the polynomial ring: application, iteration, bounded
local-nilpotency certification, kernel tests, and the fixed locus.

A derivation is determined by its images on the variables and extends to
everything by the Leibniz rule.  Local nilpotency is only ever certified
(by exhibiting vanishing chains on the generators), never refuted: if the
chains do not terminate within the bound the result is inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import groebner
from .poly import Polynomial, Ring, RingMismatchError

DEFAULT_BOUND = 64
DEFAULT_DEGREE_CAP = 512


class DegreeExplosionError(RuntimeError):
    """Iterated application exceeded the configured total-degree cap."""

    def __init__(self, degree, cap):
        super().__init__(
            f"iterated derivation reached total degree {degree}, cap is {cap}"
        )
        self.degree = degree
        self.cap = cap


@dataclass(frozen=True)
class Derivation:
    """A derivation given by the images of the ring variables."""

    ring: Ring
    images: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.ring.arity:
            raise ValueError(
                f"expected {self.ring.arity} images, got {len(self.images)}"
            )
        for img in self.images:
            if img.ring != self.ring:
                raise RingMismatchError("derivation images over a different ring")

    @property
    def is_zero(self) -> bool:
        return all(img.is_zero for img in self.images)

    def __str__(self):
        pairs = ", ".join(
            f"{name} -> {img}" for name, img in zip(self.ring.variables, self.images)
        )
        return f"Derivation({pairs})"


def apply(
    D: Derivation,
    p: Polynomial,
    k: int = 1,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> Polynomial:
    """k-th iterate of the Leibniz extension of D on p."""
    if p.ring != D.ring:
        raise RingMismatchError("polynomial over a different ring")
    if k < 0:
        raise ValueError("iteration count must be nonnegative")
    out = p
    for _ in range(k):
        step = D.ring.zero()
        for i, img in enumerate(D.images):
            if not img.is_zero:
                step = step + img * out.partial_derivative(i)
        out = step
        if not out.is_zero and out.total_degree() > degree_cap:
            raise DegreeExplosionError(out.total_degree(), degree_cap)
    return out


@dataclass(frozen=True)
class NilpotencyCertificate:
    """Outcome of bounded nilpotency certification.

    chains[i] holds D(x_i), D^2(x_i), .. ; for a certified result each chain
    ends with the zero polynomial and orders[i] is its length, so that
    D^(orders[i]) kills x_i while D^(orders[i] - 1) does not.
    """

    derivation: Derivation
    status: str  # "certified" | "inconclusive"
    bound: int
    orders: tuple[int, ...] | None
    chains: tuple[tuple[Polynomial, ...], ...]

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def certify_locally_nilpotent(
    D: Derivation,
    bound: int = DEFAULT_BOUND,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> NilpotencyCertificate:
    """Drive each variable through D until it vanishes, up to `bound` steps.

    Vanishing on every generator extends to all polynomials by Leibniz, so a
    certificate is conclusive; running out of budget only yields
    "inconclusive", never a refutation.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    chains: list[tuple[Polynomial, ...]] = []
    orders: list[int] = []
    certified = True
    for i in range(D.ring.arity):
        chain: list[Polynomial] = []
        current = D.ring.var(i)
        found = False
        for step in range(1, bound + 1):
            try:
                current = apply(D, current, 1, degree_cap)
            except DegreeExplosionError:
                certified = False
                break
            chain.append(current)
            if current.is_zero:
                orders.append(step)
                found = True
                break
        chains.append(tuple(chain))
        if not found:
            certified = False
    return NilpotencyCertificate(
        derivation=D,
        status="certified" if certified else "inconclusive",
        bound=bound,
        orders=tuple(orders) if certified else None,
        chains=tuple(chains),
    )


def kernel_check(D: Derivation, p: Polynomial) -> bool:
    """True iff p is annihilated by D."""
    return apply(D, p).is_zero


@dataclass(frozen=True)
class FixedLocus:
    generators: tuple[Polynomial, ...]
    dimension: int
    is_fixed_point_free: bool


def fixed_locus(D: Derivation) -> FixedLocus:
    """The vanishing locus of the vector field (D(x_1), .., D(x_n)).

    The derivation has no fixed points exactly when the images generate the
    unit ideal.
    """
    gens = D.images
    nonzero = [g for g in gens if not g.is_zero]
    dim = groebner.dimension(nonzero, ring=D.ring)
    return FixedLocus(
        generators=gens,
        dimension=dim,
        is_fixed_point_free=dim == -1,
    )
