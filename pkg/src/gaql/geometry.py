"""Geometric probes on polynomial maps: fiber ideals at rational points,
singular loci, and image-complement scans.

A fiber over a rational point is empty over the complex numbers exactly
when its ideal contains 1, which a reduced Groebner basis detects as the
basis {1}; the certificate is valid over any field extension, so rational
arithmetic settles the complex question.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .groebner import GREVLEX, GroebnerBasis, MonomialOrder, dimension_of, groebner_basis
from .poly import PolyMap, Polynomial, det

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class FiberReport:
    """Emptiness certificate or dimension for one fiber F^{-1}(point)."""

    point: Point
    empty: bool
    dimension: int  # -1 exactly when empty
    witness: GroebnerBasis


@dataclass(frozen=True)
class SingularityReport:
    """Rank-drop locus of the Jacobian: where all maximal minors vanish."""

    minors: tuple[Polynomial, ...]
    basis: GroebnerBasis
    dimension: int
    codimension: int
    nonsingular_in_codim_1: bool


@dataclass(frozen=True)
class GridSpec:
    """A rational-box grid: `steps` evenly spaced samples per axis."""

    box: tuple[tuple[Fraction, Fraction], ...]
    steps: int

    def __post_init__(self):
        box = tuple((Fraction(lo), Fraction(hi)) for lo, hi in self.box)
        object.__setattr__(self, "box", box)
        if not box:
            raise ValueError("grid needs at least one axis")
        if self.steps < 1:
            raise ValueError("grid needs at least one step per axis")
        for lo, hi in box:
            if lo > hi:
                raise ValueError(f"malformed grid axis: [{lo}, {hi}]")

    def axis_values(self, i: int) -> list[Fraction]:
        lo, hi = self.box[i]
        if self.steps == 1:
            return [lo]
        h = (hi - lo) / (self.steps - 1)
        return [lo + k * h for k in range(self.steps)]

    def points(self) -> Iterable[Point]:
        axes = [self.axis_values(i) for i in range(len(self.box))]
        return (tuple(p) for p in itertools.product(*axes))


def fiber_probe(F: PolyMap, point: Sequence, order: MonomialOrder = GREVLEX) -> FiberReport:
    """Groebner certificate for the fiber of F over a rational point.

    The witness basis is computed in the requested order; the dimension is
    always taken from a graded basis.
    """
    if len(point) != len(F.components):
        raise ValueError(
            f"point has {len(point)} coordinates, map has {len(F.components)}"
        )
    values = tuple(Fraction(v) for v in point)
    gens = [f - F.ring.const(v) for f, v in zip(F.components, values)]
    gb = groebner_basis(gens, order)
    if gb.is_unit:
        return FiberReport(point=values, empty=True, dimension=-1, witness=gb)
    graded = gb if order.kind == "grevlex" else groebner_basis(gens)
    return FiberReport(
        point=values, empty=False, dimension=dimension_of(graded), witness=gb
    )


def singular_locus(F: PolyMap, order: MonomialOrder = GREVLEX) -> SingularityReport:
    """Ideal of all maximal minors of the Jacobian matrix, with dimension
    and codimension.

    An empty locus reports codimension n + 1 so that codimension >= 2 holds
    vacuously.
    """
    F.require_hypersurface_count()
    n = F.ring.arity
    jac = F.jacobian_matrix()
    minors = tuple(
        det([row[:skip] + row[skip + 1 :] for row in jac]) for skip in range(n)
    )
    nonzero = [m for m in minors if not m.is_zero]
    gb = groebner_basis(nonzero, order)
    if gb.is_unit:
        # the minors have no common zero: the map is nonsingular everywhere
        return SingularityReport(
            minors=minors,
            basis=gb,
            dimension=-1,
            codimension=n + 1,
            nonsingular_in_codim_1=True,
        )
    if not nonzero:
        dim = n  # all minors vanish identically: the locus is everything
    elif order.kind == "grevlex":
        dim = dimension_of(gb)
    else:
        dim = dimension_of(groebner_basis(nonzero))
    codim = n - dim
    return SingularityReport(
        minors=minors,
        basis=gb,
        dimension=dim,
        codimension=codim,
        nonsingular_in_codim_1=codim >= 2,
    )


def complement_scan(
    F: PolyMap,
    probe: GridSpec | Iterable[Sequence],
    order: MonomialOrder = GREVLEX,
) -> tuple[FiberReport, ...]:
    """Probe many points and keep the empty fibers, in input order."""
    points = probe.points() if isinstance(probe, GridSpec) else probe
    empties = []
    for point in points:
        report = fiber_probe(F, point, order)
        if report.empty:
            empties.append(report)
    return tuple(empties)
