"""Coarse Mobius inversion through size assignments on enriched hom-objects.

Covers metric-space magnitude (similarity matrices over the floating
reals), free categories on graphs graded by path length (truncated series),
size assignments for the standard enrichments, and Kronecker-product
multiplicativity of Mobius functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .category import DirectedGraph, product
from .errors import MalformedInput, NotInvertible, RigMismatch, UnsupportedRig
from .incidence import CoarseElement
from .matrixrig import RigMatrix, invert, invert_counting_matrix
from .rigs import REAL, Rig, TruncatedSeries, polynomial_rig

CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class SizeAssignment:
    """Multiplicative size |X| of hom-descriptors for one enrichment.

    ``tensor`` combines two hom-descriptors, ``unit`` is the monoidal unit
    descriptor; multiplicativity size(tensor(X,Y)) = size(X)*size(Y) and
    size(unit) = 1 is checkable on samples via check_multiplicativity.
    """

    enrichment: str
    rig: Rig
    size: Callable[[object], object]
    tensor: Callable[[object, object], object]
    unit: object


def finite_sets_sizes(rig: Rig) -> SizeAssignment:
    return SizeAssignment("finite_sets", rig, rig.from_int, lambda x, y: x * y, 1)


def truth_values_sizes(rig: Rig) -> SizeAssignment:
    return SizeAssignment(
        "truth_values", rig, lambda b: rig.one if b else rig.zero, lambda x, y: x and y, True
    )


def metric_sizes() -> SizeAssignment:
    return SizeAssignment(
        "metric", REAL, lambda d: math.exp(-d), lambda x, y: x + y, 0.0
    )


def vector_dims_sizes(rig: Rig) -> SizeAssignment:
    return SizeAssignment("vector_dims", rig, rig.from_int, lambda x, y: x * y, 1)


def graded_sizes(degree: int) -> SizeAssignment:
    """Sizes of degree-graded finite sets: counts per degree -> series."""
    rig = polynomial_rig(degree)

    def size(counts):
        coeffs = [Fraction(0)] * (degree + 1)
        for k, c in enumerate(counts):
            if k <= degree:
                coeffs[k] = Fraction(c)
        return TruncatedSeries(tuple(coeffs), degree)

    def tensor(x, y):
        out = [0] * (max(len(x) + len(y) - 1, 1))
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                out[i + j] += a * b
        return tuple(out)

    return SizeAssignment("graded", rig, size, tensor, (1,))


def check_multiplicativity(sa: SizeAssignment, samples) -> bool:
    """size is a monoid homomorphism on the sampled hom-descriptors."""
    rig = sa.rig
    if not rig.eq(sa.size(sa.unit), rig.one):
        return False
    for x in samples:
        for y in samples:
            lhs = sa.size(sa.tensor(x, y))
            rhs = rig.mul(sa.size(x), sa.size(y))
            if not rig.eq(lhs, rhs):
                return False
    return True


def enriched_coarse_zeta(objects, homsizes, rig: Rig, enrichment: str = "finite_sets") -> CoarseElement:
    """Wrap a matrix of hom-object sizes as the enriched coarse zeta."""
    matrix = RigMatrix.from_rows(rig, homsizes)
    return CoarseElement(tuple(objects), rig, matrix, None, enrichment)


def enriched_coarse_mobius(zeta: CoarseElement) -> CoarseElement:
    """Invert an enriched coarse zeta exactly.

    Fields invert directly; integer-valued zetas are inverted over the
    rationals and must come out integral.
    """
    if zeta.rig.has_division:
        inverse = invert(zeta.matrix)
    elif zeta.rig.name == "int":
        inverse = invert_counting_matrix(zeta.matrix.rows, zeta.rig)
    else:
        raise UnsupportedRig(f"no solver for enriched zeta over rig '{zeta.rig.name}'")
    return CoarseElement(zeta.objects, zeta.rig, inverse, zeta.category, zeta.enrichment)


# metric spaces


@dataclass(frozen=True)
class MetricSpace:
    """Finite (generalized) metric space; distances may be math.inf."""

    points: tuple
    distances: tuple  # row-major, tuple of tuples
    symmetric: bool = True

    def __post_init__(self):
        n = len(self.points)
        if len(self.distances) != n or any(len(r) != n for r in self.distances):
            raise MalformedInput("distance matrix shape does not match the point list")
        for i in range(n):
            if self.distances[i][i] != 0:
                raise MalformedInput(f"nonzero self-distance at point {self.points[i]!r}")
            for j in range(n):
                if self.distances[i][j] < 0:
                    raise MalformedInput("negative distance")
                if self.symmetric and self.distances[i][j] != self.distances[j][i]:
                    raise MalformedInput(
                        f"asymmetric distance between {self.points[i]!r} and {self.points[j]!r}"
                    )

    @classmethod
    def from_distances(cls, points, rows, symmetric: bool = True) -> "MetricSpace":
        return cls(tuple(points), tuple(tuple(float(x) for x in r) for r in rows), symmetric)

    @classmethod
    def from_coords(cls, points, coords) -> "MetricSpace":
        coords = [tuple(float(x) for x in c) for c in coords]
        if len(coords) != len(points):
            raise MalformedInput("one coordinate row per point required")
        rows = [
            [math.dist(a, b) for b in coords]
            for a in coords
        ]
        return cls(tuple(points), tuple(tuple(r) for r in rows), True)


def similarity_matrix(m: MetricSpace) -> CoarseElement:
    """Z(a,b) = exp(-d(a,b)) over the floating reals; d = inf gives 0."""
    rows = [[math.exp(-d) if d != math.inf else 0.0 for d in row] for row in m.distances]
    return CoarseElement(m.points, REAL, RigMatrix.from_rows(REAL, rows), None, "metric")


def magnitude(m: MetricSpace) -> float:
    """Total of all entries of the inverse similarity matrix.

    Symmetric spaces use one linear solve Z w = 1 and sum the weighting w;
    non-symmetric generalized metrics fall back to a full inverse.  A
    condition estimate beyond 1e12 is reported as NotInvertible rather
    than returning noise.
    """
    z = np.array([[math.exp(-d) if d != math.inf else 0.0 for d in row] for row in m.distances])
    if z.size == 0:
        return 0.0
    condition = np.linalg.cond(z)
    if not np.isfinite(condition) or condition > CONDITION_LIMIT:
        raise NotInvertible(
            f"similarity matrix condition estimate {condition:.3e} exceeds {CONDITION_LIMIT:.0e}",
            witness=("condition", condition),
        )
    ones = np.ones(len(m.points))
    if m.symmetric:
        weights = np.linalg.solve(z, ones)
        return float(weights.sum())
    return float(np.linalg.inv(z).sum())


def segment_space(n: int, length: float) -> MetricSpace:
    """n evenly spaced points on a straight segment."""
    if n < 1:
        raise MalformedInput("need at least one point")
    xs = [length * i / (n - 1) if n > 1 else 0.0 for i in range(n)]
    return MetricSpace.from_coords(tuple(range(n)), [(x,) for x in xs])


def segment_refinement_study(counts, length: float = 2.0):
    """Magnitude of the length-`length` segment at each refinement count."""
    return [(n, magnitude(segment_space(n, length))) for n in counts]


def metric_disjoint_union(a: MetricSpace, b: MetricSpace) -> MetricSpace:
    """Disjoint union with all cross-distances infinite."""
    points = tuple(("L", p) for p in a.points) + tuple(("R", p) for p in b.points)
    na, nb = len(a.points), len(b.points)
    rows = []
    for i in range(na):
        rows.append(tuple(a.distances[i]) + (math.inf,) * nb)
    for j in range(nb):
        rows.append((math.inf,) * na + tuple(b.distances[j]))
    return MetricSpace(points, tuple(rows), a.symmetric and b.symmetric)


# graded free categories on graphs


@dataclass(frozen=True)
class GradedGraphCategory:
    """Free category on a finite graph, graded by path length and truncated."""

    graph: DirectedGraph
    truncation_degree: int

    def __post_init__(self):
        if self.truncation_degree < 1:
            raise MalformedInput("truncation degree must be >= 1")


def _edge_count_matrix(g: GradedGraphCategory) -> RigMatrix:
    rig = polynomial_rig(g.truncation_degree)
    t = TruncatedSeries.variable(g.truncation_degree)
    vs = g.graph.vertices
    rows = []
    for a in vs:
        row = []
        for b in vs:
            count = g.graph.edge_count(a, b)
            row.append(rig.mul(rig.from_int(count), t))
        rows.append(row)
    return RigMatrix.from_rows(rig, rows)


def graded_zeta(g: GradedGraphCategory) -> CoarseElement:
    """zeta(a,b) = sum over n of (number of length-n paths a -> b) t^n,
    truncated at the degree bound."""
    rig = polynomial_rig(g.truncation_degree)
    m = _edge_count_matrix(g)
    total = RigMatrix.identity(rig, m.n)
    power = RigMatrix.identity(rig, m.n)
    for _ in range(g.truncation_degree):
        power = power.mul(m)
        total = total.add(power)
    return CoarseElement(g.graph.vertices, rig, total, None, "graded")


def graded_mobius(g: GradedGraphCategory) -> CoarseElement:
    """mu = delta - (edge counts) t, exactly."""
    rig = polynomial_rig(g.truncation_degree)
    m = _edge_count_matrix(g)
    ident = RigMatrix.identity(rig, m.n)
    rows = [
        [rig.sub(ident.entry(i, j), m.entry(i, j)) for j in range(m.n)]
        for i in range(m.n)
    ]
    return CoarseElement(g.graph.vertices, rig, RigMatrix.from_rows(rig, rows), None, "graded")


# tensor products


def tensor_mobius(mu_a: CoarseElement, mu_b: CoarseElement) -> CoarseElement:
    """Mobius function of a tensor product: the Kronecker product of the
    factors, indexed by object pairs in row-major order.

    The graded enrichment is order-sensitive and is rejected here; all
    other supported enrichments are symmetric.
    """
    if mu_a.rig.name != mu_b.rig.name:
        raise RigMismatch(f"factors over {mu_a.rig.name} and {mu_b.rig.name}")
    if "graded" in (mu_a.enrichment, mu_b.enrichment):
        raise RigMismatch("tensor products are not supported for the graded enrichment")
    objects = tuple((a, b) for a in mu_a.objects for b in mu_b.objects)
    matrix = mu_a.matrix.kronecker(mu_b.matrix)
    cat = None
    if mu_a.category is not None and mu_b.category is not None:
        cat = product(mu_a.category, mu_b.category)
    return CoarseElement(objects, mu_a.rig, matrix, cat, mu_a.enrichment)
