"""The three incidence algebras of a finite category.

Fine elements live on arrows, coarse elements on object pairs, patch
elements on object pairs with support restricted to nonempty hom-sets.
Zeta, Mobius, the summation homomorphisms between the levels, Euler
characteristic, and the nerve Euler characteristic all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .category import FinCategory, endomorphism_report, is_skeletal, patch_objects
from .errors import (
    NotAPoset,
    NotInvertible,
    NotNerveFinite,
    RigMismatch,
    UnsupportedRig,
)
from .matrixrig import RigMatrix, invert_counting_matrix
from .rigs import INT, Rig


def _check_same_rig(x, y):
    if x.rig.name != y.rig.name:
        raise RigMismatch(f"elements over {x.rig.name} and {y.rig.name}")


@dataclass
class FineElement:
    """Function from the arrows of a category into a rig."""

    category: FinCategory
    rig: Rig
    values: dict

    def __post_init__(self):
        for name in self.category.arrow_names():
            if name not in self.values:
                raise RigMismatch(f"fine element missing a value on arrow {name!r}")

    def __call__(self, arrow_name):
        return self.values[arrow_name]

    def equal(self, other: "FineElement") -> bool:
        _check_same_rig(self, other)
        return all(
            self.rig.eq(self.values[n], other.values[n])
            for n in self.category.arrow_names()
        )


@dataclass
class CoarseElement:
    """Function on object pairs, stored as a square matrix in object order."""

    objects: tuple
    rig: Rig
    matrix: RigMatrix
    category: FinCategory | None = None
    enrichment: str = "finite_sets"

    def __post_init__(self):
        if self.matrix.n != len(self.objects):
            raise RigMismatch("matrix size does not match the object list")

    def value(self, a, b):
        return self.matrix.entry(self.objects.index(a), self.objects.index(b))

    def equal(self, other: "CoarseElement") -> bool:
        _check_same_rig(self, other)
        return self.objects == other.objects and self.matrix.equal(other.matrix)

    def total(self):
        return self.matrix.entry_sum()


@dataclass
class PatchElement:
    """Coarse-style element supported on pairs with nonempty hom-set."""

    objects: tuple
    rig: Rig
    matrix: RigMatrix
    support: frozenset
    category: FinCategory | None = None

    def __post_init__(self):
        if self.matrix.n != len(self.objects):
            raise RigMismatch("matrix size does not match the object list")
        for i, a in enumerate(self.objects):
            for j, b in enumerate(self.objects):
                if (a, b) not in self.support and not self.rig.is_zero(self.matrix.entry(i, j)):
                    raise RigMismatch(
                        f"patch element has a nonzero value off-support at ({a!r},{b!r})"
                    )

    def value(self, a, b):
        return self.matrix.entry(self.objects.index(a), self.objects.index(b))

    def equal(self, other: "PatchElement") -> bool:
        _check_same_rig(self, other)
        return (
            self.objects == other.objects
            and self.support == other.support
            and self.matrix.equal(other.matrix)
        )


# fine level


def fine_delta(c: FinCategory, rig: Rig) -> FineElement:
    values = {
        name: (rig.one if c.is_identity(name) else rig.zero) for name in c.arrow_names()
    }
    return FineElement(c, rig, values)


def fine_zeta(c: FinCategory, rig: Rig) -> FineElement:
    return FineElement(c, rig, {name: rig.one for name in c.arrow_names()})


def fine_basis(c: FinCategory, rig: Rig, arrow_name) -> FineElement:
    values = {name: rig.zero for name in c.arrow_names()}
    values[arrow_name] = rig.one
    return FineElement(c, rig, values)


def fine_convolve(x: FineElement, y: FineElement) -> FineElement:
    """(x * y)(f) = sum over factorizations h o g = f of x(g) y(h)."""
    _check_same_rig(x, y)
    c = x.category
    rig = x.rig
    values = {}
    for name, pairs in c.factorizations().items():
        values[name] = rig.sum(rig.mul(x.values[g], y.values[h]) for g, h in pairs)
    return FineElement(c, rig, values)


def verify_inverse(x: FineElement, y: FineElement) -> bool:
    """True iff x * y = y * x = delta, exactly in the shared rig."""
    _check_same_rig(x, y)
    delta = fine_delta(x.category, x.rig)
    return fine_convolve(x, y).equal(delta) and fine_convolve(y, x).equal(delta)


def fine_invert(x: FineElement) -> FineElement:
    """Two-sided convolution inverse of a fine element.

    Solves the linear system for a left inverse (one unknown per arrow)
    over exact rationals, then verifies the right-inverse identity.  Over
    the integers the rational solution must come out integral.  Only
    fields and the integers are supported; over general rigs there is no
    solver, use verify_inverse with a candidate instead.
    """
    rig = x.rig
    if rig.name not in ("rat", "int", "real"):
        raise UnsupportedRig(f"fine inversion needs a field or the integers, not '{rig.name}'")
    c = x.category
    names = list(c.arrow_names())
    index = {n: i for i, n in enumerate(names)}
    n = len(names)
    # (w * x)(f) = sum_g [sum_{h : h o g = f} x(h)] w(g)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for f_name, pairs in c.factorizations().items():
        i = index[f_name]
        for g, h in pairs:
            rows[i][index[g]] += Fraction(x.values[h])
    rhs = [Fraction(1) if c.is_identity(nm) else Fraction(0) for nm in names]
    solution = _solve_exact(rows, rhs)
    if rig.name == "int":
        for nm, val in zip(names, solution):
            if val.denominator != 1:
                raise NotInvertible(
                    f"inverse value on arrow {nm!r} = {val} is not an integer",
                    witness=("non-integral", nm, str(val)),
                )
        values = {nm: int(val) for nm, val in zip(names, solution)}
    elif rig.name == "real":
        values = {nm: float(val) for nm, val in zip(names, solution)}
    else:
        values = {nm: val for nm, val in zip(names, solution)}
    candidate = FineElement(c, rig, values)
    if not verify_inverse(x, candidate):
        raise NotInvertible(
            "left inverse exists but is not two-sided",
            witness=("one-sided", None),
        )
    return candidate


def _solve_exact(rows, rhs):
    """Gaussian elimination over Fractions with first-nonzero pivoting."""
    n = len(rows)
    a = [list(row) + [b] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise NotInvertible(
                f"singular convolution system: no pivot in column {col}",
                witness=("column", col),
            )
        a[col], a[pivot] = a[pivot], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def fine_mobius(c: FinCategory, rig: Rig) -> FineElement:
    """Convolution inverse of the fine zeta function."""
    return fine_invert(fine_zeta(c, rig))


def _strict_poset_relation(c: FinCategory):
    """Strict order pairs of a poset-category; NotAPoset if homs are not thin."""
    for a in c.objects:
        for b in c.objects:
            if len(c.hom(a, b)) > 1:
                raise NotAPoset(f"hom({a!r},{b!r}) has {len(c.hom(a, b))} arrows")
            if a != b and c.hom(a, b) and c.hom(b, a):
                raise NotAPoset(f"maps both ways between {a!r} and {b!r}")
    return {(a, b) for a in c.objects for b in c.objects if a != b and c.hom(a, b)}


def fine_mobius_hall(c: FinCategory, rig: Rig = INT) -> FineElement:
    """Mobius function of a poset-category by alternating chain counts.

    mu(a,b) = sum over n of (-1)^n (number of chains a = a0 < ... < an = b).
    """
    if not rig.has_negation:
        raise UnsupportedRig("chain-count Mobius needs a ring")
    strict = _strict_poset_relation(c)
    objs = list(c.objects)
    idx = {o: i for i, o in enumerate(objs)}
    n = len(objs)
    adjacency = [[0] * n for _ in range(n)]
    for (a, b) in strict:
        adjacency[idx[a]][idx[b]] = 1
    # alternating sum of powers of the strict-order adjacency matrix
    mu = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    power = [row[:] for row in mu]
    sign = 1
    while True:
        power = [
            [sum(power[i][k] * adjacency[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        if not any(any(row) for row in power):
            break
        sign = -sign
        mu = [[mu[i][j] + sign * power[i][j] for j in range(n)] for i in range(n)]
    values = {}
    for a in c.objects:
        for b in c.objects:
            for name in c.hom(a, b):
                values[name] = rig.from_int(mu[idx[a]][idx[b]])
    return FineElement(c, rig, values)


# coarse level


def coarse_delta(c: FinCategory, rig: Rig) -> CoarseElement:
    return CoarseElement(c.objects, rig, RigMatrix.identity(rig, len(c.objects)), c)


def coarse_zeta(c: FinCategory, rig: Rig) -> CoarseElement:
    rows = [[rig.from_int(len(c.hom(a, b))) for b in c.objects] for a in c.objects]
    return CoarseElement(c.objects, rig, RigMatrix.from_rows(rig, rows), c)


def coarse_multiply(x: CoarseElement, y: CoarseElement) -> CoarseElement:
    _check_same_rig(x, y)
    if x.objects != y.objects:
        raise RigMismatch("coarse elements indexed by different object lists")
    return CoarseElement(x.objects, x.rig, x.matrix.mul(y.matrix), x.category, x.enrichment)


def coarse_mobius(c: FinCategory, rig: Rig) -> CoarseElement:
    """Inverse of the hom-count matrix, exactly."""
    counts = [[len(c.hom(a, b)) for b in c.objects] for a in c.objects]
    try:
        inverse = invert_counting_matrix(counts, rig)
    except NotInvertible as e:
        if e.witness and e.witness[0] == "column":
            col = e.witness[1]
            raise NotInvertible(
                f"coarse zeta is singular: no pivot for object {c.objects[col]!r}",
                witness=e.witness,
            )
        raise
    return CoarseElement(c.objects, rig, inverse, c)


def sigma_to_coarse(x: FineElement) -> CoarseElement:
    """Sum a fine element over each hom-set: the canonical homomorphism
    into the coarse incidence algebra."""
    c = x.category
    rig = x.rig
    rows = [
        [rig.sum(x.values[f] for f in c.hom(a, b)) for b in c.objects] for a in c.objects
    ]
    return CoarseElement(c.objects, rig, RigMatrix.from_rows(rig, rows), c)


def coarse_support(c: FinCategory) -> frozenset:
    return frozenset((a, b) for a in c.objects for b in c.objects if c.hom(a, b))


def sigma_to_patch(x: FineElement) -> PatchElement:
    coarse = sigma_to_coarse(x)
    return PatchElement(coarse.objects, coarse.rig, coarse.matrix, coarse_support(x.category), x.category)


# patch level


def patch_delta(c: FinCategory, rig: Rig) -> PatchElement:
    return PatchElement(c.objects, rig, RigMatrix.identity(rig, len(c.objects)), coarse_support(c), c)


def patch_zeta(c: FinCategory, rig: Rig) -> PatchElement:
    z = coarse_zeta(c, rig)
    return PatchElement(z.objects, rig, z.matrix, coarse_support(c), c)


def patch_multiply(x: PatchElement, y: PatchElement) -> PatchElement:
    """(x * y)(a,b) = sum over z in the patch of a,b of x(a,z) y(z,b)."""
    _check_same_rig(x, y)
    if x.objects != y.objects or x.category is None:
        raise RigMismatch("patch product needs elements over one category")
    c = x.category
    rig = x.rig
    idx = {o: i for i, o in enumerate(x.objects)}
    rows = []
    for a in x.objects:
        row = []
        for b in x.objects:
            row.append(
                rig.sum(
                    rig.mul(x.matrix.entry(idx[a], idx[z]), y.matrix.entry(idx[z], idx[b]))
                    for z in patch_objects(c, a, b)
                )
            )
        rows.append(row)
    return PatchElement(x.objects, rig, RigMatrix.from_rows(rig, rows), x.support, c)


def patch_mobius(c: FinCategory, rig: Rig) -> PatchElement:
    """Mobius function assembled patchwise.

    Each supported pair (a,b) is answered inside the finite patch at
    (a,b): invert the patch's hom-count matrix and read off the (a,b)
    entry.  Locality makes the assembled element the inverse of zeta in
    the patch algebra.
    """
    support = coarse_support(c)
    idx = {o: i for i, o in enumerate(c.objects)}
    rows = [[rig.zero] * len(c.objects) for _ in c.objects]
    for (a, b) in sorted(support, key=repr):
        objs = patch_objects(c, a, b)
        counts = [[len(c.hom(u, v)) for v in objs] for u in objs]
        try:
            inverse = invert_counting_matrix(counts, rig)
        except NotInvertible as e:
            raise NotInvertible(
                f"patch at ({a!r},{b!r}) has no coarse Mobius inversion",
                witness=("patch", a, b),
            ) from e
        rows[idx[a]][idx[b]] = inverse.entry(objs.index(a), objs.index(b))
    return PatchElement(c.objects, rig, RigMatrix.from_rows(rig, rows), support, c)


# Euler characteristics


def euler_characteristic(c: FinCategory, rig: Rig):
    """Sum of all coarse Mobius entries; raises NotInvertible when undefined."""
    return coarse_mobius(c, rig).total()


def nerve_euler_characteristic(c: FinCategory) -> int:
    """Alternating count of chains of composable non-identity arrows.

    Requires the category to be skeletal with no nontrivial endomorphisms:
    then non-identity arrows never revisit an object, chains have length
    at most the number of objects, and the sum terminates.
    """
    report = endomorphism_report(c)
    if not is_skeletal(c) or report.nontrivial_endos:
        raise NotNerveFinite(
            "nerve Euler characteristic needs a skeletal category with no nontrivial endomorphisms"
        )
    objs = list(c.objects)
    idx = {o: i for i, o in enumerate(objs)}
    n = len(objs)
    counts = [[0] * n for _ in range(n)]
    for name in c.nonidentity_arrows():
        counts[idx[c.src(name)]][idx[c.tgt(name)]] += 1
    total = n
    power = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    sign = 1
    for _ in range(n + 1):
        power = [
            [sum(power[i][k] * counts[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        if not any(any(row) for row in power):
            return total
        sign = -sign
        total += sign * sum(sum(row) for row in power)
    raise NotNerveFinite("chain counts did not terminate; precondition violated")
