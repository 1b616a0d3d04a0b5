"""Dense square matrices over a rig.

Provides the subtraction-free determinant and adjugate halves (even/odd
permutation sums), the transitive-matrix predicate, the two identities
they satisfy, zero-pattern inheritance for inverses, and exact Gaussian
elimination for rigs with division.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import (
    BudgetExceeded,
    MalformedInput,
    NotAnInverse,
    NotInvertible,
    RigMismatch,
    UnsupportedRig,
)
from .rigs import RAT, Rig

# Permutation enumeration is n! work; beyond this it is not worth waiting for.
MAX_PERMUTATION_DIM = 9


@dataclass(frozen=True)
class RigMatrix:
    rig: Rig
    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise MalformedInput(f"matrix is not square: {n} rows, row of length {len(row)}")

    @classmethod
    def from_rows(cls, rig: Rig, rows) -> "RigMatrix":
        return cls(rig, tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, rig: Rig, n: int) -> "RigMatrix":
        return cls.from_rows(
            rig, [[rig.one if i == j else rig.zero for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zeros(cls, rig: Rig, n: int) -> "RigMatrix":
        return cls.from_rows(rig, [[rig.zero] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def add(self, other: "RigMatrix") -> "RigMatrix":
        self._check_compatible(other)
        rig = self.rig
        return RigMatrix.from_rows(
            rig,
            [
                [rig.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def mul(self, other: "RigMatrix") -> "RigMatrix":
        self._check_compatible(other)
        rig = self.rig
        n = self.n
        cols = list(zip(*other.rows))
        return RigMatrix.from_rows(
            rig,
            [
                [rig.sum(rig.mul(self.rows[i][k], cols[j][k]) for k in range(n)) for j in range(n)]
                for i in range(n)
            ],
        )

    def scale(self, c) -> "RigMatrix":
        rig = self.rig
        return RigMatrix.from_rows(rig, [[rig.mul(c, x) for x in row] for row in self.rows])

    def transpose(self) -> "RigMatrix":
        return RigMatrix(self.rig, tuple(zip(*self.rows)))

    def kronecker(self, other: "RigMatrix") -> "RigMatrix":
        """Kronecker product; block (i,j) is entry(i,j) * other."""
        self._check_rig(other)
        rig = self.rig
        rows = []
        for i in range(self.n):
            for k in range(other.n):
                rows.append(
                    [
                        rig.mul(self.rows[i][j], other.rows[k][l])
                        for j in range(self.n)
                        for l in range(other.n)
                    ]
                )
        return RigMatrix.from_rows(rig, rows)

    def equal(self, other: "RigMatrix") -> bool:
        self._check_compatible(other)
        eq = self.rig.eq
        return all(
            eq(a, b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def entry_sum(self):
        return self.rig.sum(x for row in self.rows for x in row)

    def _check_rig(self, other: "RigMatrix"):
        if self.rig is not other.rig and self.rig.name != other.rig.name:
            raise RigMismatch(f"matrices over {self.rig.name} and {other.rig.name}")

    def _check_compatible(self, other: "RigMatrix"):
        self._check_rig(other)
        if self.n != other.n:
            raise MalformedInput(f"dimension mismatch: {self.n} vs {other.n}")


def _permutation_parity(perm) -> int:
    """0 for even, 1 for odd, by counting inversions."""
    inversions = 0
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                inversions += 1
    return inversions & 1


def _check_budget(m: RigMatrix, limit: int = MAX_PERMUTATION_DIM):
    if m.n > limit:
        raise BudgetExceeded(f"permutation enumeration limited to n <= {limit}, got {m.n}")


def _det_halves(m: RigMatrix):
    _check_budget(m)
    rig = m.rig
    halves = [rig.zero, rig.zero]
    for perm in permutations(range(m.n)):
        term = rig.prod(m.rows[r][perm[r]] for r in range(m.n))
        parity = _permutation_parity(perm)
        halves[parity] = rig.add(halves[parity], term)
    return halves[0], halves[1]


def det_plus(m: RigMatrix):
    """Sum over even permutations of the entry products."""
    return _det_halves(m)[0]


def det_minus(m: RigMatrix):
    """Sum over odd permutations of the entry products."""
    return _det_halves(m)[1]


def _adj_halves(m: RigMatrix):
    _check_budget(m)
    rig = m.rig
    n = m.n
    plus = [[rig.zero] * n for _ in range(n)]
    minus = [[rig.zero] * n for _ in range(n)]
    for perm in permutations(range(n)):
        parity = _permutation_parity(perm)
        target = plus if parity == 0 else minus
        for j in range(n):
            term = rig.prod(m.rows[r][perm[r]] for r in range(n) if r != j)
            i = perm[j]
            target[i][j] = rig.add(target[i][j], term)
    return RigMatrix.from_rows(rig, plus), RigMatrix.from_rows(rig, minus)


def adj_plus(m: RigMatrix) -> RigMatrix:
    """Even-permutation half of the adjugate (classical adjoint)."""
    return _adj_halves(m)[0]


def adj_minus(m: RigMatrix) -> RigMatrix:
    return _adj_halves(m)[1]


def is_transitive(m: RigMatrix, max_path: int | None = None):
    """Decide whether nonzero entry products along index paths force nonzero
    direct entries.

    Returns (True, None) or (False, witness_path).  Paths up to max_path
    edges (default n) are explored breadth-first from every row containing
    a zero; a running product of zero prunes, and a repeated
    (node, product-value) state is skipped, which is safe because breadth-
    first order reaches each state at its minimal depth, so the skipped
    copy has no continuations the first one lacked.  The default bound n
    is exact for rigs without zero divisors (a violating path shortens to
    a simple one); for rigs with zero divisors the bounded search is a
    sound approximation of the unbounded definition.
    """
    rig = m.rig
    n = m.n
    if max_path is None:
        max_path = n
    trivial_rig = rig.eq(rig.zero, rig.one)
    # p = 0 clause: a zero diagonal entry forces 1 = 0.
    for i in range(n):
        if rig.is_zero(m.rows[i][i]) and not trivial_rig:
            return False, (i,)
    for start in range(n):
        zero_set = {j for j in range(n) if rig.is_zero(m.rows[start][j])}
        if not zero_set:
            continue
        seen = {(start, rig.one)}
        queue = deque([(start, rig.one, 0, (start,))])
        while queue:
            node, product, depth, path = queue.popleft()
            if depth >= max_path:
                continue
            for nxt in range(n):
                step = m.rows[node][nxt]
                if rig.is_zero(step):
                    continue
                new_product = rig.mul(product, step)
                if rig.is_zero(new_product):
                    continue
                if nxt in zero_set:
                    return False, path + (nxt,)
                key = (nxt, new_product)
                if key in seen:
                    continue
                seen.add(key)
                queue.append((nxt, new_product, depth + 1, path + (nxt,)))
    return True, None


@dataclass(frozen=True)
class LemmaIdentityReport:
    det_identity_holds: bool
    adjugate_identity_holds: bool

    @property
    def ok(self) -> bool:
        return self.det_identity_holds and self.adjugate_identity_holds


def lemma_identity_check(x: RigMatrix, y: RigMatrix, max_dim: int = 5) -> LemmaIdentityReport:
    """Verify both subtraction-free determinant/adjugate identities exactly.

    det+X det+Y + det-X det-Y + det-(XY) = det+X det-Y + det-X det+Y + det+(XY)
    and X adj+X + (det-X) I = X adj-X + (det+X) I.
    """
    x._check_compatible(y)
    if x.n > max_dim:
        raise BudgetExceeded(f"identity check limited to n <= {max_dim}")
    rig = x.rig
    dpx, dmx = _det_halves(x)
    dpy, dmy = _det_halves(y)
    dpxy, dmxy = _det_halves(x.mul(y))
    lhs = rig.sum([rig.mul(dpx, dpy), rig.mul(dmx, dmy), dmxy])
    rhs = rig.sum([rig.mul(dpx, dmy), rig.mul(dmx, dpy), dpxy])
    det_ok = rig.eq(lhs, rhs)

    ap, am = _adj_halves(x)
    ident = RigMatrix.identity(rig, x.n)
    left = x.mul(ap).add(ident.scale(dmx))
    right = x.mul(am).add(ident.scale(dpx))
    adj_ok = left.equal(right)
    return LemmaIdentityReport(det_ok, adj_ok)


def inverse_zero_check(z: RigMatrix, zinv: RigMatrix):
    """Confirm zero-pattern inheritance: z[i][j] = 0 implies zinv[i][j] = 0.

    Requires zinv to actually be a two-sided inverse of z.  Returns
    (True, None), or (False, (i, j)) with the violating position.
    """
    z._check_compatible(zinv)
    ident = RigMatrix.identity(z.rig, z.n)
    if not (z.mul(zinv).equal(ident) and zinv.mul(z).equal(ident)):
        raise NotAnInverse("second argument is not a two-sided inverse of the first")
    for i in range(z.n):
        for j in range(z.n):
            if z.rig.is_zero(z.rows[i][j]) and not z.rig.is_zero(zinv.rows[i][j]):
                return False, (i, j)
    return True, None


def invert(m: RigMatrix) -> RigMatrix:
    """Exact two-sided inverse by Gauss-Jordan elimination.

    Requires a rig with division.  Pivots are chosen as the first nonzero
    entry in the column (deterministic); the floating-real rig pivots on
    the largest magnitude instead, for stability.
    """
    rig = m.rig
    if not rig.has_division:
        raise UnsupportedRig(f"matrix inversion needs division, rig '{rig.name}' has none")
    if not rig.has_negation:
        raise UnsupportedRig(f"matrix inversion needs negation, rig '{rig.name}' has none")
    n = m.n
    a = [list(row) for row in m.rows]
    b = [[rig.one if i == j else rig.zero for j in range(n)] for i in range(n)]
    by_magnitude = rig.name == "real"
    for col in range(n):
        pivot_row = None
        if by_magnitude:
            best = 0.0
            for r in range(col, n):
                if abs(a[r][col]) > best:
                    best = abs(a[r][col])
                    pivot_row = r
            if pivot_row is not None and rig.is_zero(a[pivot_row][col]):
                pivot_row = None
        else:
            for r in range(col, n):
                if not rig.is_zero(a[r][col]):
                    pivot_row = r
                    break
        if pivot_row is None:
            raise NotInvertible(
                f"singular matrix: no pivot in column {col}", witness=("column", col)
            )
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            b[col], b[pivot_row] = b[pivot_row], b[col]
        scale = rig.inv(a[col][col])
        a[col] = [rig.mul(scale, x) for x in a[col]]
        b[col] = [rig.mul(scale, x) for x in b[col]]
        for r in range(n):
            if r == col:
                continue
            factor = a[r][col]
            if rig.is_zero(factor):
                continue
            a[r] = [rig.sub(x, rig.mul(factor, y)) for x, y in zip(a[r], a[col])]
            b[r] = [rig.sub(x, rig.mul(factor, y)) for x, y in zip(b[r], b[col])]
    return RigMatrix.from_rows(rig, b)


def _bareiss_inverse(rows):
    """Fraction-free Gauss-Jordan on an integer matrix.

    Returns (d, m) with m integral and the true inverse equal to m / d;
    every intermediate division is exact by the Bareiss identities, which
    keeps the arithmetic in plain integers (no per-step gcd reduction).
    """
    n = len(rows)
    width = 2 * n
    m = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(rows)]
    prev = 1
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot_row is None:
            raise NotInvertible(
                f"singular matrix: no pivot in column {k}", witness=("column", k)
            )
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
        pivot = m[k][k]
        for i in range(n):
            if i == k:
                continue
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(width):
                if j == k:
                    continue
                value = pivot * row_i[j] - factor * row_k[j]
                quotient, remainder = divmod(value, prev)
                if remainder:
                    raise ArithmeticError("inexact Bareiss division")
                row_i[j] = quotient
            row_i[k] = 0
        prev = pivot
    d = m[0][0]
    return d, [row[n:] for row in m]


def invert_counting_matrix(rows, rig: Rig) -> RigMatrix:
    """Invert a matrix of integer counts in the requested rig.

    Integer input goes through fraction-free (Bareiss) elimination, so a
    single rational division per entry happens at the very end; 'int'
    results must come out integral, 'real' results are converted to floats
    at the end (so the arithmetic itself stays exact).
    """
    if all(isinstance(x, int) for row in rows for x in row):
        try:
            d, scaled = _bareiss_inverse([list(row) for row in rows])
            inverse = RigMatrix.from_rows(
                RAT, [[Fraction(x, d) for x in row] for row in scaled]
            )
        except ArithmeticError:
            # defensive fallback; the division lemma should never fail
            inverse = invert(
                RigMatrix.from_rows(RAT, [[Fraction(x) for x in row] for row in rows])
            )
    else:
        inverse = invert(
            RigMatrix.from_rows(RAT, [[Fraction(x) for x in row] for row in rows])
        )
    if rig.name == "rat":
        return inverse
    if rig.name == "int":
        out = []
        for i, row in enumerate(inverse.rows):
            for j, x in enumerate(row):
                if x.denominator != 1:
                    raise NotInvertible(
                        f"inverse entry ({i},{j}) = {x} is not an integer",
                        witness=("non-integral", i, j, str(x)),
                    )
            out.append([int(x) for x in row])
        return RigMatrix.from_rows(rig, out)
    if rig.name == "real":
        return RigMatrix.from_rows(rig, [[float(x) for x in row] for row in inverse.rows])
    raise UnsupportedRig(f"inversion of counting matrices unsupported over '{rig.name}'")
