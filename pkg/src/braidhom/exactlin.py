"""Exact integer and rational linear algebra.

Dense arbitrary precision matrices, Smith normal form with full unimodular
transforms, fraction free determinants, and a small rational matrix type
used for group representations.  Everything here is pure Python on int and
Fraction; no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class IntMatrix:
    """A dense integer matrix stored as a list of row lists.

    Rows are owned by the matrix; callers should treat instances as
    immutable and use :meth:`copy` before mutating.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Sequence[int]], ncols: int | None = None):
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols disagrees with row width")
            ncols = width
        elif ncols is None:
            raise ValueError("ncols required for a matrix with no rows")
        for r in rows:
            for e in r:
                if not isinstance(e, int):
                    raise TypeError("entries must be int, got %r" % type(e))
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(m)], ncols=n)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
        return cls(rows, ncols=n)

    def copy(self) -> "IntMatrix":
        return IntMatrix([r[:] for r in self.rows], ncols=self.ncols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return "IntMatrix(%r)" % (self.rows,)

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(map(tuple, self.rows))))

    def is_zero(self) -> bool:
        return all(all(e == 0 for e in r) for r in self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(
                "shape mismatch: %dx%d @ %dx%d"
                % (self.nrows, self.ncols, other.nrows, other.ncols)
            )
        bt = other.transpose().rows
        out = []
        for row in self.rows:
            out.append([sum(a * b for a, b in zip(row, col)) for col in bt])
        return IntMatrix(out, ncols=other.ncols)


@dataclass(frozen=True)
class SNFResult:
    """Diagonalization u @ a @ v == d with unimodular u, v.

    ``divisors`` are the nonzero diagonal entries of ``d``; each divides
    the next and all are positive.
    """

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix
    divisors: tuple[int, ...]


def _find_pivot(M, m, n, t):
    """Position of a nonzero entry of minimal absolute value in M[t:, t:]."""
    best = None
    piv = None
    for i in range(t, m):
        Mi = M[i]
        for j in range(t, n):
            e = Mi[j]
            if e:
                a = -e if e < 0 else e
                if best is None or a < best:
                    best, piv = a, (i, j)
                    if a == 1:
                        return piv
    return piv


def _balanced_quotient(x: int, p: int) -> int:
    """Quotient q with |x - q*p| <= p/2, for p > 0."""
    q, r = divmod(x, p)
    if 2 * r > p:
        q += 1
    return q


def _snf_engine(M, m, n, U, V):
    """Diagonalize M in place, mirroring row ops into U and column ops
    into V when they are not None.  Returns the rank.

    The pivot of globally minimal absolute value is re-selected after
    every reduction sweep and quotients use balanced remainders; both
    are needed to keep intermediate entries from exploding.
    """
    t = 0
    limit = min(m, n)
    while t < limit:
        piv = _find_pivot(M, m, n, t)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            M[t], M[pi] = M[pi], M[t]
            if U is not None:
                U[t], U[pi] = U[pi], U[t]
        if pj != t:
            for row in M:
                row[t], row[pj] = row[pj], row[t]
            if V is not None:
                for row in V:
                    row[t], row[pj] = row[pj], row[t]
        if M[t][t] < 0:
            Mt = M[t]
            for j in range(n):
                Mt[j] = -Mt[j]
            if U is not None:
                Ut = U[t]
                for j in range(m):
                    Ut[j] = -Ut[j]
        p = M[t][t]
        # Reduce column t.  Remainders stay below p/2 and become the
        # next pivot candidates.
        clean = True
        for i in range(t + 1, m):
            if M[i][t]:
                q = _balanced_quotient(M[i][t], p)
                if q:
                    Mi, Mt = M[i], M[t]
                    for j in range(t, n):
                        Mi[j] -= q * Mt[j]
                    if U is not None:
                        Ui, Ut = U[i], U[t]
                        for j in range(m):
                            Ui[j] -= q * Ut[j]
                if M[i][t]:
                    clean = False
        if not clean:
            continue
        # Column t is now (0..p..0), so reducing row t only touches row t.
        for j in range(t + 1, n):
            if M[t][j]:
                q = _balanced_quotient(M[t][j], p)
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                    if V is not None:
                        for row in V:
                            row[j] -= q * row[t]
                if M[t][j]:
                    clean = False
        if not clean:
            continue
        # Pivot must divide the remaining block for the divisor chain.
        bad = None
        for i in range(t + 1, m):
            Mi = M[i]
            for j in range(t + 1, n):
                if Mi[j] % p:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            Mt, Mb = M[t], M[bad]
            for j in range(n):
                Mt[j] += Mb[j]
            if U is not None:
                Ut, Ub = U[t], U[bad]
                for j in range(m):
                    Ut[j] += Ub[j]
            continue
        t += 1
    return t


def smith_normal_form(a: IntMatrix) -> SNFResult:
    """Smith normal form with transforms: u @ a @ v == d.

    The pivot of minimal absolute value is chosen at each step, the
    divisibility chain is enforced before a pivot is finalized, and all
    diagonal entries are made nonnegative.  u and v are products of
    elementary operations, so det = +-1.
    """
    m, n = a.nrows, a.ncols
    M = [r[:] for r in a.rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rank = _snf_engine(M, m, n, U, V)
    divisors = tuple(M[i][i] for i in range(rank))
    return SNFResult(
        d=IntMatrix(M, ncols=n),
        u=IntMatrix(U, ncols=m),
        v=IntMatrix(V, ncols=n),
        divisors=divisors,
    )


def elementary_divisors(a: IntMatrix) -> tuple[int, ...]:
    """Nonzero elementary divisors of ``a``, without transform tracking."""
    m, n = a.nrows, a.ncols
    M = [r[:] for r in a.rows]
    rank = _snf_engine(M, m, n, None, None)
    return tuple(M[i][i] for i in range(rank))


def elementary_divisor_profile(a: IntMatrix) -> tuple[int, tuple[int, ...]]:
    """(rank, torsion divisors > 1) read off the Smith form."""
    divisors = elementary_divisors(a)
    return len(divisors), tuple(d for d in divisors if d > 1)


def bareiss_determinant(a: IntMatrix) -> int:
    """Exact determinant by fraction free (Bareiss) elimination."""
    if a.nrows != a.ncols:
        raise ValueError("determinant of a nonsquare matrix")
    n = a.nrows
    if n == 0:
        return 1
    M = [r[:] for r in a.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def is_unimodular(a: IntMatrix) -> bool:
    return a.nrows == a.ncols and bareiss_determinant(a) in (1, -1)


@dataclass(frozen=True)
class AbelianProfile:
    """A finitely generated abelian group: free rank plus torsion divisors.

    Torsion entries are > 1 and each divides the next.
    """

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion divisors must form a chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion divisors must be > 1")

    @property
    def is_free(self) -> bool:
        return not self.torsion

    def direct_sum(self, other: "AbelianProfile") -> "AbelianProfile":
        merged = sorted(self.torsion + other.torsion)
        # Re-chain by prime powers so divisibility holds again.
        return AbelianProfile(self.rank + other.rank, _rechain(merged))

    def n_fold(self, n: int) -> "AbelianProfile":
        out = AbelianProfile(0)
        for _ in range(n):
            out = out.direct_sum(self)
        return out

    def describe(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z^%d" % self.rank if self.rank > 1 else "Z")
        parts.extend("Z/%d" % t for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def _rechain(divisors: list[int]) -> tuple[int, ...]:
    """Normalize a multiset of cyclic orders into a divisor chain."""
    from collections import defaultdict

    powers: dict[int, list[int]] = defaultdict(list)
    for d in divisors:
        x = d
        p = 2
        while p * p <= x:
            if x % p == 0:
                e = 0
                while x % p == 0:
                    x //= p
                    e += 1
                powers[p].append(p**e)
            p += 1
        if x > 1:
            powers[x].append(x)
    if not powers:
        return ()
    depth = max(len(v) for v in powers.values())
    chain = []
    for k in range(depth):
        entry = 1
        for p, lst in powers.items():
            lst_sorted = sorted(lst, reverse=True)
            if k < len(lst_sorted):
                entry *= lst_sorted[k]
        chain.append(entry)
    return tuple(sorted(chain))


def cokernel_profile(a: IntMatrix) -> AbelianProfile:
    """Profile of Z^rows(a) modulo the column space of ``a``.

    Columns of ``a`` are the spanning vectors; the cokernel has free rank
    rows - rank and torsion the divisors above 1.
    """
    divisors = elementary_divisors(a)
    rank = len(divisors)
    return AbelianProfile(a.nrows - rank, tuple(d for d in divisors if d > 1))


# ---------------------------------------------------------------------------
# Small rational matrices for representations.


class QMat:
    """Dense matrix over Q used for representation images.

    Entries are Fractions; supports products, inverse, and scalar action,
    which is what word evaluation and adjoint construction need.
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Sequence[Fraction | int]]):
        self.rows = [[Fraction(e) for e in r] for r in rows]
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("QMat must be square")

    @classmethod
    def identity(cls, n: int) -> "QMat":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "QMat":
        return cls([[0] * n for _ in range(n)])

    def __eq__(self, other) -> bool:
        return isinstance(other, QMat) and self.rows == other.rows

    def __repr__(self) -> str:
        return "QMat(%r)" % (self.rows,)

    def __add__(self, other: "QMat") -> "QMat":
        return QMat(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "QMat") -> "QMat":
        return QMat(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __mul__(self, other):
        if isinstance(other, QMat):
            n = self.n
            out = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                ri = self.rows[i]
                for k in range(n):
                    a = ri[k]
                    if a:
                        rk = other.rows[k]
                        oi = out[i]
                        for j in range(n):
                            oi[j] += a * rk[j]
            return QMat(out)
        if isinstance(other, (int, Fraction)):
            return QMat([[e * other for e in r] for r in self.rows])
        return NotImplemented

    __rmul__ = __mul__

    def trace(self) -> Fraction:
        return sum(self.rows[i][i] for i in range(self.n))

    def determinant(self) -> Fraction:
        # Plain fraction Gaussian elimination; matrices here are tiny.
        n = self.n
        M = [r[:] for r in self.rows]
        det = Fraction(1)
        for k in range(n):
            piv = next((i for i in range(k, n) if M[i][k]), None)
            if piv is None:
                return Fraction(0)
            if piv != k:
                M[k], M[piv] = M[piv], M[k]
                det = -det
            det *= M[k][k]
            inv = 1 / M[k][k]
            for i in range(k + 1, n):
                if M[i][k]:
                    f = M[i][k] * inv
                    for j in range(k, n):
                        M[i][j] -= f * M[k][j]
        return det

    def inverse(self) -> "QMat":
        n = self.n
        M = [r[:] + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
             for i, r in enumerate(self.rows)]
        for k in range(n):
            piv = next((i for i in range(k, n) if M[i][k]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            if piv != k:
                M[k], M[piv] = M[piv], M[k]
            inv = 1 / M[k][k]
            M[k] = [e * inv for e in M[k]]
            for i in range(n):
                if i != k and M[i][k]:
                    f = M[i][k]
                    M[i] = [a - f * b for a, b in zip(M[i], M[k])]
        return QMat([r[n:] for r in M])

    def is_identity(self) -> bool:
        return self == QMat.identity(self.n)


# Re-exported field arithmetic.  The cyclotomic module owns the
# implementations; this module is the public import surface for exact
# linear algebra, so the names are mirrored here.
from .cyclotomic import (  # noqa: E402
    CycContext,
    CycElt,
    find_splitting_prime,
    matrix_rank,
    modular_rank,
    rank_kernel,
)

__all__ = [
    "IntMatrix",
    "SNFResult",
    "smith_normal_form",
    "elementary_divisors",
    "elementary_divisor_profile",
    "bareiss_determinant",
    "is_unimodular",
    "AbelianProfile",
    "cokernel_profile",
    "QMat",
    "CycContext",
    "CycElt",
    "rank_kernel",
    "matrix_rank",
    "modular_rank",
    "find_splitting_prime",
]
