"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are polynomials in a primitive N-th root of unity with Fraction
coefficients, reduced modulo the N-th cyclotomic polynomial.  A shared
context object caches the minimal polynomial per N; mixing elements from
different contexts raises.  A modular fast path maps the field into F_q
for a prime q = 1 (mod N) and computes ranks there; it can undercount
and is advisory only.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ArithmeticContextError


# ---------------------------------------------------------------------------
# Integer polynomial helpers (coefficient lists, low degree first).


def _poly_mul_int(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_div_exact_int(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials; den must be monic."""
    num = num[:]
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        out[k - dd] = c
        if c:
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("division not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul_int(den, list(cyclotomic_polynomial(d)))
    return tuple(_poly_div_exact_int(num, den))


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


# ---------------------------------------------------------------------------
# The field.


class CycContext:
    """Arithmetic context for Q(zeta_N).

    Holds the minimal polynomial and the reduction table for powers
    zeta^k with k up to 2*phi(N) - 2, which is what products need.
    """

    _cache: dict[int, "CycContext"] = {}

    def __new__(cls, n: int):
        ctx = cls._cache.get(n)
        if ctx is not None:
            return ctx
        ctx = super().__new__(cls)
        ctx._init(n)
        cls._cache[n] = ctx
        return ctx

    def _init(self, n: int):
        if n < 1:
            raise ValueError("order must be positive")
        self.order = n
        self.minpoly = cyclotomic_polynomial(n)
        self.degree = len(self.minpoly) - 1
        # Reduction table: power_table[k] = zeta^(degree + k) as a vector.
        # Covers products (degree 2d - 2) and raw powers zeta^k, k < n.
        d = self.degree
        top_power = max(2 * d - 2, n - 1)
        table = []
        if top_power >= d:
            prev = [Fraction(-c) for c in self.minpoly[:d]]  # zeta^d
            table.append(tuple(prev))
            for _ in range(top_power - d):
                shifted = [Fraction(0)] + prev[:-1]
                lead = prev[-1]
                if lead:
                    for i in range(d):
                        shifted[i] -= lead * self.minpoly[i]
                prev = shifted
                table.append(tuple(prev))
        self.power_table = table

    def zero(self) -> "CycElt":
        return CycElt(self, (Fraction(0),) * self.degree)

    def one(self) -> "CycElt":
        return self.from_rational(1)

    def from_rational(self, q) -> "CycElt":
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(q)
        return CycElt(self, tuple(coeffs))

    def zeta(self, k: int = 1) -> "CycElt":
        """zeta_N^k as a field element."""
        k %= self.order
        coeffs = [Fraction(0)] * max(self.degree, k + 1)
        coeffs[k] = Fraction(1)
        return CycElt(self, _reduce(self, coeffs))

    def __repr__(self):
        return "CycContext(order=%d, degree=%d)" % (self.order, self.degree)


def _reduce(ctx: CycContext, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a coefficient list modulo the minimal polynomial."""
    d = ctx.degree
    if len(coeffs) <= d:
        return tuple(coeffs) + (Fraction(0),) * (d - len(coeffs))
    out = [Fraction(c) for c in coeffs[:d]]
    for k in range(d, len(coeffs)):
        c = coeffs[k]
        if c:
            row = ctx.power_table[k - d]
            for i in range(d):
                out[i] += c * row[i]
    return tuple(out)


class CycElt:
    """An element of Q(zeta_N), immutable."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: CycContext, coeffs: Sequence[Fraction]):
        coeffs = tuple(coeffs)
        if len(coeffs) != ctx.degree:
            raise ValueError("coefficient vector has wrong length")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("CycElt is immutable")

    def _check(self, other: "CycElt"):
        if self.ctx is not other.ctx:
            raise ArithmeticContextError(
                "mixed cyclotomic orders %d and %d"
                % (self.ctx.order, other.ctx.order)
            )

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycElt):
            return self.ctx is other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.ctx.from_rational(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __repr__(self):
        return "CycElt(N=%d, %s)" % (self.ctx.order, list(self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        return CycElt(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycElt(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _coerce(self, other):
        if isinstance(other, CycElt):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rational(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycElt(self.ctx, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CycElt):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        conv = [Fraction(0)] * (2 * self.ctx.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return CycElt(self.ctx, _reduce(self.ctx, conv))

    __rmul__ = __mul__

    def inverse(self) -> "CycElt":
        """Multiplicative inverse via the extended Euclidean algorithm
        against the (irreducible) minimal polynomial."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        # Work over Q[x]: r0 = minpoly, r1 = self; track s only.
        r0 = [Fraction(c) for c in self.ctx.minpoly]
        r1 = list(self.coeffs)
        while r1 and not r1[-1]:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            if len(r1) == 1:
                inv = 1 / r1[0]
                return CycElt(self.ctx, _reduce(self.ctx, [c * inv for c in s1]))
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul_frac(q, s1))
            while r1 and not r1[-1]:
                r1.pop()
            if not r1:
                raise ArithmeticError("minimal polynomial not coprime")

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        return coerced * self.inverse()

    def __pow__(self, k: int) -> "CycElt":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]


def _poly_divmod_frac(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dd:
        return [Fraction(0)], num
    q = [Fraction(0)] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k] / lead
        q[k - dd] = c
        if c:
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    while len(num) > 1 and not num[-1]:
        num.pop()
    return q, num


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# ---------------------------------------------------------------------------
# Generic exact rank and kernel over any field.


def rank_kernel(rows: list[list], ncols: int, one):
    """Row reduce a matrix over an exact field.

    Entries must support +, -, *, /, bool.  Returns (rank, nullity,
    kernel_basis) where each kernel vector has length ncols and entries
    in the same field.  ``one`` is the field's multiplicative identity.
    """
    zero = one - one
    M = [list(r) for r in rows]
    for r in M:
        if len(r) != ncols:
            raise ValueError("row width disagrees with ncols")
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(M)):
            if M[i][col]:
                piv = i
                break
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv_entry = one / M[rank][col]
        M[rank] = [e * inv_entry for e in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][col]:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        pivots.append(col)
        rank += 1
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = zero - M[r][fc]
        basis.append(vec)
    return rank, len(free_cols), basis


def matrix_rank(rows: list[list], ncols: int, one) -> int:
    return rank_kernel(rows, ncols, one)[0]


# ---------------------------------------------------------------------------
# Modular fast path.


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit-ish inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def find_splitting_prime(n: int, avoid: Sequence[int] = (), lower: int = 10**6) -> int:
    """Smallest prime q >= lower with q = 1 (mod n) not dividing any
    ``avoid`` entry, so F_q contains an order-n root of unity."""
    q = lower + (1 - lower) % n
    while True:
        if q >= 2 and is_prime(q) and all(a % q for a in avoid if a):
            return q
        q += n


def _factorize(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def order_n_root(q: int, n: int) -> int:
    """An element of exact multiplicative order n in F_q (q prime,
    n | q - 1)."""
    if (q - 1) % n:
        raise ValueError("no order-%d element in F_%d" % (n, q))
    primes = _factorize(q - 1)
    g = 2
    while True:
        if all(pow(g, (q - 1) // p, q) != 1 for p in primes):
            break
        g += 1
    return pow(g, (q - 1) // n, q)


def cyc_to_modular(e: CycElt, q: int, root: int) -> int:
    """Image of a cyclotomic element under zeta -> root in F_q."""
    acc = 0
    p = 1
    for c in e.coeffs:
        if c:
            acc = (acc + c.numerator * pow(c.denominator, -1, q) % q * p) % q
        p = p * root % q
    return acc


def modular_rank(rows: list[list[CycElt]], ncols: int, q: int | None = None) -> tuple[int, int]:
    """Rank of a cyclotomic matrix computed in F_q.

    Returns (rank, q).  The modular rank can only undercount the true
    rank (a nonzero element may map to zero), so this is a fast advisory
    check, not a proof.
    """
    denoms = []
    order = 1
    for r in rows:
        for e in r:
            order = e.ctx.order
            for c in e.coeffs:
                denoms.append(c.denominator)
    if q is None:
        q = find_splitting_prime(order, avoid=denoms)
    root = order_n_root(q, order)
    M = [[cyc_to_modular(e, q, root) for e in r] for r in rows]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], -1, q)
        M[rank] = [e * inv % q for e in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][col]:
                f = M[i][col]
                M[i] = [(a - f * b) % q for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank, q
