"""Exact arithmetic and linear algebra over cyclotomic fields Q(zeta_m).

Elements are represented by their coefficient vector in Q[X]/(Phi_m),
length phi(m), with Fraction coefficients, so equality is canonical.
No floating point anywhere: rank and determinant decisions must be exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, low degree first, computed by dividing
    X^m - 1 by the lower-level cyclotomic polynomials."""
    if m == 1:
        return (-1, 1)
    # start from X^m - 1 and divide off Phi_k for proper divisors k
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    for k in range(1, m):
        if m % k == 0:
            num = _polydiv_exact(num, list(cyclotomic_poly(k)))
    return tuple(num)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (remainder must vanish)."""
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        coef = num[i + len(den) - 1] // den[-1]
        out[i] = coef
        for j, dj in enumerate(den):
            num[i + j] -= coef * dj
    assert all(x == 0 for x in num), "non-exact polynomial division"
    return out


def _phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


class CycNum:
    """An element of Q(zeta_m), reduced mod Phi_m."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs: Sequence[Fraction]):
        deg = len(cyclotomic_poly(level)) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = _reduce(cs, cyclotomic_poly(level))
        cs += [Fraction(0)] * (deg - len(cs))
        self.level = level
        self.coeffs = tuple(cs)

    # --- constructors -------------------------------------------------
    @staticmethod
    def from_rational(level: int, q) -> "CycNum":
        return CycNum(level, [Fraction(q)])

    @staticmethod
    def zero(level: int) -> "CycNum":
        return CycNum.from_rational(level, 0)

    @staticmethod
    def one(level: int) -> "CycNum":
        return CycNum.from_rational(level, 1)

    # --- helpers ------------------------------------------------------
    def _check(self, other: "CycNum") -> None:
        if self.level != other.level:
            raise ValueError(f"level mismatch: {self.level} vs {other.level}")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def lift(self, new_level: int) -> "CycNum":
        """Embed Q(zeta_m) into Q(zeta_M) via zeta_m = zeta_M^(M/m)."""
        if new_level == self.level:
            return self
        if new_level % self.level != 0:
            raise ValueError(f"{self.level} does not divide {new_level}")
        step = new_level // self.level
        out = [Fraction(0)] * (len(self.coeffs) * step)
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        return CycNum(new_level, out)

    # --- arithmetic ---------------------------------------------------
    def __add__(self, other) -> "CycNum":
        other = _coerce(other, self.level)
        self._check(other)
        return CycNum(self.level, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other) -> "CycNum":
        other = _coerce(other, self.level)
        self._check(other)
        return CycNum(self.level, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CycNum":
        return CycNum(self.level, [-a for a in self.coeffs])

    def __mul__(self, other) -> "CycNum":
        other = _coerce(other, self.level)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
        return CycNum(self.level, prod)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other) -> "CycNum":
        return _coerce(other, self.level) - self

    def inv(self) -> "CycNum":
        """Inverse via extended gcd with Phi_m in Q[X]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        phi = [Fraction(c) for c in cyclotomic_poly(self.level)]
        a = list(self.coeffs)
        g, s = _poly_xgcd(a, phi)
        # g is a nonzero constant (Phi_m is irreducible)
        assert len([c for c in g if c != 0]) == 1 and g[0] != 0
        return CycNum(self.level, [c / g[0] for c in s])

    def __truediv__(self, other) -> "CycNum":
        other = _coerce(other, self.level)
        return self * other.inv()

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            return self.inv() ** (-k)
        out = CycNum.one(self.level)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # --- comparison ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycNum.from_rational(self.level, other)
        return (
            isinstance(other, CycNum)
            and self.level == other.level
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.level, self.coeffs))

    def __repr__(self) -> str:
        terms = [
            f"{c}*z^{i}" if i else f"{c}"
            for i, c in enumerate(self.coeffs)
            if c != 0
        ]
        body = " + ".join(terms) if terms else "0"
        return f"Cyc({self.level}: {body})"


def _coerce(x, level: int) -> CycNum:
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNum.from_rational(level, x)
    raise TypeError(f"cannot coerce {type(x)} to CycNum")


def _reduce(coeffs: list[Fraction], phi: tuple[int, ...]) -> list[Fraction]:
    deg = len(phi) - 1
    cs = coeffs[:]
    for i in range(len(cs) - 1, deg - 1, -1):
        c = cs[i]
        if c == 0:
            continue
        for j in range(deg + 1):
            cs[i - deg + j] -= c * phi[j]
    return cs[:deg]


def _poly_xgcd(a: list[Fraction], b: list[Fraction]):
    """Extended Euclid in Q[X]; returns (g, s) with s*a = g mod b."""

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_(p, q):
        p = p[:]
        out = [Fraction(0)] * max(1, len(p) - len(q) + 1)
        while len(p) >= len(q) and trim(p):
            k = len(p) - len(q)
            coef = p[-1] / q[-1]
            out[k] = coef
            for j, qq in enumerate(q):
                p[k + j] -= coef * qq
            trim(p)
        return out, p if p else [Fraction(0)]

    r0, r1 = trim(a[:]) or [Fraction(0)], trim(b[:]) or [Fraction(0)]
    s0, s1 = [Fraction(1)], [Fraction(0)]
    while trim(r1[:]):
        q, r = divmod_(r0, r1)
        r0, r1 = r1, trim(r) or [Fraction(0)]
        # s_new = s0 - q * s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1 if s1 else 1)
        for i, x in enumerate(q):
            if x == 0:
                continue
            for j, y in enumerate(s1):
                prod[i + j] += x * y
        ln = max(len(s0), len(prod))
        s_new = [(s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0) for i in range(ln)]
        s0, s1 = s1, s_new
    return r0, s0


def root_of_unity(m: int, k: int) -> CycNum:
    """zeta_m^k reduced mod Phi_m."""
    k %= m
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    return CycNum(m, coeffs)


def poly_from_roots(d: int, exponents: Sequence[int]) -> list[CycNum]:
    """Monic polynomial prod(X - zeta_d^e), coefficients low degree first."""
    coeffs = [CycNum.one(d)]
    for e in exponents:
        root = root_of_unity(d, e)
        # multiply by (X - root)
        new = [CycNum.zero(d)] + coeffs
        for i, c in enumerate(coeffs):
            new[i] = new[i] - root * c
        coeffs = new
    return coeffs


class CycMatrix:
    """A rectangular matrix over Q(zeta_m)."""

    __slots__ = ("level", "rows", "cols", "entries")

    def __init__(self, level: int, entries: Sequence[Sequence[CycNum]]):
        self.level = level
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
            for x in row:
                if x.level != level:
                    raise ValueError("entry level mismatch")

    @staticmethod
    def identity(level: int, n: int) -> "CycMatrix":
        one, zero = CycNum.one(level), CycNum.zero(level)
        return CycMatrix(level, [[one if i == j else zero for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CycMatrix)
            and self.level == other.level
            and self.entries == other.entries
        )

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(
            self.level,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
        )

    def __mul__(self, other: "CycMatrix") -> "CycMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        zero = CycNum.zero(self.level)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return CycMatrix(self.level, out)

    def __pow__(self, k: int) -> "CycMatrix":
        if self.rows != self.cols:
            raise ValueError("power of non-square matrix")
        out = CycMatrix.identity(self.level, self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def _eliminated(self) -> tuple[list[list[CycNum]], int, CycNum, bool]:
        """Gaussian elimination; returns (echelon, rank, det_factor, swapped_odd)."""
        m = [row[:] for row in self.entries]
        rows, cols = self.rows, self.cols
        rank = 0
        det = CycNum.one(self.level)
        sign = False
        for col in range(cols):
            piv = None
            for r in range(rank, rows):
                if not m[r][col].is_zero():
                    piv = r
                    break
            if piv is None:
                continue
            if piv != rank:
                m[rank], m[piv] = m[piv], m[rank]
                sign = not sign
            det = det * m[rank][col]
            inv = m[rank][col].inv()
            m[rank] = [x * inv for x in m[rank]]
            for r in range(rows):
                if r != rank and not m[r][col].is_zero():
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
            rank += 1
        return m, rank, det, sign

    def rank(self) -> int:
        return self._eliminated()[1]

    def det(self) -> CycNum:
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        _, rank, det, sign = self._eliminated()
        if rank < self.rows:
            return CycNum.zero(self.level)
        return -det if sign else det

    def inv(self) -> "CycMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = CycMatrix(
            self.level,
            [row + CycMatrix.identity(self.level, n).entries[i] for i, row in enumerate(self.entries)],
        )
        ech, rank, _, _ = aug._eliminated()
        if rank < n:
            raise ZeroDivisionError("singular matrix")
        return CycMatrix(self.level, [row[n:] for row in ech])


class NotUnipotent(Exception):
    """(M - I)^n != 0 where unipotency was required."""


def unipotent_block_sizes(m: CycMatrix) -> list[int]:
    """Jordan block sizes of a unipotent matrix from the rank sequence of
    powers of (M - I): #blocks of size >= k is rank((M-I)^(k-1)) - rank((M-I)^k)."""
    n = m.rows
    nil = m - CycMatrix.identity(m.level, n)
    powers = [CycMatrix.identity(m.level, n)]
    for _ in range(n):
        powers.append(powers[-1] * nil)
    if not powers[n].is_zero():
        raise NotUnipotent("(M - I)^n != 0")
    ranks = [p.rank() for p in powers]
    sizes: list[int] = []
    for k in range(1, n + 1):
        at_least_k = ranks[k - 1] - ranks[k]
        at_least_k1 = ranks[k] - ranks[k + 1] if k < n else 0
        sizes.extend([k] * (at_least_k - at_least_k1))
    return sorted(sizes, reverse=True)
