"""Exact arithmetic in cyclotomic fields Q(zeta_N) and dense linear algebra over them.

Elements are stored as integer numerators over a common positive denominator,
reduced modulo the N-th cyclotomic polynomial, so structural equality is
field equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence


class CycZeroDivisionError(ZeroDivisionError):
    """Raised when inverting the zero element of a cyclotomic field."""


class SingularMatrixError(ArithmeticError):
    """Raised when inverting or solving with a singular matrix."""


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, lowest degree first)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead:
            raise ArithmeticError("non-exact polynomial division")
        c //= lead
        out[k] = c
        if c:
            for t, d in enumerate(den):
                num[k + t] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_N, lowest degree first."""
    if N < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


class _Ring:
    """Per-order constants: degree of Phi_N and reductions of high powers."""

    def __init__(self, N: int):
        phi = cyclotomic_poly(N)
        self.N = N
        self.deg = len(phi) - 1
        d = self.deg
        # reduce x^k for d <= k < max(2d, N) + 1 into degree < d
        top = max(2 * d, N + 1)
        red: list[tuple[int, ...]] = []
        cur = [0] * d
        for k in range(top):
            if k < d:
                v = [0] * d
                v[k] = 1
                red.append(tuple(v))
                continue
            if k == d:
                cur = [-c for c in phi[:d]]
            else:
                prev = red[-1]
                shifted = [0] + list(prev[:-1])
                hi = prev[-1]
                cur = [shifted[t] - hi * phi[t] for t in range(d)]
            red.append(tuple(cur))
        self.red = red

    def power(self, k: int) -> tuple[int, ...]:
        return self.red[k % self.N]


@lru_cache(maxsize=None)
def _ring(N: int) -> _Ring:
    return _Ring(N)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class CycScalar:
    """An element of Q(zeta_N).

    ``num`` holds integer numerators for the basis 1, z, ..., z^(d-1), ``den`` the
    shared positive denominator. Use :func:`root` and ordinary operators to build
    values; ints and Fractions mix in freely.
    """

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, coeffs: Iterable = (), den: int = 1):
        deg = _ring(order).deg
        vals = list(coeffs)
        if len(vals) > deg:
            raise ValueError("coefficient list longer than the field degree; use from_poly")
        if all(isinstance(c, int) for c in vals) and isinstance(den, int):
            num = vals + [0] * (deg - len(vals))
        else:
            fr = [Fraction(c) / Fraction(den) for c in vals]
            den = 1
            for f in fr:
                den = _lcm(den, f.denominator)
            num = [int(f * den) for f in fr] + [0] * (deg - len(fr))
        self.order = order
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, order: int, num: tuple[int, ...], den: int) -> "CycScalar":
        obj = cls.__new__(cls)
        obj.order = order
        obj.num, obj.den = _normalize(num, den)
        return obj

    @classmethod
    def from_poly(cls, order: int, coeffs: Sequence) -> "CycScalar":
        """Reduce an arbitrary-length polynomial in zeta_N."""
        ring = _ring(order)
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for f in fr:
            den = _lcm(den, f.denominator)
        acc = [0] * ring.deg
        for k, f in enumerate(fr):
            c = int(f * den)
            if c:
                for t, r in enumerate(ring.power(k)):
                    if r:
                        acc[t] += c * r
        return cls._raw(order, tuple(acc), den)

    @classmethod
    def rational(cls, order: int, value) -> "CycScalar":
        f = Fraction(value)
        deg = _ring(order).deg
        return cls._raw(order, (f.numerator,) + (0,) * (deg - 1), f.denominator)

    # ---- introspection

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self.num[0], self.den)

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * z**k for k, c in enumerate(self.num)) / self.den

    def embed(self, order: int) -> "CycScalar":
        """Image in Q(zeta_order) under zeta_N -> zeta_order^(order/N)."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        ring = _ring(order)
        acc = [0] * ring.deg
        for k, c in enumerate(self.num):
            if c:
                for t, r in enumerate(ring.power(k * step)):
                    if r:
                        acc[t] += c * r
        return CycScalar._raw(order, tuple(acc), self.den)

    # ---- arithmetic

    def _coerce(self, other) -> "CycScalar | None":
        if isinstance(other, CycScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.rational(self.order, other)
        return None

    def _common(self, other: "CycScalar"):
        if other.order == self.order:
            return self, other
        L = _lcm(self.order, other.order)
        return self.embed(L), other.embed(L)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(o)
        if a.den == b.den:
            return CycScalar._raw(a.order, tuple(x + y for x, y in zip(a.num, b.num)), a.den)
        return CycScalar._raw(
            a.order, tuple(x * b.den + y * a.den for x, y in zip(a.num, b.num)), a.den * b.den
        )

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._raw(self.order, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycScalar._raw(self.order, tuple(x * other for x in self.num), self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(o)
        an, bn = a.num, b.num
        if not any(bn[1:]):
            c = bn[0]
            return CycScalar._raw(a.order, tuple(x * c for x in an), a.den * b.den)
        if not any(an[1:]):
            c = an[0]
            return CycScalar._raw(a.order, tuple(x * c for x in bn), a.den * b.den)
        ring = _ring(a.order)
        d = ring.deg
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        prod[i + j] += x * y
        acc = prod[:d]
        red = ring.red
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                r = red[k]
                for t in range(d):
                    if r[t]:
                        acc[t] += c * r[t]
        return CycScalar._raw(a.order, tuple(acc), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise CycZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycScalar.rational(self.order, Fraction(self.den, self.num[0]))
        # multiplication-by-self matrix over Q, solved for the unit vector
        d = _ring(self.order).deg
        cols = []
        for k in range(d):
            basis = CycScalar._raw(self.order, tuple(1 if t == k else 0 for t in range(d)), 1)
            cols.append((self * basis).coeffs)
        mat = [[cols[c][r] for c in range(d)] + [Fraction(int(r == 0))] for r in range(d)]
        sol = _rational_solve(mat, d)
        return CycScalar(self.order, sol)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycScalar.rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(o)
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.order, self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycScalar({self.order}, {format_scalar(self)})"


def _normalize(num, den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-x for x in num]
        den = -den
    g = den
    for x in num:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if not any(num):
        return tuple(0 for _ in num), 1
    if g != 1:
        num = [x // g for x in num]
        den //= g
    return tuple(num), den


def _rational_solve(aug: list[list[Fraction]], n: int) -> list[Fraction]:
    rows = len(aug)
    r = 0
    piv_cols = []
    for c in range(n):
        p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if len(piv_cols) < n:
        raise SingularMatrixError("singular rational system")
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][n]
    return sol


def root(N: int, k: int = 1) -> CycScalar:
    """zeta_N^k in canonical form."""
    if N < 1:
        raise ValueError("root order must be positive")
    ring = _ring(N)
    return CycScalar._raw(N, ring.power(k % N), 1)


def zero(N: int) -> CycScalar:
    return CycScalar._raw(N, (0,) * _ring(N).deg, 1)


def one(N: int) -> CycScalar:
    return root(N, 0)


def as_root_power(x: CycScalar) -> tuple[Fraction, int] | None:
    """Return (c, k) with x = c * zeta_N^k for rational c, if such a form exists."""
    if x.is_zero():
        return None
    N = x.order
    for k in range(N):
        y = x * root(N, -k)
        if y.is_rational():
            c = y.to_fraction()
            if c > 0 or N % 2:
                return c, k
            # -1 is a root power: keep the coefficient positive
            return -c, (k + N // 2) % N
    return None


def format_scalar(x: CycScalar, symbol: str | None = None) -> str:
    """Human-readable rendering: rationals as-is, c*z^k when possible, else a sum."""
    sym = symbol or f"z{x.order}"
    if x.is_rational():
        return str(x.to_fraction())
    rp = as_root_power(x)
    if rp is not None:
        c, k = rp
        k %= x.order
        if k == 0:
            return str(c)
        pw = f"{sym}^{k}"
        if c == 1:
            return pw
        if c == -1:
            return "-" + pw
        return f"{c}*{pw}"
    parts = []
    for k, c in enumerate(x.coeffs):
        if c == 0:
            continue
        pw = sym if k == 1 else f"{sym}^{k}"
        term = str(c) if k == 0 else (pw if c == 1 else f"{c}*{pw}")
        parts.append(term)
    return " + ".join(parts).replace("+ -", "- ")


def scalar_to_json(x: CycScalar) -> list[str]:
    return [str(c) for c in x.coeffs]


def scalar_from_json(order: int, data: Sequence[str]) -> CycScalar:
    return CycScalar(order, [Fraction(s) for s in data])


# ---------------------------------------------------------------------------
# q-combinatorics


def qnum(n: int, q: CycScalar) -> CycScalar:
    """(n)_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q-number index must be nonnegative")
    total = zero(q.order)
    p = one(q.order)
    for _ in range(n):
        total = total + p
        p = p * q
    return total


def qfact(n: int, q: CycScalar) -> CycScalar:
    """(n)_q! with (0)_q! = 1."""
    if n < 0:
        raise ValueError("q-factorial index must be nonnegative")
    out = one(q.order)
    for s in range(1, n + 1):
        out = out * qnum(s, q)
    return out


def qbinom(n: int, k: int, q: CycScalar) -> CycScalar:
    """Gaussian binomial via the Pascal recursion, safe at roots of unity."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    row = [one(q.order)]
    for m in range(1, n + 1):
        new = [one(q.order)]
        for j in range(1, m):
            new.append(row[j - 1] + q**j * row[j])
        new.append(one(q.order))
        row = new
    return row[k]


# ---------------------------------------------------------------------------
# dense matrices


class CycMatrix:
    """Dense matrix of CycScalars over a single Q(zeta_N)."""

    __slots__ = ("rows", "cols", "order", "entries")

    def __init__(self, order: int, entries: Sequence[Sequence]):
        self.order = order
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        conv = []
        for row in entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
            conv.append(tuple(_as_scalar(order, v) for v in row))
        self.entries = tuple(conv)

    @classmethod
    def zeros(cls, order: int, rows: int, cols: int) -> "CycMatrix":
        z = zero(order)
        m = cls.__new__(cls)
        m.order, m.rows, m.cols = order, rows, cols
        m.entries = tuple(tuple(z for _ in range(cols)) for _ in range(rows))
        return m

    @classmethod
    def identity(cls, order: int, d: int) -> "CycMatrix":
        return cls(order, [[1 if i == j else 0 for j in range(d)] for i in range(d)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> list[CycScalar]:
        return [row[j] for row in self.entries]

    def transpose(self) -> "CycMatrix":
        return CycMatrix(self.order, [list(c) for c in zip(*self.entries)] if self.rows else [])

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(
            self.order, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(
            self.order, [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def scale(self, c) -> "CycMatrix":
        return CycMatrix(self.order, [[c * a for a in r] for r in self.entries])

    def __neg__(self) -> "CycMatrix":
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, CycMatrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "CycMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = CycMatrix.identity(self.order, self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for row in self.entries:
            nz = [(k, a) for k, a in enumerate(row) if not a.is_zero()]
            new = []
            for col in cols:
                acc = zero(self.order)
                for k, a in nz:
                    b = col[k]
                    if not b.is_zero():
                        acc = acc + a * b
                new.append(acc)
            out.append(new)
        return CycMatrix(self.order, out) if out else CycMatrix.zeros(self.order, 0, other.cols)

    def apply(self, vec: Sequence[CycScalar]) -> list[CycScalar]:
        out = []
        for row in self.entries:
            acc = zero(self.order)
            for a, b in zip(row, vec):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.entries for a in r)

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        body = "; ".join(", ".join(format_scalar(a) for a in r) for r in self.entries)
        return f"CycMatrix({self.rows}x{self.cols}: [{body}])"


def _as_scalar(order: int, v) -> CycScalar:
    if isinstance(v, CycScalar):
        return v.embed(order) if v.order != order else v
    return CycScalar.rational(order, v)


def rref(mat: CycMatrix) -> tuple[list[list[CycScalar]], list[int]]:
    """Reduced row echelon form and pivot columns, first nonzero pivot by column order."""
    rows = [list(r) for r in mat.entries]
    pivots: list[int] = []
    r = 0
    for c in range(mat.cols):
        p = next((i for i in range(r, mat.rows) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv if not v.is_zero() else v for v in rows[r]]
        pr = rows[r]
        nzc = [j for j in range(c, mat.cols) if not pr[j].is_zero()]
        for i in range(mat.rows):
            if i != r:
                f = rows[i][c]
                if not f.is_zero():
                    ri = rows[i]
                    for j in nzc:
                        ri[j] = ri[j] - f * pr[j]
        pivots.append(c)
        r += 1
        if r == mat.rows:
            break
    return rows, pivots


def rank(mat: CycMatrix) -> int:
    return len(rref(mat)[1])


def kernel(mat: CycMatrix) -> list[list[CycScalar]]:
    """Basis of the right null space, as column vectors."""
    rows, pivots = rref(mat)
    free = [c for c in range(mat.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero(mat.order) for _ in range(mat.cols)]
        v[f] = one(mat.order)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(v)
    return basis


def solve(mat: CycMatrix, rhs: Sequence) -> list[CycScalar] | None:
    """One solution of mat @ v = rhs, or None when the system is inconsistent."""
    aug = CycMatrix(
        mat.order, [list(r) + [_as_scalar(mat.order, b)] for r, b in zip(mat.entries, rhs)]
    )
    rows, pivots = rref(aug)
    if mat.cols in pivots:
        return None
    v = [zero(mat.order) for _ in range(mat.cols)]
    for i, pc in enumerate(pivots):
        v[pc] = rows[i][mat.cols]
    return v


def inverse(mat: CycMatrix) -> CycMatrix:
    if mat.rows != mat.cols:
        raise SingularMatrixError("non-square matrix has no inverse")
    d = mat.rows
    aug = CycMatrix(
        mat.order,
        [list(r) + [1 if i == j else 0 for j in range(d)] for i, r in enumerate(mat.entries)],
    )
    rows, pivots = rref(aug)
    if pivots[:d] != list(range(d)) or len(pivots) < d:
        raise SingularMatrixError("matrix is singular")
    return CycMatrix(mat.order, [r[d:] for r in rows])
