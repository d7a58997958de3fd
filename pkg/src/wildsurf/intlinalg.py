"""Exact linear algebra over the integers and rationals.

Dense arbitrary-precision integer matrices and rational polynomials,
plus the decision routines built on them: characteristic polynomials,
rational root extraction, Smith and Hermite normal forms, cokernel
invariants, unipotency, and the Kronecker test for polynomials whose
roots all lie on the unit circle.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected int or Fraction, got %s" % type(x).__name__)


class Poly:
    """Univariate polynomial with Fraction coefficients, ascending degree.

    The zero polynomial has an empty coefficient tuple and degree -1;
    otherwise the trailing coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.is_integer():
            raise ValueError("polynomial has non-integer coefficients")
        return tuple(c.numerator for c in self.coeffs)

    def evaluate(self, x):
        """Horner evaluation; works for any value supporting + and *."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
        return acc

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == 0:
                continue
            term = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = str(mag) if (term == "" or mag != 1) else ""
            sep = "" if term == "" or body == "" else "*"
            s = body + sep + term
            parts.append(("- " if c < 0 else "+ " if parts else "") + s)
        return "Poly(%s)" % " ".join(parts)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] - other[k] for k in range(n))

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return (-self) + other

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        raise TypeError("cannot combine Poly with %r" % (other,))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        d = other.degree
        lead = other.leading
        while len(r) - 1 >= d and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            t = r[-1] / lead
            q[k] = t
            for j in range(d + 1):
                r[k + j] -= t * other.coeffs[j]
            r.pop()
        return Poly(q), Poly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def derivative(self) -> "Poly":
        return Poly(k * self.coeffs[k] for k in range(1, len(self.coeffs)))

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("cannot normalise the zero polynomial")
        return self * (1 / self.leading)

    def content(self) -> Fraction:
        """Positive rational c with self/c integer and primitive."""
        if self.is_zero():
            return Fraction(1)
        num = 0
        den = 1
        for c in self.coeffs:
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Integer primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        p = self * (1 / self.content())
        return -p if p.leading < 0 else p


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd in Q[t] (1 for coprime, 0 only if both are zero)."""
    while not b.is_zero():
        a, b = b, (a % b).primitive() if not (a % b).is_zero() else Poly()
    if a.is_zero():
        return a
    return a.monic()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun decomposition: pairs (g, m) with f = lc * prod g^m, g monic squarefree."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    d = poly_gcd(f, f.derivative())
    if d.degree == 0:
        return [(f, 1)]
    out = []
    b = f // d
    c = f.derivative() // d
    i = 1
    while b.degree > 0:
        w = c - b.derivative()
        a = poly_gcd(b, w)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = w // a
        i += 1
    return out


class IntMatrix:
    """Immutable dense integer matrix, row-major entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[int]):
        if rows < 0 or cols < 0 or rows * cols != len(entries):
            raise ValueError("shape does not match entry count")
        if not all(isinstance(e, int) for e in entries):
            raise TypeError("entries must be ints")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, [int(e) for row in rows for e in row])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "IntMatrix(%r)" % (self.to_rows(),)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, [-a for a in self.entries])

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix(self.rows, self.cols, [a * other for a in self.entries])
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        out = [0] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * self.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if a == 0:
                    continue
                obase = k * other.cols
                tbase = i * other.cols
                for j in range(other.cols):
                    out[tbase + j] += a * other.entries[obase + j]
        return IntMatrix(self.rows, other.cols, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "IntMatrix":
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            return self.unimodular_inverse() ** (-n)
        result = IntMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def trace(self) -> int:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum(self[i, i] for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def unimodular_inverse(self) -> "IntMatrix":
        """Inverse of a matrix with determinant +-1, via the adjugate."""
        d = self.det()
        if d not in (1, -1):
            raise ValueError("matrix is not unimodular")
        n = self.rows
        adj = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [
                    [self[r, c] for c in range(n) if c != j]
                    for r in range(n)
                    if r != i
                ]
                m = IntMatrix.from_rows(minor) if n > 1 else None
                cof = m.det() if m is not None else 1
                adj[j][i] = cof if (i + j) % 2 == 0 else -cof
        inv = [[e * d for e in row] for row in adj]
        return IntMatrix.from_rows(inv)


def char_poly(a: IntMatrix) -> Poly:
    """Monic characteristic polynomial det(tI - A), exact (Faddeev-LeVerrier)."""
    if not a.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = a.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = IntMatrix.identity(n)
    for k in range(1, n + 1):
        m = a * m
        c2 = -m.trace()
        if c2 % k != 0:
            raise ArithmeticError("trace divisibility failed")
        c = c2 // k
        coeffs[n - k] = c
        m = m + IntMatrix.identity(n) * c
    return Poly(coeffs)


def companion(p: Poly) -> IntMatrix:
    """Companion matrix of a monic integer polynomial.

    Subdiagonal ones, negated coefficients in the last column, so that
    char_poly(companion(p)) == p.
    """
    if not (p.is_monic() and p.is_integer() and p.degree >= 1):
        raise ValueError("companion needs a monic integer polynomial of degree >= 1")
    d = p.degree
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = -p[i].numerator
    return IntMatrix.from_rows(rows)


def is_unipotent(a: IntMatrix) -> bool:
    """True iff (A - I)^n = 0 for n the dimension."""
    if not a.is_square:
        raise ValueError("unipotency of a non-square matrix")
    n = a.rows
    return ((a - IntMatrix.identity(n)) ** n).is_zero()


def rational_roots(f: Poly, unit_constant_shortcut: bool = True) -> list[Fraction]:
    """All rational roots of a nonzero integer polynomial, with multiplicity.

    When the polynomial is monic with constant term +-1 (and the shortcut
    is enabled) only +-1 can be rational roots, so only those candidates
    are tested; otherwise all p/q with p | constant, q | leading are tried.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if not f.is_integer():
        raise ValueError("integer coefficients required")
    roots: list[Fraction] = []
    # Strip powers of t: each contributes a root 0.
    k = 0
    while f[k] == 0:
        k += 1
    if k:
        roots.extend([Fraction(0)] * k)
        f = Poly(f.coeffs[k:])
    if f.degree == 0:
        return roots
    a0 = abs(f[0].numerator)
    lead = abs(f.leading.numerator)
    if unit_constant_shortcut and f.is_monic() and a0 == 1:
        candidates = [Fraction(1), Fraction(-1)]
    else:
        ps = _divisors(a0)
        qs = _divisors(lead)
        seen = set()
        candidates = []
        for q in qs:
            for p in ps:
                for s in (1, -1):
                    c = Fraction(s * p, q)
                    if c not in seen:
                        seen.add(c)
                        candidates.append(c)
        candidates.sort(key=lambda c: (c.denominator, abs(c), -c))
    for c in candidates:
        while not f.is_zero() and f.degree >= 1 and f.evaluate(c) == 0:
            roots.append(c)
            f = f // Poly((-c, 1))
    return roots


def _divisors(n: int) -> list[int]:
    if n == 0:
        return []
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


class SmithDecomposition:
    """U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ..."""

    __slots__ = ("u", "d", "v")

    def __init__(self, u: IntMatrix, d: IntMatrix, v: IntMatrix):
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("SmithDecomposition is immutable")

    def diagonal(self) -> list[int]:
        return [self.d[i, i] for i in range(min(self.d.rows, self.d.cols))]

    def verify(self, a: IntMatrix) -> bool:
        if self.u * a * self.v != self.d:
            return False
        if abs(self.u.det()) != 1 or abs(self.v.det()) != 1:
            return False
        ds = self.diagonal()
        for i in range(len(ds) - 1):
            if ds[i] < 0 or (ds[i] == 0 and ds[i + 1] != 0):
                return False
            if ds[i] != 0 and ds[i + 1] % ds[i] != 0:
                return False
        return True


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with recorded transforms.

    Deterministic: the pivot is always the entry of minimal absolute
    value in the working submatrix, ties broken in row-major order.
    """
    m, n = a.rows, a.cols
    b = a.to_rows()
    u = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        if i != j:
            b[i], b[j] = b[j], b[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in b:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row dst += q * row src
        if q:
            for k in range(n):
                b[dst][k] += q * b[src][k]
            for k in range(m):
                u[dst][k] += q * u[src][k]

    def add_col(dst, src, q):
        if q:
            for row in b:
                row[dst] += q * row[src]
            for row in v:
                row[dst] += q * row[src]

    def find_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                e = b[i][j]
                if e != 0 and (best is None or abs(e) < abs(b[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(m, n):
        pos = find_pivot(t)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            # Clear column t below the pivot, improving the pivot on remainders.
            dirty = False
            for i in range(t + 1, m):
                if b[i][t] != 0:
                    q = b[i][t] // b[t][t]
                    add_row(i, t, -q)
                    if b[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if b[t][j] != 0:
                    q = b[t][j] // b[t][t]
                    add_col(j, t, -q)
                    if b[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # Pivot must divide every remaining entry, else absorb a row and redo.
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if b[i][j] % b[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        t += 1

    for i in range(min(m, n)):
        if b[i][i] < 0:
            b[i] = [-x for x in b[i]]
            u[i] = [-x for x in u[i]]
    um = IntMatrix(m, m, [e for row in u for e in row])
    vm = IntMatrix(n, n, [e for row in v for e in row])
    dm = IntMatrix(m, n, [e for row in b for e in row])
    return SmithDecomposition(um, dm, vm)


def cokernel_invariants(a: IntMatrix) -> tuple[int, list[int]]:
    """Structure of Z^n / A Z^n: (free rank, elementary divisors > 1)."""
    if not a.is_square:
        raise ValueError("cokernel invariants need a square matrix")
    snf = smith_normal_form(a)
    ds = snf.diagonal()
    free = sum(1 for d in ds if d == 0)
    torsion = [d for d in ds if d > 1]
    return free, torsion


def cokernel_order(a: IntMatrix) -> int | None:
    """|Z^n / A Z^n| for nonsingular A, None when infinite."""
    free, torsion = cokernel_invariants(a)
    if free:
        return None
    out = 1
    for d in torsion:
        out *= d
    return out


def hermite_normal_form(a: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form (pivots positive, entries above reduced).

    Zero rows are dropped, so the result has one row per lattice basis
    vector of the row span.
    """
    rows = [list(r) for r in a.to_rows()]
    m, n = len(rows), a.cols
    rank = 0
    for col in range(n):
        pivot = None
        for i in range(rank, m):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(rank + 1, m):
            while rows[i][col] != 0:
                q = rows[rank][col] // rows[i][col]
                rows[rank] = [x - q * y for x, y in zip(rows[rank], rows[i])]
                rows[rank], rows[i] = rows[i], rows[rank]
        if rows[rank][col] < 0:
            rows[rank] = [-x for x in rows[rank]]
        for i in range(rank):
            q = rows[i][col] // rows[rank][col]
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return IntMatrix.from_rows(rows[:rank]) if rank else IntMatrix.zero(0, n)


def solve_integer(a: IntMatrix, target: Sequence[Fraction]) -> list[int] | None:
    """An integer solution x of A x = target, or None if none exists."""
    snf = smith_normal_form(a)
    t = [Fraction(0)] * a.rows
    for i in range(a.rows):
        t[i] = sum((Fraction(snf.u[i, k]) * _frac(target[k]) for k in range(a.rows)), Fraction(0))
    y = [Fraction(0)] * a.cols
    ds = snf.diagonal()
    for i in range(a.rows):
        d = ds[i] if i < len(ds) else 0
        if d == 0:
            if i < len(t) and t[i] != 0:
                return None
        else:
            q = t[i] / d
            if q.denominator != 1:
                return None
            if i < a.cols:
                y[i] = q
    x = [
        sum((Fraction(snf.v[i, k]) * y[k] for k in range(a.cols)), Fraction(0))
        for i in range(a.cols)
    ]
    if any(c.denominator != 1 for c in x):
        return None
    return [c.numerator for c in x]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n <= 0:
        raise ValueError("totient of a non-positive integer")
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Poly:
    """The n-th cyclotomic polynomial, by dividing t^n - 1 by proper divisors."""
    if n <= 0:
        raise ValueError("cyclotomic index must be positive")
    p = Poly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            q, r = divmod(p, cyclotomic_poly(d))
            if not r.is_zero():
                raise ArithmeticError("cyclotomic division failed")
            p = q
    return p


def all_roots_on_unit_circle(f: Poly) -> bool:
    """True iff every complex root of a monic integer polynomial has modulus 1.

    By Kronecker's theorem this holds iff the polynomial is a product of
    cyclotomic polynomials, so divisibility by each candidate cyclotomic
    (totient bounded by the degree) is tested, with multiplicity.
    """
    if not f.is_monic():
        raise ValueError("monic polynomial required")
    if not f.is_integer():
        raise ValueError("integer coefficients required")
    if f.degree == 0:
        return True
    if f[0] == 0:
        return False
    d = f.degree
    # phi(m) >= sqrt(m/2), so phi(m) <= d forces m <= 2 d^2.
    for m in range(1, 2 * d * d + 1):
        if euler_phi(m) > d:
            continue
        c = cyclotomic_poly(m)
        while f.degree >= c.degree:
            q, r = divmod(f, c)
            if r.is_zero():
                f = q
            else:
                break
        if f.degree == 0:
            break
    return f.degree == 0


def sylvester_resultant(f: Poly, g: Poly) -> Fraction:
    """Resultant via the Sylvester matrix determinant."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    m, n = f.degree, g.degree
    if m == 0:
        return f.leading ** n
    if n == 0:
        return g.leading ** m
    size = m + n
    rows = []
    fc = [f[m - k] for k in range(m + 1)]
    gc = [g[n - k] for k in range(n + 1)]
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - i - n - 1))
    return _fraction_det(rows)


def _fraction_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    a = [list(r) for r in rows]
    det = Fraction(1)
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if a[i][k] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                factor = a[i][k] * inv
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
    return det


def discriminant(f: Poly) -> Fraction:
    """disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * sylvester_resultant(f, f.derivative()) / f.leading
