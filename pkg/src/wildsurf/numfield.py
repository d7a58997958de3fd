"""Exact arithmetic in number fields K = Q[x]/p(x) of degree 2 to 6.

Elements are power-basis coordinate vectors; embeddings are isolated
roots of the defining polynomial (real intervals or complex boxes) so
that signs and approximations are certified.  The module also computes
the multiplier order of an integer matrix with irreducible
characteristic polynomial, scans it for units, and derives the
finiteness data of the commutant quotient used for surface
automorphism groups.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .intlinalg import (
    IntMatrix,
    Poly,
    char_poly,
    hermite_normal_form,
    rational_roots,
    smith_normal_form,
)
from .rootiso import (
    Box,
    Interval,
    count_real_roots,
    eval_box,
    eval_interval,
    isolate_real_roots,
    isolate_upper_half_roots,
    refine_complex_box,
    refine_real_root,
    root_bound,
)


class Unknown:
    """Honest failure marker for bounded searches: carries the bound used."""

    __slots__ = ("bound",)

    def __init__(self, bound: int):
        object.__setattr__(self, "bound", bound)

    def __setattr__(self, name, value):
        raise AttributeError("Unknown is immutable")

    def __repr__(self):
        return f"Unknown(bound={self.bound})"

    def __eq__(self, other):
        return isinstance(other, Unknown) and self.bound == other.bound

    def __hash__(self):
        return hash(("Unknown", self.bound))


class RealEmbedding:
    """A real root of the defining polynomial, given by an isolating
    interval across which the polynomial changes sign."""

    __slots__ = ("poly", "interval")
    is_real = True

    def __init__(self, poly: Poly, interval: Interval):
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "interval", interval)

    def __setattr__(self, name, value):
        raise AttributeError("RealEmbedding is immutable")

    def refined(self, width: Fraction) -> "RealEmbedding":
        return RealEmbedding(self.poly, refine_real_root(self.poly, self.interval, width))

    def approx(self) -> float:
        return float(self.refined(Fraction(1, 10**13)).interval.mid())

    def __repr__(self):
        return f"RealEmbedding({float(self.interval.lo):.6f}..{float(self.interval.hi):.6f})"


class ComplexEmbedding:
    """A non-real root of the defining polynomial in an isolating box."""

    __slots__ = ("poly", "box")
    is_real = False

    def __init__(self, poly: Poly, box: Box):
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "box", box)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexEmbedding is immutable")

    def refined(self, width: Fraction) -> "ComplexEmbedding":
        if self.box.im.lo > 0:
            tight = refine_complex_box(self.poly, self.box, width)
        else:
            tight = refine_complex_box(self.poly, self.box.conjugate(), width).conjugate()
        return ComplexEmbedding(self.poly, tight)

    def approx(self) -> complex:
        tight = self.refined(Fraction(1, 10**13)).box
        return complex(float(tight.re.mid()), float(tight.im.mid()))

    def __repr__(self):
        return (
            f"ComplexEmbedding({float(self.box.re.mid()):.6f}"
            f"{'+' if self.box.im.mid() >= 0 else ''}{float(self.box.im.mid()):.6f}i)"
        )


class NumberField:
    """Q[x]/p(x) for a monic integer irreducible p of degree 2 to 6."""

    __slots__ = ("poly", "degree", "embeddings")

    def __init__(self, poly: Poly, embeddings):
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "degree", poly.degree)
        object.__setattr__(self, "embeddings", tuple(embeddings))

    def __setattr__(self, name, value):
        raise AttributeError("NumberField is immutable")

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"NumberField({self.poly!r})"

    # element constructors

    def element(self, coords: Iterable[Fraction | int]) -> "FieldElement":
        cs = [Fraction(c) for c in coords]
        if len(cs) > self.degree:
            raise ValueError("too many coordinates")
        cs += [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def zero(self) -> "FieldElement":
        return self.element(())

    def one(self) -> "FieldElement":
        return self.element((1,))

    def gen(self) -> "FieldElement":
        return self.element((0, 1))

    def from_rational(self, q) -> "FieldElement":
        return self.element((Fraction(q),))

    def from_poly(self, p: Poly) -> "FieldElement":
        return self.element((p % self.poly).coeffs)

    @property
    def real_embedding_count(self) -> int:
        return sum(1 for e in self.embeddings if e.is_real)

    def signature(self) -> tuple[int, int]:
        r = self.real_embedding_count
        return r, (self.degree - r) // 2


def _integer_monic_factor_exists(p: Poly, m: int) -> bool:
    """Bounded scan for a monic integer factor of degree m (2 <= m <= deg/2)."""
    bound = root_bound(p)
    p0 = p[0].numerator
    p1 = p.evaluate(Fraction(1))
    pm1 = p.evaluate(Fraction(-1))
    const_divs = []
    a0 = abs(p0)
    d = 1
    while d * d <= a0:
        if a0 % d == 0:
            const_divs.extend({d, a0 // d})
        d += 1
    const_candidates = sorted({s * c for c in const_divs for s in (1, -1)})
    mid_bounds = [
        int(math.comb(m, k) * (bound**k)) + 1 for k in range(1, m)
    ]
    ranges = [range(-b, b + 1) for b in reversed(mid_bounds)]
    for c0 in const_candidates:
        for mids in itertools.product(*ranges):
            g = Poly([c0, *mids, 1])
            g1 = g.evaluate(Fraction(1))
            if g1 == 0 or p1 % g1 != 0:
                continue
            gm1 = g.evaluate(Fraction(-1))
            if gm1 == 0 or pm1 % gm1 != 0:
                continue
            if (p % g).is_zero():
                return True
    return False


def is_irreducible(p: Poly) -> bool:
    """Exact irreducibility over Q for a monic integer polynomial.

    Degree-one factors are rational roots; larger factors are found (or
    ruled out) by a finite coefficient scan bounded by the root bound.
    """
    if not (p.is_monic() and p.is_integer() and p.degree >= 1):
        raise ValueError("monic integer polynomial required")
    if p.degree == 1:
        return True
    if p[0] == 0:
        return False
    if rational_roots(p, unit_constant_shortcut=False):
        return False
    for m in range(2, p.degree // 2 + 1):
        if _integer_monic_factor_exists(p, m):
            return False
    return True


def make_field(p: Poly) -> NumberField:
    """Build K = Q[x]/p(x) with all embeddings isolated.

    Embeddings are ordered: real roots ascending, then conjugate box
    pairs by box center, the lower-half box first in each pair.
    """
    if not (p.is_monic() and p.is_integer()):
        raise ValueError("defining polynomial must be monic with integer coefficients")
    if not 2 <= p.degree <= 6:
        raise ValueError("degree must be between 2 and 6")
    if not is_irreducible(p):
        raise ValueError("defining polynomial is reducible")
    embeddings: list[RealEmbedding | ComplexEmbedding] = []
    for iv in isolate_real_roots(p):
        tight = refine_real_root(p, iv, Fraction(1, 2))
        embeddings.append(RealEmbedding(p, tight))
    for box in isolate_upper_half_roots(p):
        embeddings.append(ComplexEmbedding(p, box.conjugate()))
        embeddings.append(ComplexEmbedding(p, box))
    return NumberField(p, embeddings)


class FieldElement:
    """Element of a NumberField in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple[Fraction, ...]):
        if len(coords) != field.degree:
            raise ValueError("coordinate length must equal the field degree")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def as_poly(self) -> Poly:
        return Poly(self.coords)

    def _check(self, other) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        if not isinstance(other, FieldElement):
            raise TypeError("cannot combine FieldElement with %r" % (other,))
        if other.field != self.field:
            raise ValueError("field mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(
            self.field, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return FieldElement(self.field, tuple(a * q for a in self.coords))
        other = self._check(other)
        prod = self.as_poly() * other.as_poly()
        return self.field.from_poly(prod)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return (-self) + other

    def inverse(self) -> "FieldElement":
        """Inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        a, b = self.field.poly, self.as_poly()
        # maintain s*a_orig... only the b-cofactor is needed
        t0, t1 = Poly(), Poly([1])
        r0, r1 = a, b
        while not r1.is_zero() and r1.degree > 0:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, t0 - q * t1
        if r1.is_zero():
            raise ZeroDivisionError("element shares a factor with the modulus")
        # r1 is a nonzero constant: b * t1 = r1 (mod a)
        inv_poly = t1 * (1 / r1[0])
        return self.field.from_poly(inv_poly)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field, self.coords))

    def __repr__(self):
        return f"FieldElement({list(self.coords)})"

    def as_rational(self) -> Fraction | None:
        """The rational value when the element is rational, else None."""
        if any(c != 0 for c in self.coords[1:]):
            return None
        return self.coords[0]

    def conjugate(self) -> "FieldElement":
        """Galois conjugate x -> trace - x; quadratic fields only."""
        if self.field.degree != 2:
            raise ValueError("conjugate is only defined for quadratic fields")
        trace = -self.field.poly[1]
        a, b = self.coords
        return self.field.element((a + b * trace, -b))

    def sign_at(self, embedding_index: int) -> int:
        """Exact sign of the image under a real embedding: -1, 0 or +1."""
        emb = self.field.embeddings[embedding_index]
        if not emb.is_real:
            raise ValueError("sign is only defined at real embeddings")
        if self.is_zero():
            return 0
        g = self.as_poly()
        iv = emb.interval
        for _ in range(20000):
            val = eval_interval(g, iv)
            if not val.contains_zero():
                return 1 if val.lo > 0 else -1
            iv = refine_real_root(emb.poly, iv, iv.width() / 2)
        raise ArithmeticError("sign refinement did not converge")

    def real_enclosure(self, embedding_index: int, width: Fraction) -> Interval:
        """Certified interval around the image under a real embedding."""
        emb = self.field.embeddings[embedding_index]
        if not emb.is_real:
            raise ValueError("real enclosure needs a real embedding")
        iv = emb.interval
        for _ in range(20000):
            val = eval_interval(self.as_poly(), iv)
            if val.width() <= width:
                return val
            iv = refine_real_root(emb.poly, iv, iv.width() / 2)
        raise ArithmeticError("enclosure refinement did not converge")

    def approx_at(self, embedding_index: int):
        """Float (real embedding) or complex approximation of the image."""
        emb = self.field.embeddings[embedding_index]
        if emb.is_real:
            return float(self.real_enclosure(embedding_index, Fraction(1, 10**13)).mid())
        tight = emb.refined(Fraction(1, 10**10)).box
        val = eval_box(self.as_poly(), tight)
        return complex(float(val.re.mid()), float(val.im.mid()))


def q_linear_rank(elems: Sequence[FieldElement]) -> int:
    """Rank over Q of the coordinate vectors (exact Gaussian elimination)."""
    if not elems:
        return 0
    field = elems[0].field
    if any(e.field != field for e in elems):
        raise ValueError("field mismatch")
    rows = [list(e.coords) for e in elems]
    return _rational_rank(rows)


def _rational_rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col] * inv
                for j in range(col, cols):
                    rows[i][j] -= factor * rows[rank][j]
        rank += 1
    return rank


# generic linear algebra over any field-like scalars (Fraction, FieldElement):
# scalars must support +, -, *, /, bool (falsy iff zero)


def solve_field_linear(rows, rhs):
    """Solve A x = rhs over a field; None when the system is singular or
    inconsistent.  rows is a list of lists, rhs a list."""
    n = len(rows)
    m = len(rows[0])
    aug = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    pivots = []
    rank = 0
    for col in range(m):
        pivot = None
        for i in range(rank, n):
            if aug[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv_pivot = aug[rank][col]
        for i in range(n):
            if i != rank and aug[i][col]:
                factor = aug[i][col] / inv_pivot
                for j in range(col, m + 1):
                    aug[i][j] = aug[i][j] - factor * aug[rank][j]
        pivots.append(col)
        rank += 1
    for i in range(rank, n):
        if aug[i][m]:
            return None
    if rank < m:
        return None
    out = [None] * m
    for i, col in enumerate(pivots):
        out[col] = aug[i][m] / aug[i][col]
    return out


def field_matrix_inverse(rows, one):
    """Inverse of a square matrix over a field; ValueError when singular.

    `one` is the multiplicative identity of the scalar field.
    """
    n = len(rows)
    zero = one - one
    aug = [
        list(r) + [one if i == j else zero for j in range(n)]
        for i, r in enumerate(rows)
    ]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if aug[i][col]:
                pivot = i
                break
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def field_kernel(rows, one):
    """Basis of the kernel of a matrix over a field (list of vectors)."""
    n = len(rows)
    m = len(rows[0])
    zero = one - one
    a = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(m):
        pivot = None
        for i in range(rank, n):
            if a[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        pv = a[rank][col]
        a[rank] = [x / pv for x in a[rank]]
        for i in range(n):
            if i != rank and a[i][col]:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    for fc in (c for c in range(m) if c not in pivots):
        vec = [zero] * m
        for i, pc in enumerate(pivots):
            vec[pc] = zero - a[i][fc]
        vec[fc] = one
        basis.append(vec)
    return basis


class OrderData:
    """The ring of integer matrices inside Q[M]: a full lattice in the
    power basis I, M, ..., M^(d-1), with a Hermite-triangular basis."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: IntMatrix, basis: tuple[tuple[Fraction, ...], ...]):
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("OrderData is immutable")

    def expand(self, coords: Sequence[Fraction]) -> IntMatrix:
        """The integer matrix sum coords[i] * M^i; raises if not integral."""
        d = self.ambient.rows
        acc = [[Fraction(0)] * d for _ in range(d)]
        power = IntMatrix.identity(d)
        for c in coords:
            if c:
                for i in range(d):
                    for j in range(d):
                        acc[i][j] += c * power[i, j]
            power = power * self.ambient
        out = []
        for row in acc:
            for x in row:
                if x.denominator != 1:
                    raise ValueError("coordinates do not give an integer matrix")
            out.append([x.numerator for x in row])
        return IntMatrix.from_rows(out)

    def elements_in_box(self, bound: int):
        """All order elements whose power-basis coordinates have absolute
        value at most bound (deterministic lexicographic enumeration)."""
        d = len(self.basis)
        out = []

        def rec(i, partial):
            if i == d:
                out.append(tuple(partial))
                return
            row = self.basis[i]
            pivot = row[i]
            # coordinate i is fixed once c_i chosen: partial[i] + c_i * pivot
            lo = math.ceil((-bound - partial[i]) / pivot)
            hi = math.floor((bound - partial[i]) / pivot)
            for c in range(lo, hi + 1):
                nxt = [partial[j] + c * row[j] for j in range(d)]
                if all(abs(nxt[j]) <= bound for j in range(i + 1)):
                    rec(i + 1, nxt)

        rec(0, [Fraction(0)] * d)
        return out


def matrix_order(m: IntMatrix) -> OrderData:
    """Basis of the lattice of rational power-basis vectors whose matrix
    expansion is integral."""
    if not m.is_square or m.rows not in (2, 3):
        raise ValueError("2x2 or 3x3 matrix required")
    p = char_poly(m)
    if not is_irreducible(p):
        raise ValueError("characteristic polynomial is reducible")
    d = m.rows
    rows = []
    power = IntMatrix.identity(d)
    for _ in range(d):
        rows.append(list(power.entries))
        power = power * m
    b = IntMatrix.from_rows(rows)  # d x d^2
    snf = smith_normal_form(b)
    ds = snf.diagonal()
    if any(x == 0 for x in ds):
        raise ArithmeticError("power basis is degenerate")
    # lattice basis rows: U[i] / d_i; normalise to a rational Hermite form
    lcm = 1
    for x in ds:
        lcm = lcm * x // math.gcd(lcm, x)
    scaled = [
        [snf.u[i, j] * (lcm // ds[i]) for j in range(d)] for i in range(d)
    ]
    h = hermite_normal_form(IntMatrix.from_rows(scaled))
    basis = tuple(
        tuple(Fraction(h[i, j], lcm) for j in range(d)) for i in range(h.rows)
    )
    order = OrderData(m, basis)
    for row in basis:
        order.expand(row)  # integrality assertion
    return order


class UnitGroupData:
    """Units of the order: rank one with torsion {+-1} in the two admitted
    signatures; the fundamental unit is fundamental within the scan bound."""

    __slots__ = ("torsion_order", "fundamental_unit", "unit_rank", "field", "order")

    def __init__(self, torsion_order, fundamental_unit, unit_rank, field, order):
        object.__setattr__(self, "torsion_order", torsion_order)
        object.__setattr__(self, "fundamental_unit", fundamental_unit)
        object.__setattr__(self, "unit_rank", unit_rank)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("UnitGroupData is immutable")


def _designated_real_embedding(field: NumberField) -> int:
    reals = [i for i, e in enumerate(field.embeddings) if e.is_real]
    if not reals:
        raise ValueError("no real embedding")
    return reals[-1]


def unit_group(m: IntMatrix, coeff_bound: int = 12) -> UnitGroupData:
    """Scan the order of M for units and return the smallest one.

    Only the two rank-one signatures are admitted: real quadratic fields
    and cubic fields with one real embedding.  The returned unit u is
    canonical: its designated real image exceeds 1, and it minimises
    |log| among scanned units (ties broken by scan order); Unknown(bound)
    when the scan finds no unit besides +-1.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be positive")
    order = matrix_order(m)
    p = char_poly(m)
    field = make_field(p)
    r1, r2 = field.signature()
    if (field.degree, r1) not in ((2, 2), (3, 1)):
        raise ValueError(
            "unit rank is not one: signature (%d, %d) not supported" % (r1, r2)
        )
    emb = _designated_real_embedding(field)
    one = field.one()

    best = None  # canonical unit with sigma(u) > 1, minimal
    for coords in order.elements_in_box(coeff_bound):
        if all(c == 0 for c in coords):
            continue
        mat = order.expand(coords)
        if abs(mat.det()) != 1:
            continue
        u = field.element(coords)
        if (u - one).is_zero() or (u + one).is_zero():
            continue
        w = _canonical_expanding(u, emb)
        if best is None or (best - w).sign_at(emb) > 0:
            best = w
    if best is None:
        return UnitGroupData(2, Unknown(coeff_bound), 1, field, order)
    return UnitGroupData(2, best, 1, field, order)


def _canonical_expanding(u: FieldElement, emb: int) -> FieldElement:
    """Among +-u, +-1/u pick the representative with real image > 1."""
    if u.sign_at(emb) < 0:
        u = -u
    if (u - 1).sign_at(emb) < 0:
        u = u.inverse()
    if u.sign_at(emb) < 0:
        u = -u
    return u


def commutant_quotient_order(m: IntMatrix, coeff_bound: int = 12):
    """|Gamma / <M>| for the commutant Gamma of M inside GL_n(Z).

    Equals torsion * k when M = +-u^k for the scanned fundamental unit u;
    Unknown(coeff_bound) when the unit scan fails or M is not a signed
    power of the found unit (which would signal a non-fundamental u).
    """
    if abs(m.det()) != 1:
        raise ValueError("matrix must be invertible over the integers")
    ug = unit_group(m, coeff_bound)
    u = ug.fundamental_unit
    if isinstance(u, Unknown):
        return u
    field = ug.field
    emb = _designated_real_embedding(field)
    x = field.gen()
    # exact |log sigma(M)| / log sigma(u) caps the exponent search
    log_u = math.log(abs(u.approx_at(emb)))
    log_m = abs(math.log(abs(x.approx_at(emb))))
    k_max = max(1, int(log_m / log_u + 2))
    power = field.one()
    for k in range(1, k_max + 1):
        power = power * u
        for cand in (power, -power):
            if (cand - x).is_zero():
                return ug.torsion_order * k
        inv = power.inverse()
        for cand in (inv, -inv):
            if (cand - x).is_zero():
                return ug.torsion_order * k
    return Unknown(coeff_bound)
