"""Validated root isolation for integer polynomials.

Real roots are isolated by Sturm bisection into rational intervals with a
sign change at the endpoints.  Non-real roots of a squarefree polynomial
are captured in axis-aligned boxes with rational corners by quadtree
subdivision with exact interval arithmetic; Mahler's root-separation
bound certifies that each surviving cluster holds exactly one root.
Everything here is exact: no floating point enters any decision.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .intlinalg import (
    Poly,
    rational_roots,
    squarefree_decomposition,
    sylvester_resultant,
)


class Interval:
    """Closed rational interval [lo, hi]."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError("empty interval")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("Interval is immutable")

    @classmethod
    def point(cls, x) -> "Interval":
        return cls(x, x)

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    def square(self) -> "Interval":
        if self.lo >= 0:
            return Interval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Interval(self.hi * self.hi, self.lo * self.lo)
        return Interval(0, max(self.lo * self.lo, self.hi * self.hi))

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def abs(self) -> "Interval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0, max(-self.lo, self.hi))

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


class Box:
    """Rectangle in the complex plane with rational corners."""

    __slots__ = ("re", "im")

    def __init__(self, re: Interval, im: Interval):
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("Box is immutable")

    def __repr__(self):
        return f"Box(re={self.re}, im={self.im})"

    def __add__(self, other: "Box") -> "Box":
        return Box(self.re + other.re, self.im + other.im)

    def __mul__(self, other: "Box") -> "Box":
        return Box(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def conjugate(self) -> "Box":
        return Box(self.re, -self.im)

    def diameter_sq(self) -> Fraction:
        w = self.re.width()
        h = self.im.width()
        return w * w + h * h

    def intersects(self, other: "Box") -> bool:
        return self.re.intersects(other.re) and self.im.intersects(other.im)

    def modulus_sq(self) -> Interval:
        return self.re.square() + self.im.square()


def eval_interval(f: Poly, x: Interval) -> Interval:
    acc = Interval.point(0)
    for c in reversed(f.coeffs):
        acc = acc * x + Interval.point(c)
    return acc


def eval_box(f: Poly, z: Box) -> Box:
    acc = Box(Interval.point(0), Interval.point(0))
    for c in reversed(f.coeffs):
        acc = acc * z + Box(Interval.point(c), Interval.point(0))
    return acc


def root_bound(f: Poly) -> Fraction:
    """Cauchy bound: every complex root has modulus < the returned value."""
    if f.degree < 1:
        raise ValueError("root bound needs degree >= 1")
    lead = abs(f.leading)
    return 1 + max(abs(c) for c in f.coeffs[:-1]) / lead


def _prim_keep_sign(p: Poly) -> Poly:
    # divide by the (positive) content; unlike Poly.primitive this keeps
    # the sign, which Sturm chains rely on
    if p.is_zero():
        return p
    return p * (1 / p.content())


def sturm_chain(f: Poly) -> list[Poly]:
    p0 = f.primitive()
    chain = [p0, _prim_keep_sign(p0.derivative())]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        rem = chain[-2] % chain[-1]
        if rem.is_zero():
            break
        chain.append(_prim_keep_sign(-rem))
    while chain and chain[-1].is_zero():
        chain.pop()
    return chain


def _sign_variations(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = p.evaluate(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f: Poly, lo: Fraction, hi: Fraction, chain=None) -> int:
    """Number of distinct real roots in (lo, hi] of a squarefree polynomial."""
    if chain is None:
        chain = sturm_chain(f)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def isolate_real_roots(f: Poly) -> list[Interval]:
    """Disjoint isolating intervals for all real roots of a squarefree
    polynomial with no rational roots; f changes sign across each interval."""
    if f.degree < 1:
        return []
    chain = sturm_chain(f)
    r = root_bound(f)
    total = count_real_roots(f, -r, r, chain)
    out: list[Interval] = []
    stack = [(-r, r, total)]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            # shrink until the endpoints witness a sign change
            flo = f.evaluate(lo)
            fhi = f.evaluate(hi)
            if flo == 0 or fhi == 0:
                raise ValueError("rational root hit; deflate rational roots first")
            while flo * fhi > 0:
                mid = (lo + hi) / 2
                if count_real_roots(f, lo, mid, chain) == 1:
                    hi = mid
                    fhi = f.evaluate(hi)
                else:
                    lo = mid
                    flo = f.evaluate(lo)
                if flo == 0 or fhi == 0:
                    raise ValueError("rational root hit; deflate rational roots first")
            out.append(Interval(lo, hi))
            continue
        mid = (lo + hi) / 2
        left = count_real_roots(f, lo, mid, chain)
        stack.append((lo, mid, left))
        stack.append((mid, hi, cnt - left))
    out.sort(key=lambda iv: iv.lo)
    # shrink until the closed intervals are pairwise disjoint
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i].hi >= out[i + 1].lo:
                out[i] = refine_real_root(f, out[i], out[i].width() / 2)
                out[i + 1] = refine_real_root(f, out[i + 1], out[i + 1].width() / 2)
                changed = True
    return out


def refine_real_root(f: Poly, iv: Interval, width: Fraction) -> Interval:
    """Bisect a sign-change interval until it is narrower than width."""
    lo, hi = iv.lo, iv.hi
    flo = f.evaluate(lo)
    if flo == 0:
        raise ValueError("endpoint is a root")
    neg_at_lo = flo < 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        fmid = f.evaluate(mid)
        if fmid == 0:
            raise ValueError("rational midpoint root; deflate first")
        if (fmid < 0) == neg_at_lo:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)


def sqrt_lower(q: Fraction, bits: int = 64) -> Fraction:
    """Rational lower bound for sqrt(q), q >= 0."""
    if q < 0:
        raise ValueError("negative radicand")
    scale = 1 << bits
    n = math.isqrt((q.numerator * scale * scale) // q.denominator)
    return Fraction(n, scale)


def sqrt_upper(q: Fraction, bits: int = 64) -> Fraction:
    if q < 0:
        raise ValueError("negative radicand")
    scale = 1 << bits
    n = math.isqrt((q.numerator * scale * scale) // q.denominator) + 1
    return Fraction(n, scale)


def sqrt_interval(iv: Interval, bits: int = 64) -> Interval:
    return Interval(sqrt_lower(iv.lo, bits), sqrt_upper(iv.hi, bits))


def separation_lower_bound(f: Poly) -> Fraction:
    """Positive rational lower bound for the minimal distance between
    distinct roots of a squarefree integer polynomial (Mahler)."""
    f = f.primitive()
    d = f.degree
    if d < 2:
        return Fraction(1)
    disc = sylvester_resultant(f, f.derivative()) / f.leading
    if disc == 0:
        raise ValueError("polynomial is not squarefree")
    num = sqrt_lower(3 * abs(disc))
    norm_sq = sum(Fraction(c) ** 2 for c in f.coeffs)
    # d^((d+2)/2) and ||f||^(d-1), rounded up
    if d % 2 == 0:
        dpow = Fraction(d) ** ((d + 2) // 2)
    else:
        dpow = Fraction(d) ** ((d + 1) // 2) * sqrt_upper(Fraction(d))
    if (d - 1) % 2 == 0:
        npow = norm_sq ** ((d - 1) // 2)
    else:
        npow = norm_sq ** ((d - 2) // 2) * sqrt_upper(norm_sq) if d >= 2 else Fraction(1)
    bound = num / (dpow * npow)
    if bound <= 0:
        raise ArithmeticError("separation bound degenerated")
    return bound


class _Cell:
    __slots__ = ("x", "y", "size")

    def __init__(self, x: Fraction, y: Fraction, size: Fraction):
        self.x = x
        self.y = y
        self.size = size

    def box(self) -> Box:
        return Box(
            Interval(self.x, self.x + self.size),
            Interval(self.y, self.y + self.size),
        )

    def split(self):
        h = self.size / 2
        return [
            _Cell(self.x, self.y, h),
            _Cell(self.x + h, self.y, h),
            _Cell(self.x, self.y + h, h),
            _Cell(self.x + h, self.y + h, h),
        ]


def _components(cells: list[_Cell]) -> list[list[_Cell]]:
    n = len(cells)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            a, b = cells[i], cells[j]
            if abs(a.x - b.x) <= max(a.size, b.size) and abs(a.y - b.y) <= max(a.size, b.size):
                ra, rb = find(i), find(j)
                if ra != rb:
                    parent[ra] = rb
    groups: dict[int, list[_Cell]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(cells[i])
    return list(groups.values())


def _bounding_box(cells: list[_Cell]) -> Box:
    x0 = min(c.x for c in cells)
    x1 = max(c.x + c.size for c in cells)
    y0 = min(c.y for c in cells)
    y1 = max(c.y + c.size for c in cells)
    return Box(Interval(x0, x1), Interval(y0, y1))


def isolate_upper_half_roots(f: Poly, max_depth: int = 300) -> list[Box]:
    """Isolating boxes for the roots of a squarefree integer polynomial in
    the open upper half plane; conjugate mirror images cover the rest."""
    f = f.primitive()
    d = f.degree
    if d < 2:
        return []
    reals = count_real_roots(f, -root_bound(f), root_bound(f))
    pairs = (d - reals) // 2
    if pairs == 0:
        return []
    sep = separation_lower_bound(f)
    r = root_bound(f)
    # non-real roots sit at height >= sep/2 above the axis
    y0 = sep / 2
    active = [_Cell(-r, y0, 2 * r)]
    for _ in range(max_depth):
        next_active = []
        for cell in active:
            for sub in cell.split():
                if eval_box(f, sub.box()).contains_zero():
                    next_active.append(sub)
        active = next_active
        comps = _components(active)
        if len(comps) != pairs:
            continue
        boxes = [_bounding_box(c) for c in comps]
        if any(b.diameter_sq() >= sep * sep for b in boxes):
            continue
        ok = True
        for i in range(len(boxes)):
            for j in range(i + 1, len(boxes)):
                if boxes[i].intersects(boxes[j]):
                    ok = False
        if ok:
            boxes.sort(key=lambda b: (b.re.mid(), b.im.mid()))
            return boxes
    raise ArithmeticError("complex root isolation did not converge")


def refine_complex_box(f: Poly, box: Box, width: Fraction, max_depth: int = 300) -> Box:
    """Shrink an isolating box (exactly one root inside) below width."""
    side = max(box.re.width(), box.im.width())
    active = [_Cell(box.re.lo, box.im.lo, side)]
    best = box
    for _ in range(max_depth):
        if max(best.re.width(), best.im.width()) <= width:
            return best
        next_active = []
        for cell in active:
            for sub in cell.split():
                if eval_box(f, sub.box()).contains_zero():
                    next_active.append(sub)
        active = next_active
        if not active:
            raise ArithmeticError("root escaped its isolating box")
        best = _bounding_box(active)
    raise ArithmeticError("complex box refinement did not converge")


def root_moduli(f: Poly, width: Fraction = Fraction(1, 10**12)) -> list[Interval]:
    """Enclosures for the moduli of all complex roots of f, with multiplicity.

    Rational roots contribute exact point intervals; other moduli are
    enclosed to at most the requested width.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    out: list[Interval] = []
    for g, mult in squarefree_decomposition(f):
        g = g.primitive()
        for root in rational_roots(g, unit_constant_shortcut=False):
            out.extend([Interval.point(abs(root))] * mult)
            g = g // Poly((-root, 1))
        g = g.primitive()
        if g.degree >= 1:
            for iv in isolate_real_roots(g):
                tight = refine_real_root(g, iv, width)
                out.extend([tight.abs()] * mult)
        if g.degree >= 2:
            for box in isolate_upper_half_roots(g):
                tight = refine_complex_box(g, box, _box_width_for(width, box))
                modulus = sqrt_interval(tight.modulus_sq())
                # the conjugate root has the same modulus
                out.extend([modulus] * (2 * mult))
    return out


def _box_width_for(target: Fraction, box: Box) -> Fraction:
    # |z| is 1-Lipschitz in (re, im), so a box of side w gives a modulus
    # interval of width at most 2w plus the sqrt rounding slack.
    return target / 4
