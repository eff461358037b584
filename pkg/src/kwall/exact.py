"""Exact rational arithmetic: polynomials, piecewise functions, small linear algebra,
and convex polygon primitives.

Every scalar in the toolkit is a ``fractions.Fraction`` (arbitrary-precision,
always reduced, positive denominator).  Nothing here ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

Vec2 = tuple[Fraction, Fraction]
Vec3 = tuple[Fraction, Fraction, Fraction]


class StructuralError(ValueError):
    """Malformed input (non-monotone breakpoints, invalid vertex list, ...)."""


class DegenerateInputError(ValueError):
    """An operation received a degenerate value it cannot handle (e.g. centroid of a segment)."""


class SingularSystemError(ValueError):
    """A linear system without a unique solution; carries the coefficient rank."""

    def __init__(self, rank: int):
        super().__init__(f"singular linear system (rank {rank})")
        self.rank = rank


def rat(x, denom=None) -> Fraction:
    """Coerce ints, 'p/q' strings, or pairs to an exact rational."""
    if denom is not None:
        return Fraction(x, denom)
    if isinstance(x, float):
        raise StructuralError("floating-point input rejected; use int, Fraction, or 'p/q' string")
    return Fraction(x)


def fmt(q: Fraction) -> str:
    """Render a rational as 'p/q' in lowest terms, or 'p' when integral."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def vec2(x, y) -> Vec2:
    return (rat(x), rat(y))


def vec3(x, y, z) -> Vec3:
    return (rat(x), rat(y), rat(z))


def v2_add(a: Vec2, b: Vec2) -> Vec2:
    return (a[0] + b[0], a[1] + b[1])


def v2_sub(a: Vec2, b: Vec2) -> Vec2:
    return (a[0] - b[0], a[1] - b[1])


def v2_scale(s, a: Vec2) -> Vec2:
    s = rat(s)
    return (s * a[0], s * a[1])


def v2_dot(a: Vec2, b: Vec2) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def v2_cross(a: Vec2, b: Vec2) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def v3_add(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def v3_sub(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def v3_scale(s, a: Vec3) -> Vec3:
    s = rat(s)
    return (s * a[0], s * a[1], s * a[2])


def v3_dot(a: Vec3, b: Vec3) -> Fraction:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def v3_cross(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


# ---------------------------------------------------------------------------
# univariate polynomials, lowest degree first
# ---------------------------------------------------------------------------

class Poly:
    """Polynomial with exact rational coefficients, lowest degree first.

    Trailing zero coefficients are stripped; the zero polynomial has no
    coefficients.  No degree cap is imposed.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, t) -> Fraction:
        t = rat(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, Poly):
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        s = rat(other)
        return Poly([s * c for c in self.coeffs])

    __rmul__ = __mul__

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "Poly":
        return Poly([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def integral(self, a, b) -> Fraction:
        F = self.antiderivative()
        return F(b) - F(a)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = [f"{fmt(c)}*t^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return "Poly(" + " + ".join(terms) + ")"


def poly(*coeffs) -> Poly:
    """Poly from constant term upward: poly(1, 0, -2) == 1 - 2t^2."""
    return Poly(coeffs)


# ---------------------------------------------------------------------------
# piecewise polynomial functions
# ---------------------------------------------------------------------------

class PiecewiseQuadratic:
    """Piecewise polynomial on [t0, oo), identically zero beyond the last breakpoint.

    ``breakpoints`` is a strictly increasing list t0 < t1 < ... < tk and
    ``pieces[i]`` is the polynomial on the closed-left interval [t_i, t_{i+1}).
    Adjacent pieces must agree at interior breakpoints.  The name reflects the
    dominant use (volume profiles are quadratic per piece); higher degrees are
    accepted.
    """

    __slots__ = ("breakpoints", "pieces")

    def __init__(self, breakpoints: Sequence, pieces: Sequence[Poly]):
        bps = [rat(b) for b in breakpoints]
        if len(bps) != len(pieces) + 1:
            raise StructuralError("need exactly one more breakpoint than pieces")
        for a, b in zip(bps, bps[1:]):
            if not a < b:
                raise StructuralError("breakpoints must be strictly increasing")
        for i in range(len(pieces) - 1):
            t = bps[i + 1]
            if pieces[i](t) != pieces[i + 1](t):
                raise StructuralError(f"pieces disagree at breakpoint {fmt(t)}")
        self.breakpoints = tuple(bps)
        self.pieces = tuple(pieces)

    @property
    def support_end(self) -> Fraction:
        return self.breakpoints[-1]

    def __call__(self, t) -> Fraction:
        t = rat(t)
        if t < self.breakpoints[0]:
            raise StructuralError(f"evaluation below domain start {fmt(self.breakpoints[0])}")
        if t >= self.breakpoints[-1]:
            return Fraction(0)
        lo, hi = 0, len(self.pieces) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.breakpoints[mid] <= t:
                lo = mid
            else:
                hi = mid - 1
        return self.pieces[lo](t)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PiecewiseQuadratic)
            and self.breakpoints == other.breakpoints
            and self.pieces == other.pieces
        )

    def __hash__(self):
        return hash((self.breakpoints, self.pieces))

    def scale(self, s) -> "PiecewiseQuadratic":
        s = rat(s)
        return PiecewiseQuadratic(self.breakpoints, [p * s for p in self.pieces])

    def __repr__(self):
        parts = [
            f"[{fmt(a)},{fmt(b)}]: {p!r}"
            for a, b, p in zip(self.breakpoints, self.breakpoints[1:], self.pieces)
        ]
        return "PiecewiseQuadratic{" + ", ".join(parts) + "}"


def integrate(f: PiecewiseQuadratic, start) -> Fraction:
    """Exact integral of f over [start, oo); finite because support is bounded."""
    start = rat(start)
    if start < f.breakpoints[0]:
        raise StructuralError("integration start below domain start")
    total = Fraction(0)
    for a, b, p in zip(f.breakpoints, f.breakpoints[1:], f.pieces):
        lo = max(a, start)
        if lo < b:
            total += p.integral(lo, b)
    return total


# ---------------------------------------------------------------------------
# convex polygons
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Polygon2:
    """Convex region given by its CCW vertex list; may be empty, a point, or a segment.

    Construct through :func:`polygon`, which canonicalizes (dedups, strips
    collinear vertices, classifies degeneracies, checks convexity).
    """

    vertices: tuple[Vec2, ...]
    kind: str  # "empty" | "point" | "segment" | "polygon"

    @property
    def is_degenerate(self) -> bool:
        return self.kind != "polygon"


def _canonical_vertices(points: Sequence[Vec2]) -> list[Vec2]:
    pts = [(rat(p[0]), rat(p[1])) for p in points]
    out: list[Vec2] = []
    for p in pts:
        if not out or p != out[-1]:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def polygon(points: Sequence[Vec2]) -> Polygon2:
    """Build a Polygon2 from a vertex cycle, accepting degenerate data."""
    pts = _canonical_vertices(points)
    if not pts:
        return Polygon2((), "empty")
    if len(pts) == 1:
        return Polygon2(tuple(pts), "point")
    # drop collinear middle vertices of the cycle
    changed = True
    while changed and len(pts) > 2:
        changed = False
        for i in range(len(pts)):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if v2_cross(v2_sub(b, a), v2_sub(c, b)) == 0:
                del pts[i]
                changed = True
                break
    pts = _canonical_vertices(pts)
    if len(pts) == 1:
        return Polygon2(tuple(pts), "point")
    if len(pts) == 2:
        return Polygon2(tuple(pts), "segment")
    area2 = sum(v2_cross(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts)))
    if area2 < 0:
        pts.reverse()
    for i in range(len(pts)):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
        if v2_cross(v2_sub(b, a), v2_sub(c, b)) <= 0:
            raise StructuralError("vertex list is not strictly convex")
    return Polygon2(tuple(pts), "polygon")


def clip(p: Polygon2, normal: Vec2, offset) -> Polygon2:
    """Intersect p with the halfplane {u : <u, normal> >= offset}.

    Degenerate output is legal and flagged on the result.
    """
    offset = rat(offset)
    normal = (rat(normal[0]), rat(normal[1]))
    if normal == (Fraction(0), Fraction(0)):
        raise StructuralError("halfplane normal must be nonzero")
    if p.kind == "empty":
        return p
    if p.kind == "point":
        return p if v2_dot(p.vertices[0], normal) >= offset else Polygon2((), "empty")
    if p.kind == "segment":
        a, b = p.vertices
        fa, fb = v2_dot(a, normal) - offset, v2_dot(b, normal) - offset
        if fa < 0 and fb < 0:
            return Polygon2((), "empty")
        if fa >= 0 and fb >= 0:
            return p
        t = fa / (fa - fb)  # crossing parameter on [a, b]
        cut = v2_add(a, v2_scale(t, v2_sub(b, a)))
        kept = a if fa >= 0 else b
        return polygon([kept, cut])
    out: list[Vec2] = []
    verts = p.vertices
    n = len(verts)
    for i in range(n):
        cur, nxt = verts[i], verts[(i + 1) % n]
        fc = v2_dot(cur, normal) - offset
        fn = v2_dot(nxt, normal) - offset
        if fc >= 0:
            out.append(cur)
        if (fc > 0 and fn < 0) or (fc < 0 and fn > 0):
            t = fc / (fc - fn)
            out.append(v2_add(cur, v2_scale(t, v2_sub(nxt, cur))))
    return polygon(out)


def area_centroid(p: Polygon2) -> tuple[Fraction, Vec2]:
    """Exact area (shoelace) and centroid (signed triangle fan) of a non-degenerate polygon."""
    if p.is_degenerate:
        raise DegenerateInputError(f"centroid undefined for degenerate polygon (kind={p.kind})")
    verts = p.vertices
    n = len(verts)
    twice_area = Fraction(0)
    cx = Fraction(0)
    cy = Fraction(0)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        w = v2_cross(a, b)
        twice_area += w
        cx += (a[0] + b[0]) * w
        cy += (a[1] + b[1]) * w
    area = twice_area / 2
    return area, (cx / (3 * twice_area), cy / (3 * twice_area))


# ---------------------------------------------------------------------------
# 3x3 exact linear algebra
# ---------------------------------------------------------------------------

Mat3 = tuple[Vec3, Vec3, Vec3]  # rows


def mat3(rows: Sequence[Sequence]) -> Mat3:
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise StructuralError("mat3 needs three rows of three entries")
    return tuple(vec3(*r) for r in rows)  # type: ignore[return-value]


def det3(m: Mat3) -> Fraction:
    return v3_dot(m[0], v3_cross(m[1], m[2]))


def mat3_rank(m: Mat3) -> int:
    rows = [list(r) for r in m]
    rank = 0
    col = 0
    while rank < 3 and col < 3:
        piv = next((r for r in range(rank, 3) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(rank + 1, 3):
            f = rows[r][col] / rows[rank][col]
            for c in range(col, 3):
                rows[r][c] -= f * rows[rank][c]
        rank += 1
        col += 1
    return rank


def solve_linear3(m: Mat3, rhs: Vec3) -> Vec3:
    """Unique solution of m x = rhs; raises SingularSystemError(rank) when det = 0."""
    d = det3(m)
    if d == 0:
        raise SingularSystemError(mat3_rank(m))
    out = []
    for i in range(3):
        mm = tuple(
            tuple(rhs[r] if c == i else m[r][c] for c in range(3)) for r in range(3)
        )
        out.append(det3(mm) / d)  # type: ignore[arg-type]
    return (out[0], out[1], out[2])


def mat3_vec(m: Mat3, v: Vec3) -> Vec3:
    return (v3_dot(m[0], v), v3_dot(m[1], v), v3_dot(m[2], v))


def mat3_mul(a: Mat3, b: Mat3) -> Mat3:
    cols = list(zip(*b))
    return tuple(
        tuple(v3_dot(a[r], vec3(*cols[c])) for c in range(3)) for r in range(3)
    )  # type: ignore[return-value]


def mat3_transpose(m: Mat3) -> Mat3:
    return tuple(zip(*m))  # type: ignore[return-value]


def mat3_inverse(m: Mat3) -> Mat3:
    d = det3(m)
    if d == 0:
        raise SingularSystemError(mat3_rank(m))
    cof = [[None] * 3 for _ in range(3)]
    for r in range(3):
        for c in range(3):
            sub = [
                [m[i][j] for j in range(3) if j != c] for i in range(3) if i != r
            ]
            minor = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
            cof[r][c] = (-1) ** (r + c) * minor / d
    return mat3_transpose(mat3(cof))
