"""Primitive-pair model of curves on the one-holed torus and four-holed sphere.

Classes on Σ₁,₁ are primitive integer pairs up to sign, with intersection
``|a1 b2 - a2 b1|``.  Σ₀,₄ uses the same pairs with every intersection
doubled.  Matrices act on column vectors: ``(a, b) -> (M11 a + M12 b,
M21 a + M22 b)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class NotUnimodular(ValueError):
    pass


class Degenerate(ValueError):
    pass


class WitnessNotFound(LookupError):
    pass


class CalibrationFailure(AssertionError):
    pass


@dataclass(frozen=True)
class PrimitivePair:
    a: int
    b: int

    def __post_init__(self):
        a, b = int(self.a), int(self.b)
        if gcd(a, b) != 1:
            raise ValueError(f"({a},{b}) is not primitive")
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __str__(self):
        return f"±({self.a},{self.b})"


def intersect_pair(p: PrimitivePair, q: PrimitivePair, surface=(1, 1)) -> int:
    """``|a1 b2 - a2 b1|``, doubled on the four-holed sphere."""
    g, r = _gr(surface)
    d = abs(p.a * q.b - q.a * p.b)
    if (g, r) == (1, 1):
        return d
    if (g, r) == (0, 4):
        return 2 * d
    raise ValueError("torus model covers only (1,1) and (0,4)")


def _gr(surface):
    if hasattr(surface, "genus"):
        return surface.genus, surface.boundary_count
    return tuple(surface)


def pair_of_vector(v) -> PrimitivePair:
    """DT class on the standard Σ₁,₁ or Σ₀,₄ decomposition to its pair.

    The pants curve is ``±(0,1)`` and the weight-one (resp. weight-two) dual
    curve is ``±(1,0)``; in general ``(m, t) -> ±(m, t)`` on Σ₁,₁ and
    ``(m, t) -> ±(m/2, t)`` on Σ₀,₄.
    """
    s = v.decomposition.surface
    m, t = v.weights[0], v.twists[0]
    if (s.genus, s.boundary_count) == (0, 4):
        m = m / 2
    if m.denominator != 1 or t.denominator != 1:
        raise ValueError("not an integral class")
    return PrimitivePair(int(m), int(t))


def vector_of_pair(pd, p: PrimitivePair):
    from .dtcoord import DTVector

    s = pd.surface
    m = p.a * 2 if (s.genus, s.boundary_count) == (0, 4) else p.a
    return DTVector(pd, (m,), (p.b,))


@dataclass
class Calibration:
    ok: bool
    pairs_checked: int
    mismatch: tuple | None = None


def dt_pair_calibration(pd, bound: int = 6, raise_on_failure: bool = True) -> Calibration:
    """Check the oracle against the pair formula on all classes up to ``bound``."""
    from .dtcoord import enumerate_curves
    from .isect import class_intersection

    s = pd.surface
    classes = enumerate_curves(pd, bound)
    n = 0
    for i, x in enumerate(classes):
        for y in classes[i:]:
            want = intersect_pair(pair_of_vector(x), pair_of_vector(y), s)
            got = class_intersection(x, y)
            n += 1
            if want != got:
                if raise_on_failure:
                    raise CalibrationFailure(f"{x} vs {y}: formula {want}, oracle {got}")
                return Calibration(False, n, (str(x), str(y), want, got))
    return Calibration(True, n)


def gl2_act(M, p: PrimitivePair) -> PrimitivePair:
    (m11, m12), (m21, m22) = M
    if abs(m11 * m22 - m12 * m21) != 1:
        raise NotUnimodular(f"det {m11 * m22 - m12 * m21} is not ±1")
    return PrimitivePair(m11 * p.a + m12 * p.b, m21 * p.a + m22 * p.b)


@dataclass(frozen=True)
class IntegerPLMap:
    """``±(x, y) -> ±(a1 x + b1 y, a2 x + b2 y)``."""

    a1: int
    b1: int
    a2: int
    b2: int

    @property
    def det(self) -> int:
        return self.a1 * self.b2 - self.a2 * self.b1

    @classmethod
    def from_matrix(cls, M) -> "IntegerPLMap":
        (a1, b1), (a2, b2) = M
        return cls(a1, b1, a2, b2)


Induced = "Induced"
NotInduced = "NotInduced"


def classify_pl_map(phi: IntegerPLMap) -> str:
    if phi.det == 0:
        raise Degenerate("determinant is zero")
    return Induced if abs(phi.det) == 1 else NotInduced


@dataclass(frozen=True)
class Witness:
    pair: PrimitivePair
    c: int
    d: int

    @property
    def divisor(self) -> int:
        return gcd(self.c, self.d)


def find_noninduced_witness(phi: IntegerPLMap, search_bound: int) -> Witness:
    """Primitive ``(a, b)`` with ``gcd(a a1 - b a2, a b1 - b b2) > 1``.

    Searched by increasing ``max(|a|, |b|)``, then in decreasing
    lexicographic order of canonical representatives, so ``(1, 1)`` is tried
    before ``(1, 0)``, ``(1, -1)`` and ``(0, 1)``.
    """
    if classify_pl_map(phi) == Induced:
        raise ValueError("map is induced; no witness exists")
    for n in range(1, search_bound + 1):
        ring = sorted({(a, b) for a in range(-n, n + 1) for b in range(-n, n + 1)
                       if max(abs(a), abs(b)) == n and gcd(a, b) == 1
                       and (a > 0 or (a == 0 and b > 0))}, reverse=True)
        for a, b in ring:
            c = a * phi.a1 - b * phi.a2
            d = a * phi.b1 - b * phi.b2
            if gcd(c, d) > 1:
                return Witness(PrimitivePair(a, b), c, d)
    raise WitnessNotFound(f"no witness with max(|a|,|b|) <= {search_bound}")


def farey_svg(classes, size: int = 400) -> str:
    """Slopes of Σ₁,₁ classes on a circle, chords joining Farey neighbours."""
    from math import atan2, cos, pi, sin

    pts = []
    for p in classes:
        # slope b/a mapped to angle in [0, pi) then doubled onto the circle
        ang = 2 * atan2(p.b, p.a) if p.a else pi
        pts.append((p, Fraction(p.b, p.a) if p.a else None, ang))
    r = size * 0.4
    c = size / 2

    def xy(ang):
        return f"{c + r * cos(ang):.3f}", f"{c - r * sin(ang):.3f}"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">',
           f'<circle cx="{c}" cy="{c}" r="{r:.3f}" fill="none" stroke="black"/>']
    for i, (p, _, a1) in enumerate(pts):
        for q, _, a2 in pts[i + 1:]:
            if intersect_pair(p, q) == 1:
                x1, y1 = xy(a1)
                x2, y2 = xy(a2)
                out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="gray"/>')
    for p, _, a in pts:
        x, y = xy(a)
        out.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
        out.append(f'<text x="{x}" y="{y}" font-size="10">{p.a},{p.b}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
