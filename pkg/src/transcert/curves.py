"""Convex-curve measurements and a falsification harness for the L, d, D, A conjectures.

Two readings of the extents d (smallest) and D (largest) are supported:

``chord``  length of the chord through the centroid, per direction;
``width``  distance between parallel support lines, h(t) + h(t + pi).

Floating-point throughout; decisions use a margin and report ``inconclusive``
instead of pass/fail when a quantity sits within it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import DegenerateCurve

CHORD = "chord"
WIDTH = "width"
DEFINITIONS = (CHORD, WIDTH)
DECISION_MARGIN = 1e-9

_INVPHI = (math.sqrt(5) - 1) / 2


# ---------------------------------------------------------------------------
# Curve variants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Circle:
    r: float

    def __post_init__(self):
        if not self.r > 0:
            raise DegenerateCurve("circle radius must be positive")


@dataclass(frozen=True)
class Ellipse:
    a: float
    b: float

    def __post_init__(self):
        if not self.b > 0:
            raise DegenerateCurve("ellipse semi-axes must be positive")
        if self.a < self.b:
            raise ValueError("ellipse needs a >= b")


@dataclass(frozen=True)
class ConvexPolygon:
    vertices: tuple[tuple[float, float], ...]

    @staticmethod
    def from_points(points) -> ConvexPolygon:
        """Convex hull (counterclockwise, no collinear vertices) of the points."""
        hull = convex_hull(np.asarray(points, dtype=float))
        if len(hull) < 3:
            raise DegenerateCurve("hull has fewer than 3 vertices")
        return ConvexPolygon(tuple(map(tuple, hull.tolist())))

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise DegenerateCurve("polygon needs at least 3 vertices")


Curve = Circle | Ellipse | ConvexPolygon


def regular_polygon(n: int, circumradius: float = 1.0, phase: float = 0.0) -> ConvexPolygon:
    t = phase + 2 * math.pi * np.arange(n) / n
    return ConvexPolygon(tuple(zip((circumradius * np.cos(t)).tolist(),
                                   (circumradius * np.sin(t)).tolist())))


def equilateral_triangle(side: float = 1.0) -> ConvexPolygon:
    h = side * math.sqrt(3) / 2
    return ConvexPolygon(((0.0, 0.0), (side, 0.0), (side / 2, h)))


def reuleaux_polygon(k: int = 3, arc_points: int = 64) -> ConvexPolygon:
    """Polygonal approximation of the Reuleaux k-gon (k odd), a body of constant width."""
    if k < 3 or k % 2 == 0:
        raise ValueError("k must be odd and >= 3")
    t = 2 * math.pi * np.arange(k) / k
    verts = np.stack([np.cos(t), np.sin(t)], axis=1)
    arcs = []
    for i in range(k):
        c = verts[(i + (k + 1) // 2) % k]
        a0 = math.atan2(*(verts[i] - c)[::-1])
        a1 = math.atan2(*(verts[(i + 1) % k] - c)[::-1])
        a1 += 2 * math.pi * (a1 < a0)
        r = float(np.hypot(*(verts[i] - c)))
        s = np.linspace(a0, a1, arc_points + 1)
        arcs.append(c + r * np.stack([np.cos(s), np.sin(s)], axis=1))
    return ConvexPolygon.from_points(np.concatenate(arcs))


def convex_hull(points: np.ndarray) -> np.ndarray:
    """Andrew's monotone chain; drops collinear points."""
    pts = sorted(set(map(tuple, points.tolist())))
    if len(pts) < 3:
        return np.asarray(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return np.asarray(lower[:-1] + upper[:-1])


def transform(c: Curve, scale: float = 1.0, angle: float = 0.0,
              shift: tuple[float, float] = (0.0, 0.0)) -> Curve:
    """Similarity image of a polygon (circles and ellipses only scale)."""
    if isinstance(c, Circle):
        return Circle(c.r * scale)
    if isinstance(c, Ellipse):
        return Ellipse(c.a * scale, c.b * scale)
    rot = np.array([[math.cos(angle), -math.sin(angle)], [math.sin(angle), math.cos(angle)]])
    v = scale * c.array @ rot.T + np.asarray(shift)
    return ConvexPolygon(tuple(map(tuple, v.tolist())))


# ---------------------------------------------------------------------------
# Elementary measures
# ---------------------------------------------------------------------------

def agm(a: float, b: float) -> float:
    while abs(a - b) > 1e-16 * a:
        a, b = (a + b) / 2, math.sqrt(a * b)
    return (a + b) / 2


def ellipse_perimeter(a: float, b: float) -> float:
    """4 a E(e) via the Gauss-Kummer AGM form 2 pi / M (a^2 - sum 2^{n-1} c_n^2)."""
    an, bn = float(a), float(b)
    total = 0.5 * (an * an - bn * bn)  # n = 0 term: 2^{-1} c_0^2
    power = 0.5
    while True:
        cn = (an - bn) / 2
        an, bn = (an + bn) / 2, math.sqrt(an * bn)
        power *= 2
        term = power * cn * cn
        total += term
        if term <= 1e-17 * a * a:
            break
    return 2 * math.pi * (a * a - total) / an


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-13, depth: int = 50) -> float:
    def simpson(fa, fm, fb, lo, hi):
        return (hi - lo) / 6 * (fa + 4 * fm + fb)

    def rec(lo, hi, fa, fm, fb, whole, tol, depth):
        mid = (lo + hi) / 2
        lm, rm = (lo + mid) / 2, (mid + hi) / 2
        flm, frm = f(lm), f(rm)
        left = simpson(fa, flm, fm, lo, mid)
        right = simpson(fm, frm, fb, mid, hi)
        if depth <= 0 or abs(left + right - whole) <= 15 * tol:
            return left + right + (left + right - whole) / 15
        return (rec(lo, mid, fa, flm, fm, left, tol / 2, depth - 1)
                + rec(mid, hi, fm, frm, fb, right, tol / 2, depth - 1))

    fa, fb, fm = f(a), f(b), f((a + b) / 2)
    return rec(a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, depth)


def ellipse_perimeter_quadrature(a: float, b: float, tol: float = 1e-13) -> float:
    return 4 * adaptive_simpson(lambda t: math.hypot(a * math.sin(t), b * math.cos(t)),
                                0.0, math.pi / 2, tol)


def polygon_area_centroid(v: np.ndarray) -> tuple[float, np.ndarray]:
    x, y = v[:, 0], v[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    area = cross.sum() / 2
    if abs(area) <= 0:
        raise DegenerateCurve("polygon has zero area")
    cx = ((x + xn) * cross).sum() / (6 * area)
    cy = ((y + yn) * cross).sum() / (6 * area)
    return abs(area), np.array([cx, cy])


def polygon_perimeter(v: np.ndarray) -> float:
    return float(np.hypot(*(np.roll(v, -1, axis=0) - v).T).sum())


# ---------------------------------------------------------------------------
# Extent functions and optimization over directions
# ---------------------------------------------------------------------------

def extent_function(c: Curve, definition: str):
    """Vectorized map from direction angles to extents under a definition."""
    if definition not in DEFINITIONS:
        raise ValueError(f"unknown definition {definition!r}")
    if isinstance(c, Circle):
        return lambda t: np.full(np.shape(np.atleast_1d(t)), 2 * c.r)
    if isinstance(c, Ellipse):
        a, b = c.a, c.b
        if definition == WIDTH:
            return lambda t: 2 * np.sqrt((a * np.cos(t)) ** 2 + (b * np.sin(t)) ** 2)
        return lambda t: 2 * a * b / np.sqrt((b * np.cos(t)) ** 2 + (a * np.sin(t)) ** 2)
    v = c.array
    if definition == WIDTH:
        return lambda t: _kernels.polygon_widths(v, t)
    _, center = polygon_area_centroid(v)
    return lambda t: _kernels.polygon_chords(v, center, t)


def _golden(f, lo: float, hi: float, tol: float, sign: float) -> tuple[float, float]:
    """Golden-section search for the minimum of sign * f on [lo, hi]."""
    g = lambda t: sign * float(f(np.array([t]))[0])  # noqa: E731
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1, f2 = g(x1), g(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVPHI * (hi - lo)
            f1 = g(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVPHI * (hi - lo)
            f2 = g(x2)
    t = (lo + hi) / 2
    return t, sign * g(t)


def _candidate_angles(c: Curve, definition: str) -> np.ndarray:
    """Directions where polygon extent functions have kinks."""
    if not isinstance(c, ConvexPolygon):
        return np.empty(0)
    v = c.array
    e = np.roll(v, -1, axis=0) - v
    if definition == WIDTH:
        # edge normals (minimum width) and vertex-pair directions (diameter)
        normals = np.arctan2(e[:, 0], -e[:, 1])
        i, j = np.triu_indices(len(v), 1)
        d = v[j] - v[i]
        pairs = np.arctan2(d[:, 1], d[:, 0])
        angles = np.concatenate([normals, pairs])
    else:
        _, center = polygon_area_centroid(v)
        d = v - center
        angles = np.concatenate([np.arctan2(d[:, 1], d[:, 0]), np.arctan2(e[:, 1], e[:, 0])])
    return np.mod(angles, math.pi)


def extremes(c: Curve, definition: str, n_dirs: int = 256,
             refine_tol: float = 1e-12) -> tuple[float, float, float, float]:
    """(d, D, angle_d, angle_D): min and max extent over directions in [0, pi)."""
    if n_dirs < 64:
        raise ValueError("n_dirs must be >= 64")
    f = extent_function(c, definition)
    grid = np.arange(n_dirs) * (math.pi / n_dirs)
    cand = _candidate_angles(c, definition)
    angles = np.concatenate([grid, cand])
    vals = np.asarray(f(angles), dtype=float)
    step = math.pi / n_dirs
    results = []
    for sign, pick in ((1.0, np.argmin), (-1.0, np.argmax)):
        k = int(pick(vals))
        t0, v0 = float(angles[k]), float(vals[k])
        t, v = _golden(f, t0 - step, t0 + step, refine_tol, sign)
        better = v < v0 if sign > 0 else v > v0
        results.append((t % math.pi, v) if better else (t0, v0))
    (td, d), (tD, D) = results
    return d, D, td, tD


@dataclass(frozen=True)
class CurveMeasures:
    L: float
    A: float
    centroid: tuple[float, float]
    d: float
    D: float
    definition: str
    L_check: float | None = None  # independent perimeter estimate (ellipse)

    def as_dict(self) -> dict:
        return {"L": self.L, "A": self.A, "centroid": list(self.centroid), "d": self.d,
                "D": self.D, "definition": self.definition, "L_check": self.L_check}


def measures(c: Curve, definition: str = WIDTH, n_dirs: int = 256,
             refine_tol: float = 1e-12) -> CurveMeasures:
    L_check = None
    if isinstance(c, Circle):
        L, A, cen = 2 * math.pi * c.r, math.pi * c.r ** 2, (0.0, 0.0)
    elif isinstance(c, Ellipse):
        L = ellipse_perimeter(c.a, c.b)
        L_check = ellipse_perimeter_quadrature(c.a, c.b)
        A, cen = math.pi * c.a * c.b, (0.0, 0.0)
    else:
        v = c.array
        A, centroid = polygon_area_centroid(v)
        L, cen = polygon_perimeter(v), (float(centroid[0]), float(centroid[1]))
    if not A > 0:
        raise DegenerateCurve("zero area")
    d, D, _, _ = extremes(c, definition, n_dirs, refine_tol)
    return CurveMeasures(float(L), float(A), cen, float(d), float(D), definition, L_check)


# ---------------------------------------------------------------------------
# Conjecture evaluation
# ---------------------------------------------------------------------------

HOLDS, FAILS, INCONCLUSIVE = "holds", "fails", "inconclusive"


def _leq(a: float, b: float, margin: float) -> str:
    """Tri-state a <= b with a relative margin."""
    scale = max(1.0, abs(a), abs(b))
    if a < b - margin * scale:
        return HOLDS
    if a > b + margin * scale:
        return FAILS
    return INCONCLUSIVE


def _both(s1: str, s2: str) -> str:
    if FAILS in (s1, s2):
        return FAILS
    if INCONCLUSIVE in (s1, s2):
        return INCONCLUSIVE
    return HOLDS


@dataclass(frozen=True)
class ConjectureReport:
    curve: str
    definition: str
    measures: CurveMeasures
    L_over_D: float
    L_over_d: float
    holds_i: str
    holds_iii: str
    discriminant: float
    roots: tuple
    near_equality: bool = False

    def as_dict(self) -> dict:
        return {
            "curve": self.curve,
            "definition": self.definition,
            "measures": self.measures.as_dict(),
            "L_over_D": self.L_over_D,
            "L_over_d": self.L_over_d,
            "holds_i": self.holds_i,
            "holds_iii": self.holds_iii,
            "near_equality": self.near_equality,
            "quadratic": {
                "discriminant": self.discriminant,
                "real_roots": bool(self.discriminant >= 0),
                "roots": [[r.real, r.imag] for r in self.roots],
            },
        }


def describe(c: Curve) -> str:
    if isinstance(c, Circle):
        return f"Circle(r={c.r!r})"
    if isinstance(c, Ellipse):
        return f"Ellipse(a={c.a!r}, b={c.b!r})"
    return f"ConvexPolygon({len(c.vertices)} vertices)"


NEAR_EQUALITY_TOL = 1e-3


def conjecture_report(c: Curve, definition: str = WIDTH, n_dirs: int = 256,
                      refine_tol: float = 1e-12, margin: float = DECISION_MARGIN) -> ConjectureReport:
    """Evaluate L/D <= pi <= L/d, d D > A and the quadratic x^2 - (L/2) x + A.

    ``near_equality`` flags L/D and L/d both within NEAR_EQUALITY_TOL of pi.
    Circles get it, but so do constant-width bodies under the width reading,
    which is recorded as a finding rather than a verdict on conjecture (ii).
    """
    m = measures(c, definition, n_dirs, refine_tol)
    lD, ld = m.L / m.D, m.L / m.d
    holds_i = _both(_leq(lD, math.pi, margin), _leq(math.pi, ld, margin))
    # strict inequality: equality within the margin is inconclusive
    s = _leq(m.A, m.d * m.D, margin)
    holds_iii = s
    disc = float((m.L / 2) ** 2 - 4 * m.A)
    half = m.L / 4
    if disc >= 0:
        r = math.sqrt(disc) / 2
        roots = (complex(half - r), complex(half + r))
    else:
        r = math.sqrt(-disc) / 2
        roots = (complex(half, -r), complex(half, r))
    near = max(abs(lD - math.pi), abs(ld - math.pi)) <= NEAR_EQUALITY_TOL * math.pi
    return ConjectureReport(describe(c), definition, m, lD, ld, holds_i, holds_iii, disc, roots, near)


# ---------------------------------------------------------------------------
# Falsification harness
# ---------------------------------------------------------------------------

FAMILIES = ("polygons", "ellipses", "ngon")


@dataclass
class Counterexample:
    family: str
    trial: int
    seed: int
    curve: Curve
    report: ConjectureReport
    violated: list = field(default_factory=list)

    def as_dict(self) -> dict:
        out = {"family": self.family, "trial": self.trial, "seed": self.seed,
               "violated": self.violated, "report": self.report.as_dict()}
        if isinstance(self.curve, ConvexPolygon):
            out["vertices"] = [list(p) for p in self.curve.vertices]
        elif isinstance(self.curve, Ellipse):
            out["ellipse"] = [self.curve.a, self.curve.b]
        return out


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream per (seed, trial) so any trial reproduces alone."""
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def random_hull(rng: np.random.Generator) -> ConvexPolygon:
    """Hull of m uniform points in the unit disk, m in [5, 50]."""
    while True:
        m = int(rng.integers(5, 51))
        r = np.sqrt(rng.uniform(0, 1, m))
        t = rng.uniform(0, 2 * math.pi, m)
        pts = np.stack([r * np.cos(t), r * np.sin(t)], axis=1)
        hull = convex_hull(pts)
        if len(hull) >= 3:
            return ConvexPolygon(tuple(map(tuple, hull.tolist())))


def sample_curve(family: str, seed: int, trial: int) -> Curve:
    if family == "polygons":
        return random_hull(trial_rng(seed, trial))
    if family == "ellipses":
        rng = trial_rng(seed, trial)
        a = float(rng.uniform(0.1, 10))
        b = float(rng.uniform(0.01, 1)) * a
        return Ellipse(a, b)
    if family == "ngon":
        return regular_polygon(3 + trial % 10)
    raise ValueError(f"unknown family {family!r}")


def _trials(family: str, trials: int) -> Iterable[int]:
    # the regular n-gon family is finite: n = 3..12
    return range(min(trials, 10) if family == "ngon" else trials)


def falsify_search(family: str, definition: str, trials: int, seed: int = 0,
                   n_dirs: int = 64, refine_tol: float = 1e-10) -> list[Counterexample]:
    """Every sampled curve violating conjecture (i) or (iii), with full measures."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    found = []
    for k in _trials(family, trials):
        c = sample_curve(family, seed, k)
        rep = conjecture_report(c, definition, n_dirs, refine_tol)
        violated = [name for name, s in (("i", rep.holds_i), ("iii", rep.holds_iii)) if s == FAILS]
        if violated:
            found.append(Counterexample(family, k, seed, c, rep, violated))
    return found
