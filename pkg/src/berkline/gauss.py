"""Gauss valuations, sum norms, Newton polygons and annulus root counting.

Conventions.  All radii are additive log-values (|x| = 2**(-s)); the Gauss
valuation of f at the disc D(a, 2**(-s)) is min_i(v(c_i) + i*s) over the
coefficients of f recentered at a.  A Newton-polygon segment of slope l and
width m certifies exactly m roots of valuation -l; the root at the center
itself (valuation +infinity) is reported separately as ``mult0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (CoefficientOverflow, PrecisionExhausted, ZeroConstantTerm,
                     ZeroPolynomial)
from .logvalue import INFINITY, ZERO, LogValue, as_logvalue
from .poly import Polynomial


def _coeff_values(f: Polynomial, a=None):
    """(index, valuation) for provably nonzero coefficients, plus lower bounds
    (index, prec) for truncated zeros whose value is unknown."""
    g = f if a is None else f.recenter(a)
    known, unknown = [], []
    for i, c in enumerate(g.coeffs):
        if c.is_zero():
            continue
        if not c and not c.is_exact:
            unknown.append((i, c.prec))
        else:
            known.append((i, c.valuation()))
    return known, unknown


def gauss_valuation(f: Polynomial, a=None, s=ZERO) -> LogValue:
    """Valuation of f at the disc point D(a, 2**(-s)); +infinity for f = 0."""
    s = as_logvalue(s)
    known, unknown = _coeff_values(f, a)
    if not known and not unknown:
        return INFINITY
    best = None
    for i, v in known:
        w = LogValue(v) + s.scale(i)
        if best is None or w < best:
            best = w
    for i, p in unknown:
        lb = LogValue(p) + s.scale(i)
        if best is None or lb < best:
            raise PrecisionExhausted(
                f"coefficient {i} is only known below t^{p}", witness=i
            )
    return best


def naive_norm(f: Polynomial, r, a=None) -> float:
    """The weighted coefficient sum norm sum_i |c_i| r**i.

    Returned as a float with relative accuracy about 1e-12; it is an upper
    bound for the Gauss (spectral) norm 2**(-gauss_valuation) at log2(r) = -s.
    """
    x = log2_naive_norm(f, _log2(r), a)
    if x == -math.inf:
        return 0.0
    return 2.0 ** x


def log2_naive_norm(f: Polynomial, log2_r, a=None) -> float:
    """log2 of naive_norm, computed stably in the log domain."""
    known, unknown = _coeff_values(f, a)
    if unknown:
        i, p = unknown[0]
        raise PrecisionExhausted(
            f"coefficient {i} is only known below t^{p}", witness=i
        )
    if not known:
        return -math.inf
    logs = [float(-v) + i * float(log2_r) for i, v in known]
    top = max(logs)
    return top + math.log2(sum(2.0 ** (x - top) for x in logs))


def _log2(r):
    """Exact log2 for powers of two, float log otherwise."""
    if isinstance(r, float):
        if r <= 0:
            raise ValueError("radius must be positive")
        return math.log2(r)
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    num, den = r.numerator, r.denominator
    if num & (num - 1) == 0 and den & (den - 1) == 0:
        return Fraction(num.bit_length() - 1 - (den.bit_length() - 1))
    return math.log2(float(r))


def spectral_profile(f: Polynomial, radii, a=None, n_max: int = 64,
                     max_coeffs: int = 200_000):
    """[(1/n) log2 naive_norm(f**n, r)] for n = 1..n_max, one list per radius.

    Powers are computed once and shared across the radii.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    log2_rs = [_log2(r) for r in radii]
    out = [[] for _ in radii]
    g = f
    for n in range(1, n_max + 1):
        if n > 1:
            g = g * f
        if len(g.coeffs) > max_coeffs:
            raise CoefficientOverflow(
                f"power f^{n} has more than {max_coeffs} coefficients"
            )
        for row, lr in zip(out, log2_rs):
            row.append(log2_naive_norm(g, lr, a) / n)
    return out


def spectral_limit(f: Polynomial, r, a=None, n_max: int = 64,
                   max_coeffs: int = 200_000):
    """The power-norm sequence (1/n) log2 naive_norm(f**n, r) for n <= n_max.

    Converges to -gauss_valuation(f, a, -log2(r)) from above, at rate
    log2(n deg + 1)/n.
    """
    return spectral_profile(f, [r], a, n_max, max_coeffs)[0]


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of (i, v(c_i)); slopes strictly increase."""

    vertices: tuple      # ((index, Fraction valuation), ...)
    segments: tuple      # ((Fraction slope, int width), ...)
    mult0: int           # multiplicity of the root at the center
    degree: int

    def root_valuations(self):
        """(valuation, multiplicity) per finite root class, valuation = -slope."""
        return tuple((-s, w) for s, w in self.segments)


def newton_polygon(f: Polynomial) -> NewtonPolygon:
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no Newton polygon")
    known, unknown = _coeff_values(f)
    if not known:
        raise PrecisionExhausted("all coefficients below their precision bounds")
    pts = sorted(known)
    hull = _lower_hull(pts)
    # a truncated-zero coefficient is tolerable only strictly inside the known
    # index range and with its bound at or above the hull there; anywhere else
    # it could change mult0, the degree, or cut the hull
    for i, p in unknown:
        if i < hull[0][0] or i > hull[-1][0] or Fraction(p) < _hull_height(hull, i):
            raise PrecisionExhausted(
                f"coefficient {i} known only below t^{p} could cut the hull",
                witness=i,
            )
    mult0 = pts[0][0]
    segments = []
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        segments.append((Fraction(v2 - v1, i2 - i1), i2 - i1))
    return NewtonPolygon(tuple(hull), tuple(segments), mult0, f.degree)


def _lower_hull(pts):
    """Monotone chain; collinear interior points are dropped."""
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _hull_height(hull, x):
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        if x1 <= x <= x2:
            return Fraction(y1) + Fraction(y2 - y1, x2 - x1) * (x - x1)
    return Fraction(hull[0][1])


def root_count_annulus(f: Polynomial, s_lo=None, s_hi=INFINITY,
                       lo_open: bool = False, hi_open: bool = False) -> int:
    """Number of roots, with multiplicity, whose valuation lies in the interval.

    ``s_lo = None`` means unbounded below.  The root at the center itself has
    valuation +infinity and is counted exactly when the interval reaches a
    closed +infinity end.
    """
    if f.is_zero():
        raise ZeroPolynomial("root counting on the zero polynomial")
    np_ = newton_polygon(f)
    lo = None if s_lo is None else as_logvalue(s_lo)
    hi = as_logvalue(s_hi)
    if lo is not None and lo > hi:
        raise ValueError("empty interval: s_lo > s_hi")
    count = 0
    for sigma, width in np_.root_valuations():
        if _in_interval(LogValue(sigma), lo, hi, lo_open, hi_open):
            count += width
    if np_.mult0 and _in_interval(INFINITY, lo, hi, lo_open, hi_open):
        count += np_.mult0
    return count


def _in_interval(x: LogValue, lo, hi, lo_open, hi_open) -> bool:
    if lo is not None:
        if x < lo or (lo_open and x == lo):
            return False
    if x > hi or (hi_open and x == hi):
        return False
    return True


def roots_in_disc(f: Polynomial, center, s, closed: bool = True) -> int:
    """Roots z with v(z - center) >= s (closed) or > s (open), incl. z = center."""
    if f.is_zero():
        raise ZeroPolynomial("root counting on the zero polynomial")
    g = f.recenter(center)
    return root_count_annulus(g, s_lo=s, s_hi=INFINITY, lo_open=not closed)


def sym_annulus_membership(coeffs, s1, s2) -> bool:
    """Whether the monic polynomial T^n + a_{n-1}T^{n-1} + ... + a_0 with the
    given lower coefficients has all its roots strictly inside the annulus
    2**(-s1) < |z| < 2**(-s2).

    Equivalent to every coefficient point (i, v(a_i)) lying strictly above
    both Newton lines through (n, 0) (slopes -s1 and -s2), together with the
    constant-term window n*s2 < v(a_0) < n*s1; the fibre over a_0 is an open
    polydisc in the remaining coefficients.
    """
    s1 = as_logvalue(s1)
    s2 = as_logvalue(s2)
    if not s2 < s1:
        raise ValueError("annulus requires s2 < s1 (outer radius larger)")
    n = len(coeffs)
    if n == 0:
        raise ValueError("need at least the constant coefficient")
    a0 = coeffs[0]
    if a0.is_zero():
        raise ZeroConstantTerm("constant term must be nonzero")
    v0 = LogValue(a0.valuation())
    if not (s2.scale(n) < v0 and v0 < s1.scale(n)):
        return False
    for i in range(1, n):
        ai = coeffs[i]
        if ai.is_zero():
            continue
        vi = LogValue(ai.valuation())
        line_outer = s2.scale(n - i)
        line_inner = v0 - s1.scale(i)
        if not (vi > line_outer and vi > line_inner):
            return False
    return True
