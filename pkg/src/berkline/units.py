"""Reduced units C^x/(1 + C_{<1}) and divisor-level calculus on domains.

A domain here is a closed bounding disc minus finitely many pairwise disjoint
excluded discs (each open or closed).  Certification that a rational function
is a unit on a domain, boundary degrees, direction slopes at type-2 points and
the 1-unit homotopy decision all reduce to Newton-polygon root counting after
recentering, so every answer is exact; no roots are ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (BadDomain, NotCertified, PrecisionExhausted,
                     VanishesOnDomain, ZeroElement)
from .field import PadicElem, PuiseuxElem
from .gauss import gauss_valuation, newton_polygon, roots_in_disc
from .logvalue import LogValue, as_logvalue
from .points import DiscPoint, _dist, classify
from .poly import Polynomial, RationalFunction


@dataclass(frozen=True)
class UnitClass:
    """Image of a nonzero element in (value group) x (residue units).

    ``modulus`` is the residue characteristic; 0 means the residue units are
    Q^x (rational-coefficient puiseux backend), else integers mod p.
    """

    q: Fraction
    res: object
    modulus: int

    def __mul__(self, other):
        if self.modulus != other.modulus:
            raise ValueError("unit classes over different residue fields")
        if self.modulus:
            res = (self.res * other.res) % self.modulus
        else:
            res = self.res * other.res
        return UnitClass(self.q + other.q, res, self.modulus)

    def inverse(self):
        res = pow(self.res, -1, self.modulus) if self.modulus else 1 / self.res
        return UnitClass(-self.q, res, self.modulus)

    @property
    def is_identity(self) -> bool:
        return self.q == 0 and self.res == 1


def unit_class(c) -> UnitClass:
    """The class of a nonzero field element; 1-units map to the identity."""
    if c.is_zero():
        raise ZeroElement("the zero element has no unit class")
    if isinstance(c, PuiseuxElem):
        if not c.terms:
            raise PrecisionExhausted("element known only below its precision")
        e, lead = c.terms[0]
        return UnitClass(e, lead, c.field.char)
    if isinstance(c, PadicElem):
        p = c.field.p
        v = int(c.valuation())
        unit = c.value / Fraction(p) ** v
        num, den = unit.numerator, unit.denominator
        res = (num % p) * pow(den % p, -1, p) % p
        return UnitClass(Fraction(v), res, p)
    raise TypeError(f"not a field element: {c!r}")


def char_poly_point(units) -> tuple:
    """Characteristic polynomial of a multiset of units and the product class.

    Returns (monic Polynomial with the units as roots, UnitClass of the
    product); the class of (-1)^n a_0 equals the product of the unit classes.
    """
    units = list(units)
    if not units:
        raise ZeroElement("need at least one unit")
    for u in units:
        if u.is_zero():
            raise ZeroElement("0 is not a unit")
    fld = units[0].field
    poly = Polynomial.from_roots(fld, units)
    a0 = poly.coeffs[0]
    signed = a0 if len(units) % 2 == 0 else -a0
    return poly, unit_class(signed)


@dataclass(frozen=True)
class ExcludedDisc:
    center: object
    s: LogValue
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "s", as_logvalue(self.s))
        if self.s.is_infinite and not self.closed:
            raise BadDomain("an open disc of radius zero excludes nothing")


@dataclass(frozen=True)
class Domain:
    """Closed disc v(z - center) >= s minus pairwise disjoint excluded discs."""

    center: object
    s: LogValue
    excluded: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "s", as_logvalue(self.s))
        object.__setattr__(self, "excluded", tuple(self.excluded))
        for d in self.excluded:
            if not d.s > self.s:
                raise BadDomain("excluded disc must be strictly smaller")
            if not _dist(d.center, self.center) >= self.s:
                raise BadDomain("excluded disc center outside the bounding disc")
        for i in range(len(self.excluded)):
            for j in range(i + 1, len(self.excluded)):
                di, dj = self.excluded[i], self.excluded[j]
                if _dist(di.center, dj.center) >= min(di.s, dj.s):
                    raise BadDomain(f"excluded discs {i} and {j} are not disjoint")

    @property
    def field(self):
        return self.center.field


def _roots_inside_domain(g: Polynomial, dom: Domain) -> int:
    total = roots_in_disc(g, dom.center, dom.s, closed=True)
    for d in dom.excluded:
        total -= roots_in_disc(g, d.center, d.s, closed=d.closed)
    return total


@dataclass(frozen=True)
class ReducedUnit:
    f: RationalFunction
    domain: Domain
    certified: bool


def reduced_unit(f: RationalFunction, dom: Domain) -> ReducedUnit:
    """Certify that f has neither zeros nor poles on the domain."""
    if f.is_zero():
        raise ZeroElement("the zero function is not a unit anywhere")
    for which, poly in (("num", f.num), ("den", f.den)):
        count = _roots_inside_domain(poly, dom)
        if count > 0:
            raise VanishesOnDomain(
                f"{which} has {count} root(s) on the domain",
                witness=_witness_disc(poly, dom, which),
            )
    return ReducedUnit(f, dom, True)


def _witness_disc(poly: Polynomial, dom: Domain, which: str):
    g = poly.recenter(dom.center)
    np_ = newton_polygon(g)
    for sigma, _ in np_.root_valuations():
        if LogValue(sigma) >= dom.s:
            return {
                "which": which,
                "center": dom.center.canonical_str(),
                "s": str(sigma),
            }
    return {"which": which, "center": dom.center.canonical_str(), "s": "inf"}


def boundary_degrees(f: RationalFunction, dom: Domain):
    """(zeros - poles) of f inside each excluded disc, in order.

    Together with the exterior component (everything beyond the bounding
    disc, infinity included) the entries sum to zero.
    """
    try:
        reduced_unit(f, dom)
    except VanishesOnDomain as exc:
        raise NotCertified(str(exc), witness=exc.witness) from exc
    out = []
    for d in dom.excluded:
        z = roots_in_disc(f.num, d.center, d.s, closed=d.closed)
        p = roots_in_disc(f.den, d.center, d.s, closed=d.closed)
        out.append(z - p)
    return tuple(out)


def exterior_degree(f: RationalFunction, dom: Domain) -> int:
    """(zeros - poles) beyond the bounding disc, with the point at infinity
    contributing deg(den) - deg(num)."""
    def beyond(poly):
        g = poly.recenter(dom.center)
        np_ = newton_polygon(g)
        return sum(w for sigma, w in np_.root_valuations()
                   if LogValue(sigma) < dom.s)

    return (beyond(f.num) - beyond(f.den)) + (f.den.degree - f.num.degree)


def direction_slopes(f: RationalFunction, x: DiscPoint, directions=None):
    """Outgoing slopes of log|f| at a type-2 point, as zeros minus poles.

    Keys are "up" (the complement of the closed disc, infinity included),
    "dir:<center>" per direction center, and "other" for divisor mass at
    distance exactly s from the center that the given directions do not
    resolve.  Values always sum to zero.
    """
    if classify(x).type != 2:
        raise ValueError("direction slopes are defined at type-2 points")
    if directions is None:
        directions = list(f.num_roots) + list(f.den_roots)
        if f.num.degree > len(f.num_roots) or f.den.degree > len(f.den_roots):
            if f.num.degree > 0 or f.den.degree > 0:
                raise ValueError(
                    "directions must be supplied when root lists are partial"
                )
    # deduplicate direction centers: same direction iff within the open disc
    reps = []
    for b in directions:
        if _dist(b, x.center) < x.s:
            continue  # that direction is "up"
        if not any(_dist(b, r) > x.s for r in reps):
            reps.append(b)
    reps.sort(key=lambda b: b.canonical_str())

    def count(poly, center, strict_inside):
        return roots_in_disc(poly, center, x.s, closed=not strict_inside)

    slopes = {}
    assigned_z = assigned_p = 0
    for b in reps:
        z = count(f.num, b, True)
        p = count(f.den, b, True)
        assigned_z += z
        assigned_p += p
        slopes[f"dir:{b.canonical_str()}"] = z - p
    # "up" holds everything at distance < s from the center, plus infinity
    in_closed_z = count(f.num, x.center, False)
    in_closed_p = count(f.den, x.center, False)
    up = ((f.num.degree - in_closed_z) - (f.den.degree - in_closed_p)
          + (f.den.degree - f.num.degree))
    slopes["up"] = up
    other = (in_closed_z - assigned_z) - (in_closed_p - assigned_p)
    if other:
        slopes["other"] = other
    return slopes


@dataclass(frozen=True)
class LeadingClass:
    """Valuation-and-residue data of a certified unit at the domain boundary."""

    w: LogValue
    res_q: Fraction
    res: object
    modulus: int


def leading_class(f: RationalFunction, dom: Domain) -> LeadingClass:
    """Class of f at an eps-perturbed bounding point; ties broken exactly."""
    c0 = dom.center
    num = f.num.recenter(c0)
    den = f.den.recenter(c0)
    h = Fraction(1)
    while True:
        proxy = LogValue(dom.s.q if not dom.s.is_infinite else Fraction(0),
                         dom.s.e + h if not dom.s.is_infinite else Fraction(1))
        iN = _unique_argmin(num, proxy)
        iD = _unique_argmin(den, proxy)
        if iN is not None and iD is not None:
            break
        h /= 2
    w = (gauss_valuation(num, None, LogValue(dom.s.q, dom.s.e))
         - gauss_valuation(den, None, LogValue(dom.s.q, dom.s.e))) \
        if not dom.s.is_infinite else None
    cn = unit_class(num.coeffs[iN])
    cd = unit_class(den.coeffs[iD])
    ratio = cn * cd.inverse()
    return LeadingClass(w, ratio.q, ratio.res, ratio.modulus)


def _unique_argmin(g: Polynomial, s: LogValue):
    best = None
    best_i = None
    tie = False
    for i, c in enumerate(g.coeffs):
        if c.is_zero():
            continue
        w = LogValue(c.valuation()) + s.scale(i)
        if best is None or w < best:
            best, best_i, tie = w, i, False
        elif w == best:
            tie = True
    return None if tie else best_i


def homotopy_check(f0: RationalFunction, f1: RationalFunction,
                   dom: Domain) -> bool:
    """Exact decision of |f1/f0 - 1| < 1 everywhere on the domain.

    The difference h = f1/f0 - 1 has its minimum of v(h) over the domain on
    the convex hull of the boundary points; along each hull path v(h) is
    piecewise linear with breakpoints at Newton-polygon root valuations, so
    checking the finitely many breakpoints, endpoints, and eps-perturbed
    proxies of open endpoints decides the strict inequality exactly.
    """
    for f in (f0, f1):
        try:
            reduced_unit(f, dom)
        except VanishesOnDomain as exc:
            raise NotCertified(str(exc), witness=exc.witness) from exc
    c0 = dom.center
    n0, d0 = f0.num.recenter(c0), f0.den.recenter(c0)
    n1, d1 = f1.num.recenter(c0), f1.den.recenter(c0)
    h_num = n1 * d0 - n0 * d1
    h_den = n0 * d1
    if h_num.is_zero():
        return True

    def v_at(center, s: LogValue) -> LogValue:
        return (gauss_valuation(h_num, center, s)
                - gauss_valuation(h_den, center, s))

    # bounding point is part of the (closed) domain
    if not v_at(c0, dom.s) > LogValue(Fraction(0)):
        return False

    for d in dom.excluded:
        breaks = set()
        for poly in (h_num, h_den):
            g = poly.recenter(d.center)
            for sigma, _ in newton_polygon(g).root_valuations():
                lv = LogValue(sigma)
                if dom.s < lv < d.s:
                    breaks.add(lv)
        for lv in breaks:
            if not v_at(d.center, lv) > LogValue(Fraction(0)):
                return False
        if d.s.is_infinite:
            # half-open ray toward a removed classical point: positivity at a
            # witness depth plus a nonnegative terminal slope
            gn = h_num.recenter(d.center)
            gd = h_den.recenter(d.center)
            finite = [LogValue(s) for s, _ in newton_polygon(gn).root_valuations()]
            finite += [LogValue(s) for s, _ in newton_polygon(gd).root_valuations()]
            finite = [lv for lv in finite if lv > dom.s] or [dom.s]
            smax = max(finite)
            probe = LogValue(smax.q + 1, smax.e)
            if not v_at(d.center, probe) > LogValue(Fraction(0)):
                return False
            slope = newton_polygon(gn).mult0 - newton_polygon(gd).mult0
            if slope < 0:
                return False
        elif d.closed:
            proxy = LogValue(d.s.q, d.s.e - 1)
            if not v_at(d.center, proxy) > LogValue(Fraction(0)):
                return False
        else:
            if not v_at(d.center, d.s) > LogValue(Fraction(0)):
                return False
    return True
