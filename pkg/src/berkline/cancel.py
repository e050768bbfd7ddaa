"""Divisor-level splitting data for the annulus construction.

Two zero-cycles on the closed annulus: the root-of-unity locus of total mass
N, and the solution locus of t**N = g(t), located by the Newton polygon of
t**N den(g) - num(g).  Their mass difference, component by component of a
section, is the splitting delta; for g = t it returns the original section
once, and for g = 1 it vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundarySolution, NotCertified, VanishesOnDomain
from .gauss import newton_polygon
from .logvalue import LogValue, ZERO, as_logvalue
from .poly import Polynomial, RationalFunction
from .units import Domain, ExcludedDisc, reduced_unit


@dataclass(frozen=True)
class Divisor:
    """Formal sum of valuation classes with nonzero multiplicities."""

    entries: tuple  # ((LogValue, int), ...)

    def __post_init__(self):
        object.__setattr__(
            self, "entries",
            tuple((as_logvalue(s), int(m)) for s, m in self.entries if m),
        )

    @property
    def total_mass(self) -> int:
        return sum(m for _, m in self.entries)


@dataclass(frozen=True)
class AnnulusSpec:
    """Closed annulus s_hi <= v <= s_lo (radii 2**-s_lo <= |t| <= 2**-s_hi)."""

    s_lo: LogValue
    s_hi: LogValue

    def __post_init__(self):
        object.__setattr__(self, "s_lo", as_logvalue(self.s_lo))
        object.__setattr__(self, "s_hi", as_logvalue(self.s_hi))
        if not self.s_hi < self.s_lo:
            raise ValueError("annulus needs s_hi < s_lo")

    def domain(self, fld) -> Domain:
        center = fld.zero()
        return Domain(center, self.s_hi,
                      (ExcludedDisc(center, self.s_lo, closed=False),))


UNIT_ANNULUS = AnnulusSpec(s_lo=LogValue(Fraction(1)), s_hi=LogValue(Fraction(-1)))


def y1_divisor(N: int, fld) -> Divisor:
    """The root-of-unity locus t**N = 1 at the residue level.

    In residue characteristic p with p**a || N the N-th roots of unity
    collapse into N / p**a residue balls of multiplicity p**a each; total
    mass is always N.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    p = fld.residue_char
    a = 0
    if p:
        while N % p == 0:
            N //= p
            a += 1
    mult = p ** a if p else 1
    count = N
    return Divisor(tuple((ZERO, mult) for _ in range(count)))


def y2_divisor(g: RationalFunction, N: int, ann: AnnulusSpec) -> Divisor:
    """Valuation-level divisor of the solutions of t**N = g(t) in the annulus.

    g must be certified invertible on the closed annulus; a solution class
    landing exactly on an annulus edge raises BoundarySolution, meaning N is
    not yet large enough for the locus to clear the boundary.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    fld = g.field
    center = fld.zero()
    g = g.recenter(center)
    try:
        reduced_unit(g, ann.domain(fld))
    except VanishesOnDomain as exc:
        raise NotCertified(str(exc), witness=exc.witness) from exc
    den_shift = Polynomial.from_coeffs(
        fld, [fld.zero()] * N + list(g.den.coeffs), center
    )
    P = den_shift - g.num
    np_ = newton_polygon(P)
    entries = []
    for sigma, width in np_.root_valuations():
        lv = LogValue(sigma)
        if lv == ann.s_lo or lv == ann.s_hi:
            raise BoundarySolution(
                f"solution class at valuation {sigma} sits on the annulus "
                f"boundary; increase N",
                witness={"s": str(sigma), "width": width},
            )
        if ann.s_hi < lv < ann.s_lo:
            entries.append((lv, width))
    return Divisor(tuple(entries))


@dataclass(frozen=True)
class SectionComponent:
    u: str                    # constant marker into U
    g: RationalFunction       # the reduced-unit component over the annulus
    mult: int


@dataclass(frozen=True)
class SectionData:
    """A constant-u section of Sym^k(U x units) over the annulus."""

    k: int
    components: tuple

    def __post_init__(self):
        if sum(c.mult for c in self.components) != self.k:
            raise ValueError("component multiplicities must sum to k")
        if any(c.mult <= 0 for c in self.components):
            raise ValueError("multiplicities must be positive")


def splitting_delta(section: SectionData, N: int, ann: AnnulusSpec):
    """mass(Y1) - mass(Y2) per component, as a formal sum over the u markers.

    For g = t each component contributes its own multiplicity (the splitting
    returns the original section); for g = 1 the contribution is zero.
    """
    out = []
    for comp in section.components:
        fld = comp.g.field
        m1 = y1_divisor(N, fld).total_mass
        m2 = y2_divisor(comp.g, N, ann).total_mass
        coef = comp.mult * (m1 - m2)
        if coef:
            out.append((comp.u, coef))
    return tuple(out)
