import random
from fractions import Fraction

import pytest

from berkline import PadicField, PuiseuxField, Polynomial


@pytest.fixture
def F2():
    return PuiseuxField(2)


@pytest.fixture
def F3():
    return PuiseuxField(3)


@pytest.fixture
def FQ():
    return PuiseuxField(0)


@pytest.fixture
def Q2():
    return PadicField(2)


@pytest.fixture
def Q3():
    return PadicField(3)


def rand_puiseux(rng: random.Random, fld: PuiseuxField, max_terms=3,
                 exp_range=(0, 6), dens=(1, 2, 3), exact=True):
    """Random exact puiseux element, possibly zero."""
    nterms = rng.randint(0, max_terms)
    terms = []
    for _ in range(nterms):
        e = Fraction(rng.randint(*exp_range), rng.choice(dens))
        if fld.char:
            c = rng.randint(1, fld.char - 1)
        else:
            c = rng.choice([-3, -2, -1, 1, 2, 3, Fraction(1, 2), Fraction(3, 2)])
        terms.append((e, c))
    return fld.elem(terms)


def rand_puiseux_nonzero(rng, fld, **kw):
    while True:
        x = rand_puiseux(rng, fld, **kw)
        if not x.is_zero():
            return x


def rand_padic(rng: random.Random, fld: PadicField, allow_zero=True):
    p = fld.p
    if allow_zero and rng.random() < 0.1:
        return fld.zero()
    unit_num = rng.choice([u for u in range(1, 20) if u % p])
    unit_den = rng.choice([u for u in range(1, 20) if u % p])
    v = rng.randint(-4, 4)
    return fld.elem(Fraction(unit_num, unit_den) * Fraction(p) ** v)


def rand_padic_nonzero(rng, fld):
    return rand_padic(rng, fld, allow_zero=False)


def rand_poly(rng: random.Random, fld, max_deg=8, center=None):
    """Random nonzero polynomial with exact coefficients."""
    deg = rng.randint(0, max_deg)
    mk = (lambda: rand_puiseux(rng, fld)) if isinstance(fld, PuiseuxField) \
        else (lambda: rand_padic(rng, fld))
    mk_nz = (lambda: rand_puiseux_nonzero(rng, fld)) \
        if isinstance(fld, PuiseuxField) else (lambda: rand_padic_nonzero(rng, fld))
    coeffs = [mk() for _ in range(deg)] + [mk_nz()]
    return Polynomial.from_coeffs(fld, coeffs, center)
