"""Benchmark: compiled convolution kernel vs the pure-Python fallback.

Both backends implement the same contract (see berkline._purekernel); this
script times them on the two workloads that dominate the acceptance suite,
pairwise products and power towers, calling each implementation directly.

Run:  python benchmarks/bench_kernel.py
"""

import random
import time
from fractions import Fraction

from berkline import Polynomial, PuiseuxField
from berkline import _purekernel

try:
    from berkline import _convkernel
except ImportError:
    _convkernel = None


def encode(poly, lat):
    counts, exps, cofs = [], [], []
    for c in poly.coeffs:
        counts.append(len(c.terms))
        for e, coef in c.terms:
            exps.append(int(e * lat))
            cofs.append(coef)
    return counts, exps, cofs


def rand_poly(rng, fld, deg, nterms=3):
    coeffs = [
        fld.elem([(Fraction(rng.randint(0, 8), rng.choice([1, 2])),
                   rng.randint(1, fld.char - 1))
                  for _ in range(rng.randint(1, nterms))])
        for _ in range(deg + 1)
    ]
    return Polynomial.from_coeffs(fld, coeffs)


def bench_pairs(impl, pairs, p):
    t0 = time.perf_counter()
    for a, b in pairs:
        impl.poly_mul_modp(*a, *b, p)
    return time.perf_counter() - t0


def bench_tower(impl, f_enc, p, height):
    t0 = time.perf_counter()
    g = f_enc
    for _ in range(height):
        g = impl.poly_mul_modp(*g, *f_enc, p)
    return time.perf_counter() - t0


def main():
    rng = random.Random(0)
    fld = PuiseuxField(3)
    lat = 2

    pairs = []
    for _ in range(1000):
        pairs.append((encode(rand_poly(rng, fld, 8), lat),
                      encode(rand_poly(rng, fld, 8), lat)))
    tower_f = encode(rand_poly(rng, fld, 6), lat)

    rows = []
    for name, impl in [("pure", _purekernel),
                       ("cython", _convkernel)]:
        if impl is None:
            print(f"{name:8s}  (extension not built; skipped)")
            continue
        t_pairs = bench_pairs(impl, pairs, 3)
        t_tower = bench_tower(impl, tower_f, 3, 96)
        rows.append((name, t_pairs, t_tower))

    print(f"{'backend':8s}  {'1000 deg-8 products':>20s}  {'deg-6 tower^96':>16s}")
    for name, t_pairs, t_tower in rows:
        print(f"{name:8s}  {t_pairs:>19.3f}s  {t_tower:>15.3f}s")
    if len(rows) == 2:
        print(f"{'speedup':8s}  {rows[0][1] / rows[1][1]:>19.1f}x  "
              f"{rows[0][2] / rows[1][2]:>15.1f}x")


if __name__ == "__main__":
    main()
