# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled convolution kernel; see _purekernel for the contract."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


def poly_mul_modp(counts_f, exps_f, cofs_f, counts_g, exps_g, cofs_g, long long p):
    cdef Py_ssize_t nf = len(counts_f)
    cdef Py_ssize_t ng = len(counts_g)
    cdef Py_ssize_t tf = len(exps_f)
    cdef Py_ssize_t tg = len(exps_g)
    cdef Py_ssize_t i, j, k, a, b, idx, lo, hi, j0, j1
    cdef long long e, emin_f, emax_f, emin_g, emax_g, base, width
    cdef long long nterms
    cdef bint touched
    cdef long long *cf = NULL
    cdef long long *ef = NULL
    cdef long long *cg = NULL
    cdef long long *eg = NULL
    cdef long long *cnf = NULL
    cdef long long *cng = NULL
    cdef long long *off_f = NULL
    cdef long long *off_g = NULL
    cdef long long *scratch = NULL

    counts_out = []
    exps_out = []
    cofs_out = []
    if tf == 0 or tg == 0:
        return [0] * (nf + ng - 1), exps_out, cofs_out

    cf = <long long *> malloc(tf * sizeof(long long))
    ef = <long long *> malloc(tf * sizeof(long long))
    cg = <long long *> malloc(tg * sizeof(long long))
    eg = <long long *> malloc(tg * sizeof(long long))
    cnf = <long long *> malloc(nf * sizeof(long long))
    cng = <long long *> malloc(ng * sizeof(long long))
    off_f = <long long *> malloc(nf * sizeof(long long))
    off_g = <long long *> malloc(ng * sizeof(long long))
    if not (cf and ef and cg and eg and cnf and cng and off_f and off_g):
        free(cf); free(ef); free(cg); free(eg)
        free(cnf); free(cng); free(off_f); free(off_g)
        raise MemoryError()

    try:
        for a in range(tf):
            ef[a] = exps_f[a]
            cf[a] = cofs_f[a]
        for b in range(tg):
            eg[b] = exps_g[b]
            cg[b] = cofs_g[b]
        e = 0
        for i in range(nf):
            cnf[i] = counts_f[i]
            off_f[i] = e
            e += cnf[i]
        e = 0
        for j in range(ng):
            cng[j] = counts_g[j]
            off_g[j] = e
            e += cng[j]

        emin_f = emax_f = ef[0]
        for a in range(1, tf):
            if ef[a] < emin_f:
                emin_f = ef[a]
            if ef[a] > emax_f:
                emax_f = ef[a]
        emin_g = emax_g = eg[0]
        for b in range(1, tg):
            if eg[b] < emin_g:
                emin_g = eg[b]
            if eg[b] > emax_g:
                emax_g = eg[b]
        base = emin_f + emin_g
        width = emax_f + emax_g - base + 1

        scratch = <long long *> malloc(width * sizeof(long long))
        if not scratch:
            raise MemoryError()

        for k in range(nf + ng - 1):
            lo = width
            hi = -1
            j0 = k - nf + 1
            if j0 < 0:
                j0 = 0
            j1 = k
            if j1 > ng - 1:
                j1 = ng - 1
            touched = False
            for j in range(j0, j1 + 1):
                i = k - j
                if cnf[i] == 0 or cng[j] == 0:
                    continue
                if not touched:
                    memset(scratch, 0, width * sizeof(long long))
                    touched = True
                for a in range(off_f[i], off_f[i] + cnf[i]):
                    for b in range(off_g[j], off_g[j] + cng[j]):
                        idx = ef[a] + eg[b] - base
                        scratch[idx] = (scratch[idx] + cf[a] * cg[b]) % p
                        if idx < lo:
                            lo = idx
                        if idx > hi:
                            hi = idx
            nterms = 0
            if touched:
                for idx in range(lo, hi + 1):
                    if scratch[idx]:
                        exps_out.append(idx + base)
                        cofs_out.append(scratch[idx])
                        nterms += 1
            counts_out.append(nterms)
        return counts_out, exps_out, cofs_out
    finally:
        free(cf); free(ef); free(cg); free(eg)
        free(cnf); free(cng); free(off_f); free(off_g)
        free(scratch)
