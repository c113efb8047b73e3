# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python kernels in `_kernels_py`.

Operands are held in 64-bit words, which covers every modulus of degree
up to 63; `crtseq.kernels` routes larger operands to the pure backend.
Semantics are identical to `_kernels_py` bit for bit.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc


cdef inline uint64_t _mulmod(uint64_t a, uint64_t b, uint64_t mod, uint64_t top) nogil:
    cdef uint64_t c = 0
    while a:
        if a & 1:
            c ^= b
        a >>= 1
        b <<= 1
        if b & top:
            b ^= mod
    return c


cdef inline uint64_t _powmod(uint64_t a, uint64_t e, uint64_t mod, uint64_t top) nogil:
    cdef uint64_t r = 1
    while e:
        if e & 1:
            r = _mulmod(r, a, mod, top)
        a = _mulmod(a, a, mod, top)
        e >>= 1
    return r


cdef inline uint64_t _top_bit(uint64_t mod):
    cdef uint64_t top = 1
    while (top << 1) and (top << 1) <= mod:
        top <<= 1
    return top


def gf2_mulmod(a, b, mod):
    """Product of two reduced residues modulo an irreducible polynomial."""
    return _mulmod(a, b, mod, _top_bit(mod))


def gf2_powmod(a, e, mod):
    """Residue a raised to a non-negative exponent, by square and multiply."""
    return _powmod(a, e, mod, _top_bit(mod))


def gf2_evalmod(coeffs, point, mod):
    """Horner evaluation of sum(coeffs[i] * point^i) in the field."""
    cdef uint64_t acc = 0
    cdef uint64_t p = point
    cdef uint64_t m = mod
    cdef uint64_t top = _top_bit(m)
    for c in reversed(coeffs):
        acc = _mulmod(acc, p, m, top)
        acc ^= <uint64_t> c
    return acc


def gf2_dft(coeffs, base, mod):
    """All-point transform: out[t] = sum_k coeffs[k] * base^(t*k)."""
    cdef Py_ssize_t n = len(coeffs)
    cdef uint64_t m = mod
    cdef uint64_t g = base
    cdef uint64_t top = _top_bit(m)
    cdef uint64_t pk = 1
    cdef uint64_t acc
    cdef Py_ssize_t t, k
    cdef uint64_t *buf
    if n == 0:
        return []
    buf = <uint64_t *> malloc(n * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    try:
        for k in range(n):
            buf[k] = <uint64_t> coeffs[k]
        out = [0] * n
        for t in range(n):
            acc = 0
            with nogil:
                for k in range(n - 1, -1, -1):
                    acc = _mulmod(acc, pk, m, top)
                    acc ^= buf[k]
                pk = _mulmod(pk, g, m, top)
            out[t] = acc
        return out
    finally:
        free(buf)
