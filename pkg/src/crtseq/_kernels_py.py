"""Pure-Python arithmetic kernels for GF(2)[x] and GF(2^m).

Polynomials (and hence field elements) are plain ints whose binary
digits are the coefficients: bit i holds the coefficient of x^i, so the
zero polynomial is 0 and 'x' is 2.  Field elements are residues reduced
below the field modulus; reduction is the caller's responsibility for
`gf2_mulmod` and friends, matching the compiled kernels exactly.

This module is the reference backend.  `crtseq.kernels` swaps in the
compiled twin (`crtseq._kernels`) when it is available.
"""


def gf2_clmul(a: int, b: int) -> int:
    """Carry-less product of two polynomials (no reduction)."""
    c = 0
    while a:
        if a & 1:
            c ^= b
        a >>= 1
        b <<= 1
    return c


def gf2_mod(a: int, mod: int) -> int:
    """Remainder of polynomial a modulo a non-zero polynomial."""
    if mod == 0:
        raise ZeroDivisionError("zero modulus")
    mlen = mod.bit_length()
    alen = a.bit_length()
    while alen >= mlen:
        a ^= mod << (alen - mlen)
        alen = a.bit_length()
    return a


def gf2_mulmod(a: int, b: int, mod: int) -> int:
    """Product of two reduced residues modulo an irreducible polynomial."""
    top = 1 << (mod.bit_length() - 1)
    c = 0
    while a:
        if a & 1:
            c ^= b
        a >>= 1
        b <<= 1
        if b & top:
            b ^= mod
    return c


def gf2_powmod(a: int, e: int, mod: int) -> int:
    """Residue a raised to a non-negative exponent, by square and multiply."""
    r = 1
    while e:
        if e & 1:
            r = gf2_mulmod(r, a, mod)
        a = gf2_mulmod(a, a, mod)
        e >>= 1
    return r


def gf2_evalmod(coeffs, point: int, mod: int) -> int:
    """Horner evaluation of sum(coeffs[i] * point^i) in the field."""
    acc = 0
    for c in reversed(coeffs):
        acc = gf2_mulmod(acc, point, mod)
        acc ^= c
    return acc


def gf2_dft(coeffs, base: int, mod: int) -> list:
    """All-point transform: out[t] = sum_k coeffs[k] * base^(t*k).

    Evaluates the coefficient polynomial at every power of `base`; with
    0/1 coefficients this is the finite-field DFT of a binary sequence,
    with spectral coefficients it is the inverse transform (pass the
    inverse of the forward base).  Runs the O(n^2) schoolbook loop; this
    is the hot path the compiled backend accelerates.
    """
    n = len(coeffs)
    out = []
    pk = 1
    for _ in range(n):
        acc = 0
        for c in reversed(coeffs):
            acc = gf2_mulmod(acc, pk, mod)
            acc ^= c
        out.append(acc)
        pk = gf2_mulmod(pk, base, mod)
    return out
