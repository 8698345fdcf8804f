# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of divpos._kernels._pure.

Values stay arbitrary-precision Python integers (exactness is the whole
point); the win comes from C loop counters and removed interpreter
dispatch in the scan loops.  Keep the two implementations in lockstep:
tests/test_kernels.py cross-checks them on random inputs.
"""

from math import isqrt


cpdef int sign_rat(p, q):
    return (p > 0) - (p < 0)


cpdef floor_rat(p, q):
    return p // q


cpdef int sign_quad(N, M, d):
    cdef int sN, sM
    if M == 0:
        return (N > 0) - (N < 0)
    if N == 0:
        return (M > 0) - (M < 0)
    sN = 1 if N > 0 else -1
    sM = 1 if M > 0 else -1
    if sN == sM:
        return sN
    lhs = N * N
    rhs = M * M * d
    if lhs == rhs:
        return 0
    return sN if lhs > rhs else sM


cpdef floor_sqrt_mult(M, d):
    if M == 0:
        return 0
    r = isqrt(M * M * d)
    return r if M > 0 else -r - 1


cpdef floor_quad(N, M, d, Q):
    if M == 0:
        return N // Q
    t = floor_sqrt_mult(M, d)
    k = (N + t) // Q
    if sign_quad(N - (k + 1) * Q, M, d) >= 0:
        k += 1
    return k


cpdef list floor_multiples_rat(p, q, long m_max):
    cdef long m
    cdef list out = [0] * (m_max + 1)
    for m in range(m_max + 1):
        out[m] = (m * p) // q
    return out


cpdef list floor_multiples_quad(N, M, d, Q, long m_max):
    cdef long m
    if M == 0:
        return floor_multiples_rat(N, Q, m_max)
    cdef list out = [0] * (m_max + 1)
    if m_max == 0:
        return out
    f1 = floor_quad(N, M, d, Q)
    prev = 0
    for m in range(1, m_max + 1):
        cand = prev + f1
        if sign_quad(m * N - (cand + 1) * Q, m * M, d) >= 0:
            cand += 1
        out[m] = cand
        prev = cand
    return out


cpdef long weyl_search(N, M, d, Q, eps_num, eps_den, long k_start, long k_max):
    cdef long k
    if k_start < 1:
        k_start = 1
    f1 = floor_quad(N, M, d, Q)
    if k_start > 1:
        prev = floor_quad((k_start - 1) * N, (k_start - 1) * M, d, Q)
    else:
        prev = 0
    for k in range(k_start, k_max + 1):
        cand = prev + f1
        if sign_quad(k * N - (cand + 1) * Q, k * M, d) >= 0:
            cand += 1
        if sign_quad(eps_den * (k * N - cand * Q) - eps_num * Q, eps_den * k * M, d) < 0:
            return k
        prev = cand
    return -1


cpdef h0_hirzebruch(e, a, b):
    if a < 0:
        return 0
    if b < 0:
        return 0
    if e == 0:
        return (a + 1) * (b + 1)
    n = b // e
    if n > a:
        n = a
    return (n + 1) * (b + 1) - e * (n * (n + 1)) // 2


cpdef h0_p2(n):
    if n < 0:
        return 0
    return (n + 1) * (n + 2) // 2
