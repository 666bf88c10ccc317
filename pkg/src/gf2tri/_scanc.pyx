# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled exhaustive-scan kernels over table-backed fields.

Same signatures as _scan_py, with exp/log as int64 numpy arrays.  The
counting kernels release the GIL so sweeps can be partitioned across
threads.  Shifted logs stay below 2^60 for the supported table range
(k <= 20), so all intermediates fit in int64.
"""


def roots_p(const long long[::1] exp, const long long[::1] log,
            long long m, long long a, int el):
    """Roots of x^(2^el+1) + x + a, by scanning every field element."""
    cdef long long expo = ((<long long>1) << el) + 1
    cdef long long x
    out = [0] if a == 0 else []
    for x in range(1, m + 1):
        if exp[(log[x] * expo) % m] ^ x ^ a == 0:
            out.append(x)
    return out


def count_p(const long long[::1] exp, const long long[::1] log,
            long long m, long long a, int el):
    """Number of roots of x^(2^el+1) + x + a."""
    cdef long long expo = ((<long long>1) << el) + 1
    cdef long long cnt = 1 if a == 0 else 0
    cdef long long x
    with nogil:
        for x in range(1, m + 1):
            if exp[(log[x] * expo) % m] ^ x ^ a == 0:
                cnt += 1
    return cnt


def census_p(const long long[::1] exp, const long long[::1] log,
             long long m, int el, long long a_lo, long long a_hi,
             long long[::1] hist):
    """hist[root count] += 1 for every a in [a_lo, a_hi)."""
    cdef long long expo = ((<long long>1) << el) + 1
    cdef long long a, x, cnt
    with nogil:
        for a in range(a_lo, a_hi):
            cnt = 1 if a == 0 else 0
            for x in range(1, m + 1):
                if exp[(log[x] * expo) % m] ^ x ^ a == 0:
                    cnt += 1
            hist[cnt] += 1


def roots_affine3(const long long[::1] exp, const long long[::1] log,
                  long long m, long long c2, int e2, long long c1, int e1,
                  long long c0, long long const_term):
    """Roots of c2*x^(2^e2) + c1*x^(2^e1) + c0*x + const_term by full scan."""
    cdef long long l2 = log[c2] if c2 else 0
    cdef long long l1 = log[c1] if c1 else 0
    cdef long long l0 = log[c0] if c0 else 0
    cdef long long s2 = (<long long>1) << e2
    cdef long long s1 = (<long long>1) << e1
    cdef long long x, t, v
    out = [0] if const_term == 0 else []
    for x in range(1, m + 1):
        t = log[x]
        v = const_term
        if c2:
            v ^= exp[(l2 + t * s2) % m]
        if c1:
            v ^= exp[(l1 + t * s1) % m]
        if c0:
            v ^= exp[(l0 + t) % m]
        if v == 0:
            out.append(x)
    return out


def count_affine3(const long long[::1] exp, const long long[::1] log,
                  long long m, long long c2, int e2, long long c1, int e1,
                  long long c0):
    """Kernel size of c2*x^(2^e2) + c1*x^(2^e1) + c0*x (x = 0 included)."""
    cdef long long l2 = log[c2] if c2 else 0
    cdef long long l1 = log[c1] if c1 else 0
    cdef long long l0 = log[c0] if c0 else 0
    cdef long long s2 = (<long long>1) << e2
    cdef long long s1 = (<long long>1) << e1
    cdef long long cnt = 1
    cdef long long x, t, v
    with nogil:
        for x in range(1, m + 1):
            t = log[x]
            v = 0
            if c2:
                v ^= exp[(l2 + t * s2) % m]
            if c1:
                v ^= exp[(l1 + t * s1) % m]
            if c0:
                v ^= exp[(l0 + t) % m]
            if v == 0:
                cnt += 1
    return cnt
