# cython: language_level=3
"""Compiled arithmetic kernel.

Drop-in replacement for jumat._core_py: identical functions over the
same canonical triples (p, q, r) of arbitrary-precision ints.  Integer
arithmetic stays on Python ints (no silent overflow); compilation removes
the interpreter overhead of the tight convolution loops, which run
fraction-free on a single common denominator per operand.
"""

from math import gcd

BACKEND_NAME = "cython"

ZERO = (0, 0, 1)
ONE = (1, 0, 1)


cpdef tuple canon(p, q, r):
    """Reduce (p + q*i)/r to canonical form."""
    if r == 0:
        raise ZeroDivisionError("zero denominator")
    if r < 0:
        p, q, r = -p, -q, -r
    g = gcd(gcd(p, q), r)
    if g > 1:
        return (p // g, q // g, r // g)
    return (p, q, r)


cpdef tuple add(tuple a, tuple b):
    p1, q1, r1 = a
    p2, q2, r2 = b
    if r1 == r2:
        return canon(p1 + p2, q1 + q2, r1)
    g = gcd(r1, r2)
    m1 = r2 // g
    m2 = r1 // g
    return canon(p1 * m1 + p2 * m2, q1 * m1 + q2 * m2, r1 * m1)


cpdef tuple sub(tuple a, tuple b):
    p1, q1, r1 = a
    p2, q2, r2 = b
    if r1 == r2:
        return canon(p1 - p2, q1 - q2, r1)
    g = gcd(r1, r2)
    m1 = r2 // g
    m2 = r1 // g
    return canon(p1 * m1 - p2 * m2, q1 * m1 - q2 * m2, r1 * m1)


cpdef tuple mul(tuple a, tuple b):
    p1, q1, r1 = a
    p2, q2, r2 = b
    return canon(p1 * p2 - q1 * q2, p1 * q2 + q1 * p2, r1 * r2)


cpdef tuple neg(tuple a):
    return (-a[0], -a[1], a[2])


cpdef tuple conj(tuple a):
    return (a[0], -a[1], a[2])


cpdef tuple inv(tuple a):
    n = a[0] * a[0] + a[1] * a[1]
    if n == 0:
        raise ZeroDivisionError("division by zero")
    return canon(a[2] * a[0], -a[2] * a[1], n)


cpdef tuple div(tuple a, tuple b):
    return mul(a, inv(b))


cpdef bint is_zero(tuple a):
    return a[0] == 0 and a[1] == 0


cpdef bint mat_is_zero(tuple m):
    cdef tuple row, x
    for row in m:
        for x in row:
            if x[0] != 0 or x[1] != 0:
                return False
    return True


cdef _integer_form(mats):
    """Scale coefficient matrices onto one denominator; entries become int pairs."""
    cdef tuple mat, row, t
    den = 1
    for mat in mats:
        for row in mat:
            for t in row:
                r = t[2]
                if r != 1:
                    den = den // gcd(den, r) * r
    scaled = []
    for mat in mats:
        smat = []
        for row in mat:
            srow = []
            for t in row:
                f = den // t[2]
                srow.append((t[0] * f, t[1] * f))
            smat.append(srow)
        scaled.append(smat)
    return scaled, den


cpdef tuple mat_mul(tuple a, tuple b):
    """Product of constant matrices (tuples of row tuples of triples)."""
    cdef Py_ssize_t inner = len(b)
    cdef Py_ssize_t cols, i, j, t
    if len(a[0]) != inner:
        raise ValueError("dimension mismatch in matrix product")
    cols = len(b[0])
    sa, da = _integer_form((a,))
    sb, db = _integer_form((b,))
    am = sa[0]
    bm = sb[0]
    den = da * db
    out = []
    for i in range(len(a)):
        arow = am[i]
        new_row = []
        for j in range(cols):
            accp = 0
            accq = 0
            for t in range(inner):
                p1, q1 = arow[t]
                if p1 or q1:
                    p2, q2 = bm[t][j]
                    if p2 or q2:
                        accp += p1 * p2 - q1 * q2
                        accq += p1 * q2 + q1 * p2
            new_row.append(canon(accp, accq, den))
        out.append(tuple(new_row))
    return tuple(out)


cpdef tuple matpoly_mul(tuple a, tuple b):
    """Convolution product of two coefficient lists, trimmed."""
    cdef Py_ssize_t la, lb, rows, inner, cols, d, lo, hi, i, j, k, t
    if not a or not b:
        return ()
    rows = len(a[0])
    inner = len(b[0])
    if len(a[0][0]) != inner:
        raise ValueError("dimension mismatch in matrix product")
    cols = len(b[0][0])
    sa, da = _integer_form(a)
    sb, db = _integer_form(b)
    den = da * db
    la = len(a)
    lb = len(b)
    out = []
    for d in range(la + lb - 1):
        lo = d - lb + 1
        if lo < 0:
            lo = 0
        hi = d if d < la - 1 else la - 1
        mat = []
        for i in range(rows):
            row = []
            for j in range(cols):
                accp = 0
                accq = 0
                for k in range(lo, hi + 1):
                    am = sa[k]
                    bm = sb[d - k]
                    arow = am[i]
                    for t in range(inner):
                        p1, q1 = arow[t]
                        if p1 or q1:
                            p2, q2 = bm[t][j]
                            if p2 or q2:
                                accp += p1 * p2 - q1 * q2
                                accq += p1 * q2 + q1 * p2
                row.append(canon(accp, accq, den))
            mat.append(tuple(row))
        out.append(tuple(mat))
    while out and mat_is_zero(out[-1]):
        out.pop()
    return tuple(out)
