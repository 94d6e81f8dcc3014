# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled arithmetic kernels over Q[r]; mirror of ``_pykernels``."""

from fractions import Fraction

BACKEND = "cython"

ONE = (1,)


cdef inline object _norm(object c):
    if type(c) is int:
        return c
    if c.denominator == 1:
        return c.numerator
    return c


cdef object _div(object c, object d):
    if type(c) is int and type(d) is int:
        if c % d == 0:
            return c // d
        return Fraction(c, d)
    return _norm(Fraction(c) / d)


cpdef tuple trim(list seq):
    cdef Py_ssize_t n = len(seq)
    cdef Py_ssize_t i
    while n and not seq[n - 1]:
        n -= 1
    return tuple([_norm(seq[i]) for i in range(n)])


cpdef tuple padd(tuple a, tuple b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] += b[i]
    return trim(out)


cpdef tuple psub(tuple a, tuple b):
    cdef Py_ssize_t i
    cdef Py_ssize_t n = max(len(a), len(b))
    cdef list out = list(a) + [0] * (n - len(a))
    for i in range(len(b)):
        out[i] -= b[i]
    return trim(out)


cpdef tuple pneg(tuple a):
    return tuple([-c for c in a])


cpdef tuple pscale(tuple a, object c):
    if not c:
        return ()
    return trim([x * c for x in a])


cpdef tuple pmul(tuple a, tuple b):
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t i, j
    cdef object ai
    if not la or not lb:
        return ()
    if la == 1 and a[0] == 1:
        return b
    if lb == 1 and b[0] == 1:
        return a
    cdef list out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(lb):
            out[i + j] += ai * b[j]
    return trim(out)


cpdef tuple pdivmod(tuple a, tuple b):
    cdef Py_ssize_t db, k, j
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = len(b) - 1
    if len(a) <= db:
        return (), tuple(a)
    lead = b[db]
    cdef list rem = list(a)
    cdef list q = [0] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        c = rem[k + db]
        if c:
            c = _div(c, lead)
            q[k] = c
            for j in range(db + 1):
                rem[k + j] -= c * b[j]
    return trim(q), trim(rem[:db])


cpdef object peval(tuple a, object x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc if type(acc) is int else _norm(acc)


cdef inline void _acc_mul(list acc, tuple a, tuple b, int sign):
    cdef Py_ssize_t p, q, la = len(a), lb = len(b)
    cdef Py_ssize_t need = la + lb - 1
    cdef object ap
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for p in range(la):
        ap = a[p]
        if not ap:
            continue
        if sign > 0:
            for q in range(lb):
                acc[p + q] += ap * b[q]
        else:
            for q in range(lb):
                acc[p + q] -= ap * b[q]


cpdef list smul(list A, list B, Py_ssize_t n):
    cdef Py_ssize_t la = len(A)
    cdef Py_ssize_t lb = len(B)
    cdef Py_ssize_t m, i, lo, hi
    cdef list out = []
    cdef list acc
    cdef tuple a, b
    for m in range(n):
        acc = []
        lo = m - lb + 1 if m - lb + 1 > 0 else 0
        hi = m if m < la - 1 else la - 1
        for i in range(lo, hi + 1):
            a = A[i]
            if not a:
                continue
            b = B[m - i]
            if not b:
                continue
            _acc_mul(acc, a, b, 1)
        out.append(trim(acc))
    return out


cpdef list sdiv(list N, list D, Py_ssize_t n):
    cdef Py_ssize_t m, j, top
    cdef list acc
    cdef list q = []
    cdef tuple dj, qm
    d0 = D[0][0]
    inv = _div(1, d0)
    for m in range(n):
        acc = list(N[m]) if m < len(N) else []
        top = m if m < len(D) - 1 else len(D) - 1
        for j in range(1, top + 1):
            dj = D[j]
            if not dj:
                continue
            qm = q[m - j]
            if not qm:
                continue
            _acc_mul(acc, dj, qm, -1)
        q.append(trim([c * inv for c in acc]) if inv != 1 else trim(acc))
    return q


cpdef list scompose(list A, list B, Py_ssize_t n):
    cdef Py_ssize_t k
    cdef Py_ssize_t top = min(len(A), n) - 1
    if top < 0:
        return [()] * n
    cdef list res = [A[top]] + [()] * (n - 1)
    for k in range(top - 1, -1, -1):
        res = smul(res, B, n)
        res[0] = padd(res[0], A[k])
    return res


cpdef list srevert(list F, Py_ssize_t n):
    cdef Py_ssize_t m, k, j
    cdef list g = [()] * n
    cdef list pw, prev, acc, total
    cdef tuple a, b, val, fk, s
    if n > 1:
        g[1] = ONE
    pw = [None, g] + [[()] * n for _ in range(2, n)]
    for m in range(2, n):
        total = []
        for k in range(2, m + 1):
            prev = pw[k - 1]
            acc = []
            for j in range(1, m - k + 2):
                a = g[j]
                b = prev[m - j]
                if not a or not b:
                    continue
                _acc_mul(acc, a, b, 1)
            val = trim(acc)
            (<list>pw[k])[m] = val
            fk = F[k] if k < len(F) else ()
            if fk and val:
                total.append(pmul(fk, val))
        s = ()
        for t in total:
            s = padd(s, t)
        g[m] = pneg(s)
    return g


cpdef list ssqrt(list A, Py_ssize_t n):
    cdef Py_ssize_t m, j
    cdef list acc
    cdef tuple a, b
    cdef list s = [ONE] + [()] * (n - 1)
    for m in range(1, n):
        acc = list(A[m]) if m < len(A) else []
        for j in range(1, m):
            a = s[j]
            b = s[m - j]
            if not a or not b:
                continue
            _acc_mul(acc, a, b, -1)
        s[m] = trim([_div(c, 2) for c in acc])
    return s


cpdef tuple det_bareiss(list rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t k, i, j
    cdef int sign = 1
    cdef list M, rowk, rowi
    cdef tuple prev, pivot, mik, num, rem
    if n == 0:
        return ONE
    M = [list(r) for r in rows]
    prev = ONE
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return ()
        rowk = M[k]
        pivot = rowk[k]
        for i in range(k + 1, n):
            rowi = M[i]
            mik = rowi[k]
            for j in range(k + 1, n):
                num = psub(pmul(pivot, rowi[j]), pmul(mik, rowk[j]))
                if prev != ONE:
                    num, rem = pdivmod(num, prev)
                    if rem:
                        raise ArithmeticError("inexact Bareiss step")
                rowi[j] = num
            rowi[k] = ()
        prev = pivot
    det = M[n - 1][n - 1]
    return pneg(det) if sign < 0 else det
