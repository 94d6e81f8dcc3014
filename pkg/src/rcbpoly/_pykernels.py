"""Pure-Python arithmetic kernels over Q[r].

A raw polynomial is a tuple of rationals (``int`` or ``Fraction``) in ascending
powers of r with no trailing zeros; ``()`` is zero.  A raw series is a list of
raw polynomials indexed by the power of x.

``_ckernels.pyx`` mirrors this module function for function; keep them in step.
"""

from __future__ import annotations

from fractions import Fraction

BACKEND = "python"

ONE = (1,)


def _norm(c):
    if type(c) is int:
        return c
    if c.denominator == 1:
        return c.numerator
    return c


def _div(c, d):
    # exact rational quotient, ints kept as ints when possible
    if type(c) is int and type(d) is int:
        if c % d == 0:
            return c // d
        return Fraction(c, d)
    return _norm(Fraction(c) / d)


def trim(seq):
    n = len(seq)
    while n and not seq[n - 1]:
        n -= 1
    return tuple([_norm(seq[i]) for i in range(n)])


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] += b[i]
    return trim(out)


def psub(a, b):
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i in range(len(b)):
        out[i] -= b[i]
    return trim(out)


def pneg(a):
    return tuple([-c for c in a])


def pscale(a, c):
    if not c:
        return ()
    return trim([x * c for x in a])


def pmul(a, b):
    la = len(a)
    lb = len(b)
    if not la or not lb:
        return ()
    if la == 1 and a[0] == 1:
        return b
    if lb == 1 and b[0] == 1:
        return a
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(lb):
            out[i + j] += ai * b[j]
    return trim(out)


def pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = len(b) - 1
    if len(a) <= db:
        return (), tuple(a)
    lead = b[db]
    rem = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        c = rem[k + db]
        if c:
            c = _div(c, lead)
            q[k] = c
            for j in range(db + 1):
                rem[k + j] -= c * b[j]
    return trim(q), trim(rem[:db])


def peval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc if type(acc) is int else _norm(acc)


def smul(A, B, n):
    la = len(A)
    lb = len(B)
    out = []
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
            need = len(a) + len(b) - 1
            if len(acc) < need:
                acc.extend([0] * (need - len(acc)))
            for p in range(len(a)):
                ap = a[p]
                if not ap:
                    continue
                for q in range(len(b)):
                    acc[p + q] += ap * b[q]
        out.append(trim(acc))
    return out


def sdiv(N, D, n):
    """Quotient N/D to n terms; D[0] must be a nonzero rational constant."""
    d0 = D[0][0]
    inv = _div(1, d0)
    q = []
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
            need = len(dj) + len(qm) - 1
            if len(acc) < need:
                acc.extend([0] * (need - len(acc)))
            for p in range(len(dj)):
                dp = dj[p]
                if not dp:
                    continue
                for s in range(len(qm)):
                    acc[p + s] -= dp * qm[s]
        q.append(trim([c * inv for c in acc]) if inv != 1 else trim(acc))
    return q


def scompose(A, B, n):
    """A(B(x)) to n terms; B[0] must be zero."""
    top = min(len(A), n) - 1
    if top < 0:
        return [()] * n
    res = [A[top]] + [()] * (n - 1)
    for k in range(top - 1, -1, -1):
        res = smul(res, B, n)
        res[0] = padd(res[0], A[k])
    return res


def srevert(F, n):
    """Compositional inverse of F (F[0] = 0, F[1] = 1) to n terms.

    Coefficients are fixed one degree at a time from [x^m] F(G) = 0, keeping a
    table of the partial powers G^k.
    """
    g = [()] * n
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
                need = len(a) + len(b) - 1
                if len(acc) < need:
                    acc.extend([0] * (need - len(acc)))
                for p in range(len(a)):
                    ap = a[p]
                    if not ap:
                        continue
                    for q in range(len(b)):
                        acc[p + q] += ap * b[q]
            val = trim(acc)
            pw[k][m] = val
            fk = F[k] if k < len(F) else ()
            if fk and val:
                total.append(pmul(fk, val))
        s = ()
        for t in total:
            s = padd(s, t)
        g[m] = pneg(s)
    return g


def ssqrt(A, n):
    """Square root of A (A[0] = 1) to n terms."""
    s = [ONE] + [()] * (n - 1)
    for m in range(1, n):
        acc = list(A[m]) if m < len(A) else []
        for j in range(1, m):
            a = s[j]
            b = s[m - j]
            if not a or not b:
                continue
            need = len(a) + len(b) - 1
            if len(acc) < need:
                acc.extend([0] * (need - len(acc)))
            for p in range(len(a)):
                for q in range(len(b)):
                    acc[p + q] -= a[p] * b[q]
        s[m] = trim([_div(c, 2) for c in acc])
    return s


def det_bareiss(rows):
    """Determinant by fraction-free elimination, first-nonzero pivoting."""
    n = len(rows)
    if n == 0:
        return ONE
    M = [list(r) for r in rows]
    sign = 1
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
        pivot = M[k][k]
        rowk = M[k]
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
