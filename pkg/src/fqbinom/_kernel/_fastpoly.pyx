# cython: boundscheck=False, cdivision=True
"""Compiled polynomial kernels over F_p and F_(p^t).

Same flat layout and contract as the pure backend (see pure.py): little-endian
coefficient lists, inner vectors of width t when a field modulus ``fmod`` is
given, monic reduction moduli, outputs stripped of trailing zeros.

Coefficient products are accumulated in int64, so this backend is limited to
p <= P_LIMIT and products of at most ACC_LIMIT outer*inner terms; the
dispatcher in __init__.py routes anything larger to the pure backend.
"""

from libc.stdlib cimport calloc, free

P_LIMIT = 1 << 25
ACC_LIMIT = 1 << 12


cdef inline long long _imod(long long x, long long p):
    x %= p
    if x < 0:
        x += p
    return x


cdef long long* _to_c(list a, long long p) except NULL:
    cdef Py_ssize_t n = len(a), i
    cdef long long* buf = <long long*> calloc(n if n else 1, sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = _imod(a[i], p)
    return buf


cdef list _from_c(long long* buf, Py_ssize_t n, Py_ssize_t t):
    # strip trailing all-zero outer coefficients
    cdef Py_ssize_t outer = n // t, i
    cdef bint nz
    while outer:
        nz = False
        for i in range((outer - 1) * t, outer * t):
            if buf[i]:
                nz = True
                break
        if nz:
            break
        outer -= 1
    cdef list out = []
    for i in range(outer * t):
        out.append(buf[i])
    return out


cdef void _inner_reduce(long long* row, long long* fm, Py_ssize_t t, long long p):
    # fold a width-(2t-1) scratch vector by the monic degree-t field modulus
    cdef Py_ssize_t i, j
    cdef long long c
    for i in range(2 * t - 2, t - 1, -1):
        c = _imod(row[i], p)
        if c:
            for j in range(t):
                row[i - t + j] -= c * fm[j] % p
        row[i] = 0
    for i in range(t):
        row[i] = _imod(row[i], p)


cdef void _elem_mul_c(long long* u, long long* v, long long* fm,
                      long long* scratch, Py_ssize_t t, long long p):
    # scratch has width 2t-1; result left in scratch[0:t]
    cdef Py_ssize_t i, j
    for i in range(2 * t - 1):
        scratch[i] = 0
    for i in range(t):
        if u[i]:
            for j in range(t):
                if v[j]:
                    scratch[i + j] += u[i] * v[j]
    _inner_reduce(scratch, fm, t, p)


cdef long long* _mul_c(long long* a, Py_ssize_t na, long long* b, Py_ssize_t nb,
                       long long* fm, Py_ssize_t t, long long p) except NULL:
    # na, nb are outer lengths; returns a buffer of (na+nb-1)*t entries
    cdef Py_ssize_t n = na + nb - 1
    cdef Py_ssize_t width = 2 * t - 1
    cdef long long* acc = <long long*> calloc(n * width, sizeof(long long))
    cdef long long* out = <long long*> calloc(n * t, sizeof(long long))
    if acc == NULL or out == NULL:
        free(acc)
        free(out)
        raise MemoryError()
    # raw int64 accumulation; the dispatcher guarantees p and term counts
    # stay small enough that no slot exceeds 2^62
    cdef Py_ssize_t i, j, u, v, k
    cdef long long x
    for i in range(na):
        for u in range(t):
            x = a[i * t + u]
            if x == 0:
                continue
            for j in range(nb):
                for v in range(t):
                    if b[j * t + v]:
                        acc[(i + j) * width + u + v] += x * b[j * t + v]
    for k in range(n):
        if t > 1:
            _inner_reduce(acc + k * width, fm, t, p)
        else:
            acc[k * width] = _imod(acc[k * width], p)
        for u in range(t):
            out[k * t + u] = acc[k * width + u]
    free(acc)
    return out


cdef int _rem_c(long long* r, Py_ssize_t nr, long long* m, Py_ssize_t nm,
                long long* fm, Py_ssize_t t, long long p) except -1:
    # in-place remainder by monic m; nr, nm are outer lengths
    cdef Py_ssize_t dm = nm - 1
    cdef Py_ssize_t i, j, d
    cdef long long c
    cdef long long* scratch = NULL
    if t > 1:
        for d in range(t):
            if m[dm * t + d] != (1 if d == 0 else 0):
                raise ValueError("reduction modulus must be monic")
        scratch = <long long*> calloc(2 * t - 1, sizeof(long long))
        if scratch == NULL:
            raise MemoryError()
    elif m[dm] != 1:
        raise ValueError("reduction modulus must be monic")
    if t == 1:
        for i in range(nr - 1, dm - 1, -1):
            c = r[i]
            if c:
                for j in range(dm):
                    if m[j]:
                        r[i - dm + j] = _imod(r[i - dm + j] - c * m[j], p)
                r[i] = 0
    else:
        for i in range(nr - 1, dm - 1, -1):
            c = 0
            for d in range(t):
                if r[i * t + d]:
                    c = 1
                    break
            if not c:
                continue
            for j in range(dm):
                c = 0
                for d in range(t):
                    if m[j * t + d]:
                        c = 1
                        break
                if not c:
                    continue
                _elem_mul_c(r + i * t, m + j * t, fm, scratch, t, p)
                for d in range(t):
                    r[(i - dm + j) * t + d] = _imod(r[(i - dm + j) * t + d] - scratch[d], p)
            for d in range(t):
                r[i * t + d] = 0
    free(scratch)
    return 0


cdef tuple _setup(list fmod, long long p):
    cdef list fm_list
    if fmod is None:
        return 1, None
    fm_list = list(fmod)
    if len(fm_list) < 2 or fm_list[-1] != 1:
        raise ValueError("field modulus must be monic of degree >= 1")
    if len(fm_list) == 2:
        if fm_list[0] != 0:
            raise ValueError("degree-1 field modulus must be the placeholder x")
        return 1, None
    return len(fm_list) - 1, fm_list


def poly_mul(a, b, p, fmod=None):
    """Product of two flat polynomials (no outer reduction)."""
    cdef long long pp = p
    t_, fm_list = _setup(None if fmod is None else list(fmod), pp)
    cdef Py_ssize_t t = t_
    cdef list la = list(a), lb = list(b)
    if not la or not lb:
        return []
    cdef Py_ssize_t na = len(la) // t, nb = len(lb) // t
    cdef long long* ca = _to_c(la, pp)
    cdef long long* cb = NULL
    cdef long long* cf = NULL
    cdef long long* prod = NULL
    try:
        cb = _to_c(lb, pp)
        if fm_list is not None:
            cf = _to_c(fm_list, pp)
        prod = _mul_c(ca, na, cb, nb, cf, t, pp)
        return _from_c(prod, (na + nb - 1) * t, t)
    finally:
        free(ca)
        free(cb)
        free(cf)
        free(prod)


def poly_rem(a, m, p, fmod=None):
    """Remainder of a modulo the monic polynomial m."""
    cdef long long pp = p
    t_, fm_list = _setup(None if fmod is None else list(fmod), pp)
    cdef Py_ssize_t t = t_
    cdef list la = list(a), lm = list(m)
    if not lm:
        raise ValueError("reduction modulus must be monic")
    cdef Py_ssize_t nr = len(la) // t, nm = len(lm) // t
    if nm == 1:
        # degree-0 monic modulus: everything reduces to zero
        if (t == 1 and lm[0] != 1) or (t > 1 and (lm[0] != 1 or any(lm[1:]))):
            raise ValueError("reduction modulus must be monic")
        return []
    cdef long long* cr = _to_c(la, pp)
    cdef long long* cm = NULL
    cdef long long* cf = NULL
    try:
        cm = _to_c(lm, pp)
        if fm_list is not None:
            cf = _to_c(fm_list, pp)
        _rem_c(cr, nr, cm, nm, cf, t, pp)
        return _from_c(cr, min(nr, nm - 1) * t, t)
    finally:
        free(cr)
        free(cm)
        free(cf)


def poly_mulmod(a, b, m, p, fmod=None):
    """Product of a and b reduced modulo the monic polynomial m."""
    cdef long long pp = p
    t_, fm_list = _setup(None if fmod is None else list(fmod), pp)
    cdef Py_ssize_t t = t_
    cdef list la = list(a), lb = list(b), lm = list(m)
    if not lm:
        raise ValueError("reduction modulus must be monic")
    cdef Py_ssize_t nm = len(lm) // t
    if not la or not lb or nm == 1:
        return poly_rem([], lm, p, fmod)
    cdef Py_ssize_t na = len(la) // t, nb = len(lb) // t
    cdef long long* ca = _to_c(la, pp)
    cdef long long* cb = NULL
    cdef long long* cm = NULL
    cdef long long* cf = NULL
    cdef long long* prod = NULL
    try:
        cb = _to_c(lb, pp)
        cm = _to_c(lm, pp)
        if fm_list is not None:
            cf = _to_c(fm_list, pp)
        prod = _mul_c(ca, na, cb, nb, cf, t, pp)
        _rem_c(prod, na + nb - 1, cm, nm, cf, t, pp)
        return _from_c(prod, min(na + nb - 1, nm - 1) * t, t)
    finally:
        free(ca)
        free(cb)
        free(cm)
        free(cf)
        free(prod)


def poly_powmod(a, e, m, p, fmod=None):
    """a**e modulo the monic polynomial m, by square and multiply."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    cdef long long pp = p
    t_, fm_list = _setup(None if fmod is None else list(fmod), pp)
    cdef Py_ssize_t t = t_
    one = [1] + [0] * (t - 1)
    base = poly_rem(a, m, p, fmod)
    result = poly_rem(one, m, p, fmod)
    if e == 0:
        return result
    cdef Py_ssize_t i
    for i in range(e.bit_length() - 1, -1, -1):
        result = poly_mulmod(result, result, m, p, fmod)
        if (e >> i) & 1:
            result = poly_mulmod(result, base, m, p, fmod)
    return result
