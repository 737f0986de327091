"""Pure-Python polynomial kernels over F_p and F_(p^t).

Shared flat layout (both kernel backends implement the same contract):

* a polynomial over F_p is a list of ints in [0, p), little-endian;
* a polynomial over F_(p^t) is a flat list of length (deg+1)*t, where the
  slice [j*t:(j+1)*t] holds coefficient j as a little-endian vector over F_p;
* ``fmod`` is the monic degree-t field modulus over F_p (length t+1);
  ``fmod=None`` (or the degree-1 placeholder [0, 1]) selects plain F_p
  coefficients;
* outputs strip trailing zero outer coefficients, so the zero polynomial
  is the empty list.

Reduction moduli ``m`` must be monic (their leading outer coefficient is the
field one); no field inversions ever happen inside the kernel.

Speed tricks, pure lane only: degree-one coefficient fields multiply via
Kronecker substitution into Python bigints; small extension fields
(q <= TABLE_MAX) multiply through cached discrete-log tables.
"""

from __future__ import annotations

TABLE_MAX = 1024

_table_cache: dict[tuple[int, tuple[int, ...]], "_FqTables | None"] = {}


def _norm_fmod(fmod):
    if fmod is None:
        return None
    fmod = list(fmod)
    if len(fmod) < 2 or fmod[-1] != 1:
        raise ValueError("field modulus must be monic of degree >= 1")
    if len(fmod) == 2:
        if fmod[0] != 0:
            raise ValueError("degree-1 field modulus must be the placeholder x")
        return None
    return fmod


def _strip(out, t):
    # drop trailing all-zero outer coefficients
    n = len(out) // t
    while n and not any(out[(n - 1) * t : n * t]):
        n -= 1
    del out[n * t :]
    return out


# ---------------------------------------------------------------------------
# degree-one coefficient field (plain residues mod p)


def _mul1(a, b, p):
    la, lb = len(a), len(b)
    if not la or not lb:
        return []
    if la == 1:
        c = a[0]
        return _strip([c * x % p for x in b], 1)
    if lb == 1:
        c = b[0]
        return _strip([c * x % p for x in a], 1)
    # Kronecker substitution: one bigint multiply does the whole convolution
    bits = ((p - 1) * (p - 1) * min(la, lb)).bit_length()
    mask = (1 << bits) - 1
    pa = 0
    for c in reversed(a):
        pa = (pa << bits) | c
    pb = 0
    for c in reversed(b):
        pb = (pb << bits) | c
    prod = pa * pb
    out = []
    for _ in range(la + lb - 1):
        out.append((prod & mask) % p)
        prod >>= bits
    return _strip(out, 1)


def _rem1(a, m, p):
    dm = len(m) - 1
    if dm == 0:
        return []
    r = [x % p for x in a]
    if len(r) <= dm:
        return _strip(r, 1)
    if not any(m[1:dm]):
        # two-term modulus x^dm + m0: fold x^(dm+j) -> -m0 * x^j
        c = (-m[0]) % p
        for i in range(len(r) - 1, dm - 1, -1):
            x = r[i]
            if x:
                r[i - dm] = (r[i - dm] + x * c) % p
        del r[dm:]
    else:
        for i in range(len(r) - 1, dm - 1, -1):
            x = r[i]
            if x:
                for j in range(dm):
                    y = m[j]
                    if y:
                        r[i - dm + j] = (r[i - dm + j] - x * y) % p
        del r[dm:]
    return _strip(r, 1)


# ---------------------------------------------------------------------------
# small extension fields: discrete-log tables on base-p packed elements


class _FqTables:
    __slots__ = ("p", "t", "q", "exp", "log", "unpack", "weights")

    def __init__(self, p, t, q, exp, log, unpack, weights):
        self.p = p
        self.t = t
        self.q = q
        self.exp = exp
        self.log = log
        self.unpack = unpack
        self.weights = weights

    def pack(self, vec, off=0):
        return sum(vec[off + i] * w for i, w in enumerate(self.weights))


def _elem_mul_direct(u, v, fmod, p, t):
    # schoolbook product of two width-t vectors, folded by the field modulus
    w = [0] * (2 * t - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                if y:
                    w[i + j] += x * y
    for i in range(2 * t - 2, t - 1, -1):
        c = w[i] % p
        if c:
            for j in range(t):
                w[i - t + j] -= c * fmod[j]
    return tuple(x % p for x in w[:t])


def _build_tables(p, fmod):
    t = len(fmod) - 1
    q = p**t
    if q > TABLE_MAX:
        return None
    weights = [p**i for i in range(t)]
    unpack = []
    for v in range(q):
        digs = []
        x = v
        for _ in range(t):
            digs.append(x % p)
            x //= p
        unpack.append(tuple(digs))
    one = unpack[1]
    for cand in range(2, q):
        seq = [1]
        cur = unpack[cand]
        while cur != one and len(seq) < q:
            seq.append(sum(d * w for d, w in zip(cur, weights)))
            cur = _elem_mul_direct(cur, unpack[cand], fmod, p, t)
        if cur == one and len(seq) == q - 1:
            log = [-1] * q
            for e, v in enumerate(seq):
                log[v] = e
            if any(v == -1 for v in log[1:]):
                return None  # fmod is not irreducible; powers do not cover F_q*
            return _FqTables(p, t, q, seq, log, unpack, weights)
        if cur != one:
            return None  # candidate order exceeded q-1: not a field
    return None


def _tables(p, fmod):
    key = (p, tuple(fmod))
    try:
        return _table_cache[key]
    except KeyError:
        tab = _build_tables(p, fmod)
        _table_cache[key] = tab
        return tab


def _outer_logs(flat, t, tab):
    logs = []
    for j in range(len(flat) // t):
        v = tab.pack(flat, j * t)
        logs.append(tab.log[v] if v else None)
    return logs


def _mulext_tables(a, b, p, fmod, tab):
    t = tab.t
    order = tab.q - 1
    la = _outer_logs(a, t, tab)
    lb = _outer_logs(b, t, tab)
    n = len(la) + len(lb) - 1
    out = [0] * (n * t)
    if p == 2:
        acc = [0] * n
        for i, x in enumerate(la):
            if x is None:
                continue
            for j, y in enumerate(lb):
                if y is None:
                    continue
                s = x + y
                if s >= order:
                    s -= order
                acc[i + j] ^= tab.exp[s]
        for k, v in enumerate(acc):
            if v:
                out[k * t : (k + 1) * t] = tab.unpack[v]
    else:
        acc = [[0] * t for _ in range(n)]
        for i, x in enumerate(la):
            if x is None:
                continue
            for j, y in enumerate(lb):
                if y is None:
                    continue
                s = x + y
                if s >= order:
                    s -= order
                vec = tab.unpack[tab.exp[s]]
                row = acc[i + j]
                for d in range(t):
                    row[d] += vec[d]
        for k, row in enumerate(acc):
            for d in range(t):
                out[k * t + d] = row[d] % p
    return _strip(out, t)


# ---------------------------------------------------------------------------
# generic extension fields: nested schoolbook


def _mulext_generic(a, b, p, fmod):
    t = len(fmod) - 1
    na = len(a) // t
    nb = len(b) // t
    n = na + nb - 1
    width = 2 * t - 1
    acc = [[0] * width for _ in range(n)]
    for i in range(na):
        ai = a[i * t : (i + 1) * t]
        if not any(ai):
            continue
        for j in range(nb):
            bj = b[j * t : (j + 1) * t]
            row = acc[i + j]
            for u, x in enumerate(ai):
                if x:
                    for v, y in enumerate(bj):
                        if y:
                            row[u + v] += x * y
    out = [0] * (n * t)
    for k, row in enumerate(acc):
        for i in range(width - 1, t - 1, -1):
            c = row[i] % p
            if c:
                for j in range(t):
                    row[i - t + j] -= c * fmod[j]
        for d in range(t):
            out[k * t + d] = row[d] % p
    return _strip(out, t)


def _elem_mul(u, v, p, fmod, tab):
    if tab is not None:
        pu = tab.pack(u)
        pv = tab.pack(v)
        if not pu or not pv:
            return (0,) * tab.t
        s = tab.log[pu] + tab.log[pv]
        if s >= tab.q - 1:
            s -= tab.q - 1
        return tab.unpack[tab.exp[s]]
    return _elem_mul_direct(u, v, fmod, p, len(fmod) - 1)


def _remext(a, m, p, fmod, tab):
    t = len(fmod) - 1
    dm = len(m) // t - 1
    one = (1,) + (0,) * (t - 1)
    if dm < 0 or tuple(m[dm * t : (dm + 1) * t]) != one:
        raise ValueError("reduction modulus must be monic")
    if dm == 0:
        return []
    r = [x % p for x in a]
    n = len(r) // t
    for i in range(n - 1, dm - 1, -1):
        lead = tuple(r[i * t : (i + 1) * t])
        if not any(lead):
            continue
        for j in range(dm):
            mj = m[j * t : (j + 1) * t]
            if not any(mj):
                continue
            prod = _elem_mul(lead, tuple(mj), p, fmod, tab)
            base = (i - dm + j) * t
            for d in range(t):
                r[base + d] = (r[base + d] - prod[d]) % p
        for d in range(t):
            r[i * t + d] = 0
    del r[dm * t :]
    return _strip(r, t)


# ---------------------------------------------------------------------------
# public kernel API


def poly_mul(a, b, p, fmod=None):
    """Product of two flat polynomials (no outer reduction)."""
    fmod = _norm_fmod(fmod)
    a = [x % p for x in a]
    b = [x % p for x in b]
    if fmod is None:
        return _mul1(a, b, p)
    if not a or not b:
        return []
    tab = _tables(p, fmod)
    if tab is not None:
        return _mulext_tables(a, b, p, fmod, tab)
    return _mulext_generic(a, b, p, fmod)


def poly_rem(a, m, p, fmod=None):
    """Remainder of a modulo the monic polynomial m."""
    fmod = _norm_fmod(fmod)
    a = list(a)
    m = list(m)
    if fmod is None:
        if not m or m[-1] != 1:
            raise ValueError("reduction modulus must be monic")
        return _rem1(a, m, p)
    tab = _tables(p, fmod)
    return _remext(a, m, p, fmod, tab)


def poly_mulmod(a, b, m, p, fmod=None):
    """Product of a and b reduced modulo the monic polynomial m."""
    prod = poly_mul(a, b, p, fmod)
    return poly_rem(prod, m, p, fmod)


def poly_powmod(a, e, m, p, fmod=None):
    """a**e modulo the monic polynomial m, by square and multiply."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    fmod = _norm_fmod(fmod)
    t = 1 if fmod is None else len(fmod) - 1
    one = [1] + [0] * (t - 1)
    base = poly_rem(a, m, p, fmod)
    result = poly_rem(one, m, p, fmod)
    if e == 0:
        return result
    for i in range(e.bit_length() - 1, -1, -1):
        result = poly_mulmod(result, result, m, p, fmod)
        if (e >> i) & 1:
            result = poly_mulmod(result, base, m, p, fmod)
    return result
