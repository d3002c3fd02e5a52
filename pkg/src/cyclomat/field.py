"""Finite fields F_{p^n} with a fixed generator and a full discrete-log table.

Elements live in the polynomial basis: sum_i c_i * x^i with c_i in [0, p) is
identified by its canonical index sum_i c_i * p**i, an integer in [0, q).
All hot paths work on these indices, which makes the power and dlog tables
plain flat arrays with O(1) addressing.

The generator is the element of smallest canonical index with full
multiplicative order, so every table derived from a field is reproducible;
a caller may override it, in which case the override is order-verified.
For extension fields the modulus comes from a small table of Conway
polynomials, falling back to the lexicographically least monic irreducible.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    CompositeP,
    EvenP,
    NoModulusAvailable,
    NotAGenerator,
    ReducibleModulus,
    ZeroElement,
)

# Conway polynomials for small (p, n), coefficients low-to-high, monic.
CONWAY_POLYNOMIALS = {
    (3, 2): (2, 2, 1),          # x^2 + 2x + 2
    (3, 3): (1, 2, 0, 1),       # x^3 + 2x + 1
    (3, 4): (2, 0, 0, 2, 1),    # x^4 + 2x^3 + 2
    (5, 2): (2, 4, 1),          # x^2 + 4x + 2
    (5, 3): (3, 3, 0, 1),       # x^3 + 3x + 3
    (7, 2): (3, 6, 1),          # x^2 + 6x + 3
    (7, 3): (4, 0, 6, 1),       # x^3 + 6x^2 + 4
    (11, 2): (2, 7, 1),         # x^2 + 7x + 2
    (13, 2): (2, 12, 1),        # x^2 + 12x + 2
}

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m):
    """Deterministic Miller-Rabin; exact for m < 3.3e24."""
    if m < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % sp == 0:
            return m == sp
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _pollard_brent(m):
    """One nontrivial factor of composite odd m (Brent's cycle variant)."""
    from math import gcd

    if m % 2 == 0:
        return 2
    c = 1
    while True:
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % m
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % m
                    q = q * abs(x - y) % m
                g = gcd(q, m)
                k += 128
            r *= 2
        if g == m:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % m
                g = gcd(abs(x - ys), m)
        if g != m:
            return g
        c += 1


def factorize(m):
    """Sorted prime factorization of m >= 1 as a list of (prime, exponent).

    Trial division up to 10**6, then Brent-Pollard rho on what remains.
    """
    factors = {}
    for sp in (2, 3, 5):
        while m % sp == 0:
            factors[sp] = factors.get(sp, 0) + 1
            m //= sp
    f = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= m and f < 10 ** 6:
        while m % f == 0:
            factors[f] = factors.get(f, 0) + 1
            m //= f
        f += wheel[i]
        i = (i + 1) % 8
    stack = [m] if m > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            factors[v] = factors.get(v, 0) + 1
            continue
        d = _pollard_brent(v)
        stack.append(d)
        stack.append(v // d)
    return sorted(factors.items())


# ----------------------------------------------------------------------
# polynomial arithmetic over F_p (coefficient lists low-to-high, trimmed)
# ----------------------------------------------------------------------

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(a, f, p):
    a = a[:]
    degf = len(f) - 1
    inv = pow(f[-1], p - 2, p)
    while len(a) > degf:
        c = a[-1] * inv % p
        k = len(a) - len(f)
        if c:
            for i in range(len(f)):
                a[k + i] = (a[k + i] - c * f[i]) % p
        a.pop()
        _ptrim(a)
        if len(a) <= degf:
            break
    return _ptrim(a)


def _pgcd(a, b, p):
    a, b = a[:], b[:]
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(a, e, f, p):
    out = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return out


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return _ptrim(out)


def is_irreducible(coeffs, p):
    """Rabin irreducibility test for a monic polynomial over F_p."""
    f = [c % p for c in coeffs]
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    # gcd(x^(p^(n/r)) - x, f) must be trivial for every prime r | n
    for r, _ in factorize(n):
        h = _ppowmod(x, p ** (n // r), f, p)
        if len(_pgcd(_psub(h, x, p), f, p)) - 1 != 0:
            return False
    # and the Frobenius closes: x^(p^n) = x mod f
    h = _ppowmod(x, p ** n, f, p)
    return _psub(h, x, p) == []


def find_irreducible(p, n):
    """Lexicographically least monic irreducible of degree n over F_p,
    ordering by the canonical index of the low n coefficients."""
    for m in range(p ** n):
        coeffs = []
        v = m
        for _ in range(n):
            v, r = divmod(v, p)
            coeffs.append(r)
        coeffs.append(1)
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise NoModulusAvailable("no irreducible found for (%d, %d)" % (p, n))


class FieldElem:
    """An element of a FieldCtx, wrapping its canonical index."""

    __slots__ = ("field", "index")

    def __init__(self, field, index):
        self.field = field
        self.index = int(index) % field.q

    @property
    def coeffs(self):
        return self.field.decode(self.index)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field is other.field and self.index == other.index
        if isinstance(other, int):
            return self.index == self.field.encode_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.index))

    def __repr__(self):
        if self.field.n == 1:
            return "FieldElem(%d mod %d)" % (self.index, self.field.p)
        return "FieldElem(idx=%d, coeffs=%s, q=%d)" % (
            self.index, list(self.coeffs), self.field.q)

    def _wrap(self, idx):
        return FieldElem(self.field, idx)

    def _idx(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.index
        if isinstance(other, int):
            return self.field.encode_int(other)
        raise TypeError("cannot combine FieldElem with %r" % type(other))

    def __add__(self, other):
        return self._wrap(self.field.add_idx(self.index, self._idx(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub_idx(self.index, self._idx(other)))

    def __neg__(self):
        return self._wrap(self.field.neg_idx(self.index))

    def __mul__(self, other):
        return self._wrap(self.field.mul_idx(self.index, self._idx(other)))

    __rmul__ = __mul__

    def __pow__(self, e):
        return self._wrap(self.field.pow_idx(self.index, e))

    def inverse(self):
        if self.index == 0:
            raise ZeroElement("zero has no inverse")
        return self._wrap(self.field.pow_idx(self.index, self.field.q - 2))


class FieldCtx:
    """A concrete F_{p^n}: modulus, generator, and power/dlog tables.

    Immutable after construction; all tables are plain int64 arrays safe for
    shared concurrent reads.
    """

    __slots__ = ("p", "n", "q", "modulus", "generator_index", "pows", "dlog",
                 "factors_qm1", "_mod_list")

    def __init__(self, p, n=1, modulus=None, generator=None, allow_search=True):
        p = int(p)
        n = int(n)
        if p % 2 == 0:
            raise EvenP("p must be an odd prime, got %d" % p)
        if not is_prime(p):
            raise CompositeP("p must be prime, got %d" % p)
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = self._resolve_modulus(modulus, allow_search)
        self._mod_list = list(self.modulus)
        self.factors_qm1 = factorize(self.q - 1)
        self.generator_index = self._resolve_generator(generator)
        self.pows, self.dlog = self._build_tables()

    # -- construction helpers ------------------------------------------

    def _resolve_modulus(self, modulus, allow_search):
        p, n = self.p, self.n
        if n == 1:
            return (0, 1)  # placeholder; unused for prime fields
        if modulus is not None:
            coeffs = tuple(int(c) % p for c in modulus)
            if len(coeffs) != n + 1 or coeffs[-1] != 1:
                raise ReducibleModulus(
                    "modulus must be monic of degree %d over F_%d" % (n, p))
            if not is_irreducible(list(coeffs), p):
                raise ReducibleModulus(
                    "modulus %s is reducible over F_%d" % (list(coeffs), p))
            return coeffs
        if (p, n) in CONWAY_POLYNOMIALS:
            return CONWAY_POLYNOMIALS[(p, n)]
        if not allow_search:
            raise NoModulusAvailable(
                "no built-in modulus for (%d, %d) and search disabled" % (p, n))
        return find_irreducible(p, n)

    def _resolve_generator(self, generator):
        if generator is not None:
            if isinstance(generator, FieldElem):
                idx = generator.index
            else:
                idx = int(generator) % self.q
            if idx == 0 or not self._has_full_order(idx):
                raise NotAGenerator("index %d does not generate F_%d^*" %
                                    (idx, self.q))
            return idx
        for idx in range(2, self.q):
            if self._has_full_order(idx):
                return idx
        raise AssertionError("no generator found; field construction is broken")

    def _has_full_order(self, idx):
        m = self.q - 1
        return all(self.pow_idx(idx, m // f) != 1 for f, _ in self.factors_qm1)

    def _build_tables(self):
        q, p, g = self.q, self.p, self.generator_index
        if self.n == 1:
            block = min(1 << 12, q - 1)
            pows = np.empty(q - 1, dtype=np.int64)
            cur = 1
            for e in range(block):
                pows[e] = cur
                cur = cur * g % p
            if q - 1 > block:
                gb = pow(g, block, p)
                for s in range(block, q - 1, block):
                    e = min(block, q - 1 - s)
                    np.multiply(pows[s - block:s - block + e], gb,
                                out=pows[s:s + e])
                    np.mod(pows[s:s + e], p, out=pows[s:s + e])
        else:
            lst = [0] * (q - 1)
            cur = 1
            mul = self.mul_idx
            for e in range(q - 1):
                lst[e] = cur
                cur = mul(cur, g)
            if cur != 1:
                raise AssertionError("generator power sequence did not close")
            pows = np.array(lst, dtype=np.int64)
        dlog = np.full(q, -1, dtype=np.int64)
        dlog[pows] = np.arange(q - 1, dtype=np.int64)
        if int(dlog[0]) != -1 or int(np.count_nonzero(dlog < 0)) != 1:
            raise AssertionError("dlog table is not a bijection; "
                                 "generator lacks full order")
        return pows, dlog

    # -- index arithmetic ----------------------------------------------

    def decode(self, idx):
        """Canonical index -> coefficient tuple (length n, low-to-high)."""
        p = self.p
        out = []
        for _ in range(self.n):
            idx, r = divmod(idx, p)
            out.append(r)
        return tuple(out)

    def encode(self, coeffs):
        """Coefficient sequence -> canonical index."""
        p = self.p
        idx = 0
        for c in reversed(list(coeffs)):
            idx = idx * p + (int(c) % p)
        return idx

    def encode_int(self, v):
        """Embed an ordinary integer via the prime subfield."""
        return int(v) % self.p

    def add_idx(self, a, b):
        p = self.p
        if self.n == 1:
            return (a + b) % p
        out = 0
        mult = 1
        for _ in range(self.n):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * mult
            mult *= p
        return out

    def sub_idx(self, a, b):
        return self.add_idx(a, self.neg_idx(b))

    def neg_idx(self, a):
        p = self.p
        if self.n == 1:
            return (-a) % p
        out = 0
        mult = 1
        for _ in range(self.n):
            a, ra = divmod(a, p)
            out += ((-ra) % p) * mult
            mult *= p
        return out

    def mul_idx(self, a, b):
        p = self.p
        if self.n == 1:
            return a * b % p
        pa = _ptrim(list(self.decode(a)))
        pb = _ptrim(list(self.decode(b)))
        prod = _pmod(_pmul(pa, pb, p), self._mod_list, p)
        return self.encode(prod + [0] * (self.n - len(prod)))

    def pow_idx(self, a, e):
        if self.n == 1:
            return pow(a, e, self.p)
        e = int(e)
        if e < 0:
            a = self.pow_idx(a, self.q - 2)
            e = -e
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul_idx(out, base)
            base = self.mul_idx(base, base)
            e >>= 1
        return out

    # -- public surface --------------------------------------------------

    @property
    def generator(self):
        return FieldElem(self, self.generator_index)

    def element(self, spec):
        """Build a FieldElem from an index (int) or a coefficient sequence."""
        if isinstance(spec, FieldElem):
            return FieldElem(self, spec.index)
        if isinstance(spec, int):
            return FieldElem(self, spec)
        return FieldElem(self, self.encode(spec))

    def dlog_of(self, x):
        """Exponent e with generator**e == x; raises ZeroElement on x == 0."""
        idx = x.index if isinstance(x, FieldElem) else int(x)
        if idx % self.q == 0:
            raise ZeroElement("dlog of zero is undefined")
        return int(self.dlog[idx % self.q])

    def coset_indices(self, i, ell):
        """Canonical indices of the coset g^i K, where K is the ell-th powers."""
        return self.pows[i % ell::ell]

    def __repr__(self):
        if self.n == 1:
            return "FieldCtx(p=%d)" % self.p
        return "FieldCtx(p=%d, n=%d, modulus=%s)" % (self.p, self.n,
                                                     list(self.modulus))


def build_field(p, n=1, modulus=None, generator=None, allow_search=True):
    """Construct F_{p^n} with verified modulus and generator."""
    return FieldCtx(p, n=n, modulus=modulus, generator=generator,
                    allow_search=allow_search)


def find_generator(ctx, override=None):
    """The field's deterministic generator, or an order-verified override."""
    if override is None:
        return ctx.generator
    idx = override.index if isinstance(override, FieldElem) else int(override)
    if idx % ctx.q == 0 or not ctx._has_full_order(idx % ctx.q):
        raise NotAGenerator("index %d does not generate F_%d^*" % (idx, ctx.q))
    return FieldElem(ctx, idx)


def dlog(ctx, x):
    """Discrete logarithm of a nonzero element, in [0, q-1)."""
    return ctx.dlog_of(x)
