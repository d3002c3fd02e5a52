"""Exact dense linear algebra over the integers.

All arithmetic runs on plain Python ints, so results are exact at any
magnitude; the fraction-free algorithms (Bareiss elimination, the
Faddeev-LeVerrier characteristic polynomial) rely on that.  Matrices in this
package are small dense squares (orders up to a few dozen), so the simple
cubic/quartic algorithms are the right tool.

Floating point appears in exactly one place: IntPoly.real_roots refines
Sturm-isolated roots of an exact polynomial to a requested tolerance, for
display next to exact certificates.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch


class IntMatrix:
    """Square matrix of arbitrary-precision integers, row-major, zero-indexed."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows):
        rows = [[int(v) for v in row] for row in rows]
        d = len(rows)
        for row in rows:
            if len(row) != d:
                raise DimensionMismatch("rows must all have length %d" % d)
        self.dim = d
        self.rows = rows

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zeros(cls, d):
        return cls([[0] * d for _ in range(d)])

    @classmethod
    def identity(cls, d):
        return cls([[1 if i == j else 0 for j in range(d)] for i in range(d)])

    @classmethod
    def ones(cls, d):
        """The all-one matrix J_d."""
        return cls([[1] * d for _ in range(d)])

    @classmethod
    def elementary(cls, d, s, t):
        """E_{s,t}: all zeros except a single 1 in the (s, t) entry."""
        m = cls.zeros(d)
        m.rows[s % d][t % d] = 1
        return m

    @classmethod
    def perm_shift(cls, d, v):
        """Cyclic-shift permutation P_v: (i, j)-entry is 1 iff i - j = v (mod d).

        Satisfies P_v^T = P_v^{-1} = P_{-v}, and left-multiplying by P_v moves
        row i-v of the operand into row i (rows cycled down by v).
        """
        if d < 1:
            raise DimensionMismatch("order must be >= 1")
        return cls([[1 if (i - j - v) % d == 0 else 0 for j in range(d)]
                    for i in range(d)])

    # ------------------------------------------------------------------
    # basics
    # ------------------------------------------------------------------

    def copy(self):
        return IntMatrix(self.rows)

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, IntMatrix)
                and self.dim == other.dim and self.rows == other.rows)

    __hash__ = None

    def __repr__(self):
        if self.dim <= 6:
            return "IntMatrix(%r)" % (self.rows,)
        return "IntMatrix(dim=%d)" % self.dim

    def __add__(self, other):
        self._conformable(other)
        return IntMatrix([[a + b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._conformable(other)
        return IntMatrix([[a - b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return IntMatrix([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, IntMatrix):
            self._conformable(other)
            d = self.dim
            bt = other.transpose().rows
            return IntMatrix([[sum(x * y for x, y in zip(row, col)) for col in bt]
                              for row in self.rows])
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("matrix powers need a nonnegative integer exponent")
        out = IntMatrix.identity(self.dim)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def scale(self, c):
        c = int(c)
        return IntMatrix([[c * a for a in row] for row in self.rows])

    def transpose(self):
        d = self.dim
        return IntMatrix([[self.rows[j][i] for j in range(d)] for i in range(d)])

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.dim))

    def diagonal(self):
        return [self.rows[i][i] for i in range(self.dim)]

    def is_zero(self):
        return all(v == 0 for row in self.rows for v in row)

    def is_symmetric(self):
        return self == self.transpose()

    def minor(self, r, c):
        """The submatrix with row r and column c deleted."""
        d = self.dim
        if d < 2:
            raise DimensionMismatch("minor needs dim >= 2")
        r %= d
        c %= d
        return IntMatrix([[self.rows[i][j] for j in range(d) if j != c]
                          for i in range(d) if i != r])

    def to_lists(self):
        return [row[:] for row in self.rows]

    def _conformable(self, other):
        if not isinstance(other, IntMatrix) or other.dim != self.dim:
            raise DimensionMismatch("operands must be square of equal order")

    # ------------------------------------------------------------------
    # fraction-free algorithms
    # ------------------------------------------------------------------

    def det(self):
        """Exact determinant by Bareiss fraction-free elimination."""
        d = self.dim
        if d == 0:
            return 1
        a = [row[:] for row in self.rows]
        sign = 1
        prev = 1
        for k in range(d - 1):
            if a[k][k] == 0:
                for r in range(k + 1, d):
                    if a[r][k] != 0:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            piv = a[k][k]
            for i in range(k + 1, d):
                aik = a[i][k]
                rowi = a[i]
                rowk = a[k]
                for j in range(k + 1, d):
                    # exact division: Bareiss invariant keeps this integral
                    rowi[j] = (rowi[j] * piv - aik * rowk[j]) // prev
                rowi[k] = 0
            prev = piv
        return sign * a[d - 1][d - 1]

    def rank(self):
        """Rank over the rationals, via integer row echelon (no division)."""
        d = self.dim
        a = [row[:] for row in self.rows]
        rank = 0
        row = 0
        for col in range(d):
            piv = next((r for r in range(row, d) if a[r][col] != 0), None)
            if piv is None:
                continue
            a[row], a[piv] = a[piv], a[row]
            pv = a[row][col]
            for r in range(row + 1, d):
                f = a[r][col]
                if f:
                    a[r] = [a[r][c] * pv - f * a[row][c] for c in range(d)]
            rank += 1
            row += 1
            if row == d:
                break
        return rank

    def charpoly(self):
        """Characteristic polynomial det(xI - M) by Faddeev-LeVerrier.

        Every division in the recurrence is exact over the integers, so the
        result is a monic IntPoly of degree dim with exact coefficients.
        """
        d = self.dim
        coeffs = [0] * (d + 1)
        coeffs[d] = 1
        ident = IntMatrix.identity(d)
        am = None
        for k in range(1, d + 1):
            m = ident if k == 1 else am + coeffs[d - k + 1] * ident
            am = self * m
            t = am.trace()
            if t % k:
                raise AssertionError("Faddeev-LeVerrier division must be exact")
            coeffs[d - k] = -(t // k)
        return IntPoly(coeffs)


class IntPoly:
    """Integer polynomial, coefficients stored low-to-high and trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly(0)"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                terms.append("%+d" % c)
            elif e == 1:
                terms.append("%+dx" % c)
            else:
                terms.append("%+dx^%d" % (c, e))
        return "IntPoly(%s)" % " ".join(terms)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly([x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        out = IntPoly([1])
        for _ in range(e):
            out = out * self
        return out

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def at_matrix(self, m):
        """Evaluate at a square IntMatrix by Horner; x^0 maps to the identity."""
        if not isinstance(m, IntMatrix):
            raise DimensionMismatch("at_matrix needs an IntMatrix")
        d = m.dim
        acc = IntMatrix.zeros(d)
        ident = IntMatrix.identity(d)
        for c in reversed(self.coeffs):
            acc = acc * m + c * ident
        return acc

    # ------------------------------------------------------------------
    # real roots
    # ------------------------------------------------------------------

    def squarefree_decomposition(self):
        """Yun decomposition: list of (factor, multiplicity) with each factor
        a primitive squarefree IntPoly of positive degree and positive lead.
        """
        if self.degree < 1:
            return []
        f = _fr(self.coeffs)
        df = _fr_derivative(f)
        g = _fr_gcd(f, df)
        out = []
        if _fr_degree(g) == 0:
            out.append((_fr_to_primitive_intpoly(f), 1))
            return out
        b = _fr_div_exact(f, g)
        c = _fr_div_exact(df, g)
        d = _fr_sub(c, _fr_derivative(b))
        i = 1
        while _fr_degree(b) > 0:
            a = _fr_gcd(b, d)
            if _fr_degree(a) > 0:
                out.append((_fr_to_primitive_intpoly(a), i))
            b = _fr_div_exact(b, a)
            c = _fr_div_exact(d, a)
            d = _fr_sub(c, _fr_derivative(b))
            i += 1
        return out

    def real_roots(self, tol=1e-12):
        """All real roots with multiplicities, as (float, int) pairs sorted
        by root value.

        Roots are isolated with Sturm sequences on the squarefree factors
        (exact rational arithmetic throughout) and then bisected until the
        bracketing interval is narrower than tol; rational roots hit exactly
        by a bisection midpoint are returned exactly.
        """
        out = []
        for factor, mult in self.squarefree_decomposition():
            for r in _squarefree_real_roots(factor, tol):
                out.append((r, mult))
        out.sort(key=lambda t: t[0])
        return out


# ----------------------------------------------------------------------
# rational polynomial helpers (internal; coefficient lists low-to-high)
# ----------------------------------------------------------------------

def _fr(coeffs):
    c = [Fraction(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return c


def _fr_degree(c):
    return len(c) - 1


def _fr_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
           for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _fr_derivative(c):
    return [i * c[i] for i in range(1, len(c))]


def _fr_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = a[:]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b) and a:
        f = a[-1] * inv
        k = len(a) - len(b)
        q[k] = f
        for i in range(len(b)):
            a[k + i] -= f * b[i]
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _fr_div_exact(a, b):
    q, r = _fr_divmod(a, b)
    if r:
        raise AssertionError("expected exact polynomial division")
    return q


def _fr_monic(c):
    if not c:
        return c
    inv = 1 / c[-1]
    return [v * inv for v in c]


def _fr_gcd(a, b):
    a, b = a[:], b[:]
    while b:
        _, r = _fr_divmod(a, b)
        a, b = b, r
    return _fr_monic(a)


def _fr_to_primitive_intpoly(c):
    """Scale a rational polynomial to a primitive integer one, positive lead."""
    from math import gcd, lcm

    den = lcm(*(v.denominator for v in c)) if c else 1
    ints = [int(v * den) for v in c]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g:
        ints = [v // g for v in ints]
    if ints and ints[-1] < 0:
        ints = [-v for v in ints]
    return IntPoly(ints)


def _fr_eval(c, x):
    acc = Fraction(0)
    for v in reversed(c):
        acc = acc * x + v
    return acc


def _sturm_chain(c):
    chain = [c[:], _fr_derivative(c)]
    while chain[-1]:
        _, r = _fr_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-v for v in r])
    return [s for s in chain if s]


def _sign_variations(chain, x):
    signs = []
    for s in chain:
        v = _fr_eval(s, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _squarefree_real_roots(poly, tol):
    c = _fr(poly.coeffs)
    if _fr_degree(c) < 1:
        return []
    if _fr_degree(c) == 1:
        r = -c[0] / c[1]
        return [float(r)]
    chain = _sturm_chain(c)
    lead = abs(c[-1])
    bound = 2 + sum(abs(v) for v in c[:-1]) / lead
    tol_fr = Fraction(tol).limit_denominator(10 ** 18)

    def count(a, b):
        # number of roots in the half-open interval (a, b]
        return _sign_variations(chain, a) - _sign_variations(chain, b)

    roots = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1:
            roots.append(_bisect_root(c, a, b, tol_fr))
            continue
        mid = (a + b) / 2
        if _fr_eval(c, mid) == 0:
            roots.append(float(mid))
            # shrink around the midpoint so the halves have clean endpoints
            delta = (b - a) / 4
            while (_fr_eval(c, mid - delta) == 0 or _fr_eval(c, mid + delta) == 0
                   or count(mid - delta, mid + delta) != 1):
                delta /= 2
            stack.append((a, mid - delta))
            stack.append((mid + delta, b))
        else:
            stack.append((a, mid))
            stack.append((mid, b))
    return roots


def _bisect_root(c, a, b, tol_fr):
    # interval (a, b] holds exactly one simple root; endpoints are not roots
    fa = _fr_eval(c, a)
    fb = _fr_eval(c, b)
    if fb == 0:
        return float(b)
    assert (fa > 0) != (fb > 0), "bracketing interval must change sign"
    while b - a > tol_fr:
        mid = (a + b) / 2
        fm = _fr_eval(c, mid)
        if fm == 0:
            return float(mid)
        if (fm > 0) == (fa > 0):
            a, fa = mid, fm
        else:
            b = mid
    return float((a + b) / 2)
