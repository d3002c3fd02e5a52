"""Cyclotomic numbers for (F_q, ell, g) and the matrices built from them.

With K the subgroup of ell-th powers in F_q^* and g the field's generator,
the entry (i, j) counts |(1 + g^i K) ∩ g^j K|.  Indices extend to all of Z
with period ell.  The full ell x ell table is built in one O(q) pass over
the field: x + 1 only touches the constant digit of the canonical index, so
the pass vectorizes uniformly for prime and extension fields.

Derived matrices:

  A  -- the table itself, order ell;
  M  -- rows of A cycled by the half-shift q' (symmetric);
  B  -- A with row q' and column 0 deleted;
  S  -- M with row 0 and column 0 deleted (symmetric, a row permutation of B).

q' is the representative of (q-1)/2 in [0, ell): 0 for even k, ell/2 for
odd k.  It encodes -K = g^(q') K.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EllTooSmall, InvalidEll
from .field import FieldCtx
from .intmat import IntMatrix
from .report import VerifySuiteResult

_CHUNK = 1 << 20


def _build_table(field, ell):
    q, p = field.q, field.p
    cls = field.dlog % ell          # class of each nonzero index; cls[0] is junk
    counts = np.zeros(ell * ell, dtype=np.int64)
    for start in range(1, q, _CHUNK):
        x = np.arange(start, min(start + _CHUNK, q), dtype=np.int64)
        lo = x % p
        y = np.where(lo < p - 1, x + 1, x - (p - 1))
        keep = y != 0                # drops exactly x = -1
        xi = cls[x[keep]]
        yj = cls[y[keep]]
        counts += np.bincount(xi * ell + yj, minlength=ell * ell)
    return [[int(counts[i * ell + j]) for j in range(ell)] for i in range(ell)]


class CycloCtx:
    """A field together with ell, k = (q-1)/ell, q', and the full table.

    Immutable after construction; the elementary row/column/symmetry laws
    are asserted as part of the build, so a live CycloCtx is always
    internally consistent.
    """

    __slots__ = ("field", "ell", "k", "qprime", "table")

    def __init__(self, field, ell):
        if not isinstance(field, FieldCtx):
            raise TypeError("field must be a FieldCtx")
        ell = int(ell)
        if ell < 1 or (field.q - 1) % ell != 0:
            raise InvalidEll("ell=%d does not divide q-1=%d" % (ell, field.q - 1))
        self.field = field
        self.ell = ell
        self.k = (field.q - 1) // ell
        self.qprime = ((field.q - 1) // 2) % ell
        expected_qprime = 0 if self.k % 2 == 0 else ell // 2
        if self.qprime != expected_qprime:
            raise AssertionError("half-shift classification is broken")
        self.table = _build_table(field, ell)
        laws = verify_elementary_laws(self)
        if not laws.passed:
            raise AssertionError("table violates its defining laws: %s"
                                 % [c.name for c in laws.failures()])

    def num(self, i, j):
        """The cyclotomic number (i, j); any integers, reduced mod ell."""
        return self.table[i % self.ell][j % self.ell]

    @property
    def q(self):
        return self.field.q

    def __repr__(self):
        return "CycloCtx(q=%d, ell=%d, k=%d, qprime=%d)" % (
            self.q, self.ell, self.k, self.qprime)


def build_cyclo(field, ell):
    return CycloCtx(field, ell)


def cyclotomic_number(ctx, i, j):
    """|(1 + g^i K) ∩ g^j K|, looked up from the prebuilt table."""
    return ctx.num(i, j)


def table_by_set_enumeration(field, ell):
    """The full table recomputed by literal set intersection.

    Builds every coset as a Python set of canonical indices and intersects
    1 + g^i K with g^j K elementwise.  O(ell * q) and entirely independent
    of the dlog-classification pass; used as the oracle for it.
    """
    q = field.q
    if (q - 1) % ell != 0:
        raise InvalidEll("ell must divide q-1")
    cosets = [frozenset(int(v) for v in field.coset_indices(i, ell))
              for i in range(ell)]
    add = field.add_idx
    table = []
    for i in range(ell):
        shifted = {add(1, x) for x in cosets[i]}
        table.append([len(shifted & cosets[j]) for j in range(ell)])
    return table


def cyclotomic_number_by_pair_count(field, ell, i, j):
    """(i, j) recomputed by brute-force pair enumeration: the number of
    ordered pairs (a, b) in g^i K x g^j K with 1 + a = b."""
    add = field.add_idx
    ai = [int(v) for v in field.coset_indices(i, ell)]
    bj = set(int(v) for v in field.coset_indices(j, ell))
    return sum(1 for a in ai if add(1, a) in bj)


@dataclass
class DerivedMatrices:
    """The cyclotomic matrix and its shifted/minor companions."""

    A: IntMatrix
    M: IntMatrix
    B: IntMatrix
    S: IntMatrix


def build_matrices(ctx):
    """A, M = P_{q'} A, B = (q',0)-minor of A, S = (0,0)-minor of M."""
    ell, qp = ctx.ell, ctx.qprime
    if ell < 2:
        raise EllTooSmall("minor extraction needs ell >= 2")
    a = IntMatrix(ctx.table)
    m = IntMatrix([ctx.table[(i + qp) % ell] for i in range(ell)])
    b = a.minor(qp, 0)
    s = m.minor(0, 0)
    return DerivedMatrices(A=a, M=m, B=b, S=s)


def shifted_matrix(ctx, v):
    """A_v with entries (i - v, j - v); the P_v-conjugate of A."""
    ell = ctx.ell
    t = ctx.table
    return IntMatrix([[t[(i - v) % ell][(j - v) % ell] for j in range(ell)]
                      for i in range(ell)])


def verify_elementary_laws(ctx):
    """Check the defining symmetries and marginal sums of the table.

    These are theorems for every valid context; a failure means the build
    is broken, so the result is a ledger rather than an exception.
    """
    ell, k, qp = ctx.ell, ctx.k, ctx.qprime
    t = ctx.table
    res = VerifySuiteResult()

    bad = next(((i, j) for i in range(ell) for j in range(ell)
                if t[i][j] != t[(j + qp) % ell][(i + qp) % ell]), None)
    res.add("transpose_shift_symmetry", bad is None,
            detail=None if bad is None else {"i": bad[0], "j": bad[1]})

    bad = next(((i, j) for i in range(ell) for j in range(ell)
                if t[i][j] != t[(-i) % ell][(j - i) % ell]), None)
    res.add("inversion_symmetry", bad is None,
            detail=None if bad is None else {"i": bad[0], "j": bad[1]})

    bad = next((i for i in range(ell)
                if sum(t[i]) != (k - 1 if i == qp else k)), None)
    res.add("row_sums", bad is None,
            detail=None if bad is None else {"i": bad, "sum": sum(t[bad])})

    bad = next((j for j in range(ell)
                if sum(t[i][j] for i in range(ell)) != (k - 1 if j == 0 else k)),
               None)
    res.add("column_sums", bad is None,
            detail=None if bad is None else {"j": bad})

    if k % 2 == 0:
        bad = next(((i, j) for i in range(ell) for j in range(ell)
                    if t[i][j] != t[j][i]), None)
        res.add("even_k_transpose_symmetry", bad is None,
                detail=None if bad is None else {"i": bad[0], "j": bad[1]})
    else:
        res.add("even_k_transpose_symmetry", True, skipped=True,
                detail={"note": "k odd"})
    return res
