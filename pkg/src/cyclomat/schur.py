"""The coset-sum algebra inside the integral group ring, and the matrix
identity layer it induces on shifted cyclotomic matrices.

For each class i, the coset sum alpha_i is the indicator sum of g^i K inside
Z[(F_q, +)].  Products of coset sums decompose over the class basis with the
cyclotomic numbers as structure constants; representing right multiplication
on the basis {1, alpha_0, ..., alpha_{ell-1}} turns each alpha_v into an
(ell+1) x (ell+1) integer matrix whose lower-right block is the shifted
matrix A_v.  Every verifier in this module checks one of the resulting exact
identities; on a valid context they are theorems, so a failure indicates a
broken build, and the verifiers report it in a ledger instead of raising.

Convention: the indicator delta(a, b) below is 1 when a = b (mod ell) and 0
otherwise, and scale factors of k are always written explicitly.  The
convolution oracle in verify_structure_constants confirms this normalization
against direct group-ring arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as iter_product

import numpy as np

from .cyclotomy import shifted_matrix, verify_elementary_laws
from .errors import ContextTooLarge, EllTooSmall, KEven
from .intmat import IntMatrix
from .report import VerifySuiteResult

MAX_CONVOLUTION_Q = 10 ** 5
EXHAUSTIVE_QUADRUPLE_LIMIT = 12
DEFAULT_SAMPLE_COUNT = 10 ** 4


class GroupRingElem:
    """Finitely supported integer combination of additive-group elements,
    keyed by canonical index."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=None):
        self.field = field
        self.coeffs = {int(k): int(v) for k, v in (coeffs or {}).items()
                       if int(v) != 0}

    def coefficient(self, idx):
        return self.coeffs.get(int(idx), 0)

    @property
    def support_size(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, GroupRingElem)
                and self.field is other.field and self.coeffs == other.coeffs)

    __hash__ = None

    def __add__(self, other):
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out.get(idx, 0) + c
        return GroupRingElem(self.field, out)

    def __mul__(self, other):
        """Convolution over the additive group of the field."""
        if isinstance(other, int):
            return GroupRingElem(self.field,
                                 {i: c * other for i, c in self.coeffs.items()})
        add = self.field.add_idx
        out = {}
        for x, cx in self.coeffs.items():
            for y, cy in other.coeffs.items():
                z = add(x, y)
                out[z] = out.get(z, 0) + cx * cy
        return GroupRingElem(self.field, out)

    __rmul__ = __mul__

    def __repr__(self):
        return "GroupRingElem(support=%d)" % len(self.coeffs)


def class_sum(ctx, i):
    """alpha_i: the indicator sum of the coset g^i K, with k terms."""
    idxs = ctx.field.coset_indices(i, ctx.ell)
    return GroupRingElem(ctx.field, {int(v): 1 for v in idxs})


@dataclass
class RegularRep:
    """Right-multiplication matrix of alpha_v on {1, alpha_0, ..., alpha_{ell-1}}."""

    v: int
    matrix: IntMatrix


def regular_rep(ctx, v):
    ell, k, qp = ctx.ell, ctx.k, ctx.qprime
    v %= ell
    block = shifted_matrix(ctx, v)
    rows = [[0] * (ell + 1) for _ in range(ell + 1)]
    rows[0][1 + v] = 1
    rows[1 + (v + qp) % ell][0] = k
    for i in range(ell):
        rows[1 + i][1:] = block.rows[i]
    return RegularRep(v=v, matrix=IntMatrix(rows))


def _delta(ell, a, b):
    return 1 if (a - b) % ell == 0 else 0


def _combo(mats, coeffs):
    """Integer combination sum_w coeffs[w] * mats[w] as plain row lists."""
    d = mats[0].dim
    acc = [[0] * d for _ in range(d)]
    for c, m in zip(coeffs, mats):
        if c:
            for ai, mi in zip(acc, m.rows):
                for j in range(d):
                    ai[j] += c * mi[j]
    return acc


# ----------------------------------------------------------------------
# group-ring level
# ----------------------------------------------------------------------

def _class_convolution_counts(ctx, i, v):
    """counts[z] = #{(x, y) in g^i K x g^v K : x + y = z}, as an int64 array."""
    field = ctx.field
    q, ell = field.q, ctx.ell
    if field.n == 1:
        p = field.p
        xs = field.pows[i % ell::ell]
        ys = field.pows[v % ell::ell]
        counts = np.zeros(q, dtype=np.int64)
        chunk = max(1, (1 << 22) // max(1, int(ys.size)))
        for s in range(0, int(xs.size), chunk):
            blk = (xs[s:s + chunk, None] + ys[None, :]) % p
            counts += np.bincount(blk.ravel(), minlength=q)
        return counts
    add = field.add_idx
    counts = np.zeros(q, dtype=np.int64)
    xs = [int(t) for t in field.coset_indices(i, ell)]
    ys = [int(t) for t in field.coset_indices(v, ell)]
    for x in xs:
        for y in ys:
            counts[add(x, y)] += 1
    return counts


def verify_structure_constants(ctx):
    """Multiply every pair of class sums by direct convolution in the group
    ring and confirm the decomposition over {1, alpha_0, ..., alpha_{ell-1}}:
    the identity coefficient is k exactly when i = v + q' (mod ell), else 0,
    and the alpha_j coefficient is the table entry (i-v, j-v)."""
    if ctx.q > MAX_CONVOLUTION_Q:
        raise ContextTooLarge("group-ring convolution guarded at q <= %d"
                              % MAX_CONVOLUTION_Q)
    ell, k, qp = ctx.ell, ctx.k, ctx.qprime
    cls = ctx.field.dlog % ell
    tab = np.array(ctx.table, dtype=np.int64)
    res = VerifySuiteResult()
    fail = None
    for i in range(ell):
        for v in range(ell):
            counts = _class_convolution_counts(ctx, i, v)
            want_identity = k if (i - v - qp) % ell == 0 else 0
            expected = tab[(i - v) % ell][(cls[1:] - v) % ell]
            if int(counts[0]) != want_identity or not np.array_equal(
                    counts[1:], expected):
                fail = {"i": i, "v": v,
                        "identity_coefficient": int(counts[0]),
                        "expected_identity_coefficient": want_identity}
                break
        if fail:
            break
    res.add("structure_constants", fail is None,
            params={"pairs": ell * ell}, detail=fail)
    return res


def verify_regular_representation(ctx):
    """The (ell+1)-dimensional representation is multiplicative:
    [alpha_u][alpha_v] = k*delta(u, v+q')*I + sum_w (u-v, w-v) [alpha_w]."""
    ell, k, qp = ctx.ell, ctx.k, ctx.qprime
    t = ctx.table
    reps = [regular_rep(ctx, v).matrix for v in range(ell)]
    ident = IntMatrix.identity(ell + 1)
    res = VerifySuiteResult()
    fail = None
    for u in range(ell):
        for v in range(ell):
            coeffs = [t[(u - v) % ell][(w - v) % ell] for w in range(ell)]
            rhs = IntMatrix(_combo(reps, coeffs))
            if _delta(ell, u, v + qp):
                rhs = rhs + k * ident
            if reps[u] * reps[v] != rhs:
                fail = {"u": u, "v": v}
                break
        if fail:
            break
    res.add("regular_representation_product", fail is None,
            params={"pairs": ell * ell}, detail=fail)
    return res


# ----------------------------------------------------------------------
# matrix level
# ----------------------------------------------------------------------

def verify_matrix_product_law(ctx):
    """A_u A_v = k(delta(u, v+q') I - E_{u+q', v}) + sum_w (u-v, w-v) A_w."""
    ell, k, qp = ctx.ell, ctx.k, ctx.qprime
    t = ctx.table
    shifts = [shifted_matrix(ctx, v) for v in range(ell)]
    ident = IntMatrix.identity(ell)
    res = VerifySuiteResult()
    fail = None
    for u in range(ell):
        for v in range(ell):
            coeffs = [t[(u - v) % ell][(w - v) % ell] for w in range(ell)]
            rhs = IntMatrix(_combo(shifts, coeffs))
            rhs = rhs - k * IntMatrix.elementary(ell, (u + qp) % ell, v)
            if _delta(ell, u, v + qp):
                rhs = rhs + k * ident
            if shifts[u] * shifts[v] != rhs:
                fail = {"u": u, "v": v,
                        "residual": shifts[u] * shifts[v] - rhs}
                break
        if fail:
            break
    res.add("shifted_product_law", fail is None,
            params={"pairs": ell * ell}, detail=fail)
    return res


def verify_transposed_product_law(ctx):
    """A_u^T A_v = k(delta(u, v) I - E_{u, v}) + sum_w (u-v+q', w-v) A_w,
    the law that encodes column inner products."""
    ell, k, qp = ctx.ell, ctx.k, ctx.qprime
    t = ctx.table
    shifts = [shifted_matrix(ctx, v) for v in range(ell)]
    ident = IntMatrix.identity(ell)
    res = VerifySuiteResult()
    fail = None
    for u in range(ell):
        for v in range(ell):
            coeffs = [t[(u - v + qp) % ell][(w - v) % ell] for w in range(ell)]
            rhs = IntMatrix(_combo(shifts, coeffs))
            rhs = rhs - k * IntMatrix.elementary(ell, u, v)
            if _delta(ell, u, v):
                rhs = rhs + k * ident
            if shifts[u].transpose() * shifts[v] != rhs:
                fail = {"u": u, "v": v}
                break
        if fail:
            break
    res.add("transposed_product_law", fail is None,
            params={"pairs": ell * ell}, detail=fail)
    return res


def verify_commutator(ctx):
    """A_u A_v - A_v A_u = k(E_{v+q', u} - E_{u+q', v}); in particular the
    cyclotomic matrix is normal up to a two-entry correction."""
    ell, k, qp = ctx.ell, ctx.k, ctx.qprime
    shifts = [shifted_matrix(ctx, v) for v in range(ell)]
    res = VerifySuiteResult()
    fail = None
    for u in range(ell):
        for v in range(ell):
            lhs = shifts[u] * shifts[v] - shifts[v] * shifts[u]
            rhs = k * (IntMatrix.elementary(ell, (v + qp) % ell, u)
                       - IntMatrix.elementary(ell, (u + qp) % ell, v))
            if lhs != rhs:
                fail = {"u": u, "v": v}
                break
        if fail:
            break
    res.add("commutator_law", fail is None,
            params={"pairs": ell * ell}, detail=fail)

    a = shifts[0]
    lhs = a.transpose() * a - a * a.transpose()
    rhs = k * (IntMatrix.elementary(ell, qp, qp)
               - IntMatrix.elementary(ell, 0, 0))
    res.add("near_normality", lhs == rhs, detail=None if lhs == rhs else
            {"residual": lhs - rhs})
    return res


def _trace_of_product(x, y):
    return sum(sum(a * b for a, b in zip(rx, cy))
               for rx, cy in zip(x.rows, y.transpose().rows))


def verify_traces(ctx):
    """Trace identities: tr(A_w) = k-1; tr(A_u A_v) = (q-2k) delta(u-v, q')
    + k(k-1); the parity split of tr(A^2); and tr(A^3) = (0, q')(q-3k)
    + k^2 (k-1)."""
    ell, k, qp, q = ctx.ell, ctx.k, ctx.qprime, ctx.q
    shifts = [shifted_matrix(ctx, v) for v in range(ell)]
    res = VerifySuiteResult()

    bad = next((w for w in range(ell) if shifts[w].trace() != k - 1), None)
    res.add("trace_of_shifts", bad is None,
            detail=None if bad is None else {"w": bad})

    fail = None
    for u in range(ell):
        for v in range(ell):
            want = (q - 2 * k) * _delta(ell, u - v, qp) + k * (k - 1)
            if _trace_of_product(shifts[u], shifts[v]) != want:
                fail = {"u": u, "v": v, "expected": want}
                break
        if fail:
            break
    res.add("trace_of_products", fail is None,
            params={"pairs": ell * ell}, detail=fail)

    a = shifts[0]
    tr2 = _trace_of_product(a, a)
    want2 = k * (k - 1) + (q - 2 * k if k % 2 == 0 else 0)
    res.add("trace_of_square", tr2 == want2,
            detail={"computed": tr2, "expected": want2})

    tr3 = _trace_of_product(a * a, a)
    want3 = ctx.num(0, qp) * (q - 3 * k) + k * k * (k - 1)
    res.add("trace_of_cube", tr3 == want3,
            detail={"computed": tr3, "expected": want3})
    return res


def verify_sum_of_squares(ctx):
    """sum over the whole table of (i,j)^2 equals q + k(k-3), equivalently
    tr(A^T A)."""
    total = sum(v * v for row in ctx.table for v in row)
    want = ctx.q + ctx.k * (ctx.k - 3)
    a = IntMatrix(ctx.table)
    gram_trace = _trace_of_product(a.transpose(), a)
    ok = total == want == gram_trace
    res = VerifySuiteResult()
    res.add("sum_of_squares", ok,
            detail={"computed": total, "expected": want})
    return res


def verify_inner_product_identity(ctx, quadruples=None, exhaustive=None,
                                  seed=0, samples=DEFAULT_SAMPLE_COUNT):
    """The four-index identity tying together products of pairs of
    cyclotomic numbers:

        sum_w (w-u, i-u)(w-v, j-v)
          = k(delta(i,j) delta(u,v) - delta(i,u) delta(j,v))
            + sum_w (w-v, u-v)(w-j, i-j).

    Exhaustive over all ell^4 quadruples for ell <= 12 by default; sampled
    with a seeded generator beyond that.
    """
    ell, k = ctx.ell, ctx.k
    t = ctx.table
    if quadruples is None:
        if exhaustive is None:
            exhaustive = ell <= EXHAUSTIVE_QUADRUPLE_LIMIT
        if exhaustive:
            quadruples = iter_product(range(ell), repeat=4)
            mode = "exhaustive"
        else:
            rng = random.Random(seed)
            quadruples = [tuple(rng.randrange(ell) for _ in range(4))
                          for _ in range(samples)]
            mode = "sampled"
    else:
        mode = "explicit"
    res = VerifySuiteResult()
    fail = None
    count = 0
    for (i, j, u, v) in quadruples:
        count += 1
        lhs = sum(t[(w - u) % ell][(i - u) % ell]
                  * t[(w - v) % ell][(j - v) % ell] for w in range(ell))
        rhs = k * (_delta(ell, i, j) * _delta(ell, u, v)
                   - _delta(ell, i, u) * _delta(ell, j, v)) \
            + sum(t[(w - v) % ell][(u - v) % ell]
                  * t[(w - j) % ell][(i - j) % ell] for w in range(ell))
        if lhs != rhs:
            fail = {"i": i, "j": j, "u": u, "v": v,
                    "lhs": lhs, "rhs": rhs}
            break
    res.add("inner_product_identity", fail is None,
            params={"mode": mode, "quadruples": count, "seed": seed},
            detail=fail)
    return res


def verify_column_products(ctx):
    """Column inner products of A reduce to first-column data:

      sum_w (w,i)^2 = k + sum_w (w,0)(w-i,0)          for 1 <= i < ell;
      sum_w (w,i)(w,j) = sum_w (w,0)(w-j,i-j)         for i != j;

    and for odd k the half-shift relations

      sum_w (w,q')^2 = k + sum_w (w,0)^2;
      sum_w (w,i)(w,j) = sum_w (w,i+q')(w,j+q')       outside (0,0),(q',q').
    """
    ell, k, qp = ctx.ell, ctx.k, ctx.qprime
    t = ctx.table

    def colprod(i, j):
        return sum(t[w][i % ell] * t[w][j % ell] for w in range(ell))

    res = VerifySuiteResult()

    bad = next((i for i in range(1, ell)
                if colprod(i, i) != k + sum(t[w][0] * t[(w - i) % ell][0]
                                            for w in range(ell))), None)
    res.add("column_square_sums", bad is None,
            detail=None if bad is None else {"i": bad})

    fail = None
    for i in range(ell):
        for j in range(ell):
            if i == j:
                continue
            want = sum(t[w][0] * t[(w - j) % ell][(i - j) % ell]
                       for w in range(ell))
            if colprod(i, j) != want:
                fail = {"i": i, "j": j}
                break
        if fail:
            break
    res.add("distinct_column_products", fail is None, detail=fail)

    if k % 2 == 1:
        ok = colprod(qp, qp) == k + colprod(0, 0)
        res.add("half_shift_square_sum", ok,
                detail={"computed": colprod(qp, qp),
                        "expected": k + colprod(0, 0)})
        fail = None
        for i in range(ell):
            for j in range(ell):
                if (i, j) in ((0, 0), (qp, qp)):
                    continue
                if colprod(i, j) != colprod((i + qp) % ell, (j + qp) % ell):
                    fail = {"i": i, "j": j}
                    break
            if fail:
                break
        res.add("half_shift_pair_products", fail is None, detail=fail)
    else:
        res.add("half_shift_square_sum", True, skipped=True,
                detail={"note": "k even"})
        res.add("half_shift_pair_products", True, skipped=True,
                detail={"note": "k even"})
    return res


def column_permutation_survey(ctx):
    """For each j in [1, q'), report whether column j of A is a multiset
    permutation of column j + q'.  Experimental output only: no identity is
    asserted beyond what verify_column_products already covers."""
    if ctx.k % 2 == 0:
        raise KEven("survey is defined for odd k only")
    if ctx.ell < 4:
        raise EllTooSmall("survey needs ell >= 4")
    ell, qp = ctx.ell, ctx.qprime
    t = ctx.table
    out = []
    for j in range(1, qp):
        col = sorted(t[w][j] for w in range(ell))
        shifted = sorted(t[w][(j + qp) % ell] for w in range(ell))
        out.append({"j": j, "equal": col == shifted})
    return out


def run_identity_suite(ctx, seed=0, include_convolution=True):
    """Every identity verifier on one context, merged into a single ledger."""
    res = VerifySuiteResult()
    res.merge(verify_elementary_laws(ctx))
    if include_convolution and ctx.q <= MAX_CONVOLUTION_Q:
        res.merge(verify_structure_constants(ctx))
    else:
        res.add("structure_constants", True, skipped=True,
                detail={"note": "group-ring convolution skipped at q=%d"
                        % ctx.q})
    res.merge(verify_regular_representation(ctx))
    res.merge(verify_matrix_product_law(ctx))
    res.merge(verify_transposed_product_law(ctx))
    res.merge(verify_commutator(ctx))
    res.merge(verify_traces(ctx))
    res.merge(verify_sum_of_squares(ctx))
    res.merge(verify_inner_product_identity(ctx, seed=seed))
    res.merge(verify_column_products(ctx))
    return res
