import math

import pytest

from cyclomat import (
    ContextTooLarge,
    CycloCtx,
    EllOne,
    IntMatrix,
    IntPoly,
    NotADifferenceSet,
    RangeTooLarge,
    as_odd_prime_power,
    build_field,
    build_matrices,
    build_report,
    check_schoenberg_condition,
    is_diffset_bruteforce,
    is_diffset_gram,
    is_diffset_lehmer,
    is_diffset_sumsq,
    modified_diffset,
    search,
    verify_congruences,
    verify_determinants,
    verify_gram_identities,
    verify_spectral,
)

import reference_data as ref

DETECTORS = (lambda c: is_diffset_bruteforce(c)[0], is_diffset_lehmer,
             is_diffset_sumsq, is_diffset_gram)


def test_bruteforce_detector(cyclo):
    assert is_diffset_bruteforce(cyclo(7, 1, 2)) == (True, 1)
    assert is_diffset_bruteforce(cyclo(13, 1, 2)) == (False, None)
    assert is_diffset_bruteforce(cyclo(37, 1, 4)) == (True, 2)
    assert is_diffset_bruteforce(cyclo(31, 1, 2)) == (True, 7)


def test_trivial_subgroup_is_not_a_difference_set(cyclo):
    # k = 1 means K = {1}: every count is zero, no positive lambda exists
    for (p, n, ell) in ((3, 1, 2), (5, 1, 4), (7, 1, 6), (11, 1, 10)):
        ctx = cyclo(p, n, ell)
        assert ctx.k == 1
        assert is_diffset_bruteforce(ctx) == (False, None)
        assert not is_diffset_lehmer(ctx)
        assert not is_diffset_sumsq(ctx)
        assert not is_diffset_gram(ctx)


def test_bruteforce_literal_agrees(cyclo):
    for (p, n, ell) in ref.SMALL_CONTEXTS:
        ctx = cyclo(p, n, ell)
        assert is_diffset_bruteforce(ctx, literal=True) == \
            is_diffset_bruteforce(ctx)


def test_bruteforce_guards(cyclo):
    with pytest.raises(EllOne):
        is_diffset_bruteforce(cyclo(7, 1, 1))
    big = CycloCtx(build_field(4999), 2)
    with pytest.raises(ContextTooLarge):
        is_diffset_bruteforce(big, literal=True)


def test_lehmer_detector(cyclo):
    assert is_diffset_lehmer(cyclo(73, 1, 8))
    assert not is_diffset_lehmer(cyclo(131, 1, 10))
    assert [ctx.table[i][0] for ctx in [cyclo(131, 1, 10)]
            for i in range(10)] == [2, 1, 1, 2, 0, 2, 1, 1, 2, 0]


def test_sumsq_detector(cyclo):
    assert is_diffset_sumsq(cyclo(73, 1, 8))
    assert is_diffset_sumsq(cyclo(7, 1, 2))
    ctx131 = cyclo(131, 1, 10)
    assert not is_diffset_sumsq(ctx131)
    # strict lower bound when not a difference set: 10 * 20 > 12^2
    colsq0 = sum(ctx131.table[i][0] ** 2 for i in range(10))
    assert colsq0 == 20 and 10 * colsq0 > 144


def test_gram_detector(cyclo):
    assert is_diffset_gram(cyclo(73, 1, 8))
    assert not is_diffset_gram(cyclo(131, 1, 10))
    gram = IntMatrix(ref.GRAM_131_L10)
    assert gram.diagonal() == [20, 23, 29, 29, 23, 33, 23, 29, 29, 23]
    # k even: shape (a, b, ..., b) alone is not enough
    ctx9 = cyclo(3, 2, 4)
    a9 = IntMatrix(ctx9.table)
    assert (a9.transpose() * a9).diagonal() == [1, 2, 2, 2]
    assert not is_diffset_gram(ctx9)


def test_detector_agreement_on_fixtures(cyclo):
    for (p, n, ell) in ref.BATTERY_CONTEXTS:
        if ell < 2:
            continue
        ctx = cyclo(p, n, ell)
        verdicts = {d(ctx) for d in DETECTORS}
        assert len(verdicts) == 1, (p, n, ell)


def test_generator_independence():
    for (p, ell) in ((73, 8), (31, 2), (37, 4)):
        base = build_field(p)
        gens = [g for g in range(2, p)
                if base._has_full_order(g)][:3]
        outcomes = set()
        for g in gens:
            ctx = CycloCtx(build_field(p, generator=g), ell)
            outcomes.add(is_diffset_bruteforce(ctx))
        assert len(outcomes) == 1


def test_hit_consequences(cyclo):
    for (p, ell) in ((7, 2), (31, 2), (37, 4), (73, 8), (101, 4), (197, 4)):
        ctx = cyclo(p, 1, ell)
        hit, lam = is_diffset_bruteforce(ctx)
        assert hit
        assert ctx.ell % 2 == 0 and ctx.k % 2 == 1
        assert lam * ctx.ell == ctx.k - 1
        assert ctx.qprime == ctx.ell // 2
        col0 = [ctx.table[i][0] for i in range(ctx.ell)]
        rowq = ctx.table[ctx.qprime]
        assert set(col0) == {lam} and set(rowq) == {lam}


def test_gram_identities(cyclo):
    ctx = cyclo(73, 1, 8)
    res = verify_gram_identities(ctx)
    assert res.passed
    dm = build_matrices(ctx)
    assert dm.B.transpose() * dm.B == 8 * (IntMatrix.ones(7)
                                           + IntMatrix.identity(7))
    # q = 7, ell = 2: B = [[2]] and B^T B = [[4]] = (k - lam)(lam + 1)
    dm7 = build_matrices(cyclo(7, 1, 2))
    assert dm7.B == IntMatrix([[2]])
    assert dm7.B.transpose() * dm7.B == IntMatrix([[4]])
    assert verify_gram_identities(cyclo(7, 1, 2)).passed


def test_gram_identities_quartic_case(cyclo):
    # ell = 4: the two off-values a, b satisfy ab = lam^2 and
    # lam^2 + a^2 + b^2 = (k - lam)(lam + 1)
    ctx = cyclo(37, 1, 4)
    assert verify_gram_identities(ctx).passed
    lam = 2
    row0 = ctx.table[0]
    a, b = row0[1], row0[3]
    assert a * b == lam ** 2 == 4
    assert lam ** 2 + a ** 2 + b ** 2 == (9 - lam) * (lam + 1)


def test_certificates_require_hit(cyclo):
    ctx = cyclo(131, 1, 10)
    for op in (verify_gram_identities, verify_spectral, verify_determinants,
               verify_congruences, check_schoenberg_condition):
        with pytest.raises(NotADifferenceSet):
            op(ctx)


def test_spectral_73(cyclo):
    ctx = cyclo(73, 1, 8)
    res = verify_spectral(ctx)
    assert res.passed
    dm = build_matrices(ctx)
    assert dm.S.trace() == 8
    assert dm.M.trace() == 9
    assert (dm.S * dm.S - 8 * IntMatrix.identity(7)).rank() == 1
    by_name = {c.name: c for c in res.checks}
    roots_s = by_name["minor_spectrum_numeric"].detail["roots"]
    expected_s = [(-2 * math.sqrt(2), 3), (2 * math.sqrt(2), 3), (8.0, 1)]
    for (r, m), (er, em) in zip(roots_s, expected_s):
        assert m == em and abs(r - er) < 1e-9
    roots_m = [r for r, _ in by_name["symmetrized_spectrum_numeric"]
               .detail["roots"]]
    lo, hi = (9 - math.sqrt(77)) / 2, (9 + math.sqrt(77)) / 2
    assert any(abs(r - lo) < 1e-9 for r in roots_m)
    assert any(abs(r - hi) < 1e-9 for r in roots_m)


def test_spectral_small_case(cyclo):
    # q = 7, ell = 2: M = [[1,1],[1,2]], annihilated by (x^2-3x+1)(x^2-2)
    ctx = cyclo(7, 1, 2)
    dm = build_matrices(ctx)
    assert dm.M == IntMatrix([[1, 1], [1, 2]])
    ann = IntPoly([1, -3, 1]) * IntPoly([-2, 0, 1])
    assert ann.at_matrix(dm.M).is_zero()
    assert verify_spectral(ctx).passed


def test_determinants(cyclo):
    res = verify_determinants(cyclo(73, 1, 8))
    assert res.passed
    vals = {c.name: c.detail for c in res.checks}
    assert vals["cyclotomic_determinant"] == {"predicted": -512,
                                              "computed": -512}
    assert vals["minor_determinant"] == {"predicted": -4096,
                                         "computed": -4096}
    res37 = verify_determinants(cyclo(37, 1, 4))
    assert res37.passed
    assert build_matrices(cyclo(37, 1, 4)).A.det() == -14
    assert build_matrices(cyclo(7, 1, 2)).A.det() == -1
    assert build_matrices(cyclo(31, 1, 2)).A.det() == -7
    assert verify_determinants(cyclo(31, 1, 2)).passed


def test_congruences(cyclo):
    res73 = verify_congruences(cyclo(73, 1, 8))
    assert res73.passed
    names73 = {c.name: c for c in res73.checks}
    assert not names73["odd_lambda_mod_four"].skipped
    assert not names73["unit_lambda_row_values"].skipped
    res7 = verify_congruences(cyclo(7, 1, 2))
    assert res7.passed
    res31 = verify_congruences(cyclo(31, 1, 2))
    assert res31.passed
    names31 = {c.name: c for c in res31.checks}
    assert not names31["odd_lambda_residues"].skipped  # lambda = 7 odd
    assert not names31["parity_vs_q_mod_8"].skipped


def test_schoenberg(cyclo):
    res73 = check_schoenberg_condition(cyclo(73, 1, 8))
    assert res73.passed
    by = {c.name: c for c in res73.checks}
    assert not by["schoenberg_square_case"].skipped  # 73 - 9 = 64
    res7 = check_schoenberg_condition(cyclo(7, 1, 2))
    assert res7.passed  # 7 - 3 = 4 and 2 = 1 + 1
    res37 = check_schoenberg_condition(cyclo(37, 1, 4))
    assert res37.passed
    by37 = {c.name: c for c in res37.checks}
    assert by37["schoenberg_square_case"].skipped  # 28 is not a square
    res31 = check_schoenberg_condition(cyclo(31, 1, 2))
    by31 = {c.name: c for c in res31.checks}
    assert not by31["geometric_lambda_clause"].skipped  # 7 = 1 + 2 + 4
    assert res31.passed


def test_modified_diffset(cyclo):
    rep7 = modified_diffset(cyclo(7, 1, 2))
    assert rep7.is_difference_set and rep7.lam0 == 2
    assert rep7.certificates.passed
    rep13 = modified_diffset(cyclo(13, 1, 2))
    assert not rep13.is_difference_set and rep13.lam0 is None
    rep11 = modified_diffset(cyclo(11, 1, 2))
    assert rep11.is_difference_set and rep11.lam0 == 3
    assert rep11.certificates.passed
    with pytest.raises(EllOne):
        modified_diffset(cyclo(7, 1, 1))


def test_modified_matches_residue_rule(cyclo):
    # ell = 2: K ∪ {0} is a difference set exactly when q = 3 (mod 4)
    for q in (3, 7, 11, 13, 17, 19, 23, 27, 29, 31):
        pn = as_odd_prime_power(q)
        ctx = CycloCtx(build_field(pn[0], pn[1]), 2)
        assert modified_diffset(ctx).is_difference_set == (q % 4 == 3)


def test_modified_agreement_on_fixtures(cyclo):
    for (p, n, ell) in ref.SMALL_CONTEXTS:
        if ell < 2:
            continue
        rep = modified_diffset(cyclo(p, n, ell))
        assert rep.verdicts["bruteforce"] == rep.verdicts["lehmer_modified"]


def test_report_structure(cyclo):
    rep = build_report(cyclo(73, 1, 8))
    assert rep.is_difference_set and rep.lam == 1
    assert rep.certificates_pass
    assert rep.q_is_prime and rep.k_is_square
    obj = rep.to_obj()
    assert obj["verdicts"] == {"bruteforce": True, "lehmer": True,
                               "sumsq": True, "gram": True}
    assert obj["determinants"]["cyclotomic_determinant"]["computed"] == -512
    assert obj["congruences_pass"] is True
    assert obj["schoenberg_pass"] is True
    rep131 = build_report(cyclo(131, 1, 10))
    assert not rep131.is_difference_set
    assert rep131.lam is None
    assert rep131.to_obj()["certificates"] == []
    assert rep131.to_obj()["congruences_pass"] is None


def test_search_quadratic_residues():
    # primes = 3 (mod 4); q = 3 itself is the trivial K = {1} and is excluded
    hits = search(2, 50)
    assert [r.q for r in hits] == [7, 11, 19, 23, 27, 31, 43, 47]
    prime_hits = search(2, 50, prime_only=True)
    assert [r.q for r in prime_hits] == [7, 11, 19, 23, 31, 43, 47]
    assert all(r.q % 4 == 3 for r in hits)
    assert all(r.certificates_pass for r in hits)


def test_search_quartic_and_octic():
    assert [r.q for r in search(4, 200)] == [37, 101, 197]
    assert [r.q for r in search(8, 100)] == [73]


def test_search_records_problem_data():
    hits = search(4, 200)
    assert all(r.q_is_prime for r in hits)
    assert all(r.k_is_square for r in hits)  # k = 9, 25, 49


def test_search_guards():
    with pytest.raises(EllOne):
        search(1, 50)
    with pytest.raises(RangeTooLarge):
        search(2, 10 ** 8)


def test_search_parallel_merge():
    try:
        hits = search(2, 50, jobs=2)
    except (OSError, PermissionError):
        pytest.skip("process pool unavailable in sandbox")
    assert [r.q for r in hits] == [7, 11, 19, 23, 27, 31, 43, 47]


def test_large_quadratic_residue_parameters():
    # (q, k, lambda) = (127, 63, 31) and (8191, 4095, 2047) at ell = 2
    for q, lam in ((127, 31), (8191, 2047)):
        ctx = CycloCtx(build_field(q), 2)
        rep = build_report(ctx)
        assert rep.is_difference_set and rep.lam == lam
        assert rep.certificates_pass
        assert build_matrices(ctx).A.det() == -lam
    # lambda = 31 = 1 + 2 + 4 + 8 + 16 is a geometric sum of even length
    res = check_schoenberg_condition(CycloCtx(build_field(127), 2))
    by = {c.name: c for c in res.checks}
    assert not by["geometric_lambda_clause"].skipped
    assert res.passed


def test_as_odd_prime_power():
    assert as_odd_prime_power(27) == (3, 3)
    assert as_odd_prime_power(343) == (7, 3)
    assert as_odd_prime_power(121) == (11, 2)
    assert as_odd_prime_power(15) is None
    assert as_odd_prime_power(16) is None
    assert as_odd_prime_power(13) == (13, 1)
