from fractions import Fraction

import pytest

from cyclodet.cyclotomic import shared_context
from cyclodet.identities import (
    IDENTITIES,
    EigenpairClaim,
    MatrixKind,
    a_det_value,
    b_det_value,
    build_matrix,
    c1_det_value,
    c_det_value,
    claimed_spectrum,
    eigen_claims,
    inv_one_plus_zeta,
    run_identity,
    s19_det_value,
    tilde_a_det_value,
    value_str,
    verify_a_det,
    verify_b_det,
    verify_c1_det,
    verify_c1_spectrum,
    verify_c_det,
    verify_eei,
    verify_eigenpairs,
    verify_galois_invariance,
    verify_partial_fraction,
    verify_root_sums,
    verify_row_sum_x,
    verify_row_sums,
    verify_s19_det,
    verify_tilde_a_det,
    verify_two_c_spectrum,
)


def test_build_ratio_matrix_entries():
    # rows carry formula(row - col): [[0, -(1+z)/(1-z)], [(1+z)/(1-z), 0]]
    ctx = shared_context(3)
    one, z = ctx.one(), ctx.zeta()
    ratio = (one + z) * (one - z).inverse()
    m = build_matrix(MatrixKind.A, ctx, 2)
    assert m[0, 0] == 0 and m[1, 1] == 0
    assert m[1, 0] == ratio
    assert m[0, 1] == -ratio
    # the same entry via the defining formula at zeta^2
    assert m[0, 1] == (one + ctx.zeta_pow(2)) * (one - ctx.zeta_pow(2)).inverse()


def test_build_diagonals():
    ctx = shared_context(5)
    assert all(build_matrix(MatrixKind.B, ctx, 5)[j, j] == 1 for j in range(5))
    assert all(build_matrix(MatrixKind.TILDE_A, ctx, 4)[j, j] == Fraction(1, 2)
               for j in range(4))
    assert all(build_matrix(MatrixKind.C_PLUS_I, ctx, 5)[j, j] == 1 for j in range(5))
    assert all(build_matrix(MatrixKind.S19, ctx, 4)[j, j] == 0 for j in range(4))


def test_build_two_c_doubles_hollow():
    ctx = shared_context(7)
    c = build_matrix(MatrixKind.C_HOLLOW, ctx, 7)
    two_c = build_matrix(MatrixKind.TWO_C, ctx, 7)
    assert all(two_c[j, k] == c[j, k] * 2 for j in range(7) for k in range(7))


def test_build_rejects_bad_size():
    ctx = shared_context(5)
    with pytest.raises(ValueError):
        build_matrix(MatrixKind.A, ctx, 3)


def test_inverted_ratio_kind_undefined_for_even_n():
    ctx = shared_context(4)
    with pytest.raises(ZeroDivisionError):
        build_matrix(MatrixKind.S19, ctx, 4)


def test_inv_one_plus_zeta():
    for n in (3, 5, 7, 8):
        ctx = shared_context(n)
        one = ctx.one()
        for u in range(1, n):
            if (2 * u) % n == 0:
                continue
            assert inv_one_plus_zeta(ctx, u) * (one + ctx.zeta_pow(u)) == one


@pytest.mark.parametrize("kind", list(MatrixKind))
def test_all_builders_hermitian(kind):
    for n in (3, 5, 7):
        ctx = shared_context(n)
        assert build_matrix(kind, ctx, n).is_hermitian()
    if kind is not MatrixKind.S19:
        ctx = shared_context(6)
        assert build_matrix(kind, ctx, 6).is_hermitian()


def test_closed_form_values():
    assert a_det_value(3) == Fraction(-1, 3)
    assert a_det_value(5) == Fraction(9, 5)
    assert a_det_value(7) == Fraction(-225, 7)
    assert tilde_a_det_value(3) == Fraction(-1, 12)
    assert tilde_a_det_value(5) == Fraction(9, 80)
    assert c_det_value(3) == Fraction(-1, 3)
    assert c_det_value(5) == Fraction(4, 5)
    assert c_det_value(7) == Fraction(-36, 7)
    assert b_det_value(3) == Fraction(2, 3)
    assert c1_det_value(3) == Fraction(2, 3)
    assert s19_det_value(3) == -3
    assert s19_det_value(5) == 125
    assert s19_det_value(7) == -16807


@pytest.mark.parametrize("n,expect", [(3, "-1/3"), (5, "9/5"), (7, "-225/7")])
def test_a_det_spot_values(n, expect):
    report = verify_a_det(n)
    assert report.passed
    assert report.expected == f"(d0, d1) = ({expect}, 0)"
    assert report.identity == "a-det" and report.n == n


def test_a_det_with_oracle():
    report = verify_a_det(5, oracle=True)
    assert report.passed and report.params["oracle"] is True
    assert "derangement sum 9/5" in report.computed


def test_oracle_cutoff_above_nine():
    # the factorial-cost cross-check stays off past n = 9 unless forced
    report = verify_a_det(11, oracle=True)
    assert report.passed and report.params["oracle"] is False
    assert "derangement" not in report.computed


def test_a_det_rejects_even():
    with pytest.raises(ValueError):
        verify_a_det(4)


def test_tilde_a_spot_values():
    assert verify_tilde_a_det(3).computed == "-1/12"
    assert verify_tilde_a_det(5).computed == "9/80"
    assert verify_tilde_a_det(5).passed
    # scaling relation to the x-shifted ratio determinant at x = 1
    ctx = shared_context(7)
    shifted = build_matrix(MatrixKind.A, ctx, 6).add_scalar(1)
    assert shifted.det() == tilde_a_det_value(7) * 2 ** 6


def test_c_det_spot_values():
    assert verify_c_det(3).computed == "-1/3"
    r = verify_c_det(5, oracle=True)
    assert r.passed and "4/5" in r.computed
    assert verify_c_det(7).computed == "-36/7"


def test_b_det_spot_values():
    r3 = verify_b_det(3)
    assert r3.passed and r3.computed == "(d0, d1) = (2/3, 2)"
    # x = 1 evaluation: (n+1) * d0
    ctx = shared_context(3)
    b2 = build_matrix(MatrixKind.B, ctx, 2)
    assert b2.add_scalar(1).det() == 4 * b_det_value(3)


def test_c1_det_spot_value():
    r = verify_c1_det(3)
    assert r.passed and r.computed == "2/3"


def test_s19_spot_values():
    assert verify_s19_det(3).computed == "-3"
    assert verify_s19_det(5).computed == "125"
    assert verify_s19_det(7).computed == "-16807"
    with pytest.raises(ValueError):
        verify_s19_det(4)


def test_c1_spectrum_small():
    r = verify_c1_spectrum(3)
    assert r.passed
    assert r.computed == "x^3 - 3*x^2 + 2*x"  # x(x-1)(x-2)
    assert verify_c1_spectrum(4).passed


def test_two_c_spectrum_small():
    assert verify_two_c_spectrum(2).computed == "x^2 - 1"
    assert verify_two_c_spectrum(3).computed == "x^3 - 4*x"
    r4 = verify_two_c_spectrum(4)
    assert r4.passed  # (x+3)(x+1)(x-1)(x-3)


def test_eigen_claims_match_spectrum_multiset():
    for kind in (MatrixKind.A, MatrixKind.B, MatrixKind.C_PLUS_I):
        for n in (3, 5, 7):
            claims = sorted(c.eigenvalue for c in eigen_claims(kind, n))
            assert claims == sorted(claimed_spectrum(kind, n))


def test_eigenpair_claim_vector():
    ctx = shared_context(5)
    claim = EigenpairClaim(2, Fraction(-1))
    assert claim.vector(ctx) == [ctx.zeta_pow(-2 * k) for k in range(1, 6)]


@pytest.mark.parametrize("kind", [MatrixKind.A, MatrixKind.B, MatrixKind.C_PLUS_I])
def test_eigenpairs_pass(kind):
    for n in (3, 5):
        assert verify_eigenpairs(kind, n).passed


@pytest.mark.parametrize("kind", [MatrixKind.A, MatrixKind.B, MatrixKind.C_PLUS_I])
def test_eigenpairs_full_grid(kind):
    for n in range(3, 14, 2):
        assert verify_eigenpairs(kind, n).passed, f"n={n}"


def test_eigenpairs_c1_even_n():
    assert verify_eigenpairs(MatrixKind.C_PLUS_I, 4).passed


def test_eigenpairs_rejections():
    with pytest.raises(ValueError):
        verify_eigenpairs(MatrixKind.S19, 5)
    with pytest.raises(ValueError):
        verify_eigenpairs(MatrixKind.A, 4)


def test_eei_small():
    r = verify_eei(MatrixKind.A, 3)
    assert r.passed
    assert r.expected == "charpoly_minor(0) = -1/3 for j = 1..3"
    assert verify_eei(MatrixKind.B, 5).passed
    assert verify_eei(MatrixKind.C_PLUS_I, 5).passed
    with pytest.raises(ValueError):
        verify_eei(MatrixKind.A, 4)
    with pytest.raises(ValueError):
        verify_eei(MatrixKind.TWO_C, 5)


def test_root_sums_spot_values():
    # direct sums at n=3: minus half gives (n-1)/2 - s, plus half ((-1)^s n - 1)/2
    ctx = shared_context(3)
    from cyclodet.cyclotomic import inv_one_minus_zeta

    minus_s0 = sum((inv_one_minus_zeta(ctx, r) for r in (1, 2)), ctx.zero())
    assert minus_s0 == 1
    minus_s1 = sum((inv_one_minus_zeta(ctx, r).mul_zeta_pow(-r) for r in (1, 2)),
                   ctx.zero())
    assert minus_s1 == 0
    plus_s1 = sum((inv_one_plus_zeta(ctx, r).mul_zeta_pow(-r) for r in (1, 2)),
                  ctx.zero())
    assert plus_s1 == -2
    assert verify_root_sums(3).passed
    assert verify_root_sums(6).passed  # even n runs the minus half only
    assert verify_root_sums(6).params["checks"] == 6


def test_row_sums_spot_values():
    ctx = shared_context(5)
    a = build_matrix(MatrixKind.A, ctx, 5)
    # ratio(zeta^(j-k)) is the entry at row j, col k; weighted column sum
    # at k=1, s=2 equals n - 2s = 1
    k, s = 1, 2
    acc = ctx.zero()
    for j in range(1, 6):
        if j != k:
            acc = acc + a[j - 1, k - 1].mul_zeta_pow(s * (k - j))
    assert acc == 1
    assert verify_row_sums(3).passed
    assert verify_row_sums(4).passed


def test_polynomial_identity_verifiers():
    assert verify_partial_fraction(5).passed
    assert verify_row_sum_x(4).passed


@pytest.mark.parametrize("name,n", [("a-det", 5), ("c-det", 7), ("b-det", 3)])
def test_galois_invariance(name, n):
    report = verify_galois_invariance(name, n)
    assert report.passed
    assert report.params["automorphisms"] == n - 1  # prime n here


def test_galois_invariance_rejects_unknown():
    with pytest.raises(ValueError):
        verify_galois_invariance("s19-det", 5)


def test_registry():
    assert IDENTITIES["a-det"].default_grid == tuple(range(3, 26, 2))
    assert IDENTITIES["root-sums"].default_grid == tuple(range(2, 51))
    assert IDENTITIES["eigen-c1"].odd_only is False
    assert IDENTITIES["a-det"].supports_oracle
    report = run_identity("two-c-spectrum", 6)
    assert report.passed and report.identity == "two-c-spectrum"
    with pytest.raises(KeyError):
        run_identity("nope", 3)


def test_report_pass_iff_renderings_agree():
    report = verify_a_det(3)
    assert report.passed == (report.expected == report.computed)
    assert report.elapsed_seconds >= 0
    d = report.as_dict()
    assert set(d) == {"identity", "n", "params", "expected", "computed",
                      "passed", "elapsed_seconds"}


def test_value_str():
    ctx = shared_context(3)
    assert value_str(ctx.from_rational(Fraction(-1, 3))) == "-1/3"
    assert value_str(ctx.zeta()) == "z"
