import math

import numpy as np
import pytest

from invgeo import (
    Cardinality,
    JordanKind,
    Mat2,
    RootSearchGrid,
    SQRT,
    SQUARE,
    ScalarFunction,
    brute_force_roots,
    conjugated_roots,
    count_real_roots,
    eigen2,
    jordan2,
    matrix_function,
    scaled_roots,
    sqrt_branches,
)
from invgeo.errors import (
    ComplexEigenvalues,
    FunctionUndefinedAtEigenvalue,
    NonPositiveScale,
    NotASquareRoot,
    SingularConjugator,
)

I2 = Mat2.identity()


def test_eigen2_examples():
    assert eigen2(Mat2.diag(1, 4)) == (1.0, 4.0)
    assert eigen2(I2) == (1.0, 1.0)
    assert eigen2(Mat2.diag(4, 1)) == (1.0, 4.0)  # ascending
    with pytest.raises(ComplexEigenvalues):
        eigen2(Mat2(0, 1, -1, 0))


def test_jordan2_scalar():
    dec = jordan2(I2)
    assert dec.kind is JordanKind.SCALAR_DIAG
    assert dec.eig1 == 1.0
    assert dec.z == I2


def test_jordan2_block():
    dec = jordan2(Mat2(1, 1, 0, 1))
    assert dec.kind is JordanKind.JORDAN_BLOCK
    assert dec.eig1 == 1.0
    assert dec.z == I2
    assert dec.reconstruct().max_diff(Mat2(1, 1, 0, 1)) <= 1e-12


def test_jordan2_distinct():
    m = Mat2(0, 1, -2, 3)
    dec = jordan2(m)
    assert dec.kind is JordanKind.DISTINCT_DIAG
    assert (dec.eig1, dec.eig2) == pytest.approx((1.0, 2.0))
    assert dec.reconstruct().max_diff(m) <= 1e-12


def test_jordan2_lower_triangular_block():
    m = Mat2(2, 0, 7, 2)
    dec = jordan2(m)
    assert dec.kind is JordanKind.JORDAN_BLOCK
    assert dec.reconstruct().max_diff(m) <= 1e-12


def test_jordan2_reconstruction_random():
    rng = np.random.default_rng(31)
    done = 0
    while done < 300:
        m = Mat2.from_array(rng.uniform(-4, 4, (2, 2)))
        if m.trace() ** 2 - 4 * m.det() < 1e-6:
            continue  # keep spectra clearly real and separated
        dec = jordan2(m)
        assert dec.reconstruct().max_diff(m) <= 1e-9
        done += 1


def test_matrix_function_square_on_block():
    result = matrix_function(Mat2(1, 1, 0, 1), SQUARE)
    assert result.max_diff(Mat2(1, 2, 0, 1)) <= 1e-12


def test_matrix_function_identity_map():
    ident = ScalarFunction(lambda x: x, lambda x: 1.0, name="id")
    for m in (Mat2(1, 1, 0, 1), Mat2.diag(2, 5), Mat2(0, 1, -2, 3)):
        assert matrix_function(m, ident).max_diff(m) <= 1e-12


def test_matrix_function_sqrt_principal():
    assert matrix_function(Mat2.diag(1, 4), SQRT).max_diff(Mat2.diag(1, 2)) <= 1e-12


def test_matrix_function_undefined_cases():
    with pytest.raises(FunctionUndefinedAtEigenvalue):
        matrix_function(Mat2.diag(-1, 4), SQRT)  # sqrt of a negative eigenvalue
    with pytest.raises(FunctionUndefinedAtEigenvalue):
        matrix_function(Mat2(0, 1, 0, 0), SQRT)  # sqrt' blows up at 0
    with pytest.raises(FunctionUndefinedAtEigenvalue):
        matrix_function(Mat2(1, 1, 0, 1), ScalarFunction(lambda x: x, None))


def test_sqrt_branches_distinct():
    roots = sqrt_branches(Mat2.diag(1, 4))
    assert len(roots) == 4
    expected = {(1.0, 2.0), (1.0, -2.0), (-1.0, 2.0), (-1.0, -2.0)}
    got = {(r.a, r.d) for r in roots}
    assert got == expected
    for r in roots:
        assert (r.b, r.c) == (0.0, 0.0)


@pytest.mark.parametrize("lam", [0.25, 1.0, 2.0, 9.0])
def test_sqrt_branches_jordan_block(lam):
    target = Mat2(lam, 1, 0, lam)
    roots = sqrt_branches(target)
    assert len(roots) == 2
    s = math.sqrt(lam)
    expected = Mat2(s, 0.5 / s, 0.0, s)
    assert any(r.max_diff(expected) <= 1e-12 for r in roots)
    assert any(r.max_diff(-expected) <= 1e-12 for r in roots)
    for r in roots:
        assert (r @ r).max_diff(target) <= 1e-12


def test_sqrt_branches_none_for_nilpotent():
    assert sqrt_branches(Mat2(0, 1, 0, 0)) == []


def test_sqrt_branches_scalar():
    roots = sqrt_branches(Mat2.scalar(4.0))
    assert roots == [Mat2.scalar(2.0), Mat2.scalar(-2.0)]
    assert sqrt_branches(Mat2.zero()) == [Mat2.zero()]
    assert sqrt_branches(Mat2.scalar(-1.0)) == []


def test_sqrt_branches_zero_eigenvalue_merges():
    roots = sqrt_branches(Mat2.diag(5, 0))
    assert len(roots) == 2
    s = math.sqrt(5)
    got = sorted(r.a for r in roots)
    assert got == pytest.approx([-s, s])


def test_sqrt_branches_conjugated_matches_oracle():
    rng = np.random.default_rng(32)
    for _ in range(5):
        z = Mat2.from_array(rng.uniform(-2, 2, (2, 2)))
        if abs(z.det()) < 0.3:
            continue
        lam1, lam2 = sorted(rng.uniform(0.3, 4, 2))
        if lam2 - lam1 < 0.2:
            continue
        m = z @ Mat2.diag(lam1, lam2) @ z.inverse()
        branches = sqrt_branches(m)
        assert len(branches) == 4
        oracle = brute_force_roots(m)
        assert len(oracle) == 4
        for r in oracle:
            assert min(r.max_diff(b) for b in branches) <= 1e-6


def test_square_then_sqrt_round_trip():
    rng = np.random.default_rng(33)
    for _ in range(50):
        # symmetric positive definite with well separated eigenvalues
        g = rng.uniform(-2, 2, (2, 2))
        spd = g @ g.T + np.eye(2) * rng.uniform(0.3, 1.0)
        m = Mat2.from_array(spd)
        back = matrix_function(matrix_function(m, SQUARE), SQRT)
        assert back.max_diff(m) <= 1e-8


def test_count_real_roots_cases():
    finite4 = count_real_roots(Mat2.diag(1, 4))
    assert finite4.tag is Cardinality.FINITE and finite4.n == 4
    finite2 = count_real_roots(Mat2.diag(5, 0))
    assert finite2.tag is Cardinality.FINITE and finite2.n == 2
    block = count_real_roots(Mat2(4, 1, 0, 4))
    assert block.tag is Cardinality.FINITE and block.n == 2
    assert count_real_roots(-I2).tag is Cardinality.INFINITE
    assert count_real_roots(I2).tag is Cardinality.INFINITE
    assert count_real_roots(Mat2.zero()).tag is Cardinality.INFINITE
    assert count_real_roots(Mat2(0, 1, 0, 0)).tag is Cardinality.ZERO
    assert count_real_roots(Mat2.diag(-1, -4)).tag is Cardinality.ZERO
    assert count_real_roots(Mat2.diag(-4, 1)).tag is Cardinality.ZERO


def test_scaled_roots():
    swap = Mat2(0, 1, 1, 0)
    scaled = scaled_roots(I2, 4.0, swap)
    assert scaled == Mat2(0, 2, 2, 0)
    assert (scaled @ scaled).max_diff(Mat2.scalar(4.0)) <= 1e-12
    assert scaled_roots(I2, 1.0, swap) == swap
    assert scaled_roots(Mat2.diag(1, 4), 9.0, Mat2.diag(1, 2)) == Mat2.diag(3, 6)
    with pytest.raises(NonPositiveScale):
        scaled_roots(I2, -2.0, swap)
    with pytest.raises(NotASquareRoot):
        scaled_roots(Mat2.diag(1, 4), 2.0, swap)


def test_conjugated_roots():
    r = Mat2(1, 0, 0, -1)
    assert conjugated_roots(I2, I2, r) == r
    zc = Mat2(1, 1, 0, 1)
    moved = conjugated_roots(I2, zc, r)
    assert moved.max_diff(Mat2(1, 2, 0, -1)) <= 1e-12
    assert (moved @ moved).max_diff(I2) <= 1e-12
    zc2 = Mat2(2, 0, 0, 1)
    assert conjugated_roots(Mat2.diag(1, 4), zc2, Mat2.diag(1, 2)) == Mat2.diag(1, 2)
    with pytest.raises(SingularConjugator):
        conjugated_roots(I2, Mat2(1, 2, 2, 4), r)
    with pytest.raises(NotASquareRoot):
        conjugated_roots(Mat2.diag(1, 4), zc, r)


def test_brute_force_oracle_counts():
    assert len(brute_force_roots(Mat2.diag(1, 4))) == 4
    assert brute_force_roots(Mat2(0, 1, 0, 0)) == []
    assert len(brute_force_roots(Mat2.diag(5, 0))) == 2
    assert len(brute_force_roots(Mat2(1, 1, 0, 1))) == 2


def test_brute_force_count_grows_for_identity():
    coarse = brute_force_roots(I2, RootSearchGrid(points_per_axis=3))
    fine = brute_force_roots(I2, RootSearchGrid(points_per_axis=5))
    assert len(coarse) >= 8
    assert len(fine) > len(coarse)


def test_count_matches_oracle_on_suite():
    suite = [
        I2,
        -I2,
        Mat2.scalar(4.0),
        Mat2.diag(5, 0),
        Mat2(1, 1, 0, 1),
        Mat2(0, 1, 0, 0),
        Mat2.diag(1, 4),
        Mat2.diag(-1, -4),
        Mat2(4, 1, 0, 4),
        Mat2.zero(),
    ]
    for m in suite:
        found = brute_force_roots(m)
        verdict = count_real_roots(m)
        if verdict.tag is Cardinality.ZERO:
            assert found == []
        elif verdict.tag is Cardinality.FINITE:
            assert len(found) == verdict.n
        else:
            assert len(found) >= 8  # unbounded families show up in bulk
        for r in found:
            assert (r @ r).max_diff(m) <= 1e-9
