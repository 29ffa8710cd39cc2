import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import from_exponents, matrix_from_exponents, paper_generator
from oracles import SlowField
from rslist import poly
from rslist.code import build_code, build_generator_matrix
from rslist.errors import DimensionError, NotACodewordBasis, SingularMatrix
from rslist.field import Field
from rslist.linalg import cyclic_complete, diag, identity, mat_inv, mat_mul, rank, solve_transform

GF16 = Field(4, 0b10011)


def test_identity_product(gf8):
    x = np.arange(9).reshape(3, 3) % 8
    assert np.array_equal(mat_mul(gf8, identity(3), x), x)


def test_mat_mul_matches_oracle(gf16):
    rng = np.random.default_rng(3)
    slow = SlowField(4, 0b10011)
    a = rng.integers(0, 16, (4, 6))
    b = rng.integers(0, 16, (6, 3))
    assert mat_mul(gf16, a, b).tolist() == slow.matmul(a.tolist(), b.tolist())


def test_w_times_w_inverse(gf8):
    w = diag(from_exponents(gf8, [0, 1, 2, 3]))
    w_inv = diag(from_exponents(gf8, [0, 6, 5, 4]))
    assert np.array_equal(mat_mul(gf8, w, w_inv), identity(4))


def test_dimension_mismatch(gf8):
    with pytest.raises(DimensionError):
        mat_mul(gf8, np.zeros((2, 3), dtype=int), np.zeros((2, 3), dtype=int))


def test_inverse_of_spectrum_diagonal(gf8):
    d = diag(from_exponents(gf8, [6, 5, 0, 5]))
    expected = diag(from_exponents(gf8, [1, 2, 0, 2]))
    assert np.array_equal(mat_inv(gf8, d), expected)


def test_inverse_of_truncated_inverse_gfft(gf8):
    f_inv_4 = gf8.vpow_alpha(-np.outer(np.arange(4), np.arange(4)))
    printed = matrix_from_exponents(gf8, [
        [4, 3, 5, 3],
        [3, 0, None, 1],
        [5, None, 3, 2],
        [3, 1, 2, 6],
    ])
    assert np.array_equal(mat_inv(gf8, f_inv_4), printed)


def test_singular(gf8):
    with pytest.raises(SingularMatrix):
        mat_inv(gf8, np.zeros((2, 2), dtype=int))
    with pytest.raises(SingularMatrix):
        mat_inv(gf8, np.array([[1, 2], [2, 4]]))
    with pytest.raises(DimensionError):
        mat_inv(gf8, np.zeros((2, 3), dtype=int))


@st.composite
def invertible(draw, size=st.integers(1, 6)):
    k = draw(size)
    vals = draw(st.lists(st.integers(0, 15), min_size=k * k, max_size=k * k))
    a = np.array(vals, dtype=np.int64).reshape(k, k)
    return a


@settings(max_examples=150, deadline=None)
@given(invertible())
def test_inverse_property(a):
    if rank(GF16, a) < a.shape[0]:
        with pytest.raises(SingularMatrix):
            mat_inv(GF16, a)
        return
    inv = mat_inv(GF16, a)
    k = a.shape[0]
    assert np.array_equal(mat_mul(GF16, a, inv), identity(k))
    assert np.array_equal(mat_mul(GF16, inv, a), identity(k))
    assert np.array_equal(mat_inv(GF16, inv), a)


def test_solve_transform_identity(gf8):
    g = build_generator_matrix(build_code(gf8, 7, 4, 2))
    assert np.array_equal(solve_transform(gf8, g, g), identity(4))


def test_solve_transform_paper(gf8):
    g = build_generator_matrix(build_code(gf8, 7, 4, 2))
    ga = paper_generator(gf8)
    a = solve_transform(gf8, ga, g)
    assert np.array_equal(mat_mul(gf8, a, g), ga)
    printed = matrix_from_exponents(gf8, [
        [2, 0, 2, None],
        [2, 1, 2, 1],
        [3, 6, 5, 5],
        [6, 3, 2, 1],
    ])
    assert np.array_equal(mat_inv(gf8, a.T), printed)


def test_solve_transform_rejects_non_codeword(gf8):
    spec = build_code(gf8, 7, 4, 2)
    g = build_generator_matrix(spec)
    bad = paper_generator(gf8).copy()
    bad[2, 3] ^= 1
    _, rem = poly.poly_divmod(gf8, bad[2], spec.g_coeffs)
    assert rem.size > 0
    with pytest.raises(NotACodewordBasis):
        solve_transform(gf8, bad, g)


def test_solve_transform_rank_deficient(gf8):
    g = build_generator_matrix(build_code(gf8, 7, 4, 1))
    ga = g.copy()
    ga[3] = ga[0]
    with pytest.raises(SingularMatrix):
        solve_transform(gf8, ga, g)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 15), min_size=9, max_size=9), st.integers(1, 15))
def test_solve_transform_reproduces(vals, b):
    spec = build_code(GF16, 15, 3, b)
    g = build_generator_matrix(spec)
    a = np.array(vals).reshape(3, 3)
    ga = mat_mul(GF16, a, g)
    if rank(GF16, a) < 3:
        with pytest.raises(SingularMatrix):
            solve_transform(GF16, ga, g)
    else:
        assert np.array_equal(solve_transform(GF16, ga, g), a)


def test_cyclic_complete_small():
    assert cyclic_complete(np.array([[3, 5]])).tolist() == [[3, 5], [5, 3]]
    with pytest.raises(DimensionError):
        cyclic_complete(np.zeros((3, 3), dtype=int))


def test_cyclic_complete_index_formula(gf8):
    spec = build_code(gf8, 7, 4, 2)
    full = cyclic_complete(build_generator_matrix(spec))
    first = np.zeros(7, dtype=np.int64)
    first[:4] = spec.g_coeffs
    for s in range(7):
        for t in range(7):
            assert full[s, t] == first[(t - s) % 7]
