import numpy as np
import pytest

from seqbell.cmatrix import (
    DEFAULT_TOL,
    add,
    adjoint,
    as_cmatrix,
    identity,
    is_hermitian,
    is_idempotent,
    is_psd,
    kron,
    matmul,
    scale,
    trace,
)
from seqbell.qstate import ghz, pauli, to_density

SX, SY, SZ = pauli("x"), pauli("y"), pauli("z")
I2 = identity(2)


def brute_kron(a, b):
    """Entrywise definition: out[i*rb+k, j*cb+l] = a[i,j] * b[k,l]."""
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.zeros((ra * rb, ca * cb), dtype=complex)
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k, j * cb + l] = a[i, j] * b[k, l]
    return out


def random_cmatrix(rng, n=4):
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def test_kron_identity_case():
    assert np.array_equal(kron(I2, I2), identity(4))


def test_kron_antidiagonal_entry():
    assert kron(SX, SX)[0, 3] == 1


def test_kron_matches_entrywise_definition():
    # exact on the operator alphabet in use; within rounding on generic input
    for a in (SX, SY, SZ, I2):
        for b in (SX, SY, SZ, I2):
            assert np.array_equal(kron(a, b), brute_kron(a, b))
    rng = np.random.default_rng(7)
    a = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
    b = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
    assert np.max(np.abs(kron(a, b) - brute_kron(a, b))) < 1e-14


def test_triple_kron_flips_all_three_bits():
    # (sx (x) sx (x) sx) |000> = |111>, checked against the loop oracle
    xxx = brute_kron(brute_kron(SX, SX), SX)
    ket000 = np.zeros(8, dtype=complex)
    ket000[0] = 1
    ket111 = np.zeros(8, dtype=complex)
    ket111[7] = 1
    assert np.array_equal(xxx @ ket000, ket111)
    assert np.array_equal(kron(kron(SX, SX), SX), xxx)


def test_kron_associative():
    # exact on the operator alphabet this package uses
    alphabet = [SX, SY, SZ, I2]
    for a in alphabet:
        for b in alphabet:
            for c in alphabet:
                assert np.array_equal(kron(kron(a, b), c), kron(a, kron(b, c)))
    # and to rounding on generic matrices
    rng = np.random.default_rng(8)
    a, b, c = (random_cmatrix(rng, 2) for _ in range(3))
    assert np.max(np.abs(kron(kron(a, b), c) - kron(a, kron(b, c)))) < 1e-14


def test_matmul_pauli_products():
    assert np.array_equal(matmul(SX, SX), I2)
    # sx sy = i sz, by hand: [[i,0],[0,-i]]
    assert np.array_equal(matmul(SX, SY), np.array([[1j, 0], [0, -1j]]))


def test_matmul_projector_idempotent():
    p = scale(0.5, add(I2, SX))
    assert np.allclose(matmul(p, p), p, atol=1e-15)


def test_matmul_dimension_mismatch():
    with pytest.raises(ValueError):
        matmul(identity(2), identity(4))


def test_adjoint():
    assert np.array_equal(adjoint(SY), SY)
    assert np.array_equal(adjoint(1j * I2), -1j * I2)
    rng = np.random.default_rng(9)
    m = random_cmatrix(rng)
    assert np.array_equal(adjoint(adjoint(m)), m)


def test_adjoint_distributes_over_kron():
    rng = np.random.default_rng(10)
    a, b = random_cmatrix(rng, 2), random_cmatrix(rng, 3)
    assert np.array_equal(adjoint(kron(a, b)), kron(adjoint(a), adjoint(b)))


def test_trace():
    assert trace(identity(8)) == 8
    assert trace(SZ) == 0
    for phi in (0.0, 0.3, np.pi / 4):
        assert abs(trace(to_density(ghz(phi))) - 1) < DEFAULT_TOL


def test_trace_cyclic():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a, b = random_cmatrix(rng), random_cmatrix(rng)
        assert abs(trace(matmul(a, b)) - trace(matmul(b, a))) < 1e-12


def test_trace_non_square():
    with pytest.raises(ValueError):
        trace(np.ones((2, 3), dtype=complex))


def test_add_scale():
    assert np.array_equal(add(SZ, scale(-1, SZ)), np.zeros((2, 2)))
    p_plus = scale(0.5, add(I2, SY))
    p_minus = scale(0.5, add(I2, scale(-1, SY)))
    assert np.array_equal(add(p_plus, p_minus), I2)
    with pytest.raises(ValueError):
        add(I2, identity(4))


def test_predicates():
    p = scale(0.5, add(I2, SX))
    assert is_idempotent(p, 1e-12)
    assert not is_idempotent(SX, 1e-12)
    assert is_hermitian(SY)
    assert not is_hermitian(1j * SX)
    assert is_psd(to_density(ghz(np.pi / 4)), 1e-12)
    assert not is_psd(SZ, 1e-12)
    with pytest.raises(ValueError):
        is_hermitian(np.ones((2, 3), dtype=complex))


def test_as_cmatrix_rejects_nonfinite():
    with pytest.raises(ValueError):
        as_cmatrix([[np.nan, 0], [0, 1]])
    with pytest.raises(ValueError):
        as_cmatrix([[np.inf + 0j, 0], [0, 1]])
    with pytest.raises(ValueError):
        as_cmatrix([1, 2, 3])
    m = as_cmatrix([[1, 2], [3, 4]])
    assert m.dtype == complex and m.shape == (2, 2)
