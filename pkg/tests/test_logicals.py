import numpy as np
import pytest

from conftest import small_codes
from hgpgates import gf2
from hgpgates.codes import LogicalQubitLabel, Sector, hgp, toric
from hgpgates.logicals import basis_from_supports, l_matrix, logical_basis
from hgpgates.symplectic import form_matrix, omega

CODES = small_codes()


def test_toric3_left_logicals():
    basis = logical_basis(toric(3))
    assert [str(lb) for lb in basis.labels] == ["L:3,3", "R:3,3"]
    left = LogicalQubitLabel(Sector.LEFT, 3, 3)
    assert basis.z_op(left).tolist() == [0, 0, 1, 0, 0, 1, 0, 0, 1] + [0] * 9
    assert basis.x_op(left).tolist() == [0, 0, 0, 0, 0, 0, 1, 1, 1] + [0] * 9
    assert basis.index("R:3,3") == 1


def test_single_left_label_overlaps_once():
    basis = logical_basis(hgp([[1, 1]], [[1, 1]]))
    assert len(basis.labels) == 1 and basis.labels[0].sector is Sector.LEFT
    assert gf2.dot(basis.x_ops[0], basis.z_ops[0]) == 1
    assert len(set(gf2.support(basis.x_ops[0])) & set(gf2.support(basis.z_ops[0]))) == 1


def test_no_logical_qubits():
    with pytest.raises(ValueError, match="no logical qubits"):
        logical_basis(hgp(gf2.identity(2), gf2.identity(2)))


def test_unknown_label():
    basis = logical_basis(toric(3))
    with pytest.raises(ValueError, match="unknown logical qubit"):
        basis.index("L:1,1")


@pytest.mark.parametrize("name", sorted(CODES))
def test_basis_invariants(name):
    code = CODES[name]
    basis = logical_basis(code)
    assert basis.k == code.k
    x, z = basis.x_ops, basis.z_ops
    assert not gf2.matmul(code.hz, x.T).any()
    assert not gf2.matmul(code.hx, z.T).any()
    for i in range(basis.k):
        for j in range(basis.k):
            overlap = len(set(gf2.support(x[i])) & set(gf2.support(z[j])))
            assert overlap == (i == j)
    assert list(basis.labels) == sorted(basis.labels)
    for label in basis.labels:
        if label.sector is Sector.LEFT:
            assert label.row_pivot - 1 in basis.a_basis.pivots
            assert label.col_pivot - 1 in basis.b_basis.pivots
        else:
            assert label.row_pivot - 1 in basis.alpha_basis.pivots
            assert label.col_pivot - 1 in basis.beta_basis.pivots


@pytest.mark.parametrize("name", sorted(CODES))
def test_l_matrix_invariants(name):
    code = CODES[name]
    l = l_matrix(logical_basis(code))
    k, n = l.k, l.n
    assert l.matrix.shape == (2 * k, 2 * n)
    assert not l.matrix[:k, n:].any() and not l.matrix[k:, :n].any()
    assert np.array_equal(form_matrix(l.matrix, l.matrix), omega(k))
    assert not form_matrix(l.matrix, code.h).any()


def test_l_matrix_shapes():
    l = l_matrix(logical_basis(toric(3)))
    assert l.matrix.shape == (4, 36)
    l1 = l_matrix(logical_basis(hgp([[1, 1]], [[1, 1]])))
    assert l1.matrix.shape == (2, 10)


def test_custom_basis_validation():
    code = toric(2)
    basis = logical_basis(code)
    custom = basis_from_supports(code, basis.x_ops, basis.z_ops)
    assert custom.labels == (0, 1)
    with pytest.raises(ValueError, match="not paired"):
        basis_from_supports(code, basis.x_ops[::-1], basis.z_ops)
    with pytest.raises(ValueError, match="fails a Z check"):
        bad = basis.x_ops.copy()
        bad[0, 0] ^= 1
        basis_from_supports(code, bad, basis.z_ops)
    with pytest.raises(ValueError, match="expected 2 logical pairs"):
        basis_from_supports(code, basis.x_ops[:1], basis.z_ops[:1])
