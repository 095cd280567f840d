"""Logical Pauli bases of HGP codes and the logical matrix ``L``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2
from .codes import CssCode, HgpCode, LogicalQubitLabel, Sector
from .gf2 import BitMatrix, BitVector, SltBasis


@dataclass(frozen=True, eq=False)
class LogicalBasis:
    """X and Z logical representatives, one pair per label, paired so that
    ``X_i`` and ``Z_j`` overlap on exactly ``delta_ij`` qubits for HGP codes.
    """

    code: CssCode
    labels: tuple
    x_ops: BitMatrix
    z_ops: BitMatrix
    a_basis: SltBasis | None = None
    alpha_basis: SltBasis | None = None
    b_basis: SltBasis | None = None
    beta_basis: SltBasis | None = None

    @property
    def k(self) -> int:
        return len(self.labels)

    @property
    def n(self) -> int:
        return self.code.n

    def index(self, label) -> int:
        """0-based position of ``label``; plain integers are taken as positions."""
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            if not 0 <= label < self.k:
                raise ValueError(f"logical index {label} out of range 0..{self.k - 1}")
            return int(label)
        if isinstance(label, str):
            label = LogicalQubitLabel.parse(label)
        try:
            return self.labels.index(label)
        except ValueError:
            known = ", ".join(str(lb) for lb in self.labels)
            raise ValueError(f"unknown logical qubit {label}; known labels: {known}") from None

    def x_op(self, label) -> BitVector:
        return self.x_ops[self.index(label)]

    def z_op(self, label) -> BitVector:
        return self.z_ops[self.index(label)]


def _left_label_ops(code: HgpCode, a: BitVector, pa: int, b: BitVector, pb: int):
    x = np.concatenate([gf2.kron(gf2.unit(code.na, pa), b), np.zeros(code.n_right, np.uint8)])
    z = np.concatenate([gf2.kron(a, gf2.unit(code.nb, pb)), np.zeros(code.n_right, np.uint8)])
    return x, z


def _right_label_ops(code: HgpCode, alpha: BitVector, pa: int, beta: BitVector, pb: int):
    x = np.concatenate([np.zeros(code.n_left, np.uint8), gf2.kron(alpha, gf2.unit(code.mb, pb))])
    z = np.concatenate([np.zeros(code.n_left, np.uint8), gf2.kron(gf2.unit(code.ma, pa), beta)])
    return x, z


def logical_basis(code: HgpCode) -> LogicalBasis:
    """Logical operators built from SLT bases of the four constituent kernels.

    A left label ``(p, q)`` pairs the kernel vectors ``a`` of ``ha`` and ``b`` of
    ``hb`` with pivots ``p`` and ``q``: ``X = e_p (x) b`` and ``Z = a (x) e_q``
    on the left grid. Right labels do the same with the kernels of the
    transposes on the right grid, with the roles of X and Z exchanged.
    """
    if code.k == 0:
        raise ValueError("no logical qubits")
    a_basis = gf2.slt_normalize(gf2.kernel_basis(code.ha), code.na)
    b_basis = gf2.slt_normalize(gf2.kernel_basis(code.hb), code.nb)
    alpha_basis = gf2.slt_normalize(gf2.kernel_basis(code.ha.T), code.ma)
    beta_basis = gf2.slt_normalize(gf2.kernel_basis(code.hb.T), code.mb)

    entries = []
    for a, pa in zip(a_basis.vectors, a_basis.pivots):
        for b, pb in zip(b_basis.vectors, b_basis.pivots):
            label = LogicalQubitLabel(Sector.LEFT, pa + 1, pb + 1)
            entries.append((label, *_left_label_ops(code, a, pa, b, pb)))
    for al, pa in zip(alpha_basis.vectors, alpha_basis.pivots):
        for be, pb in zip(beta_basis.vectors, beta_basis.pivots):
            label = LogicalQubitLabel(Sector.RIGHT, pa + 1, pb + 1)
            entries.append((label, *_right_label_ops(code, al, pa, be, pb)))
    entries.sort(key=lambda e: (e[0].sector is Sector.RIGHT, e[0].row_pivot, e[0].col_pivot))

    basis = LogicalBasis(
        code=code,
        labels=tuple(e[0] for e in entries),
        x_ops=np.array([e[1] for e in entries], dtype=np.uint8),
        z_ops=np.array([e[2] for e in entries], dtype=np.uint8),
        a_basis=a_basis,
        alpha_basis=alpha_basis,
        b_basis=b_basis,
        beta_basis=beta_basis,
    )
    assert basis.k == code.k, "label count disagrees with the code dimension"
    validate_basis(basis)
    return basis


def basis_from_supports(code: CssCode, x_ops: BitMatrix, z_ops: BitMatrix) -> LogicalBasis:
    """A user-supplied logical basis for any CSS code, validated before use.

    Logical qubits are addressed by 0-based position.
    """
    x_ops = gf2.asbits(x_ops, 2)
    z_ops = gf2.asbits(z_ops, 2)
    if x_ops.shape != z_ops.shape or x_ops.shape[1] != code.n:
        raise ValueError("logical X and Z supports must both be k x n")
    if x_ops.shape[0] != code.k:
        raise ValueError(f"expected {code.k} logical pairs, got {x_ops.shape[0]}")
    basis = LogicalBasis(code, tuple(range(x_ops.shape[0])), x_ops, z_ops)
    validate_basis(basis)
    return basis


def validate_basis(basis: LogicalBasis) -> None:
    """Raise ``ValueError`` unless the operators form a valid symplectic logical basis."""
    code = basis.code
    x, z = basis.x_ops, basis.z_ops
    if np.any(gf2.matmul(code.hz, x.T)):
        raise ValueError("a logical X fails a Z check")
    if np.any(gf2.matmul(code.hx, z.T)):
        raise ValueError("a logical Z fails an X check")
    if not np.array_equal(gf2.matmul(x, z.T), gf2.identity(basis.k)):
        raise ValueError("logical X and Z operators are not paired")
    for i in range(basis.k):
        if gf2.in_row_space(code.hx, x[i]):
            raise ValueError(f"logical X {i} is a stabilizer")
        if gf2.in_row_space(code.hz, z[i]):
            raise ValueError(f"logical Z {i} is a stabilizer")


@dataclass(frozen=True, eq=False)
class LMatrix:
    """``2k x 2n`` matrix with rows ``[x_i | 0]`` for ``i < k`` then ``[0 | z_i]``."""

    matrix: BitMatrix

    @property
    def k(self) -> int:
        return self.matrix.shape[0] // 2

    @property
    def n(self) -> int:
        return self.matrix.shape[1] // 2

    def x_row(self, i: int) -> BitVector:
        return self.matrix[i]

    def z_row(self, i: int) -> BitVector:
        return self.matrix[self.k + i]

    def lx(self, i: int) -> BitVector:
        return self.matrix[i, : self.n]

    def lz(self, i: int) -> BitVector:
        return self.matrix[self.k + i, self.n :]


def l_matrix(basis: LogicalBasis) -> LMatrix:
    k, n = basis.k, basis.n
    m = gf2.zeros(2 * k, 2 * n)
    m[:k, :n] = basis.x_ops
    m[k:, n:] = basis.z_ops
    return LMatrix(m)
