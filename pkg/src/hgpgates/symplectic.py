"""Binary symplectic matrices for Clifford operators.

Paulis are row vectors ``[x | z]`` of length ``2n`` and a Clifford acts on the
right: ``[x | z] -> [x | z] F``. The form is ``Omega = [[0, I], [I, 0]]``.
"""

from __future__ import annotations

import numpy as np

from . import gf2
from .circuit import LogicalGateSpec
from .gf2 import BitMatrix, BitVector
from .logicals import LMatrix, LogicalBasis


def omega(n: int) -> BitMatrix:
    z, i = gf2.zeros(n, n), gf2.identity(n)
    return np.block([[z, i], [i, z]]).astype(np.uint8)


def symplectic_product(u: BitVector, v: BitVector) -> int:
    u, v = gf2.asbits(u, 1), gf2.asbits(v, 1)
    n = u.shape[0] // 2
    return gf2.dot(u[:n], v[n:]) ^ gf2.dot(u[n:], v[:n])


def form_matrix(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Pairwise symplectic products ``a Omega b^T``."""
    a, b = gf2.asbits(a, 2), gf2.asbits(b, 2)
    n = a.shape[1] // 2
    return gf2.matmul(a[:, :n], b[:, n:].T) ^ gf2.matmul(a[:, n:], b[:, :n].T)


def is_symplectic(f: BitMatrix) -> bool:
    f = gf2.asbits(f, 2)
    rows, cols = f.shape
    if rows != cols or rows % 2:
        raise ValueError(f"symplectic matrices are square of even side, got {f.shape}")
    return bool(np.array_equal(form_matrix(f, f), omega(rows // 2)))


def is_logical_action(m: BitMatrix) -> bool:
    """True when ``m`` is an element of ``Sp(2k)``; invertibility follows."""
    try:
        return is_symplectic(m)
    except ValueError:
        return False


def transvection(x: BitVector) -> BitMatrix:
    """``I + Omega x^T x``, the map ``y -> y + (y, x) x``."""
    x = gf2.asbits(x, 1)
    n2 = x.shape[0]
    return gf2.identity(n2) ^ gf2.matmul(omega(n2 // 2), gf2.outer(x, x))


def paired_transvection(w: BitVector, x: BitVector) -> BitMatrix:
    """``I + Omega x^T w``, the map ``y -> y + (y, x) w`` for ``w`` orthogonal to ``x``.

    On its own this preserves the form only when ``w`` is ``0`` or ``x`` (or
    ``x`` is ``0``); sums of such terms over a symplectic basis, as in
    :func:`basis_change`, are symplectic.
    """
    w, x = gf2.asbits(w, 1), gf2.asbits(x, 1)
    if symplectic_product(w, x):
        raise ValueError("not orthogonal")
    n2 = x.shape[0]
    return gf2.identity(n2) ^ gf2.matmul(omega(n2 // 2), gf2.outer(x, w))


def basis_change(pairs) -> BitMatrix:
    """Symplectic ``F`` with ``u F = u'`` and ``v F = v'`` for each ``(u, v, u', v')``.

    Vectors orthogonal to every listed ``u`` and ``v`` are fixed.
    """
    pairs = [tuple(gf2.asbits(p, 1) for p in quad) for quad in pairs]
    if not pairs:
        raise ValueError("no pairs given")
    n2 = pairs[0][0].shape[0]
    acc = gf2.zeros(n2, n2)
    for u, v, u2, v2 in pairs:
        acc ^= gf2.outer(v, u ^ u2) ^ gf2.outer(u, v ^ v2)
    f = gf2.identity(n2) ^ gf2.matmul(omega(n2 // 2), acc)
    ok = all(np.array_equal(gf2.matmul(u, f), u2) and np.array_equal(gf2.matmul(v, f), v2) for u, v, u2, v2 in pairs)
    if not ok or not is_symplectic(f):
        raise ValueError("pairing violation: the vectors do not form symplectic bases")
    return f


def _check_action(l: LMatrix, ml: BitMatrix) -> BitMatrix:
    ml = gf2.asbits(ml, 2)
    if ml.shape != (2 * l.k, 2 * l.k) or not is_logical_action(ml):
        raise ValueError("invalid logical action matrix: not an element of Sp(2k)")
    return ml


def _logical_terms(l: LMatrix, ml: BitMatrix) -> BitMatrix:
    """``sum_i Omega (v_i^T (u_i + u_i') + u_i^T (v_i + v_i'))`` over the logical pairs."""
    k, n = l.k, l.n
    lp = gf2.matmul(ml ^ gf2.identity(2 * k), l.matrix)
    top = gf2.matmul(l.matrix[k:, n:].T, lp[:k])
    bottom = gf2.matmul(l.matrix[:k, :n].T, lp[k:])
    return np.concatenate([top, bottom], axis=0)


def build_f_trivial(l: LMatrix, ml: BitMatrix) -> BitMatrix:
    """Symplectic matrix acting as ``ml`` on the logicals and fixing every stabilizer."""
    ml = _check_action(l, ml)
    return gf2.identity(2 * l.n) ^ _logical_terms(l, ml)


def build_f_general(l: LMatrix, h: BitMatrix, r: BitMatrix, ml: BitMatrix, ms: BitMatrix) -> BitMatrix:
    """Symplectic matrix with ``L -> ml L``, ``H -> ms H`` and ``R -> ms^{-T} R``."""
    ml = _check_action(l, ml)
    h, r, ms = gf2.asbits(h, 2), gf2.asbits(r, 2), gf2.asbits(ms, 2)
    m = h.shape[0]
    if ms.shape != (m, m):
        raise ValueError(f"stabilizer action must be {m} x {m}")
    ms_inv = gf2.inverse(ms)
    check_destabilizers(h, l, r)
    hp = gf2.matmul(ms ^ gf2.identity(m), h)
    rp = gf2.matmul(ms_inv.T ^ gf2.identity(m), r)
    acc = gf2.matmul(r.T, hp) ^ gf2.matmul(h.T, rp)
    return gf2.identity(2 * l.n) ^ _logical_terms(l, ml) ^ gf2.matmul(omega(l.n), acc)


def check_destabilizers(h: BitMatrix, l: LMatrix, r: BitMatrix) -> None:
    m = h.shape[0]
    if r.shape != h.shape:
        raise ValueError("destabilizer matrix must have the shape of the stabilizer matrix")
    if not np.array_equal(form_matrix(h, r), gf2.identity(m)):
        raise ValueError("invalid destabilizers: H Omega R^T != I")
    if np.any(form_matrix(l.matrix, r)):
        raise ValueError("invalid destabilizers: they do not commute with the logicals")
    if np.any(form_matrix(r, r)):
        raise ValueError("invalid destabilizers: they do not commute with each other")


def complete_destabilizers(h: BitMatrix, l: LMatrix) -> BitMatrix:
    """Rows ``r_i`` pairing with stabilizer row ``i`` only, commuting with ``L`` and each other."""
    h = gf2.asbits(h, 2)
    m = h.shape[0]
    n2 = 2 * l.n
    if m == 0:
        return gf2.zeros(0, n2)
    if gf2.rank(h) != m:
        raise ValueError("dependent stabilizer rows")
    # (row, r)_s = row Omega r^T, so solve [H; L] Omega r^T = e_i
    system = gf2.matmul(np.concatenate([h, l.matrix], axis=0), omega(l.n))
    rows = []
    for i in range(m):
        rhs = gf2.unit(system.shape[0], i)
        r = gf2.solve(system, rhs)
        if r is None:
            raise ValueError("stabilizers and logicals are not independent")
        rows.append(r)
    r = np.array(rows, dtype=np.uint8)
    for j in range(m):
        for i in range(j):
            if symplectic_product(r[i], r[j]):
                r[j] ^= h[i]
    check_destabilizers(h, l, r)
    return r


def logical_index(gate: LogicalGateSpec, basis) -> tuple[int, list[int]]:
    """``(k, 0-based logical indices)`` for a gate against a basis or a plain ``k``."""
    if isinstance(basis, LogicalBasis):
        return basis.k, [basis.index(lb) for lb in gate.labels]
    k = int(basis)
    idx = []
    for lb in gate.labels:
        if not isinstance(lb, (int, np.integer)) or not 0 <= lb < k:
            raise ValueError(f"logical index {lb} out of range for k = {k}")
        idx.append(int(lb))
    return k, idx


def ml_for(gate: LogicalGateSpec, basis) -> BitMatrix:
    """Action on ``[X_1..X_k, Z_1..Z_k]``: row ``i`` lists the image of logical ``i``."""
    k, idx = logical_index(gate, basis)
    m = gf2.identity(2 * k)
    if gate.kind == "phase":
        (i,) = idx
        m[i, k + i] = 1
    elif gate.kind == "hadamard":
        (i,) = idx
        m[[i, k + i]] = m[[k + i, i]]
    elif gate.kind == "cnot":
        c, t = idx
        m[c, t] = 1
        m[k + t, k + c] = 1
    else:
        a, b = idx
        m[a, k + b] = 1
        m[b, k + a] = 1
    return m


def gate_f(code, basis: LogicalBasis, gate: LogicalGateSpec) -> BitMatrix:
    """Closed-form symplectic matrix of a targeted gate that fixes all stabilizers."""
    n = code.n
    idx = [basis.index(lb) for lb in gate.labels]
    a, b = gf2.identity(n), gf2.zeros(n, n)
    c, d = gf2.zeros(n, n), gf2.identity(n)
    if gate.kind == "phase":
        lz = basis.z_ops[idx[0]]
        b ^= gf2.outer(lz, lz)
    elif gate.kind == "hadamard":
        lx, lz = basis.x_ops[idx[0]], basis.z_ops[idx[0]]
        a ^= gf2.outer(lz, lx)
        b ^= gf2.outer(lz, lz)
        c ^= gf2.outer(lx, lx)
        d ^= gf2.outer(lx, lz)
    elif gate.kind == "cnot":
        lcz = basis.z_ops[idx[0]]
        ltx = basis.x_ops[idx[1]]
        a ^= gf2.outer(lcz, ltx)
        d ^= gf2.outer(ltx, lcz)
    else:
        z1, z2 = basis.z_ops[idx[0]], basis.z_ops[idx[1]]
        b ^= gf2.outer(z1, z2) ^ gf2.outer(z2, z1)
    return np.block([[a, b], [c, d]]).astype(np.uint8)


def transvection_decomposition(gate: LogicalGateSpec, basis: LogicalBasis) -> list[BitVector]:
    """Transvection vectors whose matrices multiply, in order, to :func:`gate_f`."""
    n = basis.n
    zero = np.zeros(n, np.uint8)
    idx = [basis.index(lb) for lb in gate.labels]
    if gate.kind == "phase":
        return [np.concatenate([zero, basis.z_ops[idx[0]]])]
    if gate.kind == "hadamard":
        i = idx[0]
        return [np.concatenate([basis.x_ops[i], basis.z_ops[i]])]
    if gate.kind == "cnot":
        ciz = basis.z_ops[idx[0]]
        tjx = basis.x_ops[idx[1]]
        return [
            np.concatenate([tjx, zero]),
            np.concatenate([tjx, ciz]),
            np.concatenate([zero, ciz]),
        ]
    z1, z2 = basis.z_ops[idx[0]], basis.z_ops[idx[1]]
    return [
        np.concatenate([zero, z1]),
        np.concatenate([zero, z1 ^ z2]),
        np.concatenate([zero, z2]),
    ]


def product(mats, size: int | None = None) -> BitMatrix:
    """Left-to-right product of a sequence of matrices."""
    out = None
    for m in mats:
        out = m if out is None else gf2.matmul(out, m)
    if out is None:
        if size is None:
            raise ValueError("empty product needs a size")
        return gf2.identity(size)
    return out


def logical_action_of(f: BitMatrix, l: LMatrix) -> BitMatrix:
    """The ``2k x 2k`` matrix ``M`` with ``L F = M L`` modulo stabilizers."""
    image = gf2.matmul(l.matrix, f)
    return gf2.matmul(form_matrix(image, l.matrix), omega(l.k))


def random_symplectic(n: int, rng: np.random.Generator, length: int | None = None) -> BitMatrix:
    """A product of random transvections, an element of ``Sp(2n)``."""
    length = 4 * n + 4 if length is None else length
    f = gf2.identity(2 * n)
    for _ in range(length):
        x = rng.integers(0, 2, 2 * n).astype(np.uint8)
        f = gf2.matmul(f, transvection(x))
    return f
