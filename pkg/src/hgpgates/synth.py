"""Circuit synthesis for targeted logical gates and for arbitrary symplectic matrices.

Where a construction leaves a qubit choice open, the smallest index wins.
"""

from __future__ import annotations

import numpy as np

from . import gf2
from .circuit import CNOT, CZ, SWAP, Circuit, Gate, GateKind, H, LogicalGateSpec, S, X, Y, Z
from .codes import CssCode, stabilizer_generators
from .gf2 import BitMatrix
from .logicals import LogicalBasis, l_matrix
from .symplectic import complete_destabilizers, is_symplectic
from .verify import _apply, conjugate_many, stabilizer_sign


def _fan_in(target: int, sources) -> list[Gate]:
    return [CNOT(y, target) for y in sources if y != target]


def _circuit(code: CssCode, gates: list[Gate], spec: LogicalGateSpec) -> Circuit:
    return Circuit(code.n, gates, {"gate": spec.to_json()})


def synth_phase(code: CssCode, basis: LogicalBasis, label) -> Circuit:
    """Targeted logical S from the parity trick on the logical Z support ``I``.

    CNOTs collect the parity of ``I`` on its first qubit ``x``, ``S(x)`` applies
    the phase and the same CNOTs uncompute the parity. The result is
    ``diag(i^parity)``, which already fixes every stabilizer with its sign, so no
    Pauli frame is appended.
    """
    spec = LogicalGateSpec("phase", (label,))
    I = gf2.support(basis.z_op(label))
    x = I[0]
    gates = _fan_in(x, I) + [S(x)] + _fan_in(x, I)
    return pauli_correction(_circuit(code, gates, spec), code, basis)


def synth_phase_alt(code: CssCode, basis: LogicalBasis, label) -> Circuit:
    """Symmetric variant: ``S`` on every qubit of ``I``, then ``CZ`` on every pair."""
    spec = LogicalGateSpec("phase", (label,))
    I = gf2.support(basis.z_op(label))
    gates = [S(q) for q in I]
    gates += [CZ(s, r) for j, r in enumerate(I) for s in I[:j]]
    return pauli_correction(_circuit(code, gates, spec), code, basis)


def synth_hadamard(code: CssCode, basis: LogicalBasis, label) -> Circuit:
    """Targeted logical H built around the single qubit shared by the X and Z logicals."""
    spec = LogicalGateSpec("hadamard", (label,))
    I = gf2.support(basis.x_op(label))
    J = gf2.support(basis.z_op(label))
    shared = sorted(set(I) & set(J))
    if len(shared) != 1:
        raise ValueError(f"logical X and Z of {label} overlap on {len(shared)} qubits, need exactly 1")
    rho = shared[0]
    gates = [H(rho)]
    gates += [CNOT(x, rho) for x in J if x != rho]
    gates += [CNOT(rho, y) for y in I if y != rho]
    gates += [H(y) for y in I]
    gates += [CZ(y, rho) for y in I if y != rho]
    gates += [H(y) for y in I]
    gates += [CZ(x, rho) for x in J if x != rho]
    gates += [Y(rho)]
    return _circuit(code, gates, spec)


def synth_cnot(code: CssCode, basis: LogicalBasis, control, target) -> Circuit:
    spec = LogicalGateSpec("cnot", (control, target))
    Ic = gf2.support(basis.z_op(control))
    It = gf2.support(basis.x_op(target))
    if set(Ic) & set(It):
        raise ValueError("control Z and target X logicals overlap")
    x = Ic[0]
    gates = _fan_in(x, Ic) + [CNOT(x, y) for y in It] + _fan_in(x, Ic)
    return _circuit(code, gates, spec)


def synth_cz(code: CssCode, basis: LogicalBasis, a, b) -> Circuit:
    spec = LogicalGateSpec("cz", (a, b))
    I1 = gf2.support(basis.z_op(a))
    I2 = gf2.support(basis.z_op(b))
    only1 = [q for q in I1 if q not in I2]
    only2 = [q for q in I2 if q not in I1]
    assert only1 and only2, "logical Z supports are nested"
    x, xb = only1[0], only2[0]
    stage = _fan_in(x, I1) + _fan_in(xb, I2)
    gates = stage + [CZ(x, xb)] + stage
    return _circuit(code, gates, spec)


def synth_gate(code: CssCode, basis: LogicalBasis, spec: LogicalGateSpec, phase_variant: str = "fanin") -> Circuit:
    if spec.kind == "phase":
        if phase_variant == "fanin":
            return synth_phase(code, basis, spec.labels[0])
        if phase_variant == "symmetric":
            return synth_phase_alt(code, basis, spec.labels[0])
        raise ValueError(f"unknown phase variant {phase_variant!r}")
    if spec.kind == "hadamard":
        return synth_hadamard(code, basis, spec.labels[0])
    if spec.kind == "cnot":
        return synth_cnot(code, basis, *spec.labels)
    return synth_cz(code, basis, *spec.labels)


def compose_logical(code: CssCode, basis: LogicalBasis, word) -> Circuit:
    """Concatenate per-gate circuits; the logical action is the product of the word's actions in order."""
    out = Circuit(code.n, [], {"word": [spec.to_json() for spec in word]})
    for spec in word:
        out.extend(synth_gate(code, basis, spec).gates)
    return out


# generic decomposition

def synth_from_f(f: BitMatrix) -> Circuit:
    """A circuit whose symplectic matrix is exactly ``f``.

    ``f`` is reduced to the identity by column operations, one qubit at a time;
    every elementary gate is its own symplectic inverse, so the circuit is the
    applied sequence reversed.
    """
    f = gf2.asbits(f, 2)
    if not is_symplectic(f):
        raise ValueError("input is not symplectic")
    n = f.shape[0] // 2
    xs = f[:, :n].copy()
    zs = f[:, n:].copy()
    sink = np.zeros(2 * n, dtype=np.uint8)
    applied: list[Gate] = []

    def do(g: Gate) -> None:
        _apply(xs, zs, sink, g)
        applied.append(g)

    for i in range(n):
        # image of X_i -> X_i
        row = i
        for j in range(i, n):
            if zs[row, j] and not xs[row, j]:
                do(H(j))
            elif zs[row, j] and xs[row, j]:
                do(S(j))
        pivot = next(j for j in range(i, n) if xs[row, j])
        if pivot != i:
            do(SWAP(i, pivot))
        for j in range(i + 1, n):
            if xs[row, j]:
                do(CNOT(i, j))
        # image of Z_i -> Z_i, keeping X_i fixed
        row = n + i
        for j in range(i + 1, n):
            if xs[row, j] and not zs[row, j]:
                do(H(j))
            elif xs[row, j] and zs[row, j]:
                do(S(j))
                do(H(j))
        for j in range(i + 1, n):
            if zs[row, j]:
                do(CNOT(j, i))
        if xs[row, i]:
            do(H(i))
            do(S(i))
            do(H(i))
    assert np.array_equal(xs, np.eye(2 * n, n, dtype=np.uint8))
    assert np.array_equal(zs, np.eye(2 * n, n, -n, dtype=np.uint8))
    return Circuit(n, applied[::-1])


# Pauli frame repair

def pauli_correction(c: Circuit, code: CssCode, basis: LogicalBasis, r: BitMatrix | None = None) -> Circuit:
    """Append one layer of X/Y/Z gates so every stabilizer generator keeps its sign.

    Each independent generator ``g_i`` maps to ``+-`` a stabilizer ``prod_j g_j^M_ij``.
    The Pauli ``P = sum_j t_j d_j`` over the destabilizers with ``M t = flips``
    anticommutes exactly with the flipped images and commutes with the logicals.
    Dependent generators follow from the independent ones.
    """
    rows = code.independent_rows()
    h = code.h[rows]
    gens = [stabilizer_generators(code)[i] for i in rows]
    images = conjugate_many(c, gens)
    flips = np.zeros(len(gens), dtype=np.uint8)
    coeffs = []
    for i, im in enumerate(images):
        sign = stabilizer_sign(code, im)
        if sign == 0:
            raise ValueError("circuit does not normalize the stabilizer group")
        flips[i] = sign == -1
        coeffs.append(gf2.row_coefficients(h, im.symplectic()))
    if not flips.any():
        return c
    if r is None:
        r = complete_destabilizers(h, l_matrix(basis))
    ms = np.array(coeffs, dtype=np.uint8)
    t = gf2.solve(ms, flips)
    if t is None:  # pragma: no cover - ms is invertible for a normalizing circuit
        raise ValueError("stabilizer action is singular")
    p = gf2.matmul(t, r)
    n = code.n
    layer = []
    for q in range(n):
        bits = (int(p[q]), int(p[n + q]))
        if bits == (1, 0):
            layer.append(X(q))
        elif bits == (0, 1):
            layer.append(Z(q))
        elif bits == (1, 1):
            layer.append(Y(q))
    return Circuit(c.n, c.gates + layer, dict(c.meta))
