"""Sign-tracking conjugation, circuit symplectics and logical-gate verification."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import gf2
from .circuit import Circuit, Gate, GateKind, LogicalGateSpec
from .codes import CssCode, stabilizer_generators
from .gf2 import BitMatrix
from .logicals import LogicalBasis, l_matrix
from .pauli import SignedPauli
from .symplectic import logical_index


def _apply(xs: np.ndarray, zs: np.ndarray, r: np.ndarray, g: Gate) -> None:
    """Conjugate every row of a Pauli table by one gate, in place.

    ``xs``/``zs`` are ``rows x n`` bit arrays and ``r`` holds the sign bits.
    """
    kind = g.kind
    if kind is GateKind.H:
        (a,) = g.qubits
        r ^= xs[:, a] & zs[:, a]
        xs[:, a], zs[:, a] = zs[:, a].copy(), xs[:, a].copy()
    elif kind is GateKind.S:
        (a,) = g.qubits
        r ^= xs[:, a] & zs[:, a]
        zs[:, a] ^= xs[:, a]
    elif kind is GateKind.X:
        r ^= zs[:, g.qubits[0]]
    elif kind is GateKind.Z:
        r ^= xs[:, g.qubits[0]]
    elif kind is GateKind.Y:
        a = g.qubits[0]
        r ^= xs[:, a] ^ zs[:, a]
    elif kind is GateKind.CNOT:
        a, b = g.qubits
        r ^= xs[:, a] & zs[:, b] & (xs[:, b] ^ zs[:, a] ^ 1)
        xs[:, b] ^= xs[:, a]
        zs[:, a] ^= zs[:, b]
    elif kind is GateKind.CZ:
        a, b = g.qubits
        r ^= xs[:, a] & xs[:, b] & (zs[:, a] ^ zs[:, b])
        zs[:, a] ^= xs[:, b]
        zs[:, b] ^= xs[:, a]
    elif kind is GateKind.SWAP:
        a, b = g.qubits
        xs[:, [a, b]] = xs[:, [b, a]]
        zs[:, [a, b]] = zs[:, [b, a]]
    else:  # pragma: no cover
        raise ValueError(f"unknown gate {g}")


def conjugate_many(c: Circuit, paulis: list[SignedPauli]) -> list[SignedPauli]:
    """``U p U^dagger`` for each ``p``, where ``U`` runs the gates of ``c`` in order."""
    if not paulis:
        return []
    for p in paulis:
        if p.n != c.n:
            raise ValueError(f"Pauli on {p.n} qubits, circuit on {c.n}")
    xs = np.array([p.x for p in paulis], dtype=np.uint8)
    zs = np.array([p.z for p in paulis], dtype=np.uint8)
    r = np.array([0 if p.sign == 1 else 1 for p in paulis], dtype=np.uint8)
    for g in c.gates:
        _apply(xs, zs, r, g)
    return [SignedPauli(xs[i], zs[i], -1 if r[i] else 1) for i in range(len(paulis))]


def conjugate(c: Circuit, p: SignedPauli) -> SignedPauli:
    return conjugate_many(c, [p])[0]


def circuit_to_symplectic(c: Circuit) -> tuple[BitMatrix, np.ndarray]:
    """The ``2n x 2n`` matrix whose row ``i`` is the image of ``X_i`` (then ``Z_i``), and the image signs."""
    n = c.n
    xs = np.concatenate([gf2.identity(n), gf2.zeros(n, n)])
    zs = np.concatenate([gf2.zeros(n, n), gf2.identity(n)])
    r = np.zeros(2 * n, dtype=np.uint8)
    for g in c.gates:
        _apply(xs, zs, r, g)
    f = np.concatenate([xs, zs], axis=1)
    return f, np.where(r == 1, -1, 1)


def gate_symplectic(g: Gate, n: int) -> BitMatrix:
    return circuit_to_symplectic(Circuit(n, [g]))[0]


def stabilizer_sign(code: CssCode, p: SignedPauli) -> int:
    """``+1``/``-1`` if ``p`` or ``-p`` lies in the stabilizer group, ``0`` otherwise."""
    if not (gf2.in_row_space(code.hx, p.x) and gf2.in_row_space(code.hz, p.z)):
        return 0
    # a product of +X-type and +Z-type generators equals X^x Z^z = i^(-x.z) E(x, z)
    overlap = gf2.weight(p.x & p.z)
    element_sign = -1 if overlap % 4 == 2 else 1
    return p.sign * element_sign


@dataclass
class LogicalImage:
    name: str
    target: np.ndarray
    achieved: np.ndarray
    sign: int

    @property
    def ok(self) -> bool:
        return bool(np.array_equal(self.target, self.achieved))

    def to_json(self) -> dict:
        return {
            "logical": self.name,
            "target": "".join(str(int(b)) for b in self.target),
            "achieved": "".join(str(int(b)) for b in self.achieved),
            "sign": self.sign,
            "ok": self.ok,
        }


@dataclass
class VerificationReport:
    symplectic_ok: bool
    stabilizer_signs: list[int]
    logical_images: list[LogicalImage] = field(default_factory=list)
    dense_ok: bool | None = None

    @property
    def verdict(self) -> bool:
        ok = (
            self.symplectic_ok
            and all(s == 1 for s in self.stabilizer_signs)
            and all(im.ok for im in self.logical_images)
        )
        return ok and self.dense_ok is not False

    def flipped(self) -> list[int]:
        """0-based generator positions whose image is ``-S``."""
        return [i for i, s in enumerate(self.stabilizer_signs) if s == -1]

    def to_json(self) -> dict:
        return {
            "verdict": "pass" if self.verdict else "fail",
            "symplectic_ok": self.symplectic_ok,
            "stabilizer_signs": self.stabilizer_signs,
            "flipped_generators": self.flipped(),
            "logical_images": [im.to_json() for im in self.logical_images],
            "dense_oracle": self.dense_ok,
        }

    def to_text(self) -> str:
        lines = [
            f"verdict: {'pass' if self.verdict else 'fail'}",
            f"symplectic matrix matches target: {self.symplectic_ok}",
        ]
        bad = [i for i, s in enumerate(self.stabilizer_signs) if s != 1]
        lines.append(
            f"stabilizer generators: {len(self.stabilizer_signs)}, "
            f"sign-flipped: {[i for i in bad if self.stabilizer_signs[i] == -1]}, "
            f"not preserved: {[i for i in bad if self.stabilizer_signs[i] == 0]}"
        )
        for im in self.logical_images:
            lines.append(f"  {im.name}: {'ok' if im.ok else 'MISMATCH'} sign {im.sign:+d}")
        if self.dense_ok is not None:
            lines.append(f"dense oracle: {'pass' if self.dense_ok else 'fail'}")
        return "\n".join(lines) + "\n"


def verify_logical(
    c: Circuit,
    code: CssCode,
    basis: LogicalBasis,
    ml: BitMatrix,
    target_f: BitMatrix,
) -> VerificationReport:
    """Check a circuit against a target symplectic matrix and logical action.

    Stabilizer generators must map into the stabilizer group with sign ``+1``;
    logical images must match ``ml L`` exactly in ``(x, z)`` and their signs are
    only recorded.
    """
    if c.n != code.n:
        raise ValueError(f"circuit on {c.n} qubits, code on {code.n}")
    f, _ = circuit_to_symplectic(c)
    symplectic_ok = bool(np.array_equal(f, gf2.asbits(target_f, 2)))

    gens = stabilizer_generators(code)
    signs = [stabilizer_sign(code, im) for im in conjugate_many(c, gens)]

    l = l_matrix(basis)
    n, k = code.n, basis.k
    target = gf2.matmul(gf2.asbits(ml, 2), l.matrix)
    logicals = [SignedPauli.from_symplectic(row) for row in l.matrix]
    images = []
    for i, im in enumerate(conjugate_many(c, logicals)):
        name = f"{'X' if i < k else 'Z'}[{basis.labels[i % k]}]"
        images.append(LogicalImage(name, target[i], im.symplectic(), im.sign))
    return VerificationReport(symplectic_ok, signs, images)


# dense simulation

_SQ = {
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
}
_TQ = {
    GateKind.CNOT: np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex),
    GateKind.CZ: np.diag([1, 1, 1, -1]).astype(complex),
    GateKind.SWAP: np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex),
}

DENSE_MAX_QUBITS = 12
TOLERANCE = 1e-9


def gate_matrix(g: Gate) -> np.ndarray:
    """Dense matrix of one gate on its own qubits (first qubit most significant)."""
    return _SQ[g.kind] if g.kind in _SQ else _TQ[g.kind]


def apply_dense(state: np.ndarray, g: Gate) -> np.ndarray:
    """Apply a gate to a state tensor of shape ``(2,) * n``; qubit 0 is the leading axis."""
    u = gate_matrix(g)
    q = list(g.qubits)
    u = u.reshape((2,) * (2 * len(q)))
    axes_in = list(range(len(q), 2 * len(q)))
    out = np.tensordot(u, state, axes=(axes_in, q))
    return np.moveaxis(out, list(range(len(q))), q)


def run_dense(c: Circuit, state: np.ndarray) -> np.ndarray:
    state = state.reshape((2,) * c.n)
    for g in c.gates:
        state = apply_dense(state, g)
    return state.reshape(-1)


def circuit_unitary(c: Circuit) -> np.ndarray:
    """Full ``2^n x 2^n`` unitary; for small test circuits only."""
    if c.n > 10:
        raise ValueError("n too large for a full unitary")
    dim = 2 ** c.n
    cols = [run_dense(c, np.eye(dim, dtype=complex)[:, j]) for j in range(dim)]
    return np.array(cols).T


def pauli_matrix(p: SignedPauli) -> np.ndarray:
    """Dense ``sign * E(x, z)``."""
    out = np.array([[1]], dtype=complex)
    for a, b in zip(p.x, p.z):
        factor = {(0, 0): np.eye(2), (1, 0): _SQ[GateKind.X], (0, 1): _SQ[GateKind.Z], (1, 1): _SQ[GateKind.Y]}
        out = np.kron(out, factor[(int(a), int(b))])
    return p.sign * out


def _apply_x_string(state: np.ndarray, x: np.ndarray) -> np.ndarray:
    axes = [i for i in range(state.ndim) if x[i]]
    return np.flip(state, axis=axes) if axes else state


def code_basis_states(code: CssCode, basis: LogicalBasis) -> np.ndarray:
    """Columns ``|j_L>`` for ``j`` in ``0..2^k-1``, logical qubit 0 most significant.

    ``|0_L>`` is the projection of ``|0...0>`` onto the joint +1 eigenspace of the
    X stabilizers; it is also fixed by every Z stabilizer and every logical Z.
    """
    n, k = code.n, basis.k
    state = np.zeros((2,) * n, dtype=complex)
    state[(0,) * n] = 1
    for row in code.hx:
        state = (state + _apply_x_string(state, row)) / 2
    state /= np.linalg.norm(state)
    cols = []
    for bits in itertools.product((0, 1), repeat=k):
        s = state
        for i, b in enumerate(bits):
            if b:
                s = _apply_x_string(s, basis.x_ops[i])
        cols.append(s.reshape(-1))
    return np.array(cols).T


_LOGICAL_KIND = {
    "phase": GateKind.S,
    "hadamard": GateKind.H,
    "cnot": GateKind.CNOT,
    "cz": GateKind.CZ,
}


def logical_gate_matrix(gate: LogicalGateSpec, basis: LogicalBasis) -> np.ndarray:
    """Target ``2^k x 2^k`` unitary on the logical computational basis."""
    k, idx = logical_index(gate, basis)
    return circuit_unitary(Circuit(k, [Gate(_LOGICAL_KIND[gate.kind], tuple(idx))]))


@dataclass
class DenseResult:
    ok: bool
    preserves_codespace: bool
    frame: str | None
    max_error: float

    def __bool__(self) -> bool:
        return self.ok


def _logical_paulis(k: int):
    for letters in itertools.product("IXYZ", repeat=k):
        p = SignedPauli.from_string("".join(letters))
        yield "".join(letters), pauli_matrix(p)


def dense_check(
    c: Circuit,
    code: CssCode,
    basis: LogicalBasis,
    gate: LogicalGateSpec | None,
    strict: bool = False,
) -> DenseResult:
    """Simulate ``c`` on the encoded basis and compare with the target logical gate.

    The induced ``2^k x 2^k`` action must equal ``G P`` up to a global phase,
    where ``G`` is the target and ``P`` is a logical Pauli frame (``P = I`` when
    ``strict``). ``gate=None`` targets the logical identity.
    """
    if code.n > DENSE_MAX_QUBITS:
        raise ValueError(f"n too large for the dense oracle ({code.n} > {DENSE_MAX_QUBITS})")
    if c.n != code.n:
        raise ValueError(f"circuit on {c.n} qubits, code on {code.n}")
    states = code_basis_states(code, basis)
    images = np.array([run_dense(c, states[:, j]) for j in range(states.shape[1])]).T
    m = states.conj().T @ images
    leak = float(np.max(np.abs(np.linalg.norm(images, axis=0) ** 2 - np.sum(np.abs(m) ** 2, axis=0))))
    preserves = leak < TOLERANCE
    k = basis.k
    target = np.eye(2 ** k, dtype=complex) if gate is None else logical_gate_matrix(gate, basis)
    best = np.inf
    frame = None
    candidates = [("I" * k, np.eye(2 ** k))] if strict else _logical_paulis(k)
    for name, p in candidates:
        t = target @ p
        pos = np.unravel_index(np.argmax(np.abs(t)), t.shape)
        if abs(m[pos]) < 0.5:
            continue
        phase = m[pos] / t[pos]
        err = float(np.max(np.abs(m - phase * t))) + abs(abs(phase) - 1)
        if err < best:
            best, frame = err, name
    ok = bool(preserves and best < TOLERANCE)
    return DenseResult(ok, bool(preserves), frame if ok else None, float(best))


def dense_oracle(c: Circuit, code: CssCode, basis: LogicalBasis, gate: LogicalGateSpec | None, strict: bool = False) -> bool:
    return dense_check(c, code, basis, gate, strict).ok
