import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_codes
from hgpgates import gf2
from hgpgates.circuit import CNOT, CZ, SWAP, Circuit, Gate, GateKind, H, S, X, Y, Z, cnot, cz, hadamard, phase
from hgpgates.codes import hgp, stabilizer_generators, toric
from hgpgates.logicals import logical_basis
from hgpgates.pauli import SignedPauli
from hgpgates.symplectic import gate_f, ml_for
from hgpgates.synth import synth_gate
from hgpgates.verify import (
    circuit_to_symplectic,
    circuit_unitary,
    code_basis_states,
    conjugate,
    dense_check,
    dense_oracle,
    pauli_matrix,
    stabilizer_sign,
    verify_logical,
)

CODES = small_codes()

ONE_QUBIT = [H(0), S(0), X(0), Y(0), Z(0)]
TWO_QUBIT = [CNOT(0, 1), CNOT(1, 0), CZ(0, 1), SWAP(0, 1)]

gates3 = st.sampled_from(
    [H(q) for q in range(3)]
    + [S(q) for q in range(3)]
    + [X(0), Y(1), Z(2)]
    + [CNOT(a, b) for a, b in itertools.permutations(range(3), 2)]
    + [CZ(0, 1), CZ(1, 2), SWAP(0, 2)]
)


def paulis(n):
    for letters in itertools.product("IXYZ", repeat=n):
        for sign in "+-":
            yield SignedPauli.from_string(sign + "".join(letters))


def dense_conjugate(c, p):
    u = circuit_unitary(c)
    return u @ pauli_matrix(p) @ u.conj().T


@pytest.mark.parametrize("gate", ONE_QUBIT + TWO_QUBIT, ids=str)
def test_tableau_rules_match_dense(gate):
    n = 1 if gate.kind.arity == 1 else 2
    c = Circuit(n, [gate])
    for p in paulis(n):
        assert np.allclose(pauli_matrix(conjugate(c, p)), dense_conjugate(c, p))


def test_conjugation_examples():
    assert conjugate(Circuit(1, [H(0)]), SignedPauli.from_string("X")) == SignedPauli.from_string("Z")
    assert conjugate(Circuit(1, [S(0)]), SignedPauli.from_string("X")) == SignedPauli.from_string("Y")
    assert conjugate(Circuit(1, [S(0)]), SignedPauli.from_string("Y")) == SignedPauli.from_string("-X")
    assert conjugate(Circuit(2, [CZ(0, 1)]), SignedPauli.from_string("XY")) == SignedPauli.from_string("-YX")
    with pytest.raises(ValueError):
        conjugate(Circuit(2, [H(0)]), SignedPauli.from_string("X"))


@given(st.lists(gates3, max_size=12))
def test_random_circuits_match_dense(gates):
    c = Circuit(3, gates)
    for text in ("XIZ", "YYI", "-ZXY", "IIY"):
        p = SignedPauli.from_string(text)
        assert np.allclose(pauli_matrix(conjugate(c, p)), dense_conjugate(c, p))


@given(gates3, st.sampled_from(list(paulis(3))))
def test_self_inverse_gates_conjugate_back(gate, p):
    if gate.kind is GateKind.S:
        return
    assert conjugate(Circuit(3, [gate, gate]), p) == p


@given(st.lists(gates3, max_size=8), st.lists(gates3, max_size=8))
def test_composition_order(g1, g2):
    c1, c2 = Circuit(3, g1), Circuit(3, g2)
    f1, f2 = circuit_to_symplectic(c1)[0], circuit_to_symplectic(c2)[0]
    assert np.array_equal(circuit_to_symplectic(c1 + c2)[0], gf2.matmul(f1, f2))


def test_symplectic_examples():
    f, signs = circuit_to_symplectic(Circuit(3, []))
    assert np.array_equal(f, gf2.identity(6)) and (signs == 1).all()
    example = gf2.asbits(
        [
            [1, 1, 0, 0, 0, 1],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 1, 1, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 1, 0, 1, 1, 0],
            [0, 0, 0, 0, 0, 1],
        ]
    )
    c = Circuit(3, [H(1), S(1), H(1), CZ(0, 2), CNOT(0, 1)])
    assert np.array_equal(circuit_to_symplectic(c)[0], example)


def test_stabilizer_sign():
    code = toric(2)
    gens = stabilizer_generators(code)
    assert all(stabilizer_sign(code, g) == 1 for g in gens)
    assert stabilizer_sign(code, -gens[0]) == -1
    y = gens[0] * gens[-1] if gens[0].commutes(gens[-1]) else None
    assert y is not None and stabilizer_sign(code, y) == 1
    basis = logical_basis(code)
    assert stabilizer_sign(code, SignedPauli(basis.x_ops[0], np.zeros(8, np.uint8))) == 0


def test_stabilizer_sign_against_enumeration():
    code = hgp([[1, 1]], [[1, 1]])
    gens = stabilizer_generators(code)
    group = {}
    for bits in itertools.product((0, 1), repeat=len(gens)):
        p = SignedPauli.identity(code.n)
        for b, g in zip(bits, gens):
            if b:
                p = p * g
        group[(tuple(p.x), tuple(p.z))] = p.sign
    for (x, z), sign in group.items():
        p = SignedPauli(np.array(x), np.array(z))
        assert stabilizer_sign(code, p) == sign


def test_verify_examples():
    code = toric(3)
    basis = logical_basis(code)
    spec = phase(basis.labels[0])
    c = synth_gate(code, basis, spec)
    assert verify_logical(c, code, basis, ml_for(spec, basis), gate_f(code, basis, spec)).verdict
    empty = Circuit(code.n, [])
    report = verify_logical(empty, code, basis, gf2.identity(4), gf2.identity(36))
    assert report.verdict and report.flipped() == []
    bad = verify_logical(empty, code, basis, ml_for(spec, basis), gate_f(code, basis, spec))
    assert not bad.verdict and not bad.symplectic_ok
    assert "fail" in bad.to_text() and bad.to_json()["verdict"] == "fail"


def test_logical_x_flips_z_checks_containing_qubit():
    code = toric(3)
    basis = logical_basis(code)
    spec = phase(basis.labels[0])
    c = synth_gate(code, basis, spec)
    q = gf2.support(basis.z_ops[0])[0]
    report = verify_logical(c + Circuit(code.n, [X(q)]), code, basis, ml_for(spec, basis), gate_f(code, basis, spec))
    expected = [code.mx + i for i in range(code.mz) if code.hz[i, q]]
    assert report.flipped() == expected and not report.verdict


def test_code_basis_states():
    code = toric(2)
    basis = logical_basis(code)
    states = code_basis_states(code, basis)
    assert np.allclose(states.conj().T @ states, np.eye(4))
    for g in stabilizer_generators(code):
        m = pauli_matrix(g)
        assert np.allclose(m @ states, states)
    for i in range(2):
        zbar = pauli_matrix(SignedPauli(np.zeros(8, np.uint8), basis.z_ops[i]))
        expected = np.array([(-1) ** ((j >> (1 - i)) & 1) for j in range(4)])
        assert np.allclose(zbar @ states, states * expected)


def test_dense_oracle_examples():
    small = CODES["rep2x2"]
    basis = logical_basis(small)
    spec = phase(basis.labels[0])
    assert dense_oracle(synth_gate(small, basis, spec), small, basis, spec)
    t2 = CODES["toric2"]
    b2 = logical_basis(t2)
    spec = cnot(*b2.labels)
    assert dense_oracle(synth_gate(t2, b2, spec), t2, b2, spec)
    assert not dense_oracle(Circuit(t2.n, []), t2, b2, phase(b2.labels[0]))
    assert dense_oracle(Circuit(t2.n, []), t2, b2, None, strict=True)
    with pytest.raises(ValueError, match="n too large"):
        dense_oracle(Circuit(18, []), toric(3), logical_basis(toric(3)), None)


def test_dense_frame_reporting():
    code = CODES["toric2"]
    basis = logical_basis(code)
    spec = hadamard(basis.labels[0])
    c = synth_gate(code, basis, spec)
    res = dense_check(c, code, basis, spec)
    assert res.ok and res.frame in ("YI", "XI", "ZI")
    assert not dense_check(c, code, basis, spec, strict=True).ok
    leaky = dense_check(Circuit(code.n, [X(0)]), code, basis, None)
    assert not leaky.preserves_codespace and not leaky.ok


@pytest.mark.parametrize("name", ["rep2x2", "toric2", "circ3_rep2", "rep4_rep2"])
def test_verifiers_agree(name):
    code = CODES[name]
    basis = logical_basis(code)
    labels = basis.labels
    specs = [phase(lb) for lb in labels] + [hadamard(lb) for lb in labels if _single_overlap(basis, lb)]
    for a, b in itertools.permutations(labels, 2):
        specs.append(cnot(a, b))
        specs.append(cz(a, b))
    for spec in specs:
        c = synth_gate(code, basis, spec)
        report = verify_logical(c, code, basis, ml_for(spec, basis), gate_f(code, basis, spec))
        assert report.verdict
        assert dense_oracle(c, code, basis, spec)


def _single_overlap(basis, label):
    i = basis.index(label)
    return gf2.dot(basis.x_ops[i], basis.z_ops[i]) == 1 and gf2.weight(basis.x_ops[i] & basis.z_ops[i]) == 1
