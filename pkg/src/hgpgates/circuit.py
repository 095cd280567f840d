"""Gate-level circuit IR, metrics and text formats.

Gate qubits are 0-based array positions; user-facing output that talks about
code qubits adds one.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .codes import LogicalQubitLabel


class GateKind(str, enum.Enum):
    H = "H"
    S = "S"
    CNOT = "CNOT"
    CZ = "CZ"
    SWAP = "SWAP"
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def arity(self) -> int:
        return 2 if self in (GateKind.CNOT, GateKind.CZ, GateKind.SWAP) else 1


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    qubits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if len(self.qubits) != self.kind.arity:
            raise ValueError(f"{self.kind.value} takes {self.kind.arity} qubit(s), got {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"{self.kind.value} on repeated qubit {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative qubit index in {self.qubits}")

    def __str__(self) -> str:
        return f"{self.kind.value}({','.join(str(q) for q in self.qubits)})"


def H(q):
    return Gate(GateKind.H, (q,))


def S(q):
    return Gate(GateKind.S, (q,))


def X(q):
    return Gate(GateKind.X, (q,))


def Y(q):
    return Gate(GateKind.Y, (q,))


def Z(q):
    return Gate(GateKind.Z, (q,))


def CNOT(control, target):
    return Gate(GateKind.CNOT, (control, target))


def CZ(a, b):
    return Gate(GateKind.CZ, (a, b))


def SWAP(a, b):
    return Gate(GateKind.SWAP, (a, b))


@dataclass
class Circuit:
    n: int
    gates: list[Gate] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.gates = list(self.gates)
        for g in self.gates:
            self._check(g)

    def _check(self, g: Gate) -> None:
        if max(g.qubits) >= self.n:
            raise ValueError(f"gate {g} out of range for {self.n} qubits")

    def append(self, g: Gate) -> None:
        self._check(g)
        self.gates.append(g)

    def extend(self, gates) -> None:
        for g in gates:
            self.append(g)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        if other.n != self.n:
            raise ValueError("circuits act on different numbers of qubits")
        return Circuit(self.n, self.gates + other.gates, dict(self.meta))

    def count(self, kind: GateKind | str | None = None) -> int:
        if kind is None:
            return len(self.gates)
        kind = GateKind(kind)
        return sum(1 for g in self.gates if g.kind is kind)

    def support(self) -> list[int]:
        return sorted({q for g in self.gates for q in g.qubits})

    def layers(self) -> list[list[Gate]]:
        """Greedy as-soon-as-possible layering."""
        last: dict[int, int] = {}
        out: list[list[Gate]] = []
        for g in self.gates:
            layer = 1 + max((last.get(q, -1) for q in g.qubits), default=-1)
            if layer == len(out):
                out.append([])
            out[layer].append(g)
            for q in g.qubits:
                last[q] = layer
        return out

    def depth(self) -> int:
        return len(self.layers())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.n == other.n and self.gates == other.gates


def metrics(c: Circuit) -> tuple[int, int]:
    """``(support size, greedy depth)``."""
    return len(c.support()), c.depth()


@dataclass(frozen=True)
class LogicalGateSpec:
    """A targeted logical gate. For ``cnot`` the labels are (control, target)."""

    kind: str
    labels: tuple

    KINDS = ("phase", "hadamard", "cnot", "cz")

    def __post_init__(self):
        kind = self.kind.lower()
        if kind not in self.KINDS:
            raise ValueError(f"unknown logical gate {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        want = 2 if kind in ("cnot", "cz") else 1
        if len(labels) != want:
            raise ValueError(f"{kind} needs {want} label(s), got {len(labels)}")
        if want == 2 and labels[0] == labels[1]:
            raise ValueError(f"{kind} needs two distinct logical qubits")

    def __str__(self) -> str:
        return f"{self.kind}[{' '.join(str(lb) for lb in self.labels)}]"

    def to_json(self) -> dict:
        return {"kind": self.kind, "labels": [str(lb) for lb in self.labels]}

    @classmethod
    def from_json(cls, obj: dict) -> "LogicalGateSpec":
        return cls(obj["kind"], tuple(LogicalQubitLabel.parse(s) for s in obj["labels"]))


def phase(label) -> LogicalGateSpec:
    return LogicalGateSpec("phase", (label,))


def hadamard(label) -> LogicalGateSpec:
    return LogicalGateSpec("hadamard", (label,))


def cnot(control, target) -> LogicalGateSpec:
    return LogicalGateSpec("cnot", (control, target))


def cz(a, b) -> LogicalGateSpec:
    return LogicalGateSpec("cz", (a, b))


# text formats

def to_json(c: Circuit) -> str:
    obj = {
        "n": c.n,
        "gates": [{"kind": g.kind.value, "qubits": list(g.qubits)} for g in c.gates],
    }
    if c.meta:
        obj["meta"] = c.meta
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def from_json(text: str, n: int | None = None) -> Circuit:
    """Parse :func:`to_json` output, or a bare gate array when ``n`` is given."""
    obj = json.loads(text)
    if isinstance(obj, list):
        if n is None:
            raise ValueError("a bare gate list has no qubit count; pass n")
        obj = {"n": n, "gates": obj}
    try:
        gates = [Gate(GateKind(g["kind"].upper()), tuple(g["qubits"])) for g in obj["gates"]]
        return Circuit(int(obj["n"]), gates, dict(obj.get("meta", {})))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed circuit JSON: {exc}") from exc


_QASM_NAMES = {
    GateKind.H: "h",
    GateKind.S: "s",
    GateKind.CNOT: "cx",
    GateKind.CZ: "cz",
    GateKind.SWAP: "swap",
    GateKind.X: "x",
    GateKind.Y: "y",
    GateKind.Z: "z",
}


def to_qasm(c: Circuit) -> str:
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{c.n}];"]
    for g in c.gates:
        args = ",".join(f"q[{q}]" for q in g.qubits)
        lines.append(f"{_QASM_NAMES[g.kind]} {args};")
    return "\n".join(lines) + "\n"


def to_ascii(c: Circuit) -> str:
    """One column per greedy layer, one row per touched qubit (1-based labels)."""
    touched = c.support()
    if not touched:
        return "(empty circuit)\n"
    layers = c.layers()
    cells = {q: ["-"] * len(layers) for q in touched}
    for t, layer in enumerate(layers):
        for g in layer:
            if g.kind is GateKind.CNOT:
                a, b = g.qubits
                cells[a][t] = f"@{b + 1}"
                cells[b][t] = f"+{a + 1}"
            elif g.kind in (GateKind.CZ, GateKind.SWAP):
                a, b = g.qubits
                mark = "Z" if g.kind is GateKind.CZ else "x"
                cells[a][t] = f"{mark}{b + 1}"
                cells[b][t] = f"{mark}{a + 1}"
            else:
                cells[g.qubits[0]][t] = g.kind.value
    width = max(len(s) for row in cells.values() for s in row)
    label_w = len(str(max(touched) + 1)) + 1
    out = []
    for q in touched:
        row = "-".join(s.center(width, "-") for s in cells[q])
        out.append(f"q{q + 1}".rjust(label_w + 1) + ": -" + row + "-")
    return "\n".join(out) + "\n"
