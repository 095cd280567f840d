"""CSS and hypergraph product codes."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import gf2
from .gf2 import BitMatrix


class Sector(str, enum.Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class QubitIndex:
    """A physical qubit of an HGP code in grid coordinates (1-based)."""

    sector: Sector
    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col},{self.sector.value})"


@dataclass(frozen=True, order=True)
class LogicalQubitLabel:
    """A logical qubit named by its pair of kernel-basis pivots (1-based)."""

    sector: Sector
    row_pivot: int
    col_pivot: int

    def __str__(self) -> str:
        return f"{self.sector.value}:{self.row_pivot},{self.col_pivot}"

    @classmethod
    def parse(cls, text: str) -> "LogicalQubitLabel":
        """Parse the ``SECTOR:row,col`` syntax, e.g. ``L:3,3``."""
        try:
            sector, rest = text.strip().split(":")
            row, col = rest.split(",")
            return cls(Sector(sector.upper()), int(row), int(col))
        except ValueError as exc:
            raise ValueError(f"bad logical qubit label {text!r}; expected e.g. L:3,3") from exc


@dataclass(frozen=True, eq=False)
class CssCode:
    hx: BitMatrix
    hz: BitMatrix

    def __post_init__(self):
        object.__setattr__(self, "hx", gf2.asbits(self.hx, 2))
        object.__setattr__(self, "hz", gf2.asbits(self.hz, 2))

    @property
    def n(self) -> int:
        return self.hx.shape[1]

    @cached_property
    def k(self) -> int:
        return self.n - gf2.rank(self.hx) - gf2.rank(self.hz)

    @property
    def mx(self) -> int:
        return self.hx.shape[0]

    @property
    def mz(self) -> int:
        return self.hz.shape[0]

    @cached_property
    def h(self) -> BitMatrix:
        """The ``(mx + mz) x 2n`` block matrix ``[[hx, 0], [0, hz]]``."""
        n = self.n
        top = np.concatenate([self.hx, gf2.zeros(self.mx, n)], axis=1)
        bottom = np.concatenate([gf2.zeros(self.mz, n), self.hz], axis=1)
        return np.concatenate([top, bottom], axis=0)

    def independent_rows(self) -> list[int]:
        """Positions in ``h`` (X checks then Z checks) of a maximal independent set, first come first kept."""
        if self.h.shape[0] == 0:
            return []
        return gf2.rref(self.h.T)[1]

    def distance(self, max_n: int = 20) -> int | None:
        """Minimum logical weight by exhaustive search, ``None`` if ``n > max_n``."""
        if self.n > max_n or self.k == 0:
            return None
        return min(_min_logical_weight(self.hx, self.hz), _min_logical_weight(self.hz, self.hx))

    def summary(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "mx": self.mx,
            "mz": self.mz,
            "x_stabilizer_weights": [int(w) for w in self.hx.sum(axis=1)],
            "z_stabilizer_weights": [int(w) for w in self.hz.sum(axis=1)],
        }


def _min_logical_weight(checks: BitMatrix, stabilizers: BitMatrix) -> int:
    """Lightest element of ``ker(checks)`` outside the row space of ``stabilizers``."""
    basis = gf2.kernel_basis(checks)
    best = None
    for coeffs in itertools.product((0, 1), repeat=len(basis)):
        if not any(coeffs):
            continue
        v = gf2.matmul(np.array(coeffs, dtype=np.uint8), np.array(basis))
        w = gf2.weight(v)
        if best is not None and w >= best:
            continue
        if not gf2.in_row_space(stabilizers, v):
            best = w
    return best


def css_from_checks(hx: BitMatrix, hz: BitMatrix) -> CssCode:
    """Validate a pair of check matrices and build the CSS code."""
    hx = gf2.asbits(hx, 2)
    hz = gf2.asbits(hz, 2)
    if hx.shape[1] != hz.shape[1]:
        raise ValueError(f"dimension mismatch: hx has {hx.shape[1]} columns, hz has {hz.shape[1]}")
    if np.any(gf2.matmul(hx, hz.T)):
        raise ValueError("not CSS: hx hz^T != 0")
    return CssCode(hx, hz)


@dataclass(frozen=True, eq=False)
class HgpCode(CssCode):
    """Hypergraph product of two classical parity-check matrices.

    Qubits ``1..na*nb`` form the left ``na x nb`` grid and the remaining
    ``ma*mb`` the right grid, both in row-major order.
    """

    ha: BitMatrix = field(default=None)
    hb: BitMatrix = field(default=None)

    @property
    def na(self) -> int:
        return self.ha.shape[1]

    @property
    def ma(self) -> int:
        return self.ha.shape[0]

    @property
    def nb(self) -> int:
        return self.hb.shape[1]

    @property
    def mb(self) -> int:
        return self.hb.shape[0]

    @property
    def n_left(self) -> int:
        return self.na * self.nb

    @property
    def n_right(self) -> int:
        return self.ma * self.mb

    def constituent_dims(self) -> dict:
        ra, rb = gf2.rank(self.ha), gf2.rank(self.hb)
        return {
            "k_a": self.na - ra,
            "k_a_T": self.ma - ra,
            "k_b": self.nb - rb,
            "k_b_T": self.mb - rb,
        }

    def summary(self) -> dict:
        out = super().summary()
        out["sectors"] = {
            "left": [self.na, self.nb],
            "right": [self.ma, self.mb],
        }
        out.update(self.constituent_dims())
        return out


def hgp(ha: BitMatrix, hb: BitMatrix) -> HgpCode:
    """Hypergraph product code of ``ha`` (ma x na) and ``hb`` (mb x nb)."""
    ha = gf2.asbits(ha, 2)
    hb = gf2.asbits(hb, 2)
    ma, na = ha.shape
    mb, nb = hb.shape
    hx = np.concatenate([gf2.kron(ha, gf2.identity(nb)), gf2.kron(gf2.identity(ma), hb.T)], axis=1)
    hz = np.concatenate([gf2.kron(gf2.identity(na), hb), gf2.kron(ha.T, gf2.identity(mb))], axis=1)
    assert not np.any(gf2.matmul(hx, hz.T)), "hypergraph product is not CSS"
    return HgpCode(hx, hz, ha=ha, hb=hb)


def repetition_cycle(length: int) -> BitMatrix:
    """``length x length`` circulant with rows ``e_i + e_{i+1 mod length}``."""
    m = gf2.zeros(length, length)
    for i in range(length):
        m[i, i] ^= 1
        m[i, (i + 1) % length] ^= 1
    return m


def toric(L: int) -> HgpCode:
    """The ``[[2L^2, 2, L]]`` toric code as an HGP of two cyclic repetition codes."""
    if L < 2:
        raise ValueError("toric code needs L >= 2")
    h = repetition_cycle(L)
    return hgp(h, h)


def qubit_to_linear(q: QubitIndex, code: HgpCode) -> int:
    """1-based linear index of a grid qubit."""
    if q.sector is Sector.LEFT:
        rows, cols, offset = code.na, code.nb, 0
    else:
        rows, cols, offset = code.ma, code.mb, code.n_left
    if not (1 <= q.row <= rows and 1 <= q.col <= cols):
        raise ValueError(f"qubit {q} out of range for a {rows}x{cols} sector")
    return offset + (q.row - 1) * cols + q.col


def linear_to_qubit(index: int, code: HgpCode) -> QubitIndex:
    """Inverse of :func:`qubit_to_linear`."""
    if not 1 <= index <= code.n:
        raise ValueError(f"linear index {index} out of range 1..{code.n}")
    if index <= code.n_left:
        r, c = divmod(index - 1, code.nb)
        return QubitIndex(Sector.LEFT, r + 1, c + 1)
    r, c = divmod(index - 1 - code.n_left, code.mb)
    return QubitIndex(Sector.RIGHT, r + 1, c + 1)


def stabilizer_generators(code: CssCode) -> list:
    """X-type generators (rows of hx) followed by Z-type generators, all with sign +1."""
    from .pauli import SignedPauli

    n = code.n
    zero = np.zeros(n, dtype=np.uint8)
    gens = [SignedPauli(row.copy(), zero.copy()) for row in code.hx]
    gens += [SignedPauli(zero.copy(), row.copy()) for row in code.hz]
    return gens


def parse_code(text: str) -> CssCode:
    """Parse a code descriptor: ``toric L`` or two parity-check blocks ``ha``, ``hb``."""
    stripped = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    stripped = [ln for ln in stripped if ln]
    if stripped and stripped[0].split()[0].lower() == "toric":
        parts = stripped[0].split()
        if len(parts) != 2 or not parts[1].isdigit():
            raise ValueError(f"bad toric descriptor {stripped[0]!r}")
        return toric(int(parts[1]))
    blocks = gf2.parse_matrices(text)
    if len(blocks) != 2:
        raise ValueError(f"a code descriptor needs two parity-check blocks, found {len(blocks)}")
    return hgp(*blocks)
