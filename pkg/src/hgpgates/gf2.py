"""Dense GF(2) linear algebra on numpy ``uint8`` arrays.

Vectors are 1-d arrays and matrices are 2-d arrays with entries in {0, 1}.
All routines return fresh arrays and never mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

BitVector = np.ndarray
BitMatrix = np.ndarray


def asbits(a, ndim: int | None = None) -> np.ndarray:
    """Coerce ``a`` to a ``uint8`` array reduced mod 2."""
    arr = np.asarray(a)
    if arr.dtype == bool:
        arr = arr.astype(np.uint8)
    else:
        arr = (arr.astype(np.int64) & 1).astype(np.uint8)
    if ndim is not None and arr.ndim != ndim:
        if ndim == 2 and arr.ndim == 1:
            arr = arr.reshape(1, -1)
        else:
            raise ValueError(f"expected a {ndim}-d array, got shape {arr.shape}")
    return arr


def zeros(rows: int, cols: int) -> BitMatrix:
    return np.zeros((rows, cols), dtype=np.uint8)


def identity(n: int) -> BitMatrix:
    return np.eye(n, dtype=np.uint8)


def unit(n: int, i: int) -> BitVector:
    """Length-``n`` standard basis vector with a 1 at (0-based) position ``i``."""
    e = np.zeros(n, dtype=np.uint8)
    e[i] = 1
    return e


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix (or matrix-vector) product over GF(2)."""
    return ((np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) & 1).astype(np.uint8)


def outer(u: BitVector, v: BitVector) -> BitMatrix:
    """The rank-one matrix ``u^T v``."""
    return np.outer(asbits(u), asbits(v)).astype(np.uint8)


def weight(v: BitVector) -> int:
    """Hamming weight."""
    return int(np.count_nonzero(v))


def support(v: BitVector) -> list[int]:
    """Sorted 0-based positions of the nonzero entries of ``v``."""
    return [int(i) for i in np.flatnonzero(v)]


def dot(u: BitVector, v: BitVector) -> int:
    return int(np.count_nonzero(np.asarray(u, dtype=bool) & np.asarray(v, dtype=bool)) & 1)


def _echelon(m: BitMatrix, columns: Iterable[int]) -> tuple[BitMatrix, list[tuple[int, int]]]:
    """Fully reduce ``m`` choosing pivots in the given column order.

    Returns the reduced matrix and the (row, column) pivot pairs. Rows are
    searched in their original order, so the result is deterministic.
    """
    r = asbits(m, 2).copy()
    pivots: list[tuple[int, int]] = []
    used = np.zeros(r.shape[0], dtype=bool)
    for col in columns:
        candidates = np.flatnonzero((r[:, col] == 1) & ~used)
        if candidates.size == 0:
            continue
        p = int(candidates[0])
        used[p] = True
        others = np.flatnonzero(r[:, col] == 1)
        others = others[others != p]
        r[others] ^= r[p]
        pivots.append((p, col))
    return r, pivots


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form with pivot columns scanned left to right.

    Returns the reduced matrix with pivot rows moved to the top and the list
    of pivot columns.
    """
    m = asbits(m, 2)
    r, pivots = _echelon(m, range(m.shape[1]))
    order = [p for p, _ in pivots]
    taken = set(order)
    rest = [i for i in range(r.shape[0]) if i not in taken]
    return r[order + rest], [c for _, c in pivots]


def rank(m: BitMatrix) -> int:
    """GF(2) rank by Gaussian elimination."""
    m = asbits(m, 2)
    if m.size == 0:
        return 0
    return len(_echelon(m, range(m.shape[1]))[1])


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """A basis of the right null space ``{v : m v = 0}``.

    The basis has ``cols - rank`` vectors, one per free column of the
    reduced echelon form.
    """
    m = asbits(m, 2)
    n = m.shape[1]
    if m.shape[0] == 0:
        return [unit(n, i) for i in range(n)]
    r, pivots = rref(m)
    pivot_cols = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        v = unit(n, free)
        for row, col in enumerate(pivots):
            if r[row, free]:
                v[col] = 1
        basis.append(v)
    return basis


def solve(a: BitMatrix, b: BitVector) -> BitVector | None:
    """A solution ``x`` of ``a x = b``, or ``None`` when inconsistent.

    Free variables are set to zero.
    """
    a = asbits(a, 2)
    b = asbits(b, 1)
    if a.shape[0] != b.shape[0]:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    r, pivots = _echelon(aug, range(a.shape[1]))
    pivot_rows = {p for p, _ in pivots}
    for i in range(r.shape[0]):
        if i not in pivot_rows and r[i, -1]:
            return None
    x = np.zeros(a.shape[1], dtype=np.uint8)
    for p, c in pivots:
        x[c] = r[p, -1]
    return x


def in_row_space(m: BitMatrix, v: BitVector) -> bool:
    m = asbits(m, 2)
    if m.shape[0] == 0:
        return not np.any(v)
    return solve(m.T, v) is not None


def row_coefficients(m: BitMatrix, v: BitVector) -> BitVector | None:
    """Coefficients ``c`` with ``c m = v`` or ``None``."""
    m = asbits(m, 2)
    if m.shape[0] == 0:
        return np.zeros(0, dtype=np.uint8) if not np.any(v) else None
    return solve(m.T, v)


def inverse(m: BitMatrix) -> BitMatrix:
    """Inverse of a square invertible matrix over GF(2)."""
    m = asbits(m, 2)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    aug = np.concatenate([m, identity(n)], axis=1)
    r, pivots = _echelon(aug, range(n))
    if len(pivots) != n:
        raise ValueError("matrix is singular over GF(2)")
    out = np.zeros((n, n), dtype=np.uint8)
    for p, c in pivots:
        out[c] = r[p, n:]
    return out


def kron(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Kronecker product; 1-d inputs give a 1-d result."""
    return (np.kron(asbits(a), asbits(b)) & 1).astype(np.uint8)


@dataclass(frozen=True)
class SltBasis:
    """A strongly lower triangular basis.

    ``vectors[j]`` is 1 at ``pivots[j]``, vanishes above it, and every other
    vector vanishes at ``pivots[j]``. Pivots are 0-based positions.
    """

    vectors: np.ndarray
    pivots: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.pivots)

    def __iter__(self):
        return iter(self.vectors)

    def by_pivot(self, pivot: int) -> BitVector:
        return self.vectors[self.pivots.index(pivot)]

    def check(self) -> None:
        if len(set(self.pivots)) != len(self.pivots):
            raise ValueError("pivots are not distinct")
        for j, (v, p) in enumerate(zip(self.vectors, self.pivots)):
            if v[p] != 1 or np.any(v[p + 1:]):
                raise ValueError(f"vector {j} is not lower triangular at pivot {p}")
            for t, w in enumerate(self.vectors):
                if t != j and w[p]:
                    raise ValueError(f"vector {t} is nonzero at pivot {p} of vector {j}")


def slt_normalize(basis: Sequence[BitVector] | BitMatrix, length: int | None = None) -> SltBasis:
    """Reduce a basis to strongly lower triangular form.

    Pivot columns are taken from the highest position downward and each pivot
    column is cleared in all other vectors, so the span is unchanged. Raises
    ``ValueError("not a basis")`` on dependent input.
    """
    if len(basis) == 0:
        if length is None:
            raise ValueError("the length of an empty basis must be given")
        return SltBasis(np.zeros((0, length), dtype=np.uint8), ())
    m = asbits(np.asarray(basis), 2)
    r, pivots = _echelon(m, range(m.shape[1] - 1, -1, -1))
    if len(pivots) != m.shape[0]:
        raise ValueError("not a basis")
    row_pivot = dict(pivots)
    out = SltBasis(r, tuple(row_pivot[i] for i in range(m.shape[0])))
    out.check()
    return out


def format_matrix(m: BitMatrix) -> str:
    """Text form: ``rows cols`` header, then one line of 0/1 per row."""
    m = asbits(m, 2)
    lines = [f"{m.shape[0]} {m.shape[1]}"]
    lines += [" ".join(str(int(x)) for x in row) for row in m]
    return "\n".join(lines) + "\n"


def parse_matrices(text: str) -> list[BitMatrix]:
    """Parse consecutive matrix blocks in the text format.

    Blank lines and ``#`` comments are ignored. Ragged or non-binary rows,
    and blocks with the wrong number of rows, raise ``ValueError``.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    out = []
    pos = 0
    while pos < len(lines):
        head = lines[pos].split()
        if len(head) != 2 or not all(h.isdigit() for h in head):
            raise ValueError(f"bad matrix header {lines[pos]!r}")
        rows, cols = int(head[0]), int(head[1])
        pos += 1
        if pos + rows > len(lines):
            raise ValueError(f"expected {rows} rows, found {len(lines) - pos}")
        m = np.zeros((rows, cols), dtype=np.uint8)
        for i in range(rows):
            tokens = lines[pos + i].split()
            if len(tokens) != cols:
                raise ValueError(f"row {i + 1} has {len(tokens)} entries, expected {cols}")
            if any(t not in ("0", "1") for t in tokens):
                raise ValueError(f"row {i + 1} has non-binary entries")
            m[i] = [int(t) for t in tokens]
        pos += rows
        out.append(m)
    return out


def parse_matrix(text: str) -> BitMatrix:
    blocks = parse_matrices(text)
    if len(blocks) != 1:
        raise ValueError(f"expected one matrix block, found {len(blocks)}")
    return blocks[0]
