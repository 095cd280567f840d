"""Hermitian Pauli operators with a real sign.

A :class:`SignedPauli` stands for ``sign * E(x, z)`` where
``E(x, z) = i^(x.z) X^x Z^z``, so a position with ``x = z = 1`` holds a ``Y``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2
from .gf2 import BitVector

_LETTERS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS = {v: k for k, v in _LETTERS.items()}


@dataclass(eq=False)
class SignedPauli:
    x: BitVector
    z: BitVector
    sign: int = 1

    def __post_init__(self):
        self.x = gf2.asbits(self.x, 1)
        self.z = gf2.asbits(self.z, 1)
        if self.x.shape != self.z.shape:
            raise ValueError("x and z parts have different lengths")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def n(self) -> int:
        return self.x.shape[0]

    @classmethod
    def identity(cls, n: int) -> "SignedPauli":
        return cls(np.zeros(n, np.uint8), np.zeros(n, np.uint8))

    @classmethod
    def from_symplectic(cls, v: BitVector, sign: int = 1) -> "SignedPauli":
        v = gf2.asbits(v, 1)
        n = v.shape[0] // 2
        return cls(v[:n].copy(), v[n:].copy(), sign)

    @classmethod
    def from_string(cls, text: str) -> "SignedPauli":
        """Parse e.g. ``"-XIZY"``."""
        text = text.strip()
        sign = 1
        if text[:1] in "+-":
            sign = -1 if text[0] == "-" else 1
            text = text[1:]
        try:
            bits = [_BITS[c] for c in text.upper()]
        except KeyError as exc:
            raise ValueError(f"bad Pauli letter in {text!r}") from exc
        x, z = zip(*bits) if bits else ((), ())
        return cls(np.array(x, np.uint8), np.array(z, np.uint8), sign)

    def symplectic(self) -> BitVector:
        return np.concatenate([self.x, self.z])

    def copy(self) -> "SignedPauli":
        return SignedPauli(self.x.copy(), self.z.copy(), self.sign)

    def weight(self) -> int:
        return gf2.weight(self.x | self.z)

    def commutes(self, other: "SignedPauli") -> bool:
        return (gf2.dot(self.x, other.z) ^ gf2.dot(self.z, other.x)) == 0

    def __mul__(self, other: "SignedPauli") -> "SignedPauli":
        """Operator product; both factors must commute so the result is Hermitian."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        if not self.commutes(other):
            raise ValueError("product of anticommuting Paulis is not Hermitian")
        a, b = self.x.astype(np.int64), self.z.astype(np.int64)
        c, d = other.x.astype(np.int64), other.z.astype(np.int64)
        x, z = self.x ^ other.x, self.z ^ other.z
        # E(a,b) E(c,d) = i^(a.b + c.d + 2 b.c - x.z) E(a+c, b+d)
        power = int(a @ b + c @ d + 2 * (b @ c) - int(x.astype(np.int64) @ z.astype(np.int64))) % 4
        assert power % 2 == 0
        sign = self.sign * other.sign * (-1 if power == 2 else 1)
        return SignedPauli(x, z, sign)

    def __neg__(self) -> "SignedPauli":
        return SignedPauli(self.x.copy(), self.z.copy(), -self.sign)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPauli):
            return NotImplemented
        return (
            self.sign == other.sign
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def same_support(self, other: "SignedPauli") -> bool:
        return np.array_equal(self.x, other.x) and np.array_equal(self.z, other.z)

    def __str__(self) -> str:
        body = "".join(_LETTERS[(int(a), int(b))] for a, b in zip(self.x, self.z))
        return ("+" if self.sign == 1 else "-") + body

    __repr__ = __str__
