"""Monomial (generalized permutation) matrices and dense helpers.

Clock/shift generator words have exactly one nonzero entry per row and per
column, and that entry is a root of unity.  Such a matrix is stored as a
permutation plus a Phase per column: column c carries entry phase[c] in row
target[c].  Products, adjoints, tensor products and integer powers close
over this form and are computed exactly; sums of monomials fall back to
dense numpy arrays.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import lcm

import numpy as np

from .errors import DimensionMismatch
from .phase import ONE, Phase

__all__ = [
    "DEFAULT_TOL",
    "MonomialMatrix",
    "phase_sum",
    "tensor",
    "mat_mul",
    "adjoint",
    "trace_inner",
    "to_dense",
    "is_hermitian",
    "is_unitary",
    "max_abs_diff",
]

DEFAULT_TOL = 1e-10


def _exact_phase_sum(phases: list[Phase]) -> complex:
    """Sum a multiset of roots of unity, cancelling complete cosets exactly.

    Any full coset {z*w^j : j = 0..M-1} of the M-th roots of unity (M >= 2)
    sums to exactly zero, so it is removed before any floating evaluation.
    Geometric sums over a full cyclic orbit therefore come out as an exact
    0j or an exact integer multiple of one remaining root.

    A full coset of size m needs m distinct residues with positive count,
    so only m up to the live-residue count can cancel, and every coset that
    does cancel is anchored at some present residue.  Scanning those anchors
    keeps the work proportional to the input, not to the lcm of the orders.
    """
    if not phases:
        return 0j
    big = 1
    for p in phases:
        big = lcm(big, p.den)
    counts: Counter[int] = Counter((p.num * (big // p.den)) % big for p in phases)
    live = {res for res, c in counts.items() if c}
    for m in range(len(live), 1, -1):
        if big % m or m > len(live):
            continue
        step = big // m
        tried = set()
        for x in list(live):
            b = x % step
            if b in tried:
                continue
            tried.add(b)
            coset = range(b, big, step)
            k = min(counts.get(y, 0) for y in coset)
            if k:
                for y in coset:
                    counts[y] -= k
                    if counts[y] == 0:
                        live.discard(y)
    total = 0j
    for res, cnt in counts.items():
        if cnt:
            total += cnt * Phase(res, big).to_complex()
    return total


def phase_sum(phases) -> complex:
    """Exact sum of roots of unity; complete cosets cancel to a true zero."""
    return _exact_phase_sum(list(phases))


@dataclass(frozen=True, slots=True)
class MonomialMatrix:
    """Square matrix with entry phase[c] at (target[c], c) and zeros elsewhere."""

    dim: int
    target: tuple[int, ...]
    phase: tuple[Phase, ...]

    def __post_init__(self):
        if len(self.target) != self.dim or len(self.phase) != self.dim:
            raise DimensionMismatch("target/phase length must equal dim")
        if sorted(self.target) != list(range(self.dim)):
            raise ValueError("target must be a permutation of 0..dim-1")

    @staticmethod
    def identity(dim: int) -> "MonomialMatrix":
        return MonomialMatrix(dim, tuple(range(dim)), (ONE,) * dim)

    @staticmethod
    def diagonal(phases: tuple[Phase, ...]) -> "MonomialMatrix":
        d = len(phases)
        return MonomialMatrix(d, tuple(range(d)), tuple(phases))

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionMismatch(f"dims {self.dim} != {other.dim}")
        tgt = tuple(self.target[other.target[c]] for c in range(self.dim))
        ph = tuple(self.phase[other.target[c]] * other.phase[c] for c in range(self.dim))
        return MonomialMatrix(self.dim, tgt, ph)

    def adjoint(self) -> "MonomialMatrix":
        tgt = [0] * self.dim
        ph = [ONE] * self.dim
        for c in range(self.dim):
            tgt[self.target[c]] = c
            ph[self.target[c]] = self.phase[c].inverse()
        return MonomialMatrix(self.dim, tuple(tgt), tuple(ph))

    def inverse(self) -> "MonomialMatrix":
        # entries are unit phases, so the inverse is the adjoint
        return self.adjoint()

    def __pow__(self, k: int) -> "MonomialMatrix":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = MonomialMatrix.identity(self.dim)
        while k:
            if k & 1:
                acc = acc @ base
            base = base @ base
            k >>= 1
        return acc

    def tensor(self, other: "MonomialMatrix") -> "MonomialMatrix":
        """Kronecker product; the left factor is the slow (row-major) index."""
        d1, d2 = self.dim, other.dim
        tgt = []
        ph = []
        for c1 in range(d1):
            for c2 in range(d2):
                tgt.append(self.target[c1] * d2 + other.target[c2])
                ph.append(self.phase[c1] * other.phase[c2])
        return MonomialMatrix(d1 * d2, tuple(tgt), tuple(ph))

    def scale(self, z: Phase) -> "MonomialMatrix":
        return MonomialMatrix(self.dim, self.target, tuple(z * p for p in self.phase))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for c in range(self.dim):
            out[self.target[c], c] = self.phase[c].to_complex()
        return out

    def trace_exact(self) -> complex:
        return _exact_phase_sum(
            [self.phase[c] for c in range(self.dim) if self.target[c] == c]
        )

    def scalar_phase(self) -> Phase | None:
        """The Phase z when this matrix equals z * identity, else None."""
        if any(self.target[c] != c for c in range(self.dim)):
            return None
        first = self.phase[0]
        if any(p != first for p in self.phase):
            return None
        return first

    def is_identity(self) -> bool:
        return self.scalar_phase() == ONE


def to_dense(x) -> np.ndarray:
    if isinstance(x, MonomialMatrix):
        return x.to_dense()
    return np.asarray(x, dtype=complex)


def tensor(a, b):
    """Kronecker product, monomial when both factors are monomial."""
    if isinstance(a, MonomialMatrix) and isinstance(b, MonomialMatrix):
        return a.tensor(b)
    return np.kron(to_dense(a), to_dense(b))


def mat_mul(a, b):
    """Matrix product, monomial when both factors are monomial."""
    if isinstance(a, MonomialMatrix) and isinstance(b, MonomialMatrix):
        return a @ b
    da, db = to_dense(a), to_dense(b)
    if da.shape[1] != db.shape[0]:
        raise DimensionMismatch(f"inner dims {da.shape[1]} != {db.shape[0]}")
    return da @ db


def adjoint(a):
    if isinstance(a, MonomialMatrix):
        return a.adjoint()
    return to_dense(a).conj().T


def trace_inner(x, y) -> complex:
    """Frobenius pairing Tr[x^dagger y].

    For two monomial operands the trace is evaluated by exact coset
    cancellation, so orthogonality of clock/shift basis words comes out as
    a bit-exact 0 or integer, never a 1e-16 residue.
    """
    if isinstance(x, MonomialMatrix) and isinstance(y, MonomialMatrix):
        if x.dim != y.dim:
            raise DimensionMismatch(f"dims {x.dim} != {y.dim}")
        return (x.adjoint() @ y).trace_exact()
    dx, dy = to_dense(x), to_dense(y)
    if dx.shape != dy.shape or dx.shape[0] != dx.shape[1]:
        raise DimensionMismatch(f"shapes {dx.shape} vs {dy.shape}")
    return complex(np.vdot(dx, dy))


def max_abs_diff(a, b) -> float:
    da, db = to_dense(a), to_dense(b)
    if da.shape != db.shape:
        raise DimensionMismatch(f"shapes {da.shape} vs {db.shape}")
    return float(np.max(np.abs(da - db))) if da.size else 0.0


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    d = to_dense(a)
    if d.shape[0] != d.shape[1]:
        raise DimensionMismatch("hermiticity needs a square matrix")
    return float(np.max(np.abs(d - d.conj().T))) <= tol


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    d = to_dense(a)
    if d.shape[0] != d.shape[1]:
        raise DimensionMismatch("unitarity needs a square matrix")
    return float(np.max(np.abs(d.conj().T @ d - np.eye(d.shape[0])))) <= tol
