"""Clock and shift matrices and the pairs they form.

The order-N shift A sends basis vector |c> to |c-1 mod N>; the clock B is
diag(1, w, ..., w^(N-1)) with w = e^(2*pi*i/N).  They satisfy A B = w B A
and A^N = B^N = 1, and at N = 2 reduce to the Pauli matrices sigma1 and
sigma3.  A block with commutation exponent t mod nhat is realized by the
pair (A, B^tau) of order N_t = nhat/gcd(t, nhat) with tau = t/gcd(t, nhat).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import BadOrder, DegenerateBlock
from .matrices import MonomialMatrix
from .phase import ONE, Phase

__all__ = [
    "WeylPair",
    "shift",
    "clock",
    "symmetric_pair",
    "weyl_pair_for",
    "sylvester",
    "sylvester_inverse",
    "hermitian_logs",
]


def shift(n: int) -> MonomialMatrix:
    """Cyclic shift: |c> -> |c-1 mod n>, i.e. ones on the superdiagonal."""
    if n < 1:
        raise BadOrder(f"order must be >= 1, got {n}")
    return MonomialMatrix(n, tuple((c - 1) % n for c in range(n)), (ONE,) * n)


def clock(n: int) -> MonomialMatrix:
    """diag(1, w, ..., w^(n-1)) with w = e^(2*pi*i/n)."""
    if n < 1:
        raise BadOrder(f"order must be >= 1, got {n}")
    return MonomialMatrix.diagonal(tuple(Phase(c, n) for c in range(n)))


@dataclass(frozen=True, slots=True)
class WeylPair:
    """Pair (a, b) with a b = omega^tau b a, a^order = b^order = 1."""

    a: MonomialMatrix
    b: MonomialMatrix
    order: int
    tau: int
    omega: Phase

    def commutator_phase(self) -> Phase:
        return self.omega ** self.tau


def weyl_pair_for(t_j: int, nhat: int, allow_degenerate: bool = False) -> WeylPair:
    """Realize the commutation phase e^(2*pi*i*t_j/nhat) on the smallest pair.

    With g = gcd(t_j, nhat) the pair has order nhat/g and uses the clock
    power tau = t_j/g, which is coprime to the order.  A vanishing t_j mod
    nhat means the pair commutes; that is an error unless allow_degenerate,
    in which case the trivial 1-dimensional pair is returned.
    """
    if nhat < 2:
        raise BadOrder(f"nhat must be >= 2, got {nhat}")
    t = t_j % nhat
    if t == 0:
        if allow_degenerate:
            one = MonomialMatrix.identity(1)
            return WeylPair(one, one, order=1, tau=0, omega=ONE)
        raise DegenerateBlock(f"t_j = {t_j} vanishes mod {nhat}")
    g = gcd(t, nhat)
    order = nhat // g
    tau = t // g
    return WeylPair(
        a=shift(order),
        b=clock(order) ** tau,
        order=order,
        tau=tau,
        omega=Phase(1, order),
    )


def symmetric_pair(nu: int) -> WeylPair:
    """Order-(2*nu+1) pair with the clock spectrum centered at zero.

    b = diag(w^-nu, ..., w^nu) is the balanced relabeling of the clock used
    by the odd-dimensional phase-space transform; a is the usual shift.
    """
    if nu < 0:
        raise BadOrder(f"nu must be >= 0, got {nu}")
    d = 2 * nu + 1
    b = MonomialMatrix.diagonal(tuple(Phase(c - nu, d) for c in range(d)))
    return WeylPair(a=shift(d), b=b, order=d, tau=1, omega=Phase(1, d))


def sylvester(n: int) -> np.ndarray:
    """The matrix S[j][k] = w^(j*k), which conjugates clock into shift."""
    if n < 1:
        raise BadOrder(f"order must be >= 1, got {n}")
    out = np.empty((n, n), dtype=complex)
    for j in range(n):
        for k in range(n):
            out[j, k] = Phase(j * k, n).to_complex()
    return out


def sylvester_inverse(n: int) -> np.ndarray:
    """Exact inverse (1/n) * w^(-j*k) of the Sylvester matrix."""
    out = np.empty((n, n), dtype=complex)
    for j in range(n):
        for k in range(n):
            out[j, k] = Phase(-j * k, n).to_complex() / n
    return out


def hermitian_logs(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian (Q, P) with clock = exp(2*pi*i*Q/n), shift = exp(2*pi*i*P/n).

    Q = diag(0..n-1); P is Q conjugated by the Sylvester matrix, using the
    identity shift = S clock S^(-1).
    """
    q = np.diag(np.arange(n)).astype(complex)
    s = sylvester(n)
    p = s @ q @ s.conj().T / n
    return q, p
