"""Linear combinations of generators and their power and diagonalization laws.

For the anticommuting family, L = sum_j lam_j e_j squares to the scalar
Lambda^2 = sum lam_j^2, and conjugation by (L + Lambda e_axis), suitably
normalized, maps L onto the single generator Lambda e_axis.  For the
uniformly w-commuting family of order N the N-th power is the scalar
sum lam_j^N instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadOrder,
    DimensionMismatch,
    EvenGeneratorCount,
    GcaError,
    NotReal,
    ZeroVector,
)
from .matrices import DEFAULT_TOL, max_abs_diff
from .repbuilder import Representation, clifford_generators, ordered_gca_generators

__all__ = [
    "LSpec",
    "l_matrix",
    "family_rep",
    "family_order",
    "sigma_operation",
    "DiagonalizationResult",
    "diagonalize_l",
    "NthPowerReport",
    "nth_power_check",
]


@dataclass(frozen=True, slots=True)
class LSpec:
    """Coefficient vector attached to a concrete generator family."""

    lam: tuple
    rep: Representation

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(complex(x) for x in self.lam))
        if len(self.lam) != len(self.rep.gens):
            raise DimensionMismatch(
                f"{len(self.lam)} coefficients for {len(self.rep.gens)} generators"
            )


def l_matrix(spec: LSpec) -> np.ndarray:
    out = np.zeros((spec.rep.dim, spec.rep.dim), dtype=complex)
    for lj, ej in zip(spec.lam, spec.rep.gens):
        out += lj * ej.to_dense()
    return out


def family_order(rep: Representation) -> int | None:
    """N when rep is the standard family (every t_jk = 1, every order = nhat)."""
    t = rep.spec.t
    for j in range(t.n):
        for k in range(j + 1, t.n):
            if t.t[j][k] != 1:
                return None
    if any(nj != t.nhat for nj in rep.spec.orders):
        return None
    return t.nhat


def family_rep(n: int, order: int) -> Representation:
    """Standard n-generator family of the given order (order 2 anticommutes)."""
    if order == 2:
        return clifford_generators(n)
    return ordered_gca_generators(n, order)


def sigma_operation(spec: LSpec, lam_new) -> LSpec:
    """Replace the final coefficient by a 3-generator block two sizes up.

    An odd family ends in the diagonal-word generator; tensoring one more
    clock/shift slot onto it splits that word into three new generators, so
    (lam_1..lam_2m, lam_last) on n = 2m+1 generators becomes
    (lam_1..lam_2m, a, b, c) on n+2.  The result is checked against direct
    block substitution:  the new L equals
    sum_(j<=2m) lam_j (e_j x 1) + e_(2m+1) x L3(a, b, c).
    """
    n = len(spec.lam)
    if n % 2 == 0:
        raise EvenGeneratorCount(f"need an odd generator count, got {n}")
    order = family_order(spec.rep)
    if order is None:
        raise BadOrder("sigma operation is defined on the standard families only")
    lam_new = tuple(complex(x) for x in lam_new)
    if len(lam_new) != 3:
        raise DimensionMismatch(f"replacement block takes 3 coefficients, got {len(lam_new)}")

    big = family_rep(n + 2, order)
    out = LSpec(spec.lam[:-1] + lam_new, big)

    inner3 = LSpec(lam_new, family_rep(3, order))
    ident = np.eye(order)
    direct = np.zeros((big.dim, big.dim), dtype=complex)
    for lj, ej in zip(spec.lam[:-1], spec.rep.gens[:-1]):
        direct += lj * np.kron(ej.to_dense(), ident)
    direct += np.kron(spec.rep.gens[-1].to_dense(), l_matrix(inner3))
    dev = max_abs_diff(l_matrix(out), direct)
    if dev > 1e-12:
        raise GcaError(f"block substitution check failed, deviation {dev:.3e}")
    return out


@dataclass(frozen=True, slots=True)
class DiagonalizationResult:
    u: np.ndarray
    eig: np.ndarray
    axis: int
    used_fallback: bool
    big_lambda: float


def _axis_conjugator(lam, big_lambda, gens, axis, dim):
    # (L + Lambda e_axis) / sqrt(2 Lambda (Lambda + lam_axis)); hermitian involution
    m = np.zeros((dim, dim), dtype=complex)
    for lj, ej in zip(lam, gens):
        m += lj * ej.to_dense()
    m += big_lambda * gens[axis].to_dense()
    return m / math.sqrt(2.0 * big_lambda * (big_lambda + lam[axis]))


def diagonalize_l(spec: LSpec, tol: float = DEFAULT_TOL) -> DiagonalizationResult:
    """Unitary u with u L u^dagger = Lambda e_axis, for the anticommuting family.

    The default target axis is the second generator, which is diagonal, so
    the conjugated matrix is literally diagonal with entries +-Lambda.  When
    lam is nearly antiparallel to that axis (Lambda + lam_2 vanishes) the
    conjugation degenerates; the fallback routes through the generator with
    the largest coefficient and then rotates that axis onto the second, at
    the cost of a second factor in u.
    """
    if family_order(spec.rep) != 2:
        raise BadOrder("diagonalization requires the order-2 anticommuting family")
    lam = []
    for x in spec.lam:
        if abs(x.imag) > 0:
            raise NotReal(f"coefficients must be real, got {x}")
        lam.append(x.real)
    big_lambda = math.sqrt(sum(x * x for x in lam))
    if big_lambda == 0.0:
        raise ZeroVector("all coefficients vanish")

    n = len(lam)
    dim = spec.rep.dim
    gens = spec.rep.gens
    if n == 1:
        return DiagonalizationResult(
            u=np.eye(1, dtype=complex),
            eig=np.array([lam[0]]),
            axis=0,
            used_fallback=False,
            big_lambda=big_lambda,
        )

    axis = 1
    used_fallback = big_lambda + lam[axis] <= 1e-4 * big_lambda
    if not used_fallback:
        u = _axis_conjugator(lam, big_lambda, gens, axis, dim)
    else:
        step = max(range(n), key=lambda j: lam[j])
        u1 = _axis_conjugator(lam, big_lambda, gens, step, dim)
        # L' = Lambda e_step has zero coefficient on the target axis
        lam2 = [0.0] * n
        lam2[step] = big_lambda
        u2 = _axis_conjugator(lam2, big_lambda, gens, axis, dim)
        u = u2 @ u1

    transformed = u @ l_matrix(spec) @ u.conj().T
    target = big_lambda * gens[axis].to_dense()
    dev = max_abs_diff(transformed, target)
    if dev > max(tol, 1e-9 * big_lambda):
        raise GcaError(f"conjugation check failed, deviation {dev:.3e}")
    return DiagonalizationResult(
        u=u,
        eig=np.real(np.diag(transformed)),
        axis=axis,
        used_fallback=used_fallback,
        big_lambda=big_lambda,
    )


@dataclass(frozen=True, slots=True)
class NthPowerReport:
    order: int
    scalar: complex
    deviation: float
    passed: bool


def nth_power_check(spec: LSpec, tol: float = DEFAULT_TOL) -> NthPowerReport:
    """Measure L^N against the scalar sum_j lam_j^N on an order-N family."""
    order = family_order(spec.rep)
    if order is None:
        raise BadOrder("power law check is defined on the standard families only")
    scalar = sum(x**order for x in spec.lam)
    power = np.linalg.matrix_power(l_matrix(spec), order)
    dev = max_abs_diff(power, scalar * np.eye(spec.rep.dim)) / (1.0 + abs(scalar))
    return NthPowerReport(order=order, scalar=scalar, deviation=dev, passed=dev <= tol)
