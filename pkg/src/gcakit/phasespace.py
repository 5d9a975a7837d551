"""Phase-space tools built on a single clock/shift pair.

Covers expansion of an arbitrary matrix over the unitary words A^k B^l,
the same expansion computed through diagonal slicing and a Fourier solve,
discrete Wigner tables in odd dimension, quadratic (canonical) changes of
the pair with their intertwining matrices, and magnetic translation
generators for rational flux triples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import (
    BadDeterminant,
    BadOrder,
    DimensionMismatch,
    EvenDimension,
    GcaError,
    IrrationalFlux,
    NotHermitian,
    NotReal,
    UnsupportedTransform,
)
from .matrices import DEFAULT_TOL, MonomialMatrix, max_abs_diff, phase_sum, to_dense
from .phase import Phase
from .repbuilder import GcaSpec, Representation, build_representation
from .report import Check, VerificationReport
from .skewnormal import validate_tmatrix
from .weylpairs import clock, shift

__all__ = [
    "weyl_word",
    "SchwingerCoeffs",
    "schwinger_coeffs",
    "schwinger_reconstruct",
    "DiagonalSliceDecomposition",
    "diagonal_slice_decomposition",
    "WignerTable",
    "wigner_forward",
    "wigner_inverse",
    "CanonicalParams",
    "compose_params",
    "canonical_pair",
    "CanonicalResult",
    "canonical_intertwiner",
    "MagneticLattice",
    "MagneticRep",
    "magnetic_translation_rep",
    "bloch_phase",
]


def weyl_word(order: int, k: int, l: int) -> MonomialMatrix:
    """The unitary word A^k B^l on the order-N clock/shift pair."""
    return (shift(order) ** k) @ (clock(order) ** l)


# ---------------------------------------------------------------------------
# expansion over the N^2 words A^k B^l

@dataclass(frozen=True, slots=True)
class SchwingerCoeffs:
    """coeffs[k, l] multiplies A^k B^l."""

    order: int
    coeffs: np.ndarray


def schwinger_coeffs(m, order: int | None = None) -> SchwingerCoeffs:
    """Expand a square matrix over the words:  mu_kl = Tr[(A^k B^l)^dag M] / N.

    The words are trace-orthogonal with norm N, so this inverts the sum
    M = sum_kl mu_kl A^k B^l exactly.
    """
    dense = to_dense(m)
    if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
        raise DimensionMismatch(f"need a square matrix, got shape {dense.shape}")
    n = dense.shape[0]
    if order is not None and order != n:
        raise DimensionMismatch(f"matrix is {n}-dimensional, order given as {order}")
    # (A^k B^l)[(c-k)%n, c] = w^(lc), so the trace pairing reads one shifted
    # diagonal of M against one character
    cols = np.arange(n)
    w = np.exp(2j * np.pi / n)
    coeffs = np.empty((n, n), dtype=complex)
    for k in range(n):
        diag = dense[(cols - k) % n, cols]
        for l in range(n):
            coeffs[k, l] = np.sum(w ** (-l * cols) * diag) / n
    return SchwingerCoeffs(order=n, coeffs=coeffs)


def schwinger_reconstruct(sc: SchwingerCoeffs) -> np.ndarray:
    n = sc.order
    out = np.zeros((n, n), dtype=complex)
    cols = np.arange(n)
    w = np.exp(2j * np.pi / n)
    for k in range(n):
        rows = (cols - k) % n
        for l in range(n):
            out[rows, cols] += sc.coeffs[k, l] * w ** (l * cols)
    return out


@dataclass(frozen=True, slots=True)
class DiagonalSliceDecomposition:
    """Same expansion reached through diagonal slices and a Fourier solve.

    r[k, j] = M[k, (k+j) % N] collects the j-th shifted diagonal along rows;
    each column r[:, j] equals S c_j for the character matrix S, and the
    solved c turns into coeffs[k, l] = w^(-kl) c[l, k].
    """

    order: int
    r: np.ndarray
    c: np.ndarray
    coeffs: np.ndarray


def diagonal_slice_decomposition(m) -> DiagonalSliceDecomposition:
    dense = to_dense(m)
    if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
        raise DimensionMismatch(f"need a square matrix, got shape {dense.shape}")
    n = dense.shape[0]
    rows = np.arange(n)
    r = np.empty((n, n), dtype=complex)
    for j in range(n):
        r[:, j] = dense[rows, (rows + j) % n]
    # S[k, l] = w^(kl); each slice is S times its coefficient vector, and a
    # DFT of the slice columns inverts that: c = fft(r, axis=0) / n
    c = np.fft.fft(r, axis=0) / n
    w = np.exp(2j * np.pi / n)
    coeffs = np.empty((n, n), dtype=complex)
    for k in range(n):
        for l in range(n):
            coeffs[k, l] = w ** (-(k * l)) * c[l, k]
    return DiagonalSliceDecomposition(order=n, r=r, c=c, coeffs=coeffs)


# ---------------------------------------------------------------------------
# discrete Wigner transform, odd dimension d = 2 nu + 1

@dataclass(frozen=True, slots=True)
class WignerTable:
    """Real phase-space table w[k, l] on a (2 nu + 1)-point grid."""

    nu: int
    w: np.ndarray

    def __post_init__(self):
        d = 2 * self.nu + 1
        arr = np.asarray(self.w)
        if arr.shape != (d, d):
            raise DimensionMismatch(f"table must be {d}x{d}, got {arr.shape}")
        if np.iscomplexobj(arr):
            if np.max(np.abs(arr.imag)) > 1e-9 * (1.0 + np.max(np.abs(arr))):
                raise NotReal("table entries must be real")
            arr = arr.real
        object.__setattr__(self, "w", arr.astype(float))


def wigner_forward(table: WignerTable) -> np.ndarray:
    """Operator for a table:  H = sum v_xe w^(xe*eta/2) B^xe A^eta with
    v = (1/d) sum_kl w_kl w^(-xe k - eta l), using the symmetric clock."""
    d = 2 * table.nu + 1
    inv2 = (d + 1) // 2
    v = np.fft.fft2(table.w) / d
    w = np.exp(2j * np.pi / d)
    cols = np.arange(d)
    h = np.zeros((d, d), dtype=complex)
    for xe in range(d):
        for eta in range(d):
            rows = (cols - eta) % d
            h[rows, cols] += v[xe, eta] * w ** (xe * eta * inv2) * w ** (xe * (rows - table.nu))
    return h


def wigner_inverse(h, tol: float = DEFAULT_TOL) -> WignerTable:
    """Table for a hermitian operator; exact inverse of wigner_forward."""
    dense = to_dense(h)
    if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
        raise DimensionMismatch(f"need a square matrix, got shape {dense.shape}")
    d = dense.shape[0]
    if d % 2 == 0:
        raise EvenDimension(f"dimension must be odd, got {d}")
    scale = 1.0 + np.max(np.abs(dense))
    if max_abs_diff(dense, dense.conj().T) > tol * scale:
        raise NotHermitian("operator must be hermitian")
    nu = (d - 1) // 2
    inv2 = (d + 1) // 2
    w = np.exp(2j * np.pi / d)
    cols = np.arange(d)
    v = np.empty((d, d), dtype=complex)
    for xe in range(d):
        for eta in range(d):
            tr = np.sum(w ** (-xe * (cols - nu)) * dense[cols, (cols + eta) % d])
            v[xe, eta] = w ** (-(xe * eta * inv2)) * tr / d
    table = d * np.fft.ifft2(v)
    if np.max(np.abs(table.imag)) > tol * (1.0 + np.max(np.abs(table))):
        raise NotReal("reconstructed table has a complex residue")
    return WignerTable(nu=nu, w=table.real)


# ---------------------------------------------------------------------------
# quadratic changes of the pair, even order

@dataclass(frozen=True, slots=True)
class CanonicalParams:
    """Exponent data for A' = w^(-kl/2) A^k B^l, B' = w^(-mn/2) A^m B^n.

    The integer matrix [[k, m], [l, n]] must have determinant 1 mod N, and
    the half-angle scalars need even N.  Entries are stored reduced mod N;
    the scalars are fixed by the reduced representatives.
    """

    k: int
    l: int
    m: int
    n: int
    order: int

    def __post_init__(self):
        if self.order < 2 or self.order % 2 != 0:
            raise BadOrder(f"order must be even and >= 2, got {self.order}")
        for name in ("k", "l", "m", "n"):
            object.__setattr__(self, name, getattr(self, name) % self.order)
        det = (self.k * self.n - self.l * self.m) % self.order
        if det != 1:
            raise BadDeterminant(f"k n - l m = {det} mod {self.order}, need 1")


def compose_params(p1: CanonicalParams, p2: CanonicalParams) -> CanonicalParams:
    """Parameters of the composite map, [[k,m],[l,n]]_3 = G(p1) G(p2) mod N."""
    if p1.order != p2.order:
        raise DimensionMismatch(f"orders differ: {p1.order} vs {p2.order}")
    return CanonicalParams(
        k=p1.k * p2.k + p1.m * p2.l,
        l=p1.l * p2.k + p1.n * p2.l,
        m=p1.k * p2.m + p1.m * p2.n,
        n=p1.l * p2.m + p1.n * p2.n,
        order=p1.order,
    )


def canonical_pair(p: CanonicalParams) -> tuple[MonomialMatrix, MonomialMatrix]:
    """The transformed pair, with its algebra re-checked exactly."""
    order = p.order
    a, b = shift(order), clock(order)
    ap = ((a**p.k) @ (b**p.l)).scale(Phase(-p.k * p.l, 2 * order))
    bp = ((a**p.m) @ (b**p.n)).scale(Phase(-p.m * p.n, 2 * order))
    if not (ap**order).is_identity() or not (bp**order).is_identity():
        raise GcaError("transformed pair lost its order")
    if ap @ bp != (bp @ ap).scale(Phase(1, order)):
        raise GcaError("transformed pair lost its commutation phase")
    return ap, bp


@dataclass(frozen=True, slots=True)
class CanonicalResult:
    s: np.ndarray
    zeta_a: complex
    zeta_b: complex
    report: VerificationReport


def _fit_scalar(lhs: np.ndarray, rhs: np.ndarray):
    # best unit scalar z with lhs ~ z * rhs, plus the residual it leaves
    z = np.vdot(rhs, lhs)
    if abs(z) == 0.0:
        return 1.0 + 0j, float(max_abs_diff(lhs, rhs))
    z /= abs(z)
    return z, float(max_abs_diff(lhs, z * rhs))


def _gauss_table(p: CanonicalParams, q: int) -> np.ndarray:
    """Entries of sum_(j,k) (A'^j B'^k) E_(0,q) (A^j B^k)^dag, summed exactly.

    Expanding the transformed words through A'^j B'^k =
    w^(-kl j^2/2 - mn k^2/2 - lm jk) A^(kj+mk') B^(...) pins j = q - y and
    leaves, per entry, a Gauss sum over the k' solving k j + m k' = -x
    mod N.  Every term is a root of unity with an integer exponent over 2N,
    so the sum is evaluated with exact coset cancellation.
    """
    order = p.order
    s = np.zeros((order, order), dtype=complex)
    for y in range(order):
        j = (q - y) % order
        for x in range(order):
            terms = [
                Phase(
                    -p.k * p.l * j * j - p.m * p.n * k * k - 2 * p.l * p.m * j * k - 2 * k * q,
                    2 * order,
                )
                for k in range(order)
                if (p.k * j + p.m * k + x) % order == 0
            ]
            s[x, y] = phase_sum(terms)
    return s


def canonical_intertwiner(p: CanonicalParams, tol: float = DEFAULT_TOL) -> CanonicalResult:
    """Matrix S with A'S = zeta_a S A and B'S = zeta_b S B.

    For m != 0 the table is the exact Gauss-sum kernel of the group average
    over all words, which intertwines the pairs with zeta_a = zeta_b = 1;
    when m is coprime to N it degenerates to one phase per entry, e.g. the
    order-2 swap gives [[1, 1], [1, -1]].  The average against one matrix
    unit can vanish, so the unit column q is scanned until the table is
    invertible.  For m = 0 only the identity transform has a table here.
    """
    order = p.order
    ap, bp = canonical_pair(p)
    if p.m == 0:
        if (p.k, p.l, p.n) != (1, 0, 1):
            raise UnsupportedTransform(
                "no closed-form table when m = 0, except for the identity"
            )
        s = np.eye(order, dtype=complex)
    else:
        s = None
        for q in range(order):
            cand = _gauss_table(p, q)
            top = float(np.max(np.abs(cand)))
            if top > 0.5 and np.linalg.svd(cand, compute_uv=False)[-1] > 1e-8 * top:
                s = cand
                break
        if s is None:
            s = cand  # leave the failure for the report below

    a = shift(order).to_dense()
    b = clock(order).to_dense()
    zeta_a, res_a = _fit_scalar(ap.to_dense() @ s, s @ a)
    zeta_b, res_b = _fit_scalar(bp.to_dense() @ s, s @ b)
    smallest = float(np.linalg.svd(s, compute_uv=False)[-1])
    checks = (
        Check("relation A", res_a <= tol, f"zeta_a = {zeta_a:.6f}, residual {res_a:.3e}"),
        Check("relation B", res_b <= tol, f"zeta_b = {zeta_b:.6f}, residual {res_b:.3e}"),
        Check("invertible", smallest > math.sqrt(tol), f"smallest singular value {smallest:.3e}"),
    )
    report = VerificationReport(checks)
    if not report.overall:
        exc = UnsupportedTransform(f"table does not intertwine the pair\n{report}")
        exc.report = report
        raise exc
    return CanonicalResult(s=s, zeta_a=complex(zeta_a), zeta_b=complex(zeta_b), report=report)


# ---------------------------------------------------------------------------
# magnetic translations for rational flux

def _as_flux(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, (tuple, list)) and len(x) == 2:
        return Fraction(int(x[0]), int(x[1]))
    raise IrrationalFlux(
        f"flux must be an exact rational (Fraction, int, 'p/q', or (p, q)), got {x!r}"
    )


@dataclass(frozen=True, slots=True)
class MagneticLattice:
    """Rational flux per plaquette for three translation directions."""

    f12: Fraction
    f13: Fraction
    f23: Fraction

    def __post_init__(self):
        for name in ("f12", "f13", "f23"):
            object.__setattr__(self, name, _as_flux(getattr(self, name)))

    def fluxes(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.f12, self.f13, self.f23)


@dataclass(frozen=True, slots=True)
class MagneticRep:
    lattice: MagneticLattice
    nhat: int
    rep: Representation


def magnetic_translation_rep(lat: MagneticLattice) -> MagneticRep:
    """Unitary translations with tau_j tau_k = e^(-2 pi i f_jk) tau_k tau_j.

    The common phase order is the lcm of the flux denominators (at least 2),
    and each commutator is re-checked exactly on the returned generators.
    """
    f = lat.fluxes()
    nhat = max(2, lcm(*(x.denominator for x in f)))
    raw = [[0] * 3 for _ in range(3)]
    for (j, k), fx in zip(((0, 1), (0, 2), (1, 2)), f):
        raw[j][k] = -fx.numerator * (nhat // fx.denominator)
        raw[k][j] = -raw[j][k]
    spec = GcaSpec(validate_tmatrix(raw, nhat), (nhat,) * 3)
    rep = build_representation(spec)
    for (j, k), fx in zip(((0, 1), (0, 2), (1, 2)), f):
        com = rep.gens[j] @ rep.gens[k] @ rep.gens[j].inverse() @ rep.gens[k].inverse()
        if com.scalar_phase() != Phase.from_fraction(-fx):
            raise GcaError(f"commutator of pair ({j},{k}) is off")
    return MagneticRep(lattice=lat, nhat=nhat, rep=rep)


def bloch_phase(lat: MagneticLattice, steps) -> Phase:
    """Accumulated phase for a closed translation loop with the given winding.

    steps = (n1, n2, n3); the phase exponent is
    n1 n2 f12 + n1 n3 f13 + n2 n3 f23 taken mod 1.
    """
    n1, n2, n3 = (int(x) for x in steps)
    return Phase.from_fraction(n1 * n2 * lat.f12 + n1 * n3 * lat.f13 + n2 * n3 * lat.f23)
