"""Irreducible matrix representations from integer commutation data.

A family of unitary generators e_1..e_n with

    e_j e_k = w^(t_jk) e_k e_j,   w = e^(2*pi*i/nhat),   e_j^(N_j) = 1

is determined by the antisymmetric integer matrix t mod nhat and the
orders N_j.  The construction reduces t to its skew normal form, realizes
each hyperbolic block on a clock/shift pair, and maps the block generators
back through the unimodular transform:

    e_j = mu_j * eps_1^(u_j1) * ... * eps_n^(u_jn)

where eps_(2i-1), eps_(2i) hold the i-th pair (pair 1 in the rightmost
tensor slot, pair s in the leftmost) and the eps beyond 2s are scalar 1.
The scalar mu_j is fixed by e_j^(N_j) = 1 with the smallest nonnegative
phase exponent.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from functools import reduce
from math import gcd, lcm

import numpy as np

from .errors import (
    BadOrder,
    DimensionMismatch,
    InconsistentOrders,
    InvalidFactorSet,
    UnknownName,
)
from .matrices import DEFAULT_TOL, MonomialMatrix, max_abs_diff, to_dense
from .phase import IMAG, MINUS_IMAG, MINUS_ONE, ONE, Phase
from .report import Check, VerificationReport
from .skewnormal import TMatrix, skew_normal_form, validate_tmatrix
from .weylpairs import clock, shift, weyl_pair_for

__all__ = [
    "GcaSpec",
    "Representation",
    "build_representation",
    "verify_relations",
    "verify_gca",
    "clifford_generators",
    "ordered_gca_generators",
    "ordered_mu",
    "sigma1",
    "sigma2",
    "sigma3",
    "FactorSet",
    "ProjectiveRep",
    "projective_rep",
    "catalog",
    "CATALOG_NAMES",
]


@dataclass(frozen=True, slots=True)
class GcaSpec:
    """Commutation matrix plus generator orders, validated for consistency.

    Consistency means the order of each commutation phase w^(t_jk), which
    is nhat/gcd(t_jk, nhat), divides gcd(N_j, N_k); otherwise the relations
    e_j^(N_j) = 1 contradict the commutation rule.
    """

    t: TMatrix
    orders: tuple[int, ...]

    def __post_init__(self):
        if len(self.orders) != self.t.n:
            raise DimensionMismatch(
                f"{len(self.orders)} orders for an n = {self.t.n} matrix"
            )
        for nj in self.orders:
            if nj < 1:
                raise BadOrder(f"generator order must be >= 1, got {nj}")
        nhat = self.t.nhat
        for j in range(self.t.n):
            for k in range(j + 1, self.t.n):
                ph_order = nhat // gcd(self.t.t[j][k], nhat)
                if gcd(self.orders[j], self.orders[k]) % ph_order != 0:
                    raise InconsistentOrders(
                        f"phase order {ph_order} of pair ({j},{k}) does not divide"
                        f" gcd(N_{j}, N_{k}) = {gcd(self.orders[j], self.orders[k])}"
                    )

    @property
    def n(self) -> int:
        return self.t.n

    @property
    def nhat(self) -> int:
        return self.t.nhat


@dataclass(frozen=True, slots=True)
class Representation:
    """Generators realizing a GcaSpec, with the scalar normalizations used."""

    spec: GcaSpec
    dim: int
    gens: tuple[MonomialMatrix, ...]
    mu: tuple[Phase, ...]


def _slot_embed(mat: MonomialMatrix, slot: int, dims: list[int]) -> MonomialMatrix:
    # slot 0 is the leftmost (slowest) tensor factor
    factors = [
        mat if i == slot else MonomialMatrix.identity(d) for i, d in enumerate(dims)
    ]
    return reduce(lambda a, b: a.tensor(b), factors)


def build_representation(spec: GcaSpec) -> Representation:
    """Construct generators for the commutation data and verify them exactly."""
    n, nhat = spec.n, spec.nhat
    f = skew_normal_form(spec.t)
    pairs = [weyl_pair_for(tj, nhat) for tj in f.t_inv]
    # tensor slots run pair s, ..., pair 1 from the left
    dims = [pairs[i].order for i in reversed(range(f.s))]
    dim = 1
    for d in dims:
        dim *= d

    eps: list[MonomialMatrix] = []
    for i, pair in enumerate(pairs):
        slot = f.s - 1 - i
        eps.append(_slot_embed(pair.a, slot, dims) if dims else MonomialMatrix.identity(1))
        eps.append(_slot_embed(pair.b, slot, dims) if dims else MonomialMatrix.identity(1))

    gens = []
    mus = []
    ident = MonomialMatrix.identity(dim)
    for j in range(n):
        word = ident
        for k in range(2 * f.s):
            e = f.u[j][k]
            if e:
                word = word @ (eps[k] ** e)
        # exponents on the scalar eps beyond 2s contribute nothing
        zeta = (word ** spec.orders[j]).scalar_phase()
        if zeta is None:
            raise InconsistentOrders(
                f"generator {j}: word^{spec.orders[j]} is not scalar"
            )
        # mu^N_j * zeta = 1, smallest nonnegative exponent solution
        inv = zeta.inverse()
        mu = Phase(inv.num, inv.den * spec.orders[j])
        mus.append(mu)
        gens.append(word.scale(mu))

    rep = Representation(spec=spec, dim=dim, gens=tuple(gens), mu=tuple(mus))
    rpt = verify_gca(rep)
    if not rpt.overall:
        raise InconsistentOrders(f"constructed generators failed verification:\n{rpt}")
    return rep


def verify_relations(gens, t: TMatrix, orders, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Check e_j e_k = w^(t_jk) e_k e_j and e_j^(N_j) = 1 for given matrices.

    All-monomial input is checked with zero tolerance; any dense generator
    switches the whole check to dense arithmetic with a scale-aware tol.
    """
    n, nhat = t.n, t.nhat
    orders = tuple(int(x) for x in orders)
    if len(gens) != n or len(orders) != n:
        raise DimensionMismatch(
            f"{len(gens)} generators / {len(orders)} orders for an n = {n} matrix"
        )
    checks = []
    if all(isinstance(g, MonomialMatrix) for g in gens):
        for j in range(n):
            for k in range(j + 1, n):
                want = Phase(t.t[j][k], nhat)
                lhs = gens[j] @ gens[k]
                rhs = gens[k] @ gens[j]
                measured = (lhs @ rhs.inverse()).scalar_phase()
                ok = lhs == rhs.scale(want)
                detail = (
                    f"measured {measured}, want {want}"
                    if measured is not None
                    else "commutator is not scalar"
                )
                checks.append(Check(f"commute[{j},{k}]", ok, detail))
        for j in range(n):
            ok = (gens[j] ** orders[j]).is_identity()
            checks.append(Check(f"order[{j}]", ok, f"e_{j}^{orders[j]} = 1"))
        return VerificationReport(tuple(checks))

    dense = [to_dense(g) for g in gens]
    dim = dense[0].shape[0]
    for g in dense:
        if g.shape != (dim, dim):
            raise DimensionMismatch("generators must share one square shape")
    scale = 1.0 + max(float(np.max(np.abs(g))) for g in dense)
    for j in range(n):
        for k in range(j + 1, n):
            want = Phase(t.t[j][k], nhat).to_complex()
            dev = max_abs_diff(dense[j] @ dense[k], want * (dense[k] @ dense[j]))
            checks.append(
                Check(
                    f"commute[{j},{k}]",
                    dev <= tol * scale,
                    f"deviation {dev:.3e}",
                    deviation=dev,
                )
            )
    eye = np.eye(dim)
    for j in range(n):
        dev = max_abs_diff(np.linalg.matrix_power(dense[j], orders[j]), eye)
        checks.append(
            Check(f"order[{j}]", dev <= tol * scale, f"deviation {dev:.3e}", deviation=dev)
        )
    return VerificationReport(tuple(checks))


def verify_gca(rep: Representation) -> VerificationReport:
    """Exact check of every commutation relation and every generator order."""
    return verify_relations(rep.gens, rep.spec.t, rep.spec.orders)


# ---------------------------------------------------------------------------
# the two closed families: anticommuting (order 2) and uniformly w-commuting

sigma1 = MonomialMatrix(2, (1, 0), (ONE, ONE))
sigma3 = MonomialMatrix(2, (0, 1), (ONE, MINUS_ONE))
sigma2 = MonomialMatrix(2, (1, 0), (IMAG, MINUS_IMAG))  # i * sigma1 @ sigma3


def _ordered_tmatrix(n: int, nhat: int) -> TMatrix:
    raw = [[0] * n for _ in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            raw[j][k] = 1
            raw[k][j] = -1
    return validate_tmatrix(raw, nhat)


def _chain(factors: list[MonomialMatrix]) -> MonomialMatrix:
    return reduce(lambda a, b: a.tensor(b), factors)


def clifford_generators(n: int) -> Representation:
    """The standard anticommuting family on 2^floor(n/2) dimensions.

    e_(2k-1) = sigma2^(k-1 factors) (x) sigma1 (x) 1...,
    e_(2k)   = sigma2^(k-1 factors) (x) sigma3 (x) 1...,
    and for odd n the last generator is sigma2 on every slot.
    """
    if n < 1:
        raise BadOrder(f"need n >= 1, got {n}")
    m = n // 2
    ident = MonomialMatrix.identity(2)
    gens: list[MonomialMatrix] = []
    mus: list[Phase] = []
    for k in range(1, m + 1):
        left = [sigma2] * (k - 1)
        right = [ident] * (m - k)
        gens.append(_chain(left + [sigma1] + right))
        gens.append(_chain(left + [sigma3] + right))
        mus += [IMAG ** (k - 1)] * 2
    if n % 2 == 1:
        gens.append(_chain([sigma2] * m) if m else MonomialMatrix.identity(1))
        mus.append(IMAG ** m)
    spec = GcaSpec(_ordered_tmatrix(n, 2), (2,) * n)
    return Representation(spec=spec, dim=2 ** m, gens=tuple(gens), mu=tuple(mus))


def ordered_mu(n_order: int) -> Phase:
    """Scalar making mu * A^(-1) B an order-N generator.

    (A^(-1)B)^N = (-1)^(N-1), so mu^N must cancel that sign.  For odd N the
    N-th root of unity w^((N+1)/2) does it; for even N a genuine 2N-th root
    is needed and e^(i*pi/N) is the branch that reduces to +i at N = 2,
    turning A^(-1)B into sigma2 exactly.
    """
    if n_order % 2 == 1:
        return Phase(n_order + 1, 2 * n_order)
    return Phase(1, 2 * n_order)


def ordered_gca_generators(n: int, n_order: int) -> Representation:
    """The uniformly w-commuting family (e_j e_k = w e_k e_j for j < k).

    Built from the order-N clock/shift pair on N^floor(n/2) dimensions:
    pair k occupies tensor slot k with mu*A^(-1)B words filling the slots
    to its left, mirroring the anticommuting family, to which this reduces
    bit-exactly at N = 2.
    """
    if n < 1:
        raise BadOrder(f"need n >= 1, got {n}")
    if n_order < 2:
        raise BadOrder(f"need N >= 2, got {n_order}")
    m = n // 2
    a = shift(n_order)
    b = clock(n_order)
    ab = a.inverse() @ b
    mu = ordered_mu(n_order)
    ident = MonomialMatrix.identity(n_order)
    gens: list[MonomialMatrix] = []
    mus: list[Phase] = []
    for k in range(1, m + 1):
        left = [ab] * (k - 1)
        right = [ident] * (m - k)
        gens.append(_chain(left + [a] + right).scale(mu ** (k - 1)))
        gens.append(_chain(left + [b] + right).scale(mu ** (k - 1)))
        mus += [mu ** (k - 1)] * 2
    if n % 2 == 1:
        word = _chain([ab] * m) if m else MonomialMatrix.identity(1)
        gens.append(word.scale(mu ** m))
        mus.append(mu ** m)
    spec = GcaSpec(_ordered_tmatrix(n, n_order), (n_order,) * n)
    return Representation(spec=spec, dim=n_order ** m, gens=tuple(gens), mu=tuple(mus))


# ---------------------------------------------------------------------------
# projective representations of finite abelian groups

class FactorSet:
    """Multiplier table phi(g, h) on Z_{N_1} x ... x Z_{N_n}.

    Elements are exponent tuples; the table must cover every ordered pair.
    validate() enforces phi(E,g) = phi(g,E) = 1 and the associativity
    identity phi(g,h) phi(gh,l) = phi(g,hl) phi(h,l) over all triples.
    """

    def __init__(self, orders, table):
        self.orders = tuple(int(x) for x in orders)
        if any(x < 1 for x in self.orders):
            raise BadOrder("group orders must be positive")
        self.table = dict(table)
        self.identity = (0,) * len(self.orders)
        for g in self.elements():
            for h in self.elements():
                if (g, h) not in self.table:
                    raise InvalidFactorSet(f"missing table entry for {(g, h)}")

    def elements(self):
        return itertools.product(*(range(nj) for nj in self.orders))

    def mul(self, g, h):
        return tuple((a + b) % nj for a, b, nj in zip(g, h, self.orders))

    def phi(self, g, h) -> Phase:
        return self.table[(tuple(g), tuple(h))]

    def validate(self) -> None:
        e = self.identity
        for g in self.elements():
            if not self.phi(e, g).is_one() or not self.phi(g, e).is_one():
                raise InvalidFactorSet(f"normalization fails at {g}")
        for g in self.elements():
            for h in self.elements():
                gh = self.mul(g, h)
                for l in self.elements():
                    lhs = self.phi(g, h) * self.phi(gh, l)
                    rhs = self.phi(g, self.mul(h, l)) * self.phi(h, l)
                    if lhs != rhs:
                        raise InvalidFactorSet(
                            f"associativity identity fails at {(g, h, l)}"
                        )

    @classmethod
    def trivial(cls, orders) -> "FactorSet":
        orders = tuple(int(x) for x in orders)
        rng = [range(nj) for nj in orders]
        table = {
            (g, h): ONE
            for g in itertools.product(*rng)
            for h in itertools.product(*rng)
        }
        return cls(orders, table)

    @classmethod
    def bilinear(cls, orders, exps) -> "FactorSet":
        """phi(g, h) = e^(2*pi*i * sum_jk exps[j][k] g_j h_k), exps rational."""
        from fractions import Fraction

        orders = tuple(int(x) for x in orders)
        n = len(orders)
        rng = [range(nj) for nj in orders]
        table = {}
        for g in itertools.product(*rng):
            for h in itertools.product(*rng):
                f = sum(
                    (Fraction(exps[j][k]) * g[j] * h[k] for j in range(n) for k in range(n)),
                    Fraction(0),
                )
                table[(g, h)] = Phase.from_fraction(f)
        return cls(orders, table)


@dataclass(frozen=True, slots=True)
class ProjectiveRep:
    """D(g) for every group element, with the standardizing scalars used."""

    orders: tuple[int, ...]
    dim: int
    dmap: dict = field(compare=False, default_factory=dict)
    phi_coeffs: dict = field(compare=False, default_factory=dict)
    commutators: tuple[tuple[Phase, ...], ...] = ()
    gens: tuple[MonomialMatrix, ...] = ()


def _phi_word_recursive(fs: FactorSet) -> dict:
    """phi(g) with D(g) = phi(g) * prod_j D(c_j)^(m_j), by peeling generators.

    D(c_j) D(g') = phi(c_j, g') D(c_j g') applied to the leftmost generator
    with a nonzero exponent; iterating lexicographically guarantees the
    smaller element is already known.
    """
    n = len(fs.orders)
    coeff = {fs.identity: ONE}
    for g in sorted(fs.elements()):
        if g == fs.identity:
            continue
        j = next(i for i in range(n) if g[i] > 0)
        g2 = tuple(x - (i == j) for i, x in enumerate(g))
        cj = tuple(int(i == j) for i in range(n))
        coeff[g] = fs.phi(cj, g2).inverse() * coeff[g2]
    return coeff


def _phi_word_closed(fs: FactorSet, g) -> Phase:
    # closed form of the same product; kept as a cross-check of the recursion
    n = len(fs.orders)
    acc = ONE
    for j in range(n):
        cj = tuple(int(i == j) for i in range(n))
        for p in range(1, g[j] + 1):
            tail = tuple(
                0 if i < j else ((g[j] - p) % fs.orders[j] if i == j else g[i])
                for i in range(n)
            )
            acc = acc * fs.phi(cj, tail).inverse()
    return acc


def projective_rep(fs: FactorSet) -> ProjectiveRep:
    """Standard projective representation for a validated multiplier table.

    The commutation phases Omega(c_j, c_k) = phi(c_j,c_k)/phi(c_k,c_j)
    induce an ordinary generator family e_j (built like any other spec);
    D(c_j) strips the accumulated scalar phi(c_j^(N_j))^(1/N_j) from e_j,
    and general D(g) follow from the peeling recursion.  Every pair
    relation D(g) D(h) = phi(g,h) D(gh) is then checked exactly.
    """
    fs.validate()
    n = len(fs.orders)
    cgen = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    omega = [[fs.phi(cgen[j], cgen[k]) / fs.phi(cgen[k], cgen[j]) for k in range(n)] for j in range(n)]

    nhat = 1
    for j in range(n):
        for k in range(n):
            nhat = lcm(nhat, omega[j][k].den)
    nhat = max(nhat, 2)
    raw = [[omega[j][k].num * (nhat // omega[j][k].den) for k in range(n)] for j in range(n)]
    spec = GcaSpec(validate_tmatrix(raw, nhat), fs.orders)
    rep = build_representation(spec)

    dgens = []
    for j in range(n):
        acc = ONE
        for p in range(1, fs.orders[j] + 1):
            power = tuple(
                ((fs.orders[j] - p) if i == j else 0) % fs.orders[i] for i in range(n)
            )
            acc = acc * fs.phi(cgen[j], power).inverse()
        dgens.append(rep.gens[j].scale(acc.root(fs.orders[j]).inverse()))

    coeff = _phi_word_recursive(fs)
    group_size = 1
    for nj in fs.orders:
        group_size *= nj
    if group_size <= 81:
        for g in fs.elements():
            if _phi_word_closed(fs, g) != coeff[g]:
                warnings.warn(
                    f"closed-form word coefficient disagrees with recursion at {g};"
                    " using the recursion",
                    stacklevel=2,
                )

    dmap = {}
    for g in fs.elements():
        word = MonomialMatrix.identity(rep.dim)
        for j in range(n):
            if g[j]:
                word = word @ (dgens[j] ** g[j])
        dmap[g] = word.scale(coeff[g])

    for g in fs.elements():
        for h in fs.elements():
            if dmap[g] @ dmap[h] != dmap[fs.mul(g, h)].scale(fs.phi(g, h)):
                raise InvalidFactorSet(
                    f"representation property fails at pair {(g, h)}"
                )

    return ProjectiveRep(
        orders=fs.orders,
        dim=rep.dim,
        dmap={g: m.to_dense() for g, m in dmap.items()},
        phi_coeffs=coeff,
        commutators=tuple(tuple(row) for row in omega),
        gens=tuple(dgens),
    )


# ---------------------------------------------------------------------------
# small catalog of named generator sets

CATALOG_NAMES = ("pauli", "quaternion", "dirac", "dirac_positive_energy")


def catalog(name: str) -> dict[str, MonomialMatrix]:
    """Named generator sets expressed as exact monomial matrices."""
    ident = MonomialMatrix.identity(2)
    if name == "pauli":
        return {"sigma1": sigma1, "sigma2": sigma2, "sigma3": sigma3}
    if name == "quaternion":
        return {
            "one": ident,
            "i": sigma1.scale(MINUS_IMAG),
            "j": sigma3.scale(MINUS_IMAG),
            "k": sigma2.scale(IMAG),
        }
    if name == "dirac":
        return {
            "alpha_x": sigma1.tensor(sigma1),
            "alpha_y": sigma1.tensor(sigma2),
            "alpha_z": sigma1.tensor(sigma3),
            "beta": sigma3.tensor(ident),
        }
    if name == "dirac_positive_energy":
        return {
            "beta_prime": sigma2.tensor(ident),
            "alpha_x_prime": sigma1.tensor(sigma3).scale(MINUS_ONE),
            "alpha_y_prime": sigma1.tensor(sigma1),
            "alpha_z_prime": sigma3.tensor(ident),
        }
    raise UnknownName(f"no catalog entry named {name!r}; have {CATALOG_NAMES}")
