"""Finite canonical transformations of a clock/shift pair.

Integer exponents (k, l, m, n) with kn - lm = 1 (mod N) send the pair (A, B)
to a new pair (A', B') obeying the same algebra.  When the transformation is
nondegenerate a discrete-Gaussian intertwiner S implements it by conjugation,
up to one global unit scalar per generator.
"""

import numpy as np

from gcakit import (
    CanonicalParams,
    Phase,
    UnsupportedTransform,
    canonical_intertwiner,
    canonical_pair,
    clock,
    compose_params,
    shift,
    to_dense,
)


def residual(p, res):
    a, b = to_dense(shift(p.order)), to_dense(clock(p.order))
    ap, bp = (to_dense(x) for x in canonical_pair(p))
    ra = np.max(np.abs(res.s @ a - res.zeta_a * (ap @ res.s)))
    rb = np.max(np.abs(res.s @ b - res.zeta_b * (bp @ res.s)))
    return max(ra, rb)


def main():
    # the two-dimensional swap (A, B) -> (B, A) is the 2x2 Fourier matrix
    swap = CanonicalParams(k=0, l=1, m=1, n=0, order=2)
    res = canonical_intertwiner(swap)
    print(f"swap intertwiner:\n{res.s.real.astype(int)}")
    print(f"residual {residual(swap, res):.2e}, scalars ({res.zeta_a}, {res.zeta_b})\n")

    # a generic transformation at order 6
    p = CanonicalParams(k=1, l=1, m=1, n=2, order=6)
    ap, bp = canonical_pair(p)
    print(f"order 6, exponents (1,1,1,2): new pair satisfies the algebra "
          f"exactly: {ap @ bp == (bp @ ap).scale(Phase(1, 6))}")
    res = canonical_intertwiner(p)
    print(f"intertwiner residual: {residual(p, res):.2e}\n")

    # composition: following one transformation by another multiplies the
    # exponent matrices; the intertwiners compose up to a half-period word
    q = CanonicalParams(k=2, l=1, m=1, n=1, order=6)
    pq = compose_params(p, q)
    print(f"composition of exponent data: {(pq.k, pq.l, pq.m, pq.n)} at order {pq.order}")
    res_pq = canonical_intertwiner(pq)
    print(f"composed intertwiner residual: {residual(pq, res_pq):.2e}\n")

    # degenerate second row (m = 0) has no closed-form table except the identity
    try:
        canonical_intertwiner(CanonicalParams(k=1, l=2, m=0, n=1, order=4))
    except UnsupportedTransform as exc:
        print(f"unsupported, reported rather than silently wrong: {exc}")


if __name__ == "__main__":
    main()
