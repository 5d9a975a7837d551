"""Finite phase-space tables for odd dimensions.

A real (2 nu + 1) x (2 nu + 1) table is in exact bijection with a hermitian
operator through a double finite Fourier transform with symmetrized
half-angle phases.  The flat table of ones corresponds to a multiple of the
identity, and the transform is involutive up to normalization.
"""

import numpy as np

from gcakit import WignerTable, wigner_forward, wigner_inverse


def main():
    nu = 2
    d = 2 * nu + 1
    rng = np.random.default_rng(11)

    table = WignerTable(nu, rng.normal(size=(d, d)))
    h = wigner_forward(table)
    print(f"dimension {d}: forward output hermitian within "
          f"{np.max(np.abs(h - h.conj().T)):.2e}")

    back = wigner_inverse(h)
    print(f"round-trip table error: {np.max(np.abs(back.w - table.w)):.2e}")

    flat = wigner_forward(WignerTable(nu, np.ones((d, d))))
    print(f"table of ones -> {d} x identity within "
          f"{np.max(np.abs(flat - d * np.eye(d))):.2e}")

    # the table of a rank-one projector sums to its trace
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    v /= np.linalg.norm(v)
    proj = np.outer(v, v.conj())
    w = wigner_inverse(proj)
    print(f"projector table sums to Tr = {np.sum(w.w):.6f} (expected 1.0)")


if __name__ == "__main__":
    main()
