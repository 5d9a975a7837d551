"""Anticommuting generator families and the named gamma-matrix sets.

`clifford_generators(n)` builds n pairwise-anticommuting involutions on
2^floor(n/2) dimensions as exact monomial matrices.  The catalog exposes a
few classical instances (Pauli, quaternion units, 4x4 gamma matrices) in the
same exact form.
"""

import numpy as np

from gcakit import MINUS_ONE, catalog, clifford_generators, to_dense, verify_gca


def main():
    for n in (3, 5):
        rep = clifford_generators(n)
        print(f"{n} anticommuting involutions on dimension {rep.dim}")
        report = verify_gca(rep)
        print(f"  exact verification: {'pass' if report.overall else 'FAIL'}")
        g = rep.gens
        assert all((x @ x).is_identity() for x in g)
        assert g[0] @ g[1] == (g[1] @ g[0]).scale(MINUS_ONE)

    print("\nnamed sets in the catalog:")
    pauli = catalog("pauli")
    s1, s2, s3 = (to_dense(pauli[k]) for k in ("sigma1", "sigma2", "sigma3"))
    print(f"  pauli: sigma1 sigma2 = i sigma3 -> {np.array_equal(s1 @ s2, 1j * s3)}")

    quat = catalog("quaternion")
    i, j, k = (quat[x] for x in ("i", "j", "k"))
    print(f"  quaternion: ij = k -> {i @ j == k}, ji = -k -> {j @ i == k.scale(MINUS_ONE)}")

    dirac = catalog("dirac")
    names = sorted(dirac)
    dims = {x: dirac[x].dim for x in names}
    print(f"  dirac: {names} on dimension {set(dims.values()).pop()}")
    g0 = dirac[names[0]]
    sq = {x: (dirac[x] @ dirac[x]).scalar_phase() for x in names}
    print(f"  squares (as exact phases): { {x: str(p) for x, p in sq.items()} }")
    anticommute = all(
        dirac[a] @ dirac[b] == (dirac[b] @ dirac[a]).scale(MINUS_ONE)
        for ia, a in enumerate(names)
        for b in names[ia + 1 :]
    )
    print(f"  pairwise anticommutation: {anticommute}")
    assert g0.dim == 4


if __name__ == "__main__":
    main()
