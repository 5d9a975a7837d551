"""Lattice translations in a uniform magnetic field with rational flux.

Translations along different axes commute only up to a phase fixed by the
flux through the enclosed plaquette.  At rational flux the three translation
unitaries close on a finite-dimensional representation, and the phase picked
up around any closed loop is an exact rational multiple of a full turn.
"""

from fractions import Fraction

from gcakit import MagneticLattice, bloch_phase, magnetic_translation_rep


def main():
    lat = MagneticLattice(Fraction(1, 4), Fraction(1, 2), Fraction(2, 3))
    m = magnetic_translation_rep(lat)
    print(f"fluxes per plaquette: {tuple(str(f) for f in lat.fluxes())}")
    print(f"common denominator order: {m.nhat}, representation dimension: {m.rep.dim}")

    gens = m.rep.gens
    for (j, k), f in zip(((0, 1), (0, 2), (1, 2)), lat.fluxes()):
        com = gens[j] @ gens[k] @ gens[j].inverse() @ gens[k].inverse()
        print(f"  commutator tau_{j+1} tau_{k+1}: phase {com.scalar_phase()} "
              f"(prescribed flux {f})")

    # phases around rectangular loops: winding n_j steps along each axis
    for steps in ((1, 1, 0), (1, 1, 1), (1, 2, 3)):
        print(f"loop with windings {steps}: accumulated phase {bloch_phase(lat, steps)}")

    zero = magnetic_translation_rep(MagneticLattice(0, 0, 0))
    print(f"\nzero field: dimension {zero.rep.dim}, "
          f"all translations trivial: {all(g.is_identity() for g in zero.rep.gens)}")


if __name__ == "__main__":
    main()
