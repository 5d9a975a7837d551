"""The order-N clock/shift pair: the basic building block of everything here.

The shift matrix A permutes the computational basis cyclically and the clock
matrix B multiplies it by successive powers of the primitive root of unity
w = exp(2 pi i / N).  Together they obey A B = w B A and A^N = B^N = 1, and
the finite Fourier matrix turns one into the other.
"""

import numpy as np

from gcakit import Phase, clock, hermitian_logs, shift, sylvester, to_dense


def expm_hermitian(h, angle):
    """exp(i * angle * h) for hermitian h, via its eigendecomposition."""
    vals, vecs = np.linalg.eigh(h)
    return (vecs * np.exp(1j * angle * vals)) @ vecs.conj().T


def main():
    n = 4
    a, b = shift(n), clock(n)
    print(f"shift matrix A (order {n}):\n{to_dense(a).real.astype(int)}\n")
    print(f"clock matrix B (order {n}) diagonal: {np.diag(to_dense(b)).round(3)}\n")

    # the commutation phase, extracted exactly as a rational angle
    w = (a @ b @ a.inverse() @ b.inverse()).scalar_phase()
    print(f"A B A^-1 B^-1 = w with w = exp(2 pi i * {w.num}/{w.den})")
    assert w == Phase(1, n)

    # both generators have exact order n
    assert (a**n).is_identity() and (b**n).is_identity()
    print(f"A^{n} = B^{n} = 1 holds exactly\n")

    # the finite Fourier (Sylvester) matrix conjugates the clock into the shift
    s = sylvester(n)
    dev = np.max(np.abs(s @ to_dense(b) - to_dense(a) @ s))
    print(f"Sylvester matrix maps clock -> shift: max deviation {dev:.2e}")

    # hermitian logarithms: the pair as exponentials of position/momentum-like
    # hermitian matrices Q and P
    q, p = hermitian_logs(n)
    angle = 2 * np.pi / n
    dev_b = np.max(np.abs(expm_hermitian(q, angle) - to_dense(b)))
    dev_a = np.max(np.abs(expm_hermitian(p, angle) - to_dense(a)))
    print(f"exp(2 pi i Q/{n}) = B within {dev_b:.2e}; exp(2 pi i P/{n}) = A within {dev_a:.2e}")


if __name__ == "__main__":
    main()
