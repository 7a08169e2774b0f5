"""Phase estimation with base-d digits: qudits as truncated qumodes.

A register of t qudits Fourier-prepared, a ladder of controlled powers of U,
and an inverse Fourier transform read out the eigenphase of U as base-d
digits. Phases of the form a/d^t come out deterministically; anything else
concentrates on the nearest representable values.
"""

import numpy as np

from qumodelab import (
    Operator,
    QpeSpec,
    QumodeRegister,
    basis_state,
    outcome_digits,
    phase_from_outcome,
    run_qpe,
    sample_readout,
)


def diagonal_phase_unitary(d, phi):
    reg = QumodeRegister((d,))
    U = Operator(np.diag(np.exp(2j * np.pi * phi * np.arange(d))), reg)
    return U, basis_state(reg, (1,))


print("== representable phase: two qutrits, phi = 4/9 ==")
U, eig = diagonal_phase_unitary(3, 4.0 / 9.0)
spec = QpeSpec(d=3, t=2, U=U, eigenstate=eig)
dist = run_qpe(spec)
modal = int(np.argmax(dist))
print("outcome digits:", outcome_digits(modal, 3, 2), " probability:", dist[modal])
print("decoded phase:", phase_from_outcome(modal, 3, 2))

print("\n== non-representable phase: three qubits, phi = 0.2 ==")
U, eig = diagonal_phase_unitary(2, 0.2)
spec = QpeSpec(d=2, t=3, U=U, eigenstate=eig)
dist = run_qpe(spec)
print("outcome  digits  probability")
for idx in np.argsort(dist)[::-1][:4]:
    print(f"   {idx}      {outcome_digits(idx, 2, 3)}    {dist[idx]:.4f}")
print("best 3-bit neighbours of 0.2 are 0.250 and 0.125; the readout splits between them")

print("\n== finite-shot readout ==")
counts = sample_readout(dist, shots=2000, seed=1)
for idx in np.argsort(counts)[::-1][:4]:
    print(f"  {outcome_digits(idx, 2, 3)}: {counts[idx]} shots")
print("same seed, same histogram: reruns are reproducible")
