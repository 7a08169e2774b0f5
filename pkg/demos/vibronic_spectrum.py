"""Two-mode vibronic stick spectrum from a Doktorov circuit.

The Doktorov operator (squeeze, mix, displace) plays the role of the
Duschinsky relation between the normal modes of two electronic surfaces.
Squared matrix elements out of the vibrationless state are Franck-Condon
factors; placing each on a harmonic ladder of the final surface gives the
stick spectrum. The parameters below are illustrative, not a fit to any
molecule.
"""

import numpy as np

from qumodelab import (
    DoktorovSpec,
    QumodeRegister,
    doktorov_operator,
    fcf_table,
    stick_spectrum,
)

cutoff = 16
spec = DoktorovSpec(alpha1=0.35, alpha2=0.2, z1=0.25, z2=0.15, theta_bs=0.6, phi_bs=0.0)
freqs = (3200.0, 1400.0)  # final-surface mode frequencies, 1/cm
e00 = 0.0

reg = QumodeRegister((cutoff, cutoff))
U = doktorov_operator(spec, reg)
table = fcf_table(U, initial=(0, 0), maxq=7)
spectrum = stick_spectrum(table, freqs, e00)

print("FCF table from the vibrationless state (rows: stretch quanta, cols: bend quanta)")
with np.printoptions(precision=4, suppress=True):
    print(table[:4, :4])
print("sum over the 8x8 window:", table.sum())

print("\nstrongest sticks:")
order = np.argsort(spectrum.weights)[::-1][:8]
for idx in sorted(order, key=lambda i: spectrum.energies[i]):
    e, w = spectrum.energies[idx], spectrum.weights[idx]
    bar = "#" * max(1, int(60 * w / spectrum.weights.max()))
    print(f"  {e:8.1f} 1/cm  {w:.4f}  {bar}")

spectrum.write_csv("vibronic_spectrum.csv")
print("\nwrote vibronic_spectrum.csv (energy,weight)")
