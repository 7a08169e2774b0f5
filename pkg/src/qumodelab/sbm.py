"""Single-bosonic-mode (SBM) embedding of k-level Hamiltonians.

Any k x k matrix ``H = sum_{n,m} H_nm |n><m|`` can be written exactly in the
ladder operators of one qumode by replacing each matrix unit with the
polynomial

    P_nm = sqrt(m!/n!) / ((k-1)!)^2 * adag^n Gamma^(k-1) adag^(k-1-m),
    Gamma = ((k-1) - n) a,

whose restriction to the lowest k Fock levels is exactly ``|n><m|``. The
product above reaches level ``2(k-1)`` in intermediate states, so the
truncated construction needs at least ``2k - 1`` retained levels; anything
smaller corrupts the polynomial.

Outside the lowest k levels the mapped operator is in general non-Hermitian
and carries no meaning for the embedded dynamics, so time evolution here
projects onto the computational levels first. The unprojected matrix stays
available from :func:`map_hamiltonian` for inspection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation
from .fock import Operator, QumodeRegister, annihilation, number

__all__ = [
    "WAVENUMBER_TO_RAD_PER_PS",
    "DenseHamiltonian",
    "SnailParams",
    "fmo_hamiltonian",
    "sbm_projector",
    "map_hamiltonian",
    "computational_block",
    "sbm_evolve",
    "snail_hamiltonian",
]

# Angular frequency per wavenumber: 2 pi c = 0.18836 rad/ps per 1/cm.
WAVENUMBER_TO_RAD_PER_PS = 0.18836

# Four-site excitonic model of the Fenna-Matthews-Olson complex, in 1/cm.
# Diagonal entries are site excitation energies, off-diagonal ones couplings.
_FMO_ENTRIES = np.array(
    [
        [310.0, -97.9, 5.5, -5.8],
        [-97.9, 230.0, 30.1, 7.3],
        [5.5, 30.1, 0.0, -58.8],
        [-5.8, 7.3, -58.8, 180.0],
    ]
)


@dataclass(frozen=True, eq=False)
class DenseHamiltonian:
    """A k x k Hermitian matrix with a units label ("1/cm" or "dimensionless")."""

    entries: np.ndarray
    units: str = "dimensionless"

    def __post_init__(self) -> None:
        m = np.array(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"Hamiltonian must be square, got shape {m.shape}")
        defect = np.abs(m - m.conj().T).max()
        if defect > 1e-10:
            raise ContractViolation(
                f"Hamiltonian is not Hermitian: max |H - Hdag| = {defect:.3e}"
            )
        if self.units not in ("1/cm", "dimensionless"):
            raise ValueError(f"unknown units label {self.units!r}")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    def angular_frequencies(self) -> np.ndarray:
        """Entries converted to rad/ps when labelled 1/cm, else unchanged."""
        if self.units == "1/cm":
            return self.entries * WAVENUMBER_TO_RAD_PER_PS
        return self.entries


def fmo_hamiltonian() -> DenseHamiltonian:
    """The bundled 4-site FMO model (1/cm)."""
    return DenseHamiltonian(_FMO_ENTRIES, units="1/cm")


@dataclass(frozen=True)
class SnailParams:
    """Driven anharmonic-resonator parameters: mode frequency and cubic strength."""

    omega: float
    g3: float
    cutoff: int

    def __post_init__(self) -> None:
        if self.cutoff < 3:
            raise ValueError("SNAIL cutoff must be at least 3")
        if not (math.isfinite(self.omega) and math.isfinite(self.g3)):
            raise ValueError("non-finite SNAIL parameter")


def _check_mapping_args(k: int, cutoff: int) -> None:
    if k < 1:
        raise ValueError("k must be positive")
    if cutoff < 2 * k - 1:
        raise ValueError(
            f"cutoff {cutoff} too small: the projector polynomial reaches level "
            f"{2 * (k - 1)}, so at least {2 * k - 1} levels are required"
        )


def sbm_projector(n: int, m: int, k: int, cutoff: int) -> Operator:
    """Ladder-operator polynomial acting as ``|n><m|`` on levels 0..k-1."""
    if not (0 <= n <= k - 1 and 0 <= m <= k - 1):
        raise ValueError(f"projector labels ({n}, {m}) outside 0..{k - 1}")
    _check_mapping_args(k, cutoff)
    reg = QumodeRegister((cutoff,))
    a = annihilation(reg, 1).entries
    adag = a.conj().T
    gamma = ((k - 1) * np.eye(cutoff) - adag @ a) @ a
    poly = (
        np.linalg.matrix_power(adag, n)
        @ np.linalg.matrix_power(gamma, k - 1)
        @ np.linalg.matrix_power(adag, k - 1 - m)
    )
    scale = math.sqrt(math.factorial(m) / math.factorial(n)) / math.factorial(k - 1) ** 2
    return Operator(scale * poly, reg)


def map_hamiltonian(H: DenseHamiltonian, cutoff: int) -> Operator:
    """Embed a k x k Hamiltonian into one qumode: ``sum_nm H_nm P_nm``.

    The restriction of the result to levels 0..k-1 reproduces ``H``
    entrywise; the block beyond those levels is a by-product of the
    construction. No unit conversion is applied here.
    """
    k = H.k
    _check_mapping_args(k, cutoff)
    reg = QumodeRegister((cutoff,))
    out = np.zeros((cutoff, cutoff), dtype=complex)
    for n in range(k):
        for m in range(k):
            coeff = H.entries[n, m]
            if coeff != 0.0:
                out += coeff * sbm_projector(n, m, k, cutoff).entries
    return Operator(out, reg)


def computational_block(op: Operator, k: int) -> np.ndarray:
    """The upper-left k x k block of a single-mode operator."""
    if op.register.nmodes != 1:
        raise ValueError("restriction is defined for single-mode operators")
    if k > op.register.cutoffs[0]:
        raise ValueError("block size exceeds the cutoff")
    return np.array(op.entries[:k, :k])


def sbm_evolve(
    H: DenseHamiltonian,
    psi0: np.ndarray,
    times,
    cutoff: int,
) -> np.ndarray:
    """Level populations of the embedded dynamics at the requested times.

    ``psi0`` (length k, normalized) is placed on the lowest k Fock levels and
    propagated under the mapped Hamiltonian projected back onto those levels.
    Hamiltonians labelled 1/cm are converted to rad/ps, with times in ps.
    Returns an array of shape ``(len(times), k)`` whose rows sum to one.
    """
    k = H.k
    psi0 = np.asarray(psi0, dtype=complex)
    if psi0.shape != (k,):
        raise ValueError(f"initial state must have length {k}")
    if abs(np.linalg.norm(psi0) - 1.0) > 1e-8:
        raise ValueError("initial state must be normalized")
    mapped = map_hamiltonian(H, cutoff)
    block = computational_block(mapped, k)
    if H.units == "1/cm":
        block = block * WAVENUMBER_TO_RAD_PER_PS
    # The restriction reproduces a Hermitian matrix up to round-off;
    # symmetrize before diagonalizing so the propagation is exactly unitary.
    block = 0.5 * (block + block.conj().T)
    w, V = np.linalg.eigh(block)
    coeffs = V.conj().T @ psi0
    times = np.atleast_1d(np.asarray(times, dtype=float))
    phases = np.exp(-1j * np.outer(times, w))
    states = (V @ (phases * coeffs).T).T
    return np.abs(states) ** 2


def snail_hamiltonian(p: SnailParams) -> Operator:
    """Anharmonic resonator Hamiltonian ``omega n + g3 (a + adag)^3`` (hbar=1)."""
    reg = QumodeRegister((p.cutoff,))
    n = number(reg, 1).entries
    a = annihilation(reg, 1).entries
    x_like = a + a.conj().T
    cubic = np.linalg.matrix_power(x_like, 3)
    return Operator(p.omega * n + p.g3 * cubic, reg)
