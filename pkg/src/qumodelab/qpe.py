"""Qudit quantum phase estimation on truncated qumodes.

Qudits are the lowest ``d`` levels of qumodes with cutoff exactly ``d``; the
circuit is simulated at the logical level. A register of ``t`` qudits is
Fourier-prepared, each register qudit controls a power ``U^(c d^j)`` of the
target unitary (the first register qudit carries the most significant digit,
controlling ``U^(d^(t-1))``), and an inverse Fourier transform over the whole
register maps the accumulated phase onto the computational basis. For an
eigenphase ``phi = a / d^t`` the readout is exactly the base-d digits of
``a``; otherwise the distribution concentrates on the nearest t-digit
approximations.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation
from .fock import Operator, QumodeRegister, StateVector

__all__ = [
    "UNITARITY_TOL",
    "QpeSpec",
    "qudit_fourier",
    "controlled_power",
    "qpe_circuit",
    "run_qpe",
    "phase_from_outcome",
    "outcome_digits",
    "sample_readout",
]

UNITARITY_TOL = 1e-9
EIGENSTATE_TOL = 1e-8


def _check_unitary(U: np.ndarray, what: str = "matrix") -> None:
    defect = np.abs(U.conj().T @ U - np.eye(U.shape[0])).max()
    if defect > UNITARITY_TOL:
        raise ContractViolation(f"{what} is not unitary: defect {defect:.3e}")


@dataclass(frozen=True, eq=False)
class QpeSpec:
    """Problem statement: qudit dimension, register size, unitary, eigenstate."""

    d: int
    t: int
    U: Operator
    eigenstate: StateVector

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError("qudit dimension must be at least 2")
        if self.t < 1:
            raise ValueError("register needs at least one qudit")
        if self.U.register.cutoffs != (self.d,):
            raise ValueError("U must act on a single qudit of dimension d")
        if self.eigenstate.register.cutoffs != (self.d,):
            raise ValueError("eigenstate must live on a single qudit of dimension d")
        _check_unitary(self.U.entries, "U")
        psi = self.eigenstate.amplitudes
        if abs(np.linalg.norm(psi) - 1.0) > 1e-9:
            raise ValueError("eigenstate must be normalized")
        lam = complex(np.vdot(psi, self.U.entries @ psi))
        residual = np.linalg.norm(self.U.entries @ psi - lam * psi)
        if residual > EIGENSTATE_TOL:
            raise ContractViolation(
                f"state is not an eigenstate of U: residual {residual:.3e}"
            )

    @property
    def phase(self) -> float:
        """Eigenphase phi in [0, 1): U|psi> = exp(2 pi i phi)|psi>."""
        psi = self.eigenstate.amplitudes
        lam = complex(np.vdot(psi, self.U.entries @ psi))
        return (cmath.phase(lam) / (2.0 * math.pi)) % 1.0


def qudit_fourier(d: int) -> Operator:
    """Fourier matrix F_jk = exp(2 pi i j k / d) / sqrt(d); the d=2 case is
    the Hadamard gate."""
    if d < 2:
        raise ValueError("Fourier transform needs dimension at least 2")
    j = np.arange(d)
    F = np.exp(2j * np.pi * np.outer(j, j) / d) / math.sqrt(d)
    return Operator(F, QumodeRegister((d,)))


def controlled_power(U: Operator, j: int, d: int) -> Operator:
    """Two-qudit gate ``sum_c |c><c| (x) U^(c d^j)`` on control (x) target."""
    if j < 0:
        raise ValueError("power index must be non-negative")
    if U.register.cutoffs != (d,):
        raise ValueError("U must act on a single qudit of dimension d")
    _check_unitary(U.entries, "U")
    W = np.linalg.matrix_power(U.entries, d**j)
    reg = QumodeRegister((d, d))
    out = np.zeros((d * d, d * d), dtype=complex)
    block = np.eye(d, dtype=complex)
    for c in range(d):
        out[c * d : (c + 1) * d, c * d : (c + 1) * d] = block
        block = block @ W
    return Operator(out, reg)


def _embed(matrix: np.ndarray, dims_before: int, dims_after: int) -> np.ndarray:
    return np.kron(np.kron(np.eye(dims_before), matrix), np.eye(dims_after))


def qpe_circuit(spec: QpeSpec) -> Operator:
    """Full circuit unitary on the ``t + 1`` qudit register + target space."""
    d, t = spec.d, spec.t
    reg = QumodeRegister((d,) * t + (d,))
    dim_reg = d**t
    F = qudit_fourier(d).entries

    circuit = np.eye(dim_reg * d, dtype=complex)
    # Fourier-prepare every register qudit.
    for i in range(1, t + 1):
        circuit = _embed(F, d ** (i - 1), d ** (t - i) * d) @ circuit
    # Controlled powers: register qudit i carries digit weight d^(t - i), so
    # it controls U^(d^(t - i)). Built as |c><c| (x) I_spectators (x) U^(c w)
    # with the target sitting on the last mode.
    for i in range(1, t + 1):
        before, between = d ** (i - 1), d ** (t - i)
        span = between * d
        full = np.zeros((d * span, d * span), dtype=complex)
        W = np.linalg.matrix_power(spec.U.entries, d ** (t - i))
        block = np.eye(d, dtype=complex)
        for c in range(d):
            full[c * span : (c + 1) * span, c * span : (c + 1) * span] = np.kron(
                np.eye(between), block
            )
            block = block @ W
        circuit = _embed(full, before, 1) @ circuit
    # Inverse Fourier transform over the whole register, read as one base-d
    # integer with qudit 1 most significant (the flat-index convention).
    F_reg_inv = qudit_fourier(dim_reg).entries.conj().T
    circuit = np.kron(F_reg_inv, np.eye(d)) @ circuit
    return Operator(circuit, reg)


def run_qpe(spec: QpeSpec) -> np.ndarray:
    """Exact outcome distribution over the ``d^t`` register readouts."""
    d, t = spec.d, spec.t
    reg = QumodeRegister((d,) * t + (d,))
    psi0 = np.zeros(reg.dim, dtype=complex)
    psi0[: d] = spec.eigenstate.amplitudes  # |0...0> (x) |eigenstate>
    final = qpe_circuit(spec).entries @ psi0
    probs = np.abs(final.reshape(d**t, d)) ** 2
    return probs.sum(axis=1)


def outcome_digits(outcome: int, d: int, t: int) -> str:
    """Base-d digit string of a readout, most significant digit first."""
    digits = []
    for _ in range(t):
        outcome, r = divmod(outcome, d)
        digits.append(str(r))
    return "".join(reversed(digits))


def phase_from_outcome(outcome: int, d: int, t: int) -> float:
    """Phase estimate encoded by a readout: outcome / d^t."""
    return outcome / d**t


def sample_readout(dist: np.ndarray, shots: int, seed: int) -> np.ndarray:
    """Multinomial counts over the outcomes; deterministic for a given seed."""
    dist = np.asarray(dist, dtype=float)
    if shots < 1:
        raise ValueError("shots must be at least 1")
    if np.any(dist < -1e-12) or abs(dist.sum() - 1.0) > 1e-9:
        raise ValueError("distribution must be non-negative and sum to 1")
    p = np.clip(dist, 0.0, None)
    rng = np.random.default_rng(seed)
    return rng.multinomial(shots, p / p.sum())
