import numpy as np
import pytest

from qumodelab import (
    ContractViolation,
    ConvergenceError,
    DoubleWellParams,
    KerrCatParams,
    density_of_states,
    doublewell_hamiltonian,
    esqpt_energy,
    excitation_sweep,
    kerrcat_hamiltonian,
    metapotential_dos,
    pair_gaps,
    parity_split,
    quadratures,
)


def eig(H):
    return np.linalg.eigvalsh(H.entries)


# ---------------------------------------------------------------------------
# Kerr-cat Hamiltonian
# ---------------------------------------------------------------------------


def test_undriven_spectrum_is_number_polynomial():
    K = 1.3
    H = kerrcat_hamiltonian(KerrCatParams(xi=0.0, K=K, cutoff=12))
    n = np.arange(12)
    assert np.abs(H.entries - np.diag(K * n * (n - 1))).max() < 1e-12


def test_commutes_with_parity():
    H = kerrcat_hamiltonian(KerrCatParams(xi=3.7, K=1.0, cutoff=40))
    parity = np.diag((-1.0) ** np.arange(40))
    assert np.abs(H.entries @ parity - parity @ H.entries).max() < 1e-12


def test_drive_matrix_element():
    K, xi = 1.4, 0.9
    H = kerrcat_hamiltonian(KerrCatParams(xi=xi, K=K, cutoff=8))
    assert abs(H.entries[0, 2] - (-K * xi * np.sqrt(2))) < 1e-12


def test_ground_energy_is_exact_cat_energy():
    # the coherent states at +-sqrt(xi) are exact eigenstates at -K xi^2
    for xi in (2.0, 5.0):
        H = kerrcat_hamiltonian(KerrCatParams(xi=xi, K=1.0, cutoff=100))
        evals = eig(H)
        assert abs(evals[0] - (-(xi**2))) < 1e-8
        assert abs(evals[1] - (-(xi**2))) < 1e-8


# ---------------------------------------------------------------------------
# parity blocks
# ---------------------------------------------------------------------------


def test_parity_block_sizes():
    H = kerrcat_hamiltonian(KerrCatParams(xi=1.0, K=1.0, cutoff=6))
    even, odd = parity_split(H)
    assert even.dim == 3 and odd.dim == 3


def test_even_block_at_zero_drive():
    K = 1.0
    H = kerrcat_hamiltonian(KerrCatParams(xi=0.0, K=K, cutoff=6))
    even, _ = parity_split(H)
    assert np.abs(even.entries - np.diag([0.0, 2.0, 12.0])).max() < 1e-12


def test_blocks_cover_full_spectrum():
    H = kerrcat_hamiltonian(KerrCatParams(xi=2.5, K=1.0, cutoff=30))
    even, odd = parity_split(H)
    merged = np.sort(np.concatenate([eig(even), eig(odd)]))
    assert np.abs(merged - eig(H)).max() < 1e-9


def test_parity_violation_rejected():
    H = doublewell_hamiltonian(DoubleWellParams(k4=1.0, k2=4.0, k1=0.3, cutoff=20))
    with pytest.raises(ContractViolation):
        parity_split(H)


# ---------------------------------------------------------------------------
# excitation sweeps and pair gaps
# ---------------------------------------------------------------------------


def test_sweep_at_zero_drive():
    sweep = excitation_sweep(1.0, [0.0], cutoff=40, n_levels=6)
    assert np.abs(sweep.excitations[0] - [0.0, 0.0, 2.0, 6.0, 12.0, 20.0]).max() < 1e-10
    assert list(sweep.parities[0]) == [1, -1, 1, -1, 1, -1]


def test_sweep_excitations_non_negative_and_sorted():
    sweep = excitation_sweep(1.0, [0.0, 1.0, 2.0], cutoff=60, n_levels=10)
    assert np.all(sweep.excitations >= 0.0)
    assert np.all(np.diff(sweep.excitations, axis=1) >= -1e-12)
    assert np.abs(sweep.excitations[:, 0]).max() == 0.0


def test_sweep_convergence_error_names_xi():
    with pytest.raises(ConvergenceError, match="xi=4"):
        excitation_sweep(1.0, [0.0, 4.0], cutoff=10, n_levels=8)


def test_pair_gap_structure():
    sweep = excitation_sweep(1.0, [0.0], cutoff=40, n_levels=8)
    (gaps,) = pair_gaps(sweep)
    assert gaps.shape == (4, 2)
    assert abs(gaps[0, 1]) < 1e-12  # n(n-1) degeneracy of levels 0 and 1


def test_pair_gaps_need_even_levels():
    sweep = excitation_sweep(1.0, [0.0], cutoff=40, n_levels=5)
    with pytest.raises(ValueError):
        pair_gaps(sweep)


def test_first_resolvable_pair_gap_shrinks_with_drive():
    sweep = excitation_sweep(1.0, [1.0, 2.0], cutoff=60, n_levels=4)
    gaps = pair_gaps(sweep)
    gap_pair1 = [g[1, 1] for g in gaps]
    assert gap_pair1[1] < gap_pair1[0]


def test_pairs_below_esqpt_are_kissing():
    # every pair below the DOS-peak energy is tighter than its distance to
    # the next pair up
    xi = 3.0
    sweep = excitation_sweep(1.0, [xi], cutoff=80, n_levels=20)
    (gaps,) = pair_gaps(sweep)
    peak = esqpt_energy(KerrCatParams(xi=xi, K=1.0, cutoff=120))
    for i in range(len(gaps) - 1):
        energy, gap = gaps[i]
        if energy < peak:
            spacing_to_next = gaps[i + 1, 0] - energy
            assert gap < spacing_to_next


# ---------------------------------------------------------------------------
# density of states
# ---------------------------------------------------------------------------


def test_dos_normalized():
    H = kerrcat_hamiltonian(KerrCatParams(xi=2.0, K=1.0, cutoff=60))
    dos = density_of_states(H, bins=20)
    assert abs(dos.total_weight - 1.0) < 1e-12


def test_dos_bin_count_validation():
    H = kerrcat_hamiltonian(KerrCatParams(xi=2.0, K=1.0, cutoff=60))
    with pytest.raises(ValueError):
        density_of_states(H, bins=5)


def test_dos_zero_drive_supported_on_number_values():
    H = kerrcat_hamiltonian(KerrCatParams(xi=0.0, K=1.0, cutoff=40))
    dos = density_of_states(H, bins=30)
    half_width = (dos.energies[1] - dos.energies[0]) / 2
    values = {n * (n - 1) for n in range(40)}
    for center, weight in zip(dos.energies, dos.weights):
        if weight > 0:
            assert any(abs(v - center) <= half_width + 1e-9 for v in values)


def test_metapotential_dos_peaks_at_barrier():
    params = KerrCatParams(xi=5.0, K=1.0, cutoff=120)
    dos = metapotential_dos(params, bins=10, span=6.0)
    weights = dos.weights
    imax = int(np.argmax(weights))
    assert np.sum(weights == weights[imax]) == 1  # unique maximum
    assert 0 < imax < len(weights) - 1  # interior bin
    peak = dos.energies[imax]
    assert peak > 0.0
    midpoint = (dos.energies[0] + dos.energies[-1]) / 2
    assert peak < midpoint
    # the barrier of the metapotential sits at excitation energy K xi^2
    assert abs(peak - 25.0) <= (dos.energies[1] - dos.energies[0])


# ---------------------------------------------------------------------------
# double well
# ---------------------------------------------------------------------------


def test_harmonic_limit():
    # k4 = 0, k2 = -1/2 gives p^2/2 + x^2/2 with levels n + 1/2
    H = doublewell_hamiltonian(DoubleWellParams(k4=0.0, k2=-0.5, k1=0.0, cutoff=60))
    evals = eig(H)[:10]
    assert np.abs(evals - (np.arange(10) + 0.5)).max() < 1e-6


def test_symmetric_well_position_expectation_vanishes():
    p = DoubleWellParams(k4=1.0, k2=4.0, k1=0.0, cutoff=60)
    H = doublewell_hamiltonian(p)
    _, vecs = np.linalg.eigh(H.entries)
    x, _ = quadratures(H.register, 1)
    for level in range(6):
        v = vecs[:, level]
        assert abs(np.vdot(v, x.entries @ v).real) < 1e-8


def test_quasi_degenerate_doublet():
    # oracle values for k4=1, k2=4: splitting 9.57e-2 against a 2.47 gap to
    # the next level; deepening the well to k2=6 pushes the ratio below 1e-2
    evals = eig(doublewell_hamiltonian(DoubleWellParams(k4=1.0, k2=4.0, k1=0.0, cutoff=80)))
    gap01, gap12 = evals[1] - evals[0], evals[2] - evals[1]
    assert gap01 == pytest.approx(9.569e-2, abs=2e-4)
    assert gap01 / gap12 < 5e-2

    evals = eig(doublewell_hamiltonian(DoubleWellParams(k4=1.0, k2=6.0, k1=0.0, cutoff=80)))
    assert (evals[1] - evals[0]) / (evals[2] - evals[1]) < 1e-2


def test_tilt_direction():
    for k1 in (0.05, -0.05):
        H = doublewell_hamiltonian(DoubleWellParams(k4=1.0, k2=4.0, k1=k1, cutoff=60))
        _, vecs = np.linalg.eigh(H.entries)
        x, _ = quadratures(H.register, 1)
        mean_x = np.vdot(vecs[:, 0], x.entries @ vecs[:, 0]).real
        assert np.sign(mean_x) == -np.sign(k1)


def test_unbounded_potential_rejected():
    with pytest.raises(ValueError):
        DoubleWellParams(k4=0.0, k2=1.0, k1=0.0, cutoff=20)
    with pytest.raises(ValueError):
        DoubleWellParams(k4=-1.0, k2=0.0, k1=0.0, cutoff=20)


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def test_parity_blocks_lossless_across_drives():
    for xi in (0.0, 2.5, 10.0):
        H = kerrcat_hamiltonian(KerrCatParams(xi=xi, K=1.0, cutoff=80))
        even, odd = parity_split(H)
        merged = np.sort(np.concatenate([eig(even), eig(odd)]))
        assert np.abs(merged - eig(H)).max() < 1e-9


def test_kissing_monotone_over_drive():
    sweep = excitation_sweep(1.0, [0.5, 1.0, 2.0, 4.0], cutoff=80, n_levels=4)
    gaps = [g[1, 1] for g in pair_gaps(sweep)]
    for a, b in zip(gaps, gaps[1:]):
        assert b <= a + 1e-10


def test_cutoff_convergence_of_low_spectrum():
    for xi in (1.0, 5.0):
        e80 = eig(kerrcat_hamiltonian(KerrCatParams(xi=xi, K=1.0, cutoff=80)))[:20]
        e120 = eig(kerrcat_hamiltonian(KerrCatParams(xi=xi, K=1.0, cutoff=120)))[:20]
        assert np.abs(e80 - e120).max() < 1e-8
