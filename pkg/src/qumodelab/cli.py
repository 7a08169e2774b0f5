"""Config-driven experiment runner (the ``qumode-lab`` entry point).

One experiment per JSON config file:

    {"experiment": "...", "params": {...}, "output": "path", "seed": 0}

Subcommands: ``run <config.json>``, ``validate <config.json>``, ``demos``.
Exit codes: 0 success, 1 validation failure, 2 convergence failure, 3 I/O
failure. Outputs are CSV (header row, LF endings, 12 significant digits) or
JSON, byte-stable across reruns for a fixed config and seed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .errors import ConvergenceError
from .fock import Operator, QumodeRegister, basis_state
from .gates import top_level_population
from .graphs import adjacency_from_edges, hafnian, perfect_matching_count, read_edge_list
from .kerrcat import (
    DoubleWellParams,
    KerrCatParams,
    doublewell_hamiltonian,
    esqpt_energy,
    excitation_sweep,
    metapotential_dos,
)
from .qpe import (
    QpeSpec,
    outcome_digits,
    phase_from_outcome,
    run_qpe,
    sample_readout,
)
from .sbm import DenseHamiltonian, computational_block, fmo_hamiltonian, map_hamiltonian, sbm_evolve
from .vibronic import DoktorovSpec, doktorov_operator, fcf_table, stick_spectrum

__all__ = ["Diagnostic", "validate", "run", "list_demos", "demo_path", "main"]

EXPERIMENTS = ("vibronic", "sbm-evolve", "kerrcat-sweep", "doublewell", "hafnian", "qpe")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONVERGENCE = 2
EXIT_IO = 3


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" or "warning"
    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.field}: {self.message}"


def _err(field: str, message: str) -> Diagnostic:
    return Diagnostic("error", field, message)


def _warn(field: str, message: str) -> Diagnostic:
    return Diagnostic("warning", field, message)


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _is_complexish(v) -> bool:
    if _is_number(v):
        return True
    return (
        isinstance(v, list)
        and len(v) == 2
        and _is_number(v[0])
        and _is_number(v[1])
    )


def _to_complex(v) -> complex:
    if isinstance(v, list):
        return complex(v[0], v[1])
    return complex(v)


# ---------------------------------------------------------------------------
# per-experiment validation
# ---------------------------------------------------------------------------


def _validate_vibronic(p: dict, diags: list[Diagnostic]) -> None:
    allowed = {
        "alpha1", "alpha2", "z1", "z2", "theta_bs", "phi_bs",
        "cutoff", "initial", "maxq", "freqs", "e00", "note",
    }
    for key in sorted(set(p) - allowed):
        diags.append(_err(f"params.{key}", "unknown key"))
    for key in ("alpha1", "alpha2", "z1", "z2"):
        if key in p and not _is_complexish(p[key]):
            diags.append(_err(f"params.{key}", "must be a number or [re, im] pair"))
    for key in ("theta_bs", "phi_bs", "e00"):
        if key in p and not _is_number(p[key]):
            diags.append(_err(f"params.{key}", "must be a finite number"))
    cutoff = p.get("cutoff", 16)
    if not _is_int(cutoff) or cutoff < 2:
        diags.append(_err("params.cutoff", "must be an integer >= 2"))
        cutoff = 16
    if "freqs" not in p:
        diags.append(_err("params.freqs", "required: [w1, w2] mode frequencies"))
    elif (
        not isinstance(p["freqs"], list)
        or len(p["freqs"]) != 2
        or not all(_is_number(w) and w > 0 for w in p["freqs"])
    ):
        diags.append(_err("params.freqs", "must be two positive numbers"))
    initial = p.get("initial", [0, 0])
    if (
        not isinstance(initial, list)
        or len(initial) != 2
        or not all(_is_int(n) and 0 <= n < cutoff for n in initial)
    ):
        diags.append(_err("params.initial", f"must be two integers in 0..{cutoff - 1}"))
    maxq = p.get("maxq", cutoff - 1)
    if not _is_int(maxq) or not 0 <= maxq < cutoff:
        diags.append(_err("params.maxq", f"must be an integer in 0..{cutoff - 1}"))
    if "note" in p and not isinstance(p["note"], str):
        diags.append(_err("params.note", "must be a string"))


def _validate_sbm_evolve(p: dict, diags: list[Diagnostic]) -> None:
    allowed = {"hamiltonian", "units", "cutoff", "initial", "times"}
    for key in sorted(set(p) - allowed):
        diags.append(_err(f"params.{key}", "unknown key"))
    k = None
    ham = p.get("hamiltonian")
    if ham is None:
        diags.append(_err("params.hamiltonian", "required: 'fmo4' or a k x k matrix"))
    elif ham == "fmo4":
        k = 4
        if p.get("units", "1/cm") != "1/cm":
            diags.append(_err("params.units", "the fmo4 model is defined in 1/cm"))
    elif isinstance(ham, list):
        rows_ok = all(
            isinstance(row, list) and len(row) == len(ham) and all(_is_number(x) for x in row)
            for row in ham
        )
        if not rows_ok or len(ham) == 0:
            diags.append(_err("params.hamiltonian", "matrix must be square with numeric entries"))
        else:
            k = len(ham)
            M = np.array(ham, dtype=float)
            if np.abs(M - M.T).max() > 1e-10:
                diags.append(_err("params.hamiltonian", "matrix must be symmetric"))
    else:
        diags.append(_err("params.hamiltonian", "must be 'fmo4' or a k x k matrix"))
    if "units" in p and p["units"] not in ("1/cm", "dimensionless"):
        diags.append(_err("params.units", "must be '1/cm' or 'dimensionless'"))
    if k is not None:
        cutoff = p.get("cutoff", 2 * k - 1)
        if not _is_int(cutoff) or cutoff < 2 * k - 1:
            diags.append(
                _err("params.cutoff", f"must be an integer >= {2 * k - 1} for k = {k}")
            )
    initial = p.get("initial")
    if initial is None:
        diags.append(_err("params.initial", "required: site index or amplitude list"))
    elif _is_int(initial):
        if k is not None and not 1 <= initial <= k:
            diags.append(_err("params.initial", f"site index must be in 1..{k}"))
    elif isinstance(initial, list):
        if not all(_is_complexish(x) for x in initial):
            diags.append(_err("params.initial", "amplitudes must be numbers or [re, im]"))
        elif k is not None:
            if len(initial) != k:
                diags.append(_err("params.initial", f"needs {k} amplitudes"))
            else:
                vec = np.array([_to_complex(x) for x in initial])
                if abs(np.linalg.norm(vec) - 1.0) > 1e-8:
                    diags.append(_err("params.initial", "amplitude list must be normalized"))
    else:
        diags.append(_err("params.initial", "must be a site index or amplitude list"))
    times = p.get("times")
    if times is None:
        diags.append(_err("params.times", "required: list or {start, stop, num}"))
    elif isinstance(times, dict):
        if set(times) != {"start", "stop", "num"}:
            diags.append(_err("params.times", "needs exactly the keys start, stop, num"))
        elif not (
            _is_number(times["start"])
            and _is_number(times["stop"])
            and _is_int(times["num"])
            and times["num"] >= 1
        ):
            diags.append(_err("params.times", "start/stop numbers and num >= 1"))
    elif isinstance(times, list):
        if not times or not all(_is_number(t) for t in times):
            diags.append(_err("params.times", "must be a non-empty list of numbers"))
    else:
        diags.append(_err("params.times", "must be a list or {start, stop, num}"))


def _validate_kerrcat(p: dict, diags: list[Diagnostic]) -> None:
    allowed = {"K", "xi_grid", "cutoff", "n_levels", "dos_xi", "dos_bins", "dos_span", "dos_output"}
    for key in sorted(set(p) - allowed):
        diags.append(_err(f"params.{key}", "unknown key"))
    if "K" in p and not _is_number(p["K"]):
        diags.append(_err("params.K", "must be a finite number"))
    grid = p.get("xi_grid")
    if grid is None:
        diags.append(_err("params.xi_grid", "required: list of drive values"))
    elif not isinstance(grid, list) or not grid or not all(
        _is_number(x) and x >= 0 for x in grid
    ):
        diags.append(_err("params.xi_grid", "must be a non-empty list of numbers >= 0"))
    elif list(grid) != sorted(grid):
        diags.append(_warn("params.xi_grid", "grid is not sorted ascending"))
    cutoff = p.get("cutoff")
    if not _is_int(cutoff) or cutoff < 4:
        diags.append(_err("params.cutoff", "required: integer >= 4"))
    n_levels = p.get("n_levels")
    if not _is_int(n_levels) or n_levels < 1:
        diags.append(_err("params.n_levels", "required: integer >= 1"))
    elif _is_int(cutoff) and cutoff >= 4 and n_levels > cutoff:
        diags.append(_err("params.n_levels", "cannot exceed the cutoff"))
    if "dos_xi" in p:
        if not _is_number(p["dos_xi"]) or p["dos_xi"] <= 0:
            diags.append(_err("params.dos_xi", "must be a positive number"))
        if "dos_output" not in p:
            diags.append(_err("params.dos_output", "required when dos_xi is given"))
        elif not isinstance(p["dos_output"], str) or not p["dos_output"]:
            diags.append(_err("params.dos_output", "must be a non-empty path"))
    elif "dos_output" in p:
        diags.append(_err("params.dos_output", "only meaningful together with dos_xi"))
    if "dos_bins" in p and (not _is_int(p["dos_bins"]) or p["dos_bins"] < 10):
        diags.append(_err("params.dos_bins", "must be an integer >= 10"))
    if "dos_span" in p and (not _is_number(p["dos_span"]) or p["dos_span"] <= 0):
        diags.append(_err("params.dos_span", "must be a positive number"))


def _validate_doublewell(p: dict, diags: list[Diagnostic]) -> None:
    allowed = {"k4", "k2", "k1", "mass", "cutoff", "n_levels"}
    for key in sorted(set(p) - allowed):
        diags.append(_err(f"params.{key}", "unknown key"))
    for key in ("k4", "k2"):
        if key not in p:
            diags.append(_err(f"params.{key}", "required"))
        elif not _is_number(p[key]):
            diags.append(_err(f"params.{key}", "must be a finite number"))
    if "k1" in p and not _is_number(p["k1"]):
        diags.append(_err("params.k1", "must be a finite number"))
    if "mass" in p and (not _is_number(p["mass"]) or p["mass"] <= 0):
        diags.append(_err("params.mass", "must be a positive number"))
    k4, k2 = p.get("k4"), p.get("k2")
    if _is_number(k4) and _is_number(k2) and (k4 < 0 or (k4 == 0 and k2 > 0)):
        diags.append(_err("params.k4", "potential unbounded below: need k4 > 0, or k4 = 0 with k2 <= 0"))
    cutoff = p.get("cutoff")
    if not _is_int(cutoff) or cutoff < 2:
        diags.append(_err("params.cutoff", "required: integer >= 2"))
    n_levels = p.get("n_levels")
    if not _is_int(n_levels) or n_levels < 1:
        diags.append(_err("params.n_levels", "required: integer >= 1"))
    elif _is_int(cutoff) and cutoff >= 2 and n_levels > cutoff:
        diags.append(_err("params.n_levels", "cannot exceed the cutoff"))


def _validate_hafnian(p: dict, diags: list[Diagnostic]) -> None:
    allowed = {"edges", "edges_file", "n"}
    for key in sorted(set(p) - allowed):
        diags.append(_err(f"params.{key}", "unknown key"))
    has_edges = "edges" in p
    has_file = "edges_file" in p
    if has_edges == has_file:
        diags.append(_err("params.edges", "give exactly one of edges or edges_file"))
    if has_edges:
        edges = p["edges"]
        ok = isinstance(edges, list) and all(
            isinstance(e, list)
            and len(e) in (2, 3)
            and _is_int(e[0]) and _is_int(e[1])
            and (len(e) == 2 or _is_number(e[2]))
            for e in edges
        )
        if not ok:
            diags.append(_err("params.edges", "must be a list of [i, j] or [i, j, weight]"))
    if has_file and (not isinstance(p["edges_file"], str) or not p["edges_file"]):
        diags.append(_err("params.edges_file", "must be a non-empty path"))
    if "n" in p and (not _is_int(p["n"]) or p["n"] < 1):
        diags.append(_err("params.n", "must be a positive integer"))


def _validate_qpe(p: dict, diags: list[Diagnostic]) -> None:
    allowed = {"d", "t", "phase", "shots"}
    for key in sorted(set(p) - allowed):
        diags.append(_err(f"params.{key}", "unknown key"))
    d = p.get("d")
    if not _is_int(d) or d < 2:
        diags.append(_err("params.d", "required: integer >= 2"))
    t = p.get("t")
    if not _is_int(t) or t < 1:
        diags.append(_err("params.t", "required: integer >= 1"))
    if _is_int(d) and _is_int(t) and d ** (t + 1) > 4096:
        diags.append(_err("params.t", f"register too large: d^(t+1) = {d ** (t + 1)} > 4096"))
    if "phase" not in p:
        diags.append(_err("params.phase", "required: eigenphase in [0, 1)"))
    elif not _is_number(p["phase"]):
        diags.append(_err("params.phase", "must be a finite number"))
    if "shots" in p and (not _is_int(p["shots"]) or p["shots"] < 0):
        diags.append(_err("params.shots", "must be a non-negative integer"))


_VALIDATORS = {
    "vibronic": _validate_vibronic,
    "sbm-evolve": _validate_sbm_evolve,
    "kerrcat-sweep": _validate_kerrcat,
    "doublewell": _validate_doublewell,
    "hafnian": _validate_hafnian,
    "qpe": _validate_qpe,
}


def _load_config(config_path: str) -> dict:
    """Read and parse the config file. OSError propagates (I/O failure)."""
    with open(config_path) as fh:
        text = fh.read()
    return json.loads(text)


def validate(config_path: str) -> list[Diagnostic]:
    """All violations in a config file, without running it.

    An empty list, or warnings only, means the config is runnable.
    """
    try:
        cfg = _load_config(config_path)
    except json.JSONDecodeError as exc:
        return [_err("config", f"invalid JSON: {exc}")]
    return validate_config(cfg)


def validate_config(cfg) -> list[Diagnostic]:
    diags: list[Diagnostic] = []
    if not isinstance(cfg, dict):
        return [_err("config", "top level must be a JSON object")]
    allowed = {"experiment", "params", "output", "seed", "threads"}
    for key in sorted(set(cfg) - allowed):
        diags.append(_err(key, "unknown key"))
    exp = cfg.get("experiment")
    if exp is None:
        diags.append(_err("experiment", "required; one of " + ", ".join(EXPERIMENTS)))
    elif exp not in EXPERIMENTS:
        diags.append(_err("experiment", f"unknown experiment {exp!r}"))
    if "output" not in cfg:
        diags.append(_err("output", "required output path"))
    elif not isinstance(cfg["output"], str) or not cfg["output"]:
        diags.append(_err("output", "must be a non-empty path"))
    if "seed" in cfg and not _is_int(cfg["seed"]):
        diags.append(_err("seed", "must be an integer"))
    if "threads" in cfg and (not _is_int(cfg["threads"]) or cfg["threads"] < 1):
        diags.append(_err("threads", "must be a positive integer"))
    params = cfg.get("params")
    if params is None:
        diags.append(_err("params", "required parameter object"))
    elif not isinstance(params, dict):
        diags.append(_err("params", "must be a JSON object"))
    elif exp in _VALIDATORS:
        _VALIDATORS[exp](params, diags)
    return diags


# ---------------------------------------------------------------------------
# experiment execution
# ---------------------------------------------------------------------------


def _write_rows(path: str, header: list[str], rows) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(x) for x in row) + "\n")


def _fmt(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.12g}"


def _write_json(path: str, obj) -> None:
    with open(path, "w", newline="\n") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _round12(x: float) -> float:
    return float(f"{float(x):.12g}")


def _run_vibronic(cfg: dict) -> str:
    p = cfg["params"]
    cutoff = p.get("cutoff", 16)
    spec = DoktorovSpec(
        alpha1=_to_complex(p.get("alpha1", 0.0)),
        alpha2=_to_complex(p.get("alpha2", 0.0)),
        z1=_to_complex(p.get("z1", 0.0)),
        z2=_to_complex(p.get("z2", 0.0)),
        theta_bs=float(p.get("theta_bs", 0.0)),
        phi_bs=float(p.get("phi_bs", 0.0)),
    )
    reg = QumodeRegister((cutoff, cutoff))
    U = doktorov_operator(spec, reg)
    initial = tuple(p.get("initial", [0, 0]))
    maxq = p.get("maxq", cutoff - 1)
    table = fcf_table(U, initial, maxq)
    spectrum = stick_spectrum(table, tuple(p["freqs"]), float(p.get("e00", 0.0)))
    spectrum.write_csv(cfg["output"], header=("energy", "weight"))
    # Truncation stress of the row state U^dag |initial>: if its top levels
    # are empty, the tabulated factors are converged in the cutoff.
    row_state = U.adjoint.apply(basis_state(reg, initial))
    leak = float(top_level_population(row_state).max())
    return (
        f"vibronic: wrote {cfg['output']} ({len(spectrum)} lines, "
        f"total weight {spectrum.total_weight:.6f}, truncation leak {leak:.2e})"
    )


def _run_sbm_evolve(cfg: dict) -> str:
    p = cfg["params"]
    if p["hamiltonian"] == "fmo4":
        H = fmo_hamiltonian()
    else:
        units = p.get("units", "dimensionless")
        H = DenseHamiltonian(np.array(p["hamiltonian"], dtype=float), units=units)
    k = H.k
    cutoff = p.get("cutoff", 2 * k - 1)
    initial = p["initial"]
    if _is_int(initial):
        psi0 = np.zeros(k, dtype=complex)
        psi0[initial - 1] = 1.0
    else:
        psi0 = np.array([_to_complex(x) for x in initial])
    times_spec = p["times"]
    if isinstance(times_spec, dict):
        times = np.linspace(times_spec["start"], times_spec["stop"], times_spec["num"])
    else:
        times = np.asarray(times_spec, dtype=float)
    pops = sbm_evolve(H, psi0, times, cutoff)
    header = ["time"] + [f"pop_{i + 1}" for i in range(k)]
    rows = ([t] + list(row) for t, row in zip(times, pops))
    _write_rows(cfg["output"], header, rows)
    block = computational_block(map_hamiltonian(H, cutoff), k)
    restriction_err = float(np.abs(block - H.entries).max())
    return (
        f"sbm-evolve: wrote {cfg['output']} ({len(times)} times, k={k}, "
        f"mapping restriction error {restriction_err:.2e})"
    )


def _run_kerrcat(cfg: dict) -> str:
    p = cfg["params"]
    K = float(p.get("K", 1.0))
    grid = [float(x) for x in p["xi_grid"]]
    cutoff = p["cutoff"]
    n_levels = p["n_levels"]
    threads = cfg.get("threads", 1)

    def one(xi: float):
        return excitation_sweep(K, [xi], cutoff, n_levels)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            sweeps = list(pool.map(one, grid))
    else:
        sweeps = [one(xi) for xi in grid]

    rows = []
    for xi, sweep in zip(grid, sweeps):
        for level in range(n_levels):
            parity = "even" if sweep.parities[0, level] == 1 else "odd"
            rows.append([xi, level, parity, sweep.excitations[0, level]])
    _write_rows(cfg["output"], ["xi", "level_index", "parity", "excitation_energy"], rows)
    summary = f"kerrcat-sweep: wrote {cfg['output']} ({len(grid)} grid points, {n_levels} levels)"
    if "dos_xi" in p:
        params = KerrCatParams(xi=float(p["dos_xi"]), K=K, cutoff=max(cutoff, 120))
        bins = p.get("dos_bins", 10)
        span = float(p.get("dos_span", 6.0))
        dos = metapotential_dos(params, bins=bins, span=span)
        dos.write_csv(p["dos_output"], header=("energy", "density"))
        peak = esqpt_energy(params, bins=bins, span=span)
        summary += f"; DOS at xi={params.xi:g} -> {p['dos_output']} (peak near E'={peak:g})"
    return summary


def _run_doublewell(cfg: dict) -> str:
    p = cfg["params"]
    params = DoubleWellParams(
        k4=float(p["k4"]),
        k2=float(p["k2"]),
        k1=float(p.get("k1", 0.0)),
        mass=float(p.get("mass", 1.0)),
        cutoff=p["cutoff"],
    )
    H = doublewell_hamiltonian(params)
    evals = np.linalg.eigvalsh(H.entries)[: p["n_levels"]]
    _write_rows(cfg["output"], ["level", "energy"], ([i, e] for i, e in enumerate(evals)))
    gap01 = evals[1] - evals[0] if len(evals) > 1 else float("nan")
    return (
        f"doublewell: wrote {cfg['output']} ({len(evals)} levels, "
        f"lowest gap {gap01:.6g})"
    )


def _run_hafnian(cfg: dict) -> str:
    p = cfg["params"]
    if "edges" in p:
        A = adjacency_from_edges(p["edges"], n=p.get("n"))
    else:
        A = read_edge_list(p["edges_file"], n=p.get("n"))
    value = hafnian(A)
    is_binary = bool(np.isin(A, (0.0, 1.0)).all())
    matchings = None
    if is_binary and A.shape[0] <= 16:
        matchings = perfect_matching_count(A)
    _write_json(cfg["output"], {"hafnian": _round12(value), "matchings": matchings})
    return f"hafnian: wrote {cfg['output']} (n={A.shape[0]}, hafnian={value:g})"


def _run_qpe(cfg: dict) -> str:
    p = cfg["params"]
    d, t = p["d"], p["t"]
    phi = float(p["phase"]) % 1.0
    reg = QumodeRegister((d,))
    levels = np.arange(d)
    U = Operator(np.diag(np.exp(2j * np.pi * phi * levels)), reg)
    eigenstate = basis_state(reg, (1,))
    spec = QpeSpec(d=d, t=t, U=U, eigenstate=eigenstate)
    dist = run_qpe(spec)
    modal = int(np.argmax(dist))
    out = {
        "d": d,
        "t": t,
        "distribution": [_round12(x) for x in dist],
        "modal_outcome": outcome_digits(modal, d, t),
        "modal_probability": _round12(dist[modal]),
        "phase_estimate": _round12(phase_from_outcome(modal, d, t)),
    }
    shots = p.get("shots", 0)
    if shots > 0:
        seed = cfg.get("seed", 0)
        counts = sample_readout(dist, shots, seed)
        out["shots"] = shots
        out["seed"] = seed
        out["histogram"] = {
            outcome_digits(i, d, t): int(c) for i, c in enumerate(counts) if c > 0
        }
    _write_json(cfg["output"], out)
    return (
        f"qpe: wrote {cfg['output']} (modal outcome {out['modal_outcome']}, "
        f"phase estimate {out['phase_estimate']:g})"
    )


_RUNNERS = {
    "vibronic": _run_vibronic,
    "sbm-evolve": _run_sbm_evolve,
    "kerrcat-sweep": _run_kerrcat,
    "doublewell": _run_doublewell,
    "hafnian": _run_hafnian,
    "qpe": _run_qpe,
}


def run(config_path: str) -> int:
    """Validate and execute one experiment config; returns the exit status."""
    try:
        cfg = _load_config(config_path)
    except OSError as exc:
        print(f"error: cannot read {config_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    except json.JSONDecodeError as exc:
        print(f"error: config: invalid JSON: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    diags = validate_config(cfg)
    errors = [d for d in diags if d.severity == "error"]
    for d in diags:
        print(str(d), file=sys.stderr)
    if errors:
        return EXIT_VALIDATION

    try:
        summary = _RUNNERS[cfg["experiment"]](cfg)
    except ConvergenceError as exc:
        print(f"error: convergence: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except OSError as exc:
        print(f"error: I/O: {exc}", file=sys.stderr)
        return EXIT_IO
    print(summary)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bundled demo configs
# ---------------------------------------------------------------------------


def list_demos() -> list[str]:
    """Names of the bundled demo configs."""
    root = resources.files("qumodelab") / "demo_configs"
    return sorted(
        entry.name[: -len(".json")]
        for entry in root.iterdir()
        if entry.name.endswith(".json")
    )


def demo_path(name: str) -> str:
    """Filesystem path of a bundled demo config."""
    root = resources.files("qumodelab") / "demo_configs"
    path = root / f"{name}.json"
    if not path.is_file():
        raise ValueError(f"unknown demo {name!r}; available: {', '.join(list_demos())}")
    return str(path)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="qumode-lab",
        description="Run truncated-Fock-space qumode experiments from JSON configs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="validate and execute a config")
    run_p.add_argument("config", help="path to a JSON experiment config")
    val_p = sub.add_parser("validate", help="report config problems without running")
    val_p.add_argument("config", help="path to a JSON experiment config")
    sub.add_parser("demos", help="list bundled demo configs")

    args = parser.parse_args(argv)
    if args.command == "run":
        return run(args.config)
    if args.command == "validate":
        try:
            diags = validate(args.config)
        except OSError as exc:
            print(f"error: cannot read {args.config}: {exc}", file=sys.stderr)
            return EXIT_IO
        for d in diags:
            print(str(d))
        errors = [d for d in diags if d.severity == "error"]
        if errors:
            return EXIT_VALIDATION
        print(f"ok: {args.config} is runnable")
        return EXIT_OK
    if args.command == "demos":
        for name in list_demos():
            print(f"{name}\t{demo_path(name)}")
        return EXIT_OK
    return EXIT_VALIDATION  # pragma: no cover


if __name__ == "__main__":
    raise SystemExit(main())
