"""Dynamical-decoupling cycles, imperfect pulses, baths, and gate fidelities.

The decoupling sequence is XY-4: free (or computational) evolution sliced
into equal intervals with a global pi pulse after each slice, axes
ordered X, Y, X, Y. Two pulse imperfections are modelled, both relative:

    flip-angle error eps:  rotation angle (1 + eps) * theta_p
    detuning error delta:  axis tilted out of the transverse plane by
                           delta and angle stretched to theta_p * sqrt(1 + delta**2)

The same flip error is applied to every qubit and pulse (a shared drive,
which is also the worst case for coherent accumulation).

Baths realize the linear system-bath coupling sum_i,a b_i^a sigma_i^a (x) B_i^a
either with scalar B (random static fields, the default; cheap and makes
decoupling-order fits clean) or with one bath qubit per system qubit
coupled through tau_x (N = 4 only, dimension 256).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BadPartitionError, DimensionMismatchError, DimensionTooLargeError
from .gates import GateSchedule
from .linalg import (
    SIGMA_I,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    expm_hermitian,
    kron,
    kron_all,
    phase_invariant_fidelity,
)
from .pauli import PauliString, PauliSum, build_decoupling_group, group_average

_AXES = ("x", "y", "z")
_XY4 = ("x", "y", "x", "y")


@dataclass(frozen=True)
class DDErrorModel:
    """Per-pulse imperfection parameters; zero errors reproduce ideal pulses."""

    epsilon: float = 0.0
    delta: float = 0.0
    theta_p: float = math.pi

    @property
    def is_ideal(self) -> bool:
        return self.epsilon == 0.0 and self.delta == 0.0


IDEAL_PULSES = DDErrorModel()


@dataclass(frozen=True)
class InterleavingPlan:
    """How densely XY-4 cycles are packed into each schedule segment."""

    cycles_per_segment: int = 4
    slices_per_cycle: int = 4  # fixed by XY-4

    def __post_init__(self):
        if self.slices_per_cycle != 4:
            raise ValueError("XY-4 fixes slices_per_cycle at 4")
        if self.cycles_per_segment < 1:
            raise ValueError("need at least one cycle per segment")

    @property
    def pulses_per_segment(self) -> int:
        return self.cycles_per_segment * self.slices_per_cycle


@dataclass(frozen=True, eq=False)
class BathModel:
    """System-bath coupling strengths b[i, a] per qubit i and axis a=(x,y,z).

    kind "scalar" treats the bath operators as static classical fields on
    the system space; kind "qubit" couples system qubit i to its own bath
    qubit through tau_x on a doubled register (system qubits first).
    """

    kind: str  # "scalar" | "qubit"
    n_system: int
    couplings: np.ndarray = field(repr=False)  # shape (n_system, 3), real

    @classmethod
    def zero(cls, n: int, kind: str = "scalar") -> "BathModel":
        return cls(kind, n, np.zeros((n, 3)))

    @classmethod
    def random(cls, n: int, width: float, seed: int, kind: str = "scalar") -> "BathModel":
        rng = np.random.default_rng(seed)
        return cls(kind, n, rng.uniform(-width, width, size=(n, 3)))

    @property
    def total_qubits(self) -> int:
        return self.n_system if self.kind == "scalar" else 2 * self.n_system

    @property
    def dim(self) -> int:
        return 2**self.total_qubits

    def hamiltonian_sum(self) -> PauliSum:
        """The coupling as a symbolic Pauli sum on the model's full register."""
        n_total = self.total_qubits
        terms = []
        for i in range(self.n_system):
            for a, axis in enumerate(_AXES):
                if self.couplings[i, a] == 0:
                    continue
                sites = {i + 1: axis.upper()}
                if self.kind == "qubit":
                    sites[self.n_system + i + 1] = "X"
                terms.append(
                    (self.couplings[i, a], PauliString.from_sites(n_total, sites))
                )
        return PauliSum.from_terms(n_total, terms)

    def hamiltonian_matrix(self) -> np.ndarray:
        if self.total_qubits > 8:
            raise DimensionTooLargeError("bath register exceeds 2**8")
        return self.hamiltonian_sum().to_matrix()

    def is_zero(self) -> bool:
        return not self.couplings.any()


def single_qubit_pulse(axis: str, errors: DDErrorModel = IDEAL_PULSES) -> np.ndarray:
    """One imperfect rotation about the x or y axis.

    The detuning tilts the rotation axis to
    (cos az, sin az, delta) / sqrt(1 + delta**2) with azimuth az = 0 (x) or
    pi/2 (y), and the flip error rescales the rotation angle; both reduce
    to the nominal theta_p rotation at zero error.
    """
    azimuth = {"x": 0.0, "y": math.pi / 2}[axis]
    delta = errors.delta
    norm = math.sqrt(1 + delta**2)
    direction = (
        math.cos(azimuth) * SIGMA_X + math.sin(azimuth) * SIGMA_Y + delta * SIGMA_Z
    ) / norm
    angle = (1 + errors.epsilon) * errors.theta_p * norm
    return math.cos(angle / 2) * SIGMA_I - 1j * math.sin(angle / 2) * direction


def pulse(
    axis: str, n: int, errors: DDErrorModel = IDEAL_PULSES, total_dim: int | None = None
) -> np.ndarray:
    """Global pulse: the single-qubit rotation tensored over n system qubits.

    With total_dim set (bath-qubit register), the pulse acts on the first
    n qubits and as identity on the rest.
    """
    if n > 8:
        raise DimensionTooLargeError(f"{n} qubits exceeds 8")
    p = kron_all([single_qubit_pulse(axis, errors)] * n)
    if total_dim is not None and total_dim != p.shape[0]:
        p = kron(p, np.eye(total_dim // p.shape[0]))
    return p


def ideal_pulse(axis: str, n: int) -> np.ndarray:
    """Perfect global pi pulse, equal to (-i)^n times the global Pauli string."""
    return pulse(axis, n)


def imperfect_pulse_flip(axis: str, n: int, epsilon: float) -> np.ndarray:
    return pulse(axis, n, DDErrorModel(epsilon=epsilon))


def imperfect_pulse_detuning(axis: str, n: int, delta: float) -> np.ndarray:
    return pulse(axis, n, DDErrorModel(delta=delta))


def dd_cycle(
    free_h: np.ndarray,
    dt: float,
    errors: DDErrorModel = IDEAL_PULSES,
    n_system: int | None = None,
) -> np.ndarray:
    """One XY-4 cycle: P_y F P_x F P_y F P_x F with F = exp(-i free_h dt).

    With ideal pulses this equals the decoupling-group conjugation product
    up to a global phase, so the first-order average Hamiltonian over the
    cycle is the commutant projection of free_h.
    """
    free_h = np.asarray(free_h, dtype=np.complex128)
    dim = free_h.shape[0]
    if n_system is None:
        n_system = dim.bit_length() - 1
    f = expm_hermitian(free_h, dt)
    u = np.eye(dim, dtype=np.complex128)
    for axis in _XY4:
        u = pulse(axis, n_system, errors, total_dim=dim) @ f @ u
    return u


def interleave(
    schedule: GateSchedule,
    bath: BathModel,
    plan: InterleavingPlan = InterleavingPlan(),
    errors: DDErrorModel = IDEAL_PULSES,
) -> np.ndarray:
    """Propagator of the schedule with XY-4 decoupling threaded through it.

    Each segment occupies unit time split into 4 * cycles_per_segment
    equal slices; a slice evolves under the segment Hamiltonian (scaled so
    the full segment accumulates its pulse area) plus the bath coupling,
    exactly exponentiated together, and is followed by one DD pulse. With
    zero bath and ideal pulses the result equals the bare schedule
    propagator up to a global phase, because every gate Hamiltonian
    commutes with the pulse strings.
    """
    if bath.n_system != schedule.n_physical:
        raise DimensionMismatchError(
            f"bath on {bath.n_system} system qubits, schedule on {schedule.n_physical}"
        )
    dim = bath.dim
    bath_h = bath.hamiltonian_matrix()
    slices = plan.pulses_per_segment
    u = np.eye(dim, dtype=np.complex128)
    for segment in schedule.segments:
        seg_h = segment.hamiltonian.embedded(bath.total_qubits).to_matrix()
        slice_u = expm_hermitian(segment.area * seg_h + bath_h, 1.0 / slices)
        for m in range(slices):
            u = pulse(_XY4[m % 4], schedule.n_physical, errors, total_dim=dim) @ slice_u @ u
    return u


def reduced_system_propagator(u: np.ndarray, bath: BathModel) -> np.ndarray:
    """Restriction <0...0|_bath U |0...0>_bath; the identity for scalar baths."""
    if bath.kind == "scalar":
        return u
    stride = 2**bath.n_system
    return u[::stride, ::stride]


def gate_fidelity_under_error(
    schedule: GateSchedule,
    basis,
    plan: InterleavingPlan,
    errors: DDErrorModel,
    bath: BathModel,
) -> float:
    """Trace-overlap fidelity between the decoupled propagators with ideal
    and with imperfect pulses, on the full register (bath-reduced when a
    bath-qubit model is used).
    """
    if basis is not None and basis.n_physical != schedule.n_physical:
        raise DimensionMismatchError("basis and schedule disagree on qubit count")
    ideal_errors = DDErrorModel(theta_p=errors.theta_p)
    u_id = interleave(schedule, bath, plan, ideal_errors)
    u_im = u_id if errors.is_ideal else interleave(schedule, bath, plan, errors)
    return phase_invariant_fidelity(
        reduced_system_propagator(u_id, bath), reduced_system_propagator(u_im, bath)
    )


def error_sweep(
    schedule: GateSchedule,
    basis,
    plan: InterleavingPlan,
    bath: BathModel,
    kind: str,
    values,
) -> list[tuple[str, float, float]]:
    """Fidelity versus error strength for one error kind ("flip" | "detuning")."""
    rows = []
    for value in values:
        if kind == "flip":
            errors = DDErrorModel(epsilon=float(value))
        elif kind == "detuning":
            errors = DDErrorModel(delta=float(value))
        else:
            raise ValueError(f"unknown error kind {kind!r}")
        rows.append(
            (kind, float(value), gate_fidelity_under_error(schedule, basis, plan, errors, bath))
        )
    return rows


SWEEP_CSV_HEADER = "error_kind,error_value,fidelity,seed,plan_cycles,gate,theta_or_phi"


def sweep_csv_lines(rows, seed: int, plan: InterleavingPlan, schedule: GateSchedule) -> list[str]:
    """CSV lines for sweep rows, sorted by (error_kind, error_value)."""
    lines = [SWEEP_CSV_HEADER]
    for kind, value, fid in sorted(rows, key=lambda r: (r[0], r[1])):
        lines.append(
            f"{kind},{value:.6g},{fid:.12f},{seed},{plan.cycles_per_segment},"
            f"{schedule.kind},{schedule.angle:.12g}"
        )
    return lines


def decoupling_order_probe(
    bath: BathModel, dt_values, total_time: float
) -> list[tuple[float, float]]:
    """Residual error of ideally-pulsed DD versus pulse spacing.

    For each dt, runs total_time / (4 dt) whole XY-4 cycles over the idle
    bath coupling and reports 1 minus the fidelity of the (reduced)
    propagator to the identity. First-order decoupling leaves a residual
    generator of order dt, so the error falls off close to dt**2.

    Raises
    ------
    BadPartitionError
        If some dt does not divide total_time into whole cycles.
    """
    h = bath.hamiltonian_matrix()
    eye = np.eye(2**bath.n_system)
    out = []
    for dt in dt_values:
        cycles = total_time / (4 * dt)
        if abs(cycles - round(cycles)) > 1e-9:
            raise BadPartitionError(f"dt={dt} does not divide total_time={total_time}")
        u = np.linalg.matrix_power(
            dd_cycle(h, dt, n_system=bath.n_system), int(round(cycles))
        )
        err = 1 - phase_invariant_fidelity(reduced_system_propagator(u, bath), eye)
        out.append((float(dt), float(err)))
    return out


def bare_evolution_error(bath: BathModel, total_time: float) -> float:
    """1 - fidelity to identity of the undecoupled bath evolution."""
    u = expm_hermitian(bath.hamiltonian_matrix(), total_time)
    return 1 - phase_invariant_fidelity(
        reduced_system_propagator(u, bath), np.eye(2**bath.n_system)
    )


def fit_error_order(points, floor: float = 1e-13) -> float:
    """Log-log slope of error versus dt, ignoring points at numerical floor."""
    pts = [(dt, err) for dt, err in points if err > floor]
    if len(pts) < 2:
        return float("nan")
    log_dt = np.log([p[0] for p in pts])
    log_err = np.log([p[1] for p in pts])
    return float(np.polyfit(log_dt, log_err, 1)[0])


def symbolic_bath_average(bath: BathModel) -> PauliSum:
    """Group average of the bath coupling; exactly zero for both bath kinds."""
    group = build_decoupling_group(bath.n_system)
    if bath.kind == "qubit":
        group = group.embedded(bath.total_qubits)
    return group_average(bath.hamiltonian_sum(), group)
