"""Time evolution, steady states, and characteristic-time extraction.

Times at the API are nanoseconds; internally the generator acts in the
hbar = 1 unit system, so every entry point converts through HBAR_UEV_NS.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as la
from scipy.integrate import solve_ivp

from .basis import BasisKind, state_vector
from .entanglement import qubit_concurrence
from .errors import (
    ConvergenceTimeoutError,
    DegenerateSteadyStateError,
    DomainError,
    StiffnessError,
)
from .operators import (
    DensityMatrix,
    Superoperator,
    trace_distance_matrices,
    unvectorize,
    vectorize,
)
from .params import HBAR_UEV_NS

#: An eigenvalue of the generator within this radius of zero counts as null.
NULL_EIGENVALUE_TOL = 1e-9
STEADY_RESIDUAL_TOL = 1e-9

#: Default scan ceiling, 50 hbar / Gamma at the reference decay rate 1.2 ueV.
DEFAULT_T_MAX_NS = 50.0 * HBAR_UEV_NS / 1.2

_COARSE_STEPS = 256


@dataclass(frozen=True)
class Trajectory:
    """Snapshots of a master-equation run on a fixed time grid."""

    times: np.ndarray
    states: tuple[DensityMatrix, ...]
    concurrence: np.ndarray
    leak: np.ndarray
    populations: dict[str, np.ndarray]

    def __post_init__(self) -> None:
        for arr in (self.times, self.concurrence, self.leak):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return len(self.times)

    @property
    def final_state(self) -> DensityMatrix:
        return self.states[-1]


def _trajectory_from_states(times: np.ndarray, states: tuple[DensityMatrix, ...]) -> Trajectory:
    conc = np.empty(len(states))
    leak = np.empty(len(states))
    for i, st in enumerate(states):
        conc[i], leak[i] = qubit_concurrence(st)
    labels = states[0].basis.labels
    pops = {lab: np.array([st.matrix[j, j].real for st in states]) for j, lab in enumerate(labels)}
    return Trajectory(np.asarray(times, dtype=float), states, conc, leak, pops)


def evolve(
    rho0: DensityMatrix,
    L: Superoperator,
    t_grid_ns: np.ndarray,
    rel_tol: float = 1e-8,
) -> Trajectory:
    """Integrate d(vec rho)/dt = L vec(rho) and snapshot on `t_grid_ns`.

    Adaptive high-order Runge-Kutta with local relative error `rel_tol`;
    every snapshot is validated as a physical state, so trace drift or loss
    of positivity beyond tolerance surfaces as an error rather than silently
    corrupt observables.
    """
    t_grid_ns = np.asarray(t_grid_ns, dtype=float)
    if t_grid_ns[0] != 0.0 or np.any(np.diff(t_grid_ns) <= 0):
        raise DomainError("t_grid must ascend from 0")
    if rho0.basis.labels != L.basis.labels:
        raise DomainError("initial state and generator bases differ")

    t_internal = t_grid_ns / HBAR_UEV_NS
    gen = L.matrix
    y0 = vectorize(rho0.matrix)

    sol = solve_ivp(
        lambda _t, y: gen @ y,
        (0.0, float(t_internal[-1])),
        y0,
        method="DOP853",
        t_eval=t_internal,
        rtol=rel_tol,
        atol=1e-12,
    )
    if not sol.success:
        reached = sol.t[-1] * HBAR_UEV_NS if len(sol.t) else 0.0
        raise StiffnessError(f"integrator failed at t = {reached:.4g} ns: {sol.message}")

    states = tuple(
        DensityMatrix(rho0.basis, unvectorize(sol.y[:, k], rho0.dim))
        for k in range(sol.y.shape[1])
    )
    return _trajectory_from_states(t_grid_ns, states)


def propagator_expm(L: Superoperator, t_ns: float) -> Superoperator:
    """Matrix exponential exp(L t) as a superoperator, `t_ns` in ns."""
    if t_ns < 0:
        raise DomainError("propagation time must be nonnegative")
    return Superoperator(L.basis, la.expm(L.matrix * (t_ns / HBAR_UEV_NS)))


def steady_state(L: Superoperator) -> DensityMatrix:
    """The unique fixed point of the generator.

    Dense eigendecomposition, smallest-magnitude eigenvector, Hermitized and
    trace-normalized, then polished by one inverse-iteration step. Raises if
    the null space is not one-dimensional within tolerance or the residual
    stays above threshold.
    """
    ev, vecs = la.eig(L.matrix)
    mags = np.abs(ev)
    null_count = int(np.sum(mags < NULL_EIGENVALUE_TOL))
    if null_count != 1:
        gap = np.sort(mags)[:3]
        raise DegenerateSteadyStateError(
            f"{null_count} null eigenvalues within {NULL_EIGENVALUE_TOL} "
            f"(smallest magnitudes: {np.array2string(gap, precision=3)})"
        )
    v = vecs[:, int(np.argmin(mags))]
    try:
        shift = 1e-14 * max(np.abs(L.matrix).max(), 1.0)
        refined = la.solve(L.matrix - shift * np.eye(L.matrix.shape[0]), v)
        refined /= la.norm(refined)
        if la.norm(L.matrix @ refined) < la.norm(L.matrix @ v):
            v = refined
    except la.LinAlgError:
        pass

    dim = L.dim
    rho = unvectorize(v, dim)
    rho = (rho + rho.conj().T) / 2
    tr = rho.trace().real
    if abs(tr) < 1e-12:
        raise DegenerateSteadyStateError("null vector has vanishing trace")
    rho = rho / tr
    residual = la.norm(L.matrix @ vectorize(rho))
    if residual > STEADY_RESIDUAL_TOL:
        raise DegenerateSteadyStateError(f"steady-state residual {residual:.2e}")
    return DensityMatrix(L.basis, rho)


def characteristic_time(
    L: Superoperator,
    rho0: DensityMatrix,
    epsilon: float = 0.01,
    t_max_ns: float | None = None,
    steady: DensityMatrix | None = None,
) -> float:
    """First time (ns) the state comes within `epsilon` of the steady state.

    Coarse matrix-exponential march over [0, t_max] followed by bisection of
    the crossing bracket to 1% relative precision. Distance is trace distance
    to the computed steady state.
    """
    if not 0.0 < epsilon < 1.0:
        raise DomainError("epsilon must lie in (0, 1)")
    if t_max_ns is None:
        t_max_ns = DEFAULT_T_MAX_NS
    rho_ss = steady if steady is not None else steady_state(L)
    target = rho_ss.matrix
    if trace_distance_matrices(rho0.matrix, target) <= epsilon:
        return 0.0

    dt_ns = t_max_ns / _COARSE_STEPS
    dt_int = dt_ns / HBAR_UEV_NS
    step = la.expm(L.matrix * dt_int)
    dim = rho0.dim

    def dist(v: np.ndarray) -> float:
        return trace_distance_matrices(unvectorize(v, dim), target)

    v = vectorize(rho0.matrix)
    k_hit = None
    for k in range(1, _COARSE_STEPS + 1):
        v_next = step @ v
        if dist(v_next) <= epsilon:
            k_hit = k
            break
        v = v_next
    if k_hit is None:
        raise ConvergenceTimeoutError(
            f"state not within {epsilon} of the steady state by {t_max_ns:.4g} ns"
        )

    # bisect inside [(k_hit - 1) dt, k_hit dt] using halved propagators
    t_lo, t_hi = (k_hit - 1) * dt_ns, k_hit * dt_ns
    v_lo = v
    width = dt_ns
    half_props: dict[int, np.ndarray] = {}
    level = 0
    while width > 0.01 * max(t_hi, dt_ns * 1e-3):
        level += 1
        width /= 2.0
        if level not in half_props:
            half_props[level] = la.expm(L.matrix * (width / HBAR_UEV_NS))
        v_mid = half_props[level] @ v_lo
        t_mid = t_lo + width
        if dist(v_mid) <= epsilon:
            t_hi = t_mid
        else:
            t_lo, v_lo = t_mid, v_mid
    return t_hi


def adiabatic_validity(
    L_full: Superoperator,
    rho0: DensityMatrix,
    t_grid_ns: np.ndarray,
    rel_tol: float = 1e-8,
) -> float:
    """Peak population on the adiabatically eliminated states over a run.

    On the 9-state model these are the bi-trion |ss> and the antisymmetric
    single-trion states; on bases with an inter-dot trion level, every state
    containing it counts as well.
    """
    basis = L_full.basis
    if basis.kind == BasisKind.FULL9:
        labels = ["ss", "A0s", "A1s"]
    elif basis.kind == BasisKind.FULL16:
        labels = ["ss", "A0s", "A1s"] + [lab for lab in basis.labels if "t" in lab]
    elif basis.kind == BasisKind.EFFECTIVE8:
        labels = ["S0t", "S1t"]
    else:
        raise DomainError("adiabatic_validity needs a basis with eliminated states")
    vectors = [state_vector(basis, lab) for lab in labels]

    traj = evolve(rho0, L_full, t_grid_ns, rel_tol=rel_tol)
    worst = 0.0
    for st in traj.states:
        pop = sum(float((vec.conj() @ st.matrix @ vec).real) for vec in vectors)
        worst = max(worst, pop)
    return worst
