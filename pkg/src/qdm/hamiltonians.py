"""Hamiltonian builders for the driven two-dot system.

All builders return rotating-frame, time-independent operators in ueV: the
laser frame is applied inside :func:`build_full_hamiltonian`, so the trion
diagonal carries the detuning rather than the bare transition energy.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .basis import (
    BasisKind,
    ModelBasis,
    effective6,
    effective8,
    full16,
    make_basis,
    single_dot3,
    single_dot4,
    state_vector,
)
from .errors import BasisMismatchError, DegenerateBasisError
from .operators import OperatorMatrix, tensor
from .params import CouplingParams, DriveParams


def _ketbra(basis: ModelBasis, a: str, b: str) -> np.ndarray:
    return np.outer(state_vector(basis, a), state_vector(basis, b).conj())


def _single_dot_op(levels: ModelBasis, a: str, b: str) -> OperatorMatrix:
    m = np.zeros((levels.dim, levels.dim), dtype=complex)
    m[levels.index(a), levels.index(b)] = 1.0
    return OperatorMatrix(levels, m)


def dot_operator_pair(kind: BasisKind, a: str, b: str) -> tuple[np.ndarray, np.ndarray]:
    """``|a><b|`` acting on dot 1 and on dot 2 of the product basis."""
    if kind == BasisKind.FULL9:
        dot = single_dot3()
    elif kind == BasisKind.FULL16:
        dot = single_dot4()
    else:
        raise BasisMismatchError("dot_operator_pair expects a product-basis kind")
    op = _single_dot_op(dot, a, b)
    ident = OperatorMatrix(dot, np.eye(dot.dim))
    return tensor(op, ident).matrix, tensor(ident, op).matrix


def build_full_hamiltonian(
    drive: DriveParams,
    coupling: CouplingParams,
    kind: BasisKind = BasisKind.FULL9,
) -> OperatorMatrix:
    """Rotating-frame Hamiltonian of the driven two-dot system.

    Per dot: pump ``Omega |1><s|``, Raman ground coupling ``Omega_m |0><1|``
    (plus conjugates) and the detuning on the trion diagonal. Between dots:
    the resonant-transfer term on ``|1s><s1| + |0s><s0|`` and the bi-trion
    shift on ``|ss>``. On the 16-state basis the inter-dot trion level and the
    ``s <-> t`` hopping are included as well.
    """
    if kind not in (BasisKind.FULL9, BasisKind.FULL16):
        raise BasisMismatchError("build_full_hamiltonian expects FULL9 or FULL16")
    basis = make_basis(kind)
    h = np.zeros((basis.dim, basis.dim), dtype=complex)

    p1, p2 = dot_operator_pair(kind, "1", "s")
    m1, m2 = dot_operator_pair(kind, "0", "1")
    h += drive.omega * (p1 + p2) + drive.omega_m * (m1 + m2)
    h = h + h.conj().T

    s1, s2 = dot_operator_pair(kind, "s", "s")
    h += drive.detuning * (s1 + s2)

    fo = coupling.v_f * (_ketbra(basis, "1s", "s1") + _ketbra(basis, "0s", "s0"))
    h += fo + fo.conj().T
    h += coupling.v_xx * _ketbra(basis, "ss", "ss")

    if kind == BasisKind.FULL16:
        # t level sits at detuning + (omega_t - omega) = detuning + v_f - delta
        t1, t2 = dot_operator_pair(kind, "t", "t")
        h += (drive.detuning + coupling.v_f - coupling.delta) * (t1 + t2)
        hop1, hop2 = dot_operator_pair(kind, "s", "t")
        hop = coupling.t_e * (hop1 + hop2)
        h += hop + hop.conj().T

    return OperatorMatrix(basis, h)


def build_effective_hamiltonian(drive: DriveParams) -> OperatorMatrix:
    """Adiabatically eliminated 6-state Hamiltonian.

    Carries exactly the five drive couplings; the singlet row and column are
    identically zero, which is what makes it the dark state of the protocol.
    """
    basis = effective6()
    h = (
        math.sqrt(2) * drive.omega * _ketbra(basis, "11", "S1s")
        + drive.omega * _ketbra(basis, "S01", "S0s")
        + drive.omega_m * _ketbra(basis, "S0s", "S1s")
        + math.sqrt(2) * drive.omega_m * _ketbra(basis, "00", "S01")
        + math.sqrt(2) * drive.omega_m * _ketbra(basis, "S01", "11")
    )
    return OperatorMatrix(basis, h + h.conj().T)


def build_tunneling_hamiltonian(coupling: CouplingParams) -> OperatorMatrix:
    """Lab-frame inter-dot trion energy and s <-> t hopping on the 16-state basis."""
    basis = full16()
    t1, t2 = dot_operator_pair(BasisKind.FULL16, "t", "t")
    hop1, hop2 = dot_operator_pair(BasisKind.FULL16, "s", "t")
    hop = coupling.t_e * (hop1 + hop2)
    h = coupling.omega_t * (t1 + t2) + hop + hop.conj().T
    return OperatorMatrix(basis, h)


@dataclass(frozen=True)
class DressedBasisInfo:
    """Mixing angle, dressed energies, and the block rotation on the 8-state basis.

    ``E1 + E2 = -delta`` and ``E1 * E2 = -t_e**2`` (roots of
    ``E^2 + delta E - t_e^2 = 0``). Columns 4..7 of `U` are the dressed states
    ``psi1, psi3, psi2, psi4`` in the bare ``S0s, S1s, S0t, S1t`` order.
    """

    theta: float
    e1: float
    e2: float
    U: OperatorMatrix


def dressed_basis(delta: float, t_e: float) -> DressedBasisInfo:
    """Diagonalize the single-exciton s/t block mixed by tunneling.

    ``theta = -arccot(delta / 2 t_e) / 2`` on the (0, pi) branch of arccot,
    ``E1 >= E2`` the two dressed energies.
    """
    if delta == 0.0 and t_e == 0.0:
        raise DegenerateBasisError("dressed basis undefined for delta = t_e = 0")
    if t_e == 0.0:
        theta = 0.0 if delta > 0 else -math.pi / 2
    else:
        theta = -0.5 * (math.pi / 2 - math.atan(delta / (2.0 * t_e)))
    root = math.sqrt(4.0 * t_e**2 + delta**2)
    e1 = 0.5 * (-delta + root)
    e2 = 0.5 * (-delta - root)

    basis = effective8()
    u = np.eye(basis.dim, dtype=complex)
    c, s = math.cos(theta), math.sin(theta)
    for i_s, i_t in ((basis.index("S0s"), basis.index("S0t")),
                     (basis.index("S1s"), basis.index("S1t"))):
        u[i_s, i_s] = c
        u[i_t, i_s] = -s
        u[i_s, i_t] = s
        u[i_t, i_t] = c
    return DressedBasisInfo(theta=theta, e1=e1, e2=e2, U=OperatorMatrix(basis, u))


def build_effective_tunneling_hamiltonian(
    drive: DriveParams, dressed: DressedBasisInfo
) -> OperatorMatrix:
    """Tunneling-dressed effective Hamiltonian on the 8-state basis.

    The pump addresses the exciton-like dressed branch (the one with the
    larger intra-dot component), with its matrix element scaled by that
    component; the laser is taken resonant with this branch, so the other
    branch carries the dressed splitting on the diagonal. The Raman couplings
    are untouched by the dressing. With ``t_e -> 0`` this reduces exactly to
    the 6-state Hamiltonian (plus decoupled detuned t levels).
    """
    basis = effective8()
    u = dressed.U.matrix
    i_s0, i_s1 = basis.index("S0s"), basis.index("S1s")
    i_t0, i_t1 = basis.index("S0t"), basis.index("S1t")

    c, s = math.cos(dressed.theta), math.sin(dressed.theta)
    if abs(c) >= abs(s):
        amp = c
        pump0, pump1 = u[:, i_s0].copy(), u[:, i_s1].copy()
        off0, off1 = u[:, i_t0], u[:, i_t1]
        off_energy = dressed.e2 - dressed.e1
    else:
        amp = s
        pump0, pump1 = u[:, i_t0].copy(), u[:, i_t1].copy()
        off0, off1 = u[:, i_s0], u[:, i_s1]
        off_energy = dressed.e1 - dressed.e2
    if amp < 0:
        amp, pump0, pump1 = -amp, -pump0, -pump1

    gap = abs(dressed.e1 - dressed.e2)
    if drive.omega > gap / 5:
        warnings.warn(
            f"pump Rabi frequency {drive.omega} ueV is not small against the "
            f"dressed splitting {gap} ueV; the two-branch reduction degrades",
            stacklevel=2,
        )

    h = (
        math.sqrt(2) * drive.omega_m * _ketbra(basis, "00", "S01")
        + math.sqrt(2) * drive.omega_m * _ketbra(basis, "S01", "11")
        + drive.omega_m * _ketbra(basis, "S0s", "S1s")
        + math.sqrt(2) * drive.omega * amp
        * np.outer(state_vector(basis, "11"), pump1.conj())
        + drive.omega * amp * np.outer(state_vector(basis, "S01"), pump0.conj())
    )
    h = h + h.conj().T
    h += off_energy * (np.outer(off0, off0.conj()) + np.outer(off1, off1.conj()))
    return OperatorMatrix(basis, h)
