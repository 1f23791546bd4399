"""Spin-star model assembly: Hamiltonian terms and Lindblad jump channels.

The model is a star network of M+1 identical spin-1/2 particles: one central
spin (site 0) coupled pairwise to M ambient spins, with no ambient-ambient
couplings.  Every spin sees the same Bohr frequency omega, a decay channel at
rate gamma and a dephasing channel at rate gamma_phi/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .operators import PauliString, string_to_dense

COUPLINGS = ("ising", "xx", "xxx")
AMBIENT_STATES = ("thermal", "plus")
DECAY_JUMPS = ("lowering", "sigma_x")

#: Hard cap on ambient spins; dimension 2^(M+1) <= 8192.
MAX_AMBIENT = 12


@dataclass(frozen=True)
class ModelConfig:
    """Full description of one spin-star experiment.

    Rates and times are dimensionless, scaled by the Bohr frequency omega;
    hbar = 1.  `beta` is the ambient inverse temperature in units of
    hbar*omega/k_B and only matters when ambient_state == "thermal".
    `decay_jump` selects the decay channel operator: "lowering" (sigma_minus,
    zero-temperature relaxation) or "sigma_x" (bit-flip noise).
    """

    ambient_count: int
    coupling: str = "xx"
    j: float = 0.05
    omega: float = 1.0
    gamma: float = 0.015
    gamma_phi: float = 0.015
    ambient_state: str = "plus"
    beta: float = 0.5
    decay_jump: str = "lowering"

    def __post_init__(self):
        if not 1 <= self.ambient_count <= MAX_AMBIENT:
            raise ValueError(
                f"ambient_count must be in [1, {MAX_AMBIENT}], got {self.ambient_count}")
        if self.coupling not in COUPLINGS:
            raise ValueError(f"coupling must be one of {COUPLINGS}, got {self.coupling!r}")
        if self.ambient_state not in AMBIENT_STATES:
            raise ValueError(
                f"ambient_state must be one of {AMBIENT_STATES}, got {self.ambient_state!r}")
        if self.decay_jump not in DECAY_JUMPS:
            raise ValueError(
                f"decay_jump must be one of {DECAY_JUMPS}, got {self.decay_jump!r}")
        if not self.j > 0:
            raise ValueError("j must be > 0 (antiferromagnetic coupling)")
        if not self.omega > 0:
            raise ValueError("omega must be > 0")
        if self.gamma < 0 or self.gamma_phi < 0:
            raise ValueError("rates gamma and gamma_phi must be >= 0")
        if self.ambient_state == "thermal" and not self.beta > 0:
            raise ValueError("beta must be > 0 for a thermal ambient state")

    @property
    def n_qubits(self) -> int:
        return self.ambient_count + 1

    @property
    def dim(self) -> int:
        return 2 ** self.n_qubits

    def with_ambient(self, m: int) -> "ModelConfig":
        return replace(self, ambient_count=m)


@dataclass(frozen=True)
class JumpChannel:
    """One Lindblad channel: `rate` multiplies the standard dissipator
    D[L] rho = L rho L^+ - {L^+ L, rho}/2 with L the single-site operator."""

    operator: PauliString
    rate: float

    def __post_init__(self):
        if self.rate < 0:
            raise ValueError("channel rate must be >= 0")
        if len(self.operator.terms) != 1:
            raise ValueError("jump operator must act on exactly one site")


def coupling_vector(coupling: str, j: float) -> tuple[float, float, float]:
    """(Jx, Jy, Jz) for a named coupling type.

    ising -> (0, 0, J); xxx -> (J, J, J); xx -> (J, J, 0).
    """
    if not j > 0:
        raise ValueError("j must be > 0")
    if coupling == "ising":
        return (0.0, 0.0, j)
    if coupling == "xxx":
        return (j, j, j)
    if coupling == "xx":
        return (j, j, 0.0)
    raise ValueError(f"coupling must be one of {COUPLINGS}, got {coupling!r}")


def build_hamiltonian(cfg: ModelConfig) -> list[PauliString]:
    """Spin-star Hamiltonian as a list of Pauli strings.

    H = sum_i omega * Sz_i  +  sum_{i=1..M} sum_{v in xyz} J_v * Sv_0 * Sv_i
    with S_v = sigma_v / 2; ambient spins couple only to the central spin.
    """
    terms = [PauliString(((i, "z"),), cfg.omega / 2) for i in range(cfg.n_qubits)]
    jx, jy, jz = coupling_vector(cfg.coupling, cfg.j)
    for i in range(1, cfg.n_qubits):
        for jv, axis in ((jx, "x"), (jy, "y"), (jz, "z")):
            if jv != 0.0:
                terms.append(PauliString(((0, axis), (i, axis)), jv / 4))
    return terms


def hamiltonian_dense(cfg: ModelConfig) -> np.ndarray:
    """Dense realization of :func:`build_hamiltonian` (testing / oracles)."""
    n = cfg.n_qubits
    out = np.zeros((cfg.dim, cfg.dim), dtype=complex)
    for term in build_hamiltonian(cfg):
        out += string_to_dense(term, n)
    return out


def build_jump_channels(cfg: ModelConfig) -> list[JumpChannel]:
    """Decay + dephasing channels for every spin.

    Per qubit: one decay channel (sigma_minus, or sigma_x when
    cfg.decay_jump == "sigma_x") at rate gamma and one dephasing channel
    (sigma_z) at rate gamma_phi / 2.
    """
    decay_axis = "minus" if cfg.decay_jump == "lowering" else "x"
    channels = []
    for i in range(cfg.n_qubits):
        channels.append(JumpChannel(PauliString(((i, decay_axis),)), cfg.gamma))
        channels.append(JumpChannel(PauliString(((i, "z"),)), cfg.gamma_phi / 2))
    return channels
