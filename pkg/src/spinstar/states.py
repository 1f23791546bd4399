"""Initial density matrices: cat state, thermal qubit, tensor products."""

from __future__ import annotations

import numpy as np


def plus_state() -> np.ndarray:
    """|+><+| with |+> = (|^> + |v>)/sqrt(2): the maximally coherent qubit."""
    return np.full((2, 2), 0.5, dtype=complex)


def thermal_state(beta: float, omega: float) -> np.ndarray:
    """Gibbs state exp(-beta*H)/Z of a single qubit with H = (omega/2) sigma_z.

    Index 0 is the excited |^> level, so populations are
    (e^{-beta*omega/2}, e^{+beta*omega/2}) / Z.
    """
    if not beta > 0:
        raise ValueError("beta must be > 0")
    if not omega > 0:
        raise ValueError("omega must be > 0")
    q = np.exp(-beta * omega)  # overflow-safe for any beta*omega > 0
    p_up = q / (1.0 + q)
    return np.diag([p_up, 1.0 - p_up]).astype(complex)


def product_state(central: np.ndarray, ambient: np.ndarray, m: int) -> np.ndarray:
    """central (x) ambient^(x M): the central spin owns the leftmost factor."""
    if m < 1:
        raise ValueError("need at least one ambient spin")
    for name, rho in (("central", central), ("ambient", ambient)):
        if rho.shape != (2, 2):
            raise ValueError(f"{name} state must be 2x2")
    out = np.asarray(central, dtype=complex)
    for _ in range(m):
        out = np.kron(out, ambient)
    return out


def check_density_matrix(rho: np.ndarray, herm_tol: float = 1e-12,
                         trace_tol: float = 1e-12,
                         psd_tol: float | None = None) -> None:
    """Raise ValueError unless rho is Hermitian and unit-trace within
    tolerance; optionally also check the smallest eigenvalue >= -psd_tol."""
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("density matrix must be square")
    herm_dev = np.max(np.abs(rho - rho.conj().T))
    if herm_dev > herm_tol:
        raise ValueError(f"not Hermitian: max asymmetry {herm_dev:.3e}")
    trace_dev = abs(np.trace(rho) - 1.0)
    if trace_dev > trace_tol:
        raise ValueError(f"trace deviates from 1 by {trace_dev:.3e}")
    if psd_tol is not None:
        lo = float(np.linalg.eigvalsh(rho)[0])
        if lo < -psd_tol:
            raise ValueError(f"not positive semidefinite: min eigenvalue {lo:.3e}")
