"""Pauli / spin operators and structured operator application.

Qubit convention used throughout the package:

* qubit 0 is the central spin and occupies the leftmost tensor factor,
  i.e. the most-significant bit of the basis index;
* basis index 0 of a single qubit is spin-up |^> (sigma_z eigenvalue +1),
  index 1 is spin-down |v>.

Operators on the full register are either dense complex matrices or
:class:`PauliString` objects, which apply single- or two-site factors to a
matrix in O(dim^2) by bit-index manipulation instead of materializing the
embedded operator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

import numpy as np

PAULI_AXES = ("x", "y", "z")
#: Axis labels accepted inside a PauliString. "minus" is the lowering
#: operator (|v><^|), "plus" its adjoint, "identity" a no-op placeholder.
STRING_AXES = ("x", "y", "z", "minus", "plus", "identity")

_AXIS_MATRICES = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "minus": np.array([[0, 0], [1, 0]], dtype=complex),
    "plus": np.array([[0, 1], [0, 0]], dtype=complex),
    "identity": np.eye(2, dtype=complex),
}

_DAGGER_AXIS = {"x": "x", "y": "y", "z": "z",
                "minus": "plus", "plus": "minus", "identity": "identity"}


def pauli(axis: str) -> np.ndarray:
    """Return the 2x2 Pauli matrix for axis 'x', 'y' or 'z'."""
    if axis not in PAULI_AXES:
        raise ValueError(f"unknown Pauli axis {axis!r}")
    return _AXIS_MATRICES[axis].copy()


def spin_op(axis: str) -> np.ndarray:
    """Return the spin-1/2 operator sigma_axis / 2."""
    return 0.5 * pauli(axis)


def lowering() -> np.ndarray:
    """Return the lowering operator |v><^| = (sigma_x - i sigma_y)/2."""
    return _AXIS_MATRICES["minus"].copy()


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; the left factor owns the most-significant bits."""
    return np.kron(a, b)


def site_bit(site: int, n_qubits: int) -> int:
    """Bit mask selecting `site` in a basis index (site 0 = MSB)."""
    if not 0 <= site < n_qubits:
        raise ValueError(f"site {site} out of range for {n_qubits} qubits")
    return 1 << (n_qubits - 1 - site)


def embed(op: np.ndarray, site: int, n_qubits: int) -> np.ndarray:
    """Embed a 2x2 operator at `site` of an n-qubit register: I x..x op x..x I."""
    if op.shape != (2, 2):
        raise ValueError("embed expects a 2x2 operator")
    site_bit(site, n_qubits)  # range check
    eye = np.eye(2, dtype=complex)
    factors = [op if s == site else eye for s in range(n_qubits)]
    return reduce(np.kron, factors).astype(complex)


@dataclass(frozen=True)
class PauliString:
    """A scalar multiple of a tensor product of single-site operators.

    Parameters
    ----------
    terms : tuple of (site, axis)
        Sites must be distinct; axis is one of :data:`STRING_AXES`.
    coefficient : complex
        Scalar prefactor.
    """

    terms: tuple[tuple[int, str], ...]
    coefficient: complex = field(default=1.0 + 0j)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((int(s), a) for s, a in self.terms))
        object.__setattr__(self, "coefficient", complex(self.coefficient))
        sites = [s for s, _ in self.terms]
        if len(set(sites)) != len(sites):
            raise ValueError("PauliString sites must be distinct")
        for site, axis in self.terms:
            if site < 0:
                raise ValueError(f"negative site index {site}")
            if axis not in STRING_AXES:
                raise ValueError(f"unknown axis {axis!r}")

    def dagger(self) -> "PauliString":
        """Adjoint: conjugate coefficient, swap raising and lowering factors."""
        return PauliString(
            tuple((s, _DAGGER_AXIS[a]) for s, a in self.terms),
            np.conj(self.coefficient),
        )

    def max_site(self) -> int:
        return max((s for s, _ in self.terms), default=0)


def string_to_dense(ps: PauliString, n_qubits: int) -> np.ndarray:
    """Dense matrix of a PauliString on an n-qubit register."""
    axis_at = {s: a for s, a in ps.terms}
    for s in axis_at:
        site_bit(s, n_qubits)  # range check
    eye = np.eye(2, dtype=complex)
    factors = [_AXIS_MATRICES[axis_at[s]] if s in axis_at else eye
               for s in range(n_qubits)]
    return ps.coefficient * reduce(np.kron, factors, np.eye(1, dtype=complex))


def _string_action(ps: PauliString, n_qubits: int, side: str):
    """Gather map of a PauliString: P[i, src[i]] = phase[i] (side='left')
    or P[src[j], j] = phase[j] (side='right')."""
    dim = 1 << n_qubits
    idx = np.arange(dim)
    src = idx.copy()
    phase = np.full(dim, complex(ps.coefficient))
    for site, axis in ps.terms:
        b = site_bit(site, n_qubits)
        hi = (idx & b) != 0
        if axis == "identity":
            continue
        if axis == "x":
            src ^= b
        elif axis == "y":
            src ^= b
            if side == "left":
                phase *= np.where(hi, 1j, -1j)
            else:
                phase *= np.where(hi, -1j, 1j)
        elif axis == "z":
            phase = np.where(hi, -phase, phase)
        elif axis == "minus":
            src ^= b
            valid = hi if side == "left" else ~hi
            phase = np.where(valid, phase, 0)
        elif axis == "plus":
            src ^= b
            valid = ~hi if side == "left" else hi
            phase = np.where(valid, phase, 0)
    return src, phase


def apply_string(ps: PauliString, m: np.ndarray, side: str = "left") -> np.ndarray:
    """Multiply a matrix by the embedded operator of `ps` without building it.

    Returns coefficient * (P @ m) for side='left' or coefficient * (m @ P)
    for side='right', in O(dim^2) per call.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    dim = m.shape[0]
    if m.shape != (dim, dim) or dim & (dim - 1):
        raise ValueError("matrix must be square with power-of-2 dimension")
    n_qubits = dim.bit_length() - 1
    src, phase = _string_action(ps, n_qubits, side)
    if side == "left":
        return phase[:, None] * m[src, :]
    return m[:, src] * phase[None, :]
