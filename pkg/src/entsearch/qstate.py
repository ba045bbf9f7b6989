"""Pure states of a qubit register: reference states, Haar sampling, perturbation.

Amplitude index i encodes the computational basis ket with qubit 0 as the
MOST significant bit, so |1100> on four qubits sits at index 12 = 0b1100.
This ordering is fixed everywhere in the library, including the JSON state
file format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import StateFormatError

# |sum of |amplitude|^2 - 1| allowed after any constructing operation
NORM_TOL = 1e-12

# norm slack accepted when importing a state file before renormalizing
FILE_NORM_TOL = 1e-6

MAX_QUBITS = 12

# primitive cube root of unity used by the Higuchi-Sudbery state
OMEGA = np.exp(2j * np.pi / 3)


def as_rng(rng: np.random.Generator | int | None) -> np.random.Generator:
    """Pass through a Generator, or build one from a seed."""
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized complex amplitude vector over the 2**n computational basis."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}], got {self.n_qubits}")
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.n_qubits,):
            raise ValueError(
                f"expected {2**self.n_qubits} amplitudes for {self.n_qubits} qubits, "
                f"got shape {amps.shape}"
            )
        norm2 = float(np.sum(amps.real**2 + amps.imag**2))
        if abs(norm2 - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized: sum |a|^2 = {norm2!r}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]


def _normalized(n: int, amps: np.ndarray) -> PureState:
    return PureState(n, amps / np.linalg.norm(amps))


def computational_basis_state(n: int, bits: str) -> PureState:
    """Basis ket |bits>, e.g. computational_basis_state(4, "1100") -> index 12."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if len(bits) != n or any(b not in "01" for b in bits):
        raise ValueError(f"bits must be a length-{n} string of 0s and 1s, got {bits!r}")
    amps = np.zeros(2**n, dtype=complex)
    amps[int(bits, 2)] = 1.0
    return PureState(n, amps)


def ghz(n: int) -> PureState:
    """(|0...0> + |1...1>)/sqrt(2) on n >= 2 qubits."""
    if n < 2:
        raise ValueError(f"GHZ state needs n >= 2, got {n}")
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = amps[-1] = 1.0
    return _normalized(n, amps)


def hs4() -> PureState:
    """The Higuchi-Sudbery four-qubit state.

    (|1100> + |0011> + w(|1001> + |0110>) + w^2(|1010> + |0101>)) / sqrt(6)
    with w = exp(2*pi*i/3). Conjectured to maximize the averaged bipartite
    entanglement of four qubits; every one-qubit marginal is maximally mixed
    and every two-qubit marginal has purity 1/3.
    """
    amps = np.zeros(16, dtype=complex)
    for bits, coeff in (
        ("1100", 1.0),
        ("0011", 1.0),
        ("1001", OMEGA),
        ("0110", OMEGA),
        ("1010", OMEGA**2),
        ("0101", OMEGA**2),
    ):
        amps[int(bits, 2)] = coeff
    return _normalized(4, amps)


def bssb4() -> PureState:
    """Brown et al.'s four-qubit search state.

    (|0000> + |+011> + |1101> + |-110>) / 2 with |+-> = (|0> +- |1>)/sqrt(2)
    occupying the qubit-0 slot. Highly entangled, but strictly below hs4()
    under the von Neumann measure (they tie under the linear measure).
    """
    amps = np.zeros(16, dtype=complex)
    s = 1.0 / np.sqrt(2.0)
    amps[int("0000", 2)] += 1.0
    amps[int("0011", 2)] += s
    amps[int("1011", 2)] += s
    amps[int("1101", 2)] += 1.0
    amps[int("0110", 2)] += s
    amps[int("1110", 2)] -= s
    return _normalized(4, amps)


def random_haar_state(n: int, rng: np.random.Generator | int | None = None) -> PureState:
    """Haar-distributed pure state: normalized vector of complex Gaussians."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = as_rng(rng)
    z = rng.standard_normal((2, 2**n))
    return _normalized(n, z[0] + 1j * z[1])


def inner_product(a: PureState, b: PureState) -> complex:
    """<a|b> with conjugation on a."""
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"qubit counts differ: {a.n_qubits} vs {b.n_qubits}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def overlap(a: PureState, b: PureState) -> float:
    """|<a|b>|, the fidelity amplitude between two pure states."""
    return abs(inner_product(a, b))


def perturb(state: PureState, sigma: float, rng: np.random.Generator | int | None) -> PureState:
    """Add iid complex Gaussian noise (std sigma per real component), renormalize.

    The input state is untouched; the returned state is a fresh vector.
    """
    if sigma <= 0:
        raise ValueError(f"sigma must be > 0, got {sigma}")
    rng = as_rng(rng)
    z = rng.standard_normal((2, state.dim))
    return _normalized(state.n_qubits, state.amplitudes + sigma * (z[0] + 1j * z[1]))


def to_json_dict(state: PureState) -> dict:
    """State file payload: {"n": ..., "amplitudes": [[re, im], ...]}."""
    return {
        "n": state.n_qubits,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }


def from_json_dict(payload: dict) -> PureState:
    """Inverse of to_json_dict, rejecting malformed or badly normalized data."""
    try:
        n = payload["n"]
        raw = payload["amplitudes"]
    except (TypeError, KeyError) as exc:
        raise StateFormatError(f"state payload missing field: {exc}") from exc
    if not isinstance(n, int) or not 1 <= n <= MAX_QUBITS:
        raise StateFormatError(f"bad qubit count: {n!r}")
    if not isinstance(raw, list) or len(raw) != 2**n:
        raise StateFormatError(f"expected {2**n} amplitude pairs, got {len(raw) if isinstance(raw, list) else type(raw).__name__}")
    try:
        amps = np.array([complex(re, im) for re, im in raw], dtype=complex)
    except (TypeError, ValueError) as exc:
        raise StateFormatError(f"amplitudes must be [re, im] pairs: {exc}") from exc
    if not np.all(np.isfinite(amps.view(float))):
        raise StateFormatError("amplitudes contain non-finite values")
    norm = float(np.linalg.norm(amps))
    if abs(norm - 1.0) > FILE_NORM_TOL:
        raise StateFormatError(f"state norm {norm!r} deviates from 1 by more than {FILE_NORM_TOL}")
    # keep the stored bits when already within the library tolerance, so a
    # save/load round trip is exact
    if abs(norm * norm - 1.0) > NORM_TOL:
        amps = amps / norm
    return PureState(n, amps)


def save_state(state: PureState, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json_dict(state), fh)
        fh.write("\n")


def load_state(path) -> PureState:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StateFormatError(f"not valid JSON: {exc}") from exc
    return from_json_dict(payload)
