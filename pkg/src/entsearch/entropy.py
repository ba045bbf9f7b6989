"""Reduced density matrices and the two normalized subsystem entropies.

purity, linear_entropy, hermitian_eigenvalues and von_neumann_entropy all
accept either a single (d, d) matrix or a stack of shape (..., d, d), mirroring
numpy.linalg conventions; the stacked form is what keeps the search loop fast.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import InvariantViolationError
from .partitions import Bipartition
from .qstate import PureState

# cyclic Jacobi sweep control: stop once the off-diagonal Frobenius norm of
# every matrix in the stack falls below OFF_TOL (relative to matrices of unit
# scale, absolute below that)
JACOBI_OFF_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100

# eigenvalues of a density matrix in [-EIG_CLAMP, 0) are rounding noise and
# clamp to zero; anything more negative is a broken input
EIG_CLAMP = 1e-10

# eigenvalues at or below this contribute 0 to -sum(lam * log2(lam))
ZERO_EIG_CUTOFF = 1e-12

HERMITIAN_ATOL = 1e-10

_SCHEDULES: dict[int, list[tuple[np.ndarray, np.ndarray]]] = {}


def partial_trace(state: PureState, part: Bipartition | Sequence[int]) -> np.ndarray:
    """Reduced density matrix of the given qubits, tracing out the rest.

    Row/column index bits follow the kept qubits in ascending qubit order,
    most significant first. Accepts a canonical Bipartition or any plain
    subset of qubit indices (the complement of a canonical cut is a valid
    argument here, which the spectrum tests rely on).
    """
    n = state.n_qubits
    if isinstance(part, Bipartition):
        if part.n_qubits != n:
            raise ValueError(
                f"bipartition is over {part.n_qubits} qubits, state has {n}"
            )
        subset = part.subset
    else:
        subset = tuple(sorted(part))
        if len(subset) != len(set(subset)):
            raise ValueError(f"subset {part} has duplicate qubits")
        if not subset or any(q < 0 or q >= n for q in subset):
            raise ValueError(f"subset {part} out of range for {n} qubits")
        if len(subset) >= n:
            raise ValueError("subset must leave at least one qubit to trace out")
    keep = list(subset)
    rest = [q for q in range(n) if q not in set(keep)]
    psi = state.amplitudes.reshape([2] * n)
    mat = np.transpose(psi, keep + rest).reshape(2 ** len(keep), -1)
    return mat @ mat.conj().T


def purity(rho: np.ndarray) -> float | np.ndarray:
    """Tr(rho^2) for one matrix or a stack."""
    rho = np.asarray(rho)
    out = np.einsum("...ij,...ji->...", rho, rho).real
    return float(out) if out.ndim == 0 else out


def linear_entropy(rho: np.ndarray) -> float | np.ndarray:
    """Normalized linear entropy d/(d-1) * (1 - Tr(rho^2)), in [0, 1]."""
    rho = np.asarray(rho)
    d = rho.shape[-1]
    out = (d / (d - 1.0)) * (1.0 - np.einsum("...ij,...ji->...", rho, rho).real)
    return float(out) if out.ndim == 0 else out


def _round_robin_schedule(d: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Tournament ordering: d-1 rounds of d/2 disjoint (p, q) pairs.

    Every unordered pair appears exactly once per sweep, so the sweep is a
    cyclic Jacobi sweep; disjointness lets all rotations of a round apply in
    one vectorized update.
    """
    sched = _SCHEDULES.get(d)
    if sched is not None:
        return sched
    players = list(range(d))
    sched = []
    for _ in range(d - 1):
        pairs = sorted(
            (min(players[i], players[d - 1 - i]), max(players[i], players[d - 1 - i]))
            for i in range(d // 2)
        )
        sched.append(
            (np.array([p for p, _ in pairs]), np.array([q for _, q in pairs]))
        )
        players = [players[0]] + [players[-1]] + players[1:-1]
    _SCHEDULES[d] = sched
    return sched


def _jacobi_eigvalsh(stack: np.ndarray) -> np.ndarray:
    """Eigenvalues of a (b, d, d) Hermitian stack by cyclic Jacobi rotations.

    Each rotation diagonalizes one 2x2 principal block: the complex phase of
    the pivot entry is absorbed into the rotation, reducing the block to the
    real symmetric case, and the rotation angle is kept at or below pi/4.
    Returns a (b, d) array sorted descending per matrix.
    """
    a = stack.astype(complex, copy=True)
    b, d, _ = a.shape
    if d == 1:
        return a[:, 0, 0].real.reshape(b, 1)
    offmask = ~np.eye(d, dtype=bool)
    scale = np.maximum(1.0, np.sqrt(np.sum(a.real**2 + a.imag**2, axis=(1, 2))))
    thresh2 = (JACOBI_OFF_TOL * scale) ** 2
    schedule = _round_robin_schedule(d)
    converged = False
    with np.errstate(over="ignore"):
        for _ in range(JACOBI_MAX_SWEEPS):
            offs = a[:, offmask]
            todo = np.sum(offs.real**2 + offs.imag**2, axis=1) > thresh2
            if not todo.any():
                converged = True
                break
            for pp, qq in schedule:
                apq = a[:, pp, qq]
                r = np.abs(apq)
                # frozen (already converged) matrices take identity rotations so
                # each matrix sees exactly the rotation sequence of a solo run
                active = (r > 0.0) & todo[:, None]
                if not active.any():
                    continue
                safe_r = np.where(active, r, 1.0)
                phase = np.where(active, apq / safe_r, 1.0)
                diag = np.einsum("bii->bi", a).real
                theta = (diag[:, qq] - diag[:, pp]) / (2.0 * safe_r)
                t = np.where(theta >= 0.0, 1.0, -1.0) / (
                    np.abs(theta) + np.sqrt(theta * theta + 1.0)
                )
                t = np.where(active, t, 0.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                cp = (c * phase)[:, None, :]
                sp = (s * phase)[:, None, :]
                cc = c[:, None, :]
                ss = s[:, None, :]
                colp = a[:, :, pp]
                colq = a[:, :, qq]
                a[:, :, pp] = cp * colp - ss * colq
                a[:, :, qq] = sp * colp + cc * colq
                rowp = a[:, pp, :]
                rowq = a[:, qq, :]
                a[:, pp, :] = np.conj(np.swapaxes(cp, 1, 2)) * rowp - np.swapaxes(
                    ss, 1, 2
                ) * rowq
                a[:, qq, :] = np.conj(np.swapaxes(sp, 1, 2)) * rowp + np.swapaxes(
                    cc, 1, 2
                ) * rowq
    if not converged:
        raise InvariantViolationError(
            f"Jacobi sweep failed to converge within {JACOBI_MAX_SWEEPS} sweeps"
        )
    return np.sort(np.einsum("bii->bi", a).real, axis=1)[:, ::-1]


def hermitian_eigenvalues(a: np.ndarray) -> np.ndarray:
    """All real eigenvalues of a Hermitian matrix (or stack), sorted descending."""
    a = np.asarray(a, dtype=complex)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {a.shape}")
    lead = a.shape[:-2]
    d = a.shape[-1]
    stack = a.reshape(-1, d, d)
    herm_err = np.max(np.abs(stack - np.conj(np.swapaxes(stack, 1, 2))))
    tol = HERMITIAN_ATOL * max(1.0, float(np.max(np.abs(stack))) if stack.size else 1.0)
    if herm_err > tol:
        raise ValueError(f"matrix is not Hermitian: max asymmetry {herm_err:.3e}")
    vals = _jacobi_eigvalsh(stack)
    return vals.reshape(*lead, d) if lead else vals[0]


def _clamped_spectra(lams: np.ndarray) -> np.ndarray:
    if np.any(lams < -EIG_CLAMP):
        raise InvariantViolationError(
            f"eigenvalue {float(lams.min())!r} below -{EIG_CLAMP}; not a density matrix"
        )
    return np.maximum(lams, 0.0)


def entropy_from_spectrum(lams: np.ndarray, m: int) -> float | np.ndarray:
    """Normalized von Neumann entropy (-sum lam log2 lam) / m from eigenvalues."""
    lams = _clamped_spectra(np.asarray(lams, dtype=float))
    safe = np.where(lams > ZERO_EIG_CUTOFF, lams, 1.0)
    out = -np.sum(safe * np.log2(safe), axis=-1) / m
    return float(out) if out.ndim == 0 else out


def von_neumann_entropy(rho: np.ndarray) -> float | np.ndarray:
    """Normalized von Neumann entropy of a 2^m-dimensional density matrix.

    Eigenvalues come from the Jacobi solver; the bit entropy is divided by m
    so 0 means pure and 1 means maximally mixed regardless of subsystem size.
    """
    rho = np.asarray(rho)
    d = rho.shape[-1]
    m = d.bit_length() - 1
    if d != 2**m or m < 1:
        raise ValueError(f"dimension {d} is not a power of two >= 2")
    return entropy_from_spectrum(hermitian_eigenvalues(rho), m)


def check_density_matrix(rho: np.ndarray) -> None:
    """Raise InvariantViolationError unless rho is a valid density matrix."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvariantViolationError(f"not a square matrix: shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-12 * max(1.0, float(np.max(np.abs(rho)))):
        raise InvariantViolationError("not Hermitian within 1e-12")
    tr = float(np.trace(rho).real)
    if abs(tr - 1.0) > 1e-10:
        raise InvariantViolationError(f"trace {tr!r} deviates from 1 beyond 1e-10")
    _clamped_spectra(hermitian_eigenvalues(rho))
