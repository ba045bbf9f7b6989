"""Stochastic hill climbing toward highly entangled states.

One iteration: perturb the current state with Gaussian noise of scale sigma,
keep the proposal only if the objective strictly increases. After a run of
consecutive rejections sigma decays, turning coarse exploration into fine
polishing; the climb stops once sigma has bottomed out and improvements have
dried up, or at the iteration cap. Runs are deterministic given the seed.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .measures import MeasureKind, bipartition_evaluations_per_iteration, e_balanced, e_total
from .qstate import PureState, computational_basis_state, perturb, random_haar_state

_MASK64 = (1 << 64) - 1
_WEYL = 0x9E3779B97F4A7C15

# value_history is thinned to at most this many points
_HISTORY_CAP = 4096


class Scope(Enum):
    FULL = "full"
    BALANCED = "balanced"


class StartKind(Enum):
    SEPARABLE = "separable"
    HAAR_RANDOM = "haar"


@dataclass(frozen=True)
class Objective:
    kind: MeasureKind
    scope: Scope


@dataclass(frozen=True)
class SearchConfig:
    n_qubits: int
    objective: Objective
    sigma_init: float = 0.1
    sigma_decay: float = 0.5
    sigma_min: float = 1e-6
    stagnation_window: int = 200
    convergence_epsilon: float = 1e-9
    max_iterations: int = 2_000_000
    seed: int = 0
    start: StartKind = StartKind.SEPARABLE

    def __post_init__(self):
        if self.n_qubits < 2:
            raise ValueError("search needs at least 2 qubits")
        if self.sigma_init <= 0 or self.sigma_min <= 0:
            raise ValueError("sigma_init and sigma_min must be > 0")
        if self.sigma_min > self.sigma_init:
            raise ValueError("sigma_min must not exceed sigma_init")
        if not 0 < self.sigma_decay <= 1:
            raise ValueError("sigma_decay must be in (0, 1]")
        if self.stagnation_window < 1 or self.max_iterations < 1:
            raise ValueError("stagnation_window and max_iterations must be positive")
        if self.convergence_epsilon < 0:
            raise ValueError("convergence_epsilon must be >= 0")


@dataclass(frozen=True)
class SearchResult:
    best_state: PureState
    best_value: float
    iterations_used: int
    accepted_count: int
    value_history: tuple[tuple[int, float], ...]


def evaluate_objective(objective: Objective, state: PureState) -> float:
    if objective.scope is Scope.BALANCED:
        return e_balanced(state, objective.kind)
    return e_total(state, objective.kind).total


def child_seed(seed: int, index: int) -> int:
    """Per-run seed for multi_start: seed + index * (golden-ratio 64-bit step).

    Index 0 maps to the seed itself, so a one-run multi_start reproduces
    hill_climb exactly; numpy's SeedSequence hashing decorrelates the
    resulting streams.
    """
    if index < 0:
        raise ValueError("index must be >= 0")
    return (seed + index * _WEYL) & _MASK64


def hill_climb(cfg: SearchConfig) -> SearchResult:
    """Greedy stochastic ascent on the configured entanglement objective."""
    rng = np.random.default_rng(cfg.seed)
    if cfg.start is StartKind.SEPARABLE:
        current = computational_basis_state(cfg.n_qubits, "0" * cfg.n_qubits)
    else:
        current = random_haar_state(cfg.n_qubits, rng)
    current_value = evaluate_objective(cfg.objective, current)

    sigma = cfg.sigma_init
    consecutive_rejects = 0
    accepted = 0
    last_significant_gain = 0
    history = [(0, current_value)]
    iterations = 0
    for iterations in range(1, cfg.max_iterations + 1):
        candidate = perturb(current, sigma, rng)
        value = evaluate_objective(cfg.objective, candidate)
        if value > current_value:
            if value - current_value > cfg.convergence_epsilon:
                last_significant_gain = iterations
            current, current_value = candidate, value
            accepted += 1
            consecutive_rejects = 0
            history.append((iterations, value))
            if len(history) > _HISTORY_CAP:
                history = history[::2]
        else:
            consecutive_rejects += 1
            if consecutive_rejects >= cfg.stagnation_window:
                sigma = max(sigma * cfg.sigma_decay, cfg.sigma_min)
                consecutive_rejects = 0
        if (
            sigma <= cfg.sigma_min
            and iterations - last_significant_gain >= 4 * cfg.stagnation_window
        ):
            break
    if history[-1][1] != current_value:
        history.append((iterations, current_value))
    return SearchResult(
        best_state=current,
        best_value=current_value,
        iterations_used=iterations,
        accepted_count=accepted,
        value_history=tuple(history),
    )


def multi_start(
    cfg: SearchConfig, runs: int, max_workers: int | None = None
) -> list[SearchResult]:
    """Independent hill climbs with per-run seeds, in run-index order.

    With max_workers > 1 the runs execute in a process pool; results are
    identical to the sequential path because every run owns its seed.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    configs = [
        dataclasses.replace(cfg, seed=child_seed(cfg.seed, i)) for i in range(runs)
    ]
    if max_workers is not None and max_workers > 1 and runs > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(hill_climb, configs))
    return [hill_climb(c) for c in configs]


@dataclass(frozen=True)
class ScopeComparison:
    """Full-scope vs balanced-scope climbs on otherwise identical configs."""

    full: SearchResult
    balanced: SearchResult
    e_vn_of_full: float
    e_vn_of_balanced: float
    difference: float
    evaluations_per_iteration_full: int
    evaluations_per_iteration_balanced: int


def compare_scopes(cfg_full: SearchConfig, cfg_balanced: SearchConfig) -> ScopeComparison:
    """Run both scopes and score both winners with the FULL von Neumann measure."""
    if cfg_full.objective.scope is not Scope.FULL:
        raise ValueError("cfg_full must use Scope.FULL")
    if cfg_balanced.objective.scope is not Scope.BALANCED:
        raise ValueError("cfg_balanced must use Scope.BALANCED")
    if dataclasses.replace(cfg_balanced, objective=cfg_full.objective) != cfg_full:
        raise ValueError("configs must be identical apart from the objective scope")
    res_full = hill_climb(cfg_full)
    res_balanced = hill_climb(cfg_balanced)
    kind = MeasureKind.VON_NEUMANN
    evn_full = e_total(res_full.best_state, kind).total
    evn_balanced = e_total(res_balanced.best_state, kind).total
    n = cfg_full.n_qubits
    return ScopeComparison(
        full=res_full,
        balanced=res_balanced,
        e_vn_of_full=evn_full,
        e_vn_of_balanced=evn_balanced,
        difference=abs(evn_full - evn_balanced),
        evaluations_per_iteration_full=bipartition_evaluations_per_iteration(n, False),
        evaluations_per_iteration_balanced=bipartition_evaluations_per_iteration(n, True),
    )
