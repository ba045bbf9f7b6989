"""Entanglement landscape experiments: overlap neighborhoods and maximizer spread.

neighborhood_curve maps the average entanglement of states at a prescribed
overlap from an anchor state, binned over the overlap window. Sampling is
per-index seeded, so chunked parallel evaluation reproduces the sequential
result bit for bit.

maximizer_distribution histograms the von Neumann measure across the states
found by many linear-measure climbs: the linear measure has a plateau of
maximizers whose von Neumann values spread well below the true optimum.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateHistogramError
from .measures import MeasureKind, e_total, e_total_both
from .qstate import PureState, as_rng, inner_product
from .search import Scope, SearchConfig, StartKind, multi_start

# a climb counts as "maximizing" when its best value is within this of the
# best value seen across all runs
PLATEAU_TOLERANCE = 1e-4

CURVE_CSV_HEADER = "overlap_bin_center,count,mean_EL,std_EL,mean_EvN,std_EvN"
HISTOGRAM_CSV_HEADER = "bin_center,density"


@dataclass(frozen=True)
class NeighborhoodSample:
    overlap: float
    e_linear: float
    e_von_neumann: float


@dataclass(frozen=True)
class BinnedCurve:
    """Per-bin statistics of both measures against overlap with the anchor."""

    lo: float
    hi: float
    bin_edges: np.ndarray
    counts: np.ndarray
    mean_e_linear: np.ndarray
    std_e_linear: np.ndarray
    mean_e_von_neumann: np.ndarray
    std_e_von_neumann: np.ndarray

    @property
    def bin_centers(self) -> np.ndarray:
        return 0.5 * (self.bin_edges[:-1] + self.bin_edges[1:])


def sample_with_overlap(
    anchor: PureState, lo: float, hi: float, rng: np.random.Generator | int | None
) -> PureState:
    """Random state whose overlap with the anchor is uniform on [lo, hi].

    Construction: c * anchor + sqrt(1 - c^2) * e^{i phi} * chi with chi a
    Haar-random state orthogonalized against the anchor, so the overlap
    equals the drawn c exactly.
    """
    if not 0.0 <= lo <= hi <= 1.0:
        raise ValueError(f"need 0 <= lo <= hi <= 1, got lo={lo}, hi={hi}")
    rng = as_rng(rng)
    c = float(rng.uniform(lo, hi))
    phi = float(rng.uniform(0.0, 2.0 * np.pi))
    dim = anchor.dim
    while True:
        z = rng.standard_normal((2, dim))
        chi = z[0] + 1j * z[1]
        chi -= np.vdot(anchor.amplitudes, chi) * anchor.amplitudes
        norm = np.linalg.norm(chi)
        if norm > 1e-6:
            chi /= norm
            break
    amps = c * anchor.amplitudes + np.sqrt(1.0 - c * c) * np.exp(1j * phi) * chi
    return PureState(anchor.n_qubits, amps)


def _sample_chunk(args) -> list[tuple[float, float, float]]:
    anchor, lo, hi, seed, start, stop = args
    out = []
    for i in range(start, stop):
        state = sample_with_overlap(anchor, lo, hi, np.random.default_rng((seed, i)))
        ov = abs(inner_product(state, anchor))
        el, evn = e_total_both(state)
        out.append((ov, el, evn))
    return out


def sample_neighborhood(
    anchor: PureState,
    lo: float,
    hi: float,
    samples: int,
    seed: int,
    max_workers: int | None = None,
) -> list[NeighborhoodSample]:
    """Draw overlap-constrained samples and evaluate both measures on each.

    Sample i always uses the generator seeded by (seed, i); worker count
    changes chunking only, never values.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if max_workers is not None and max_workers > 1 and samples > 1:
        bounds = np.linspace(0, samples, max_workers * 4 + 1, dtype=int)
        jobs = [
            (anchor, lo, hi, seed, int(a), int(b))
            for a, b in zip(bounds[:-1], bounds[1:])
            if b > a
        ]
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            chunks = list(pool.map(_sample_chunk, jobs))
        triples = [t for chunk in chunks for t in chunk]
    else:
        triples = _sample_chunk((anchor, lo, hi, seed, 0, samples))
    return [NeighborhoodSample(*t) for t in triples]


def neighborhood_curve(
    anchor: PureState,
    lo: float,
    hi: float,
    samples: int,
    bins: int,
    seed: int,
    max_workers: int | None = None,
) -> BinnedCurve:
    """Bin overlap-constrained samples into equal-width bins over [lo, hi]."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    if samples < bins:
        raise ValueError(f"need samples >= bins, got {samples} < {bins}")
    if not 0.0 <= lo < hi <= 1.0:
        raise ValueError(f"need 0 <= lo < hi <= 1, got lo={lo}, hi={hi}")
    data = sample_neighborhood(anchor, lo, hi, samples, seed, max_workers)
    width = (hi - lo) / bins
    counts = np.zeros(bins, dtype=int)
    acc = np.zeros((4, bins))  # sum_EL, sumsq_EL, sum_EvN, sumsq_EvN
    for smp in data:
        b = min(int((smp.overlap - lo) / width), bins - 1)
        counts[b] += 1
        acc[0, b] += smp.e_linear
        acc[1, b] += smp.e_linear**2
        acc[2, b] += smp.e_von_neumann
        acc[3, b] += smp.e_von_neumann**2
    with np.errstate(invalid="ignore", divide="ignore"):
        mean_l = acc[0] / counts
        mean_v = acc[2] / counts
        # sample std (ddof=1); nan for bins with fewer than 2 members
        var_l = (acc[1] - counts * mean_l**2) / (counts - 1)
        var_v = (acc[3] - counts * mean_v**2) / (counts - 1)
    std_l = np.sqrt(np.maximum(var_l, 0.0))
    std_v = np.sqrt(np.maximum(var_v, 0.0))
    return BinnedCurve(
        lo=lo,
        hi=hi,
        bin_edges=np.linspace(lo, hi, bins + 1),
        counts=counts,
        mean_e_linear=mean_l,
        std_e_linear=std_l,
        mean_e_von_neumann=mean_v,
        std_e_von_neumann=std_v,
    )


@dataclass(frozen=True)
class MaximizerDistribution:
    """Density histogram of E_vN over the linear-measure maximizer plateau."""

    bin_edges: np.ndarray
    density: np.ndarray
    e_von_neumann_values: np.ndarray
    e_linear_best: float
    total_runs: int

    @property
    def kept_count(self) -> int:
        return len(self.e_von_neumann_values)

    @property
    def mode(self) -> float:
        centers = 0.5 * (self.bin_edges[:-1] + self.bin_edges[1:])
        return float(centers[int(np.argmax(self.density))])


def maximizer_distribution(
    search_cfg: SearchConfig, runs: int, bins: int, max_workers: int | None = None
) -> MaximizerDistribution:
    """Climb the linear measure `runs` times and histogram E_vN over the plateau.

    Keeps the runs whose best linear value lies within PLATEAU_TOLERANCE of
    the overall best, then evaluates the full von Neumann measure on each
    kept state. Haar-random starts are required so distinct runs land in
    distinct basins.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    if bins < 1:
        raise ValueError("bins must be >= 1")
    if search_cfg.objective.kind is not MeasureKind.LINEAR:
        raise ValueError("maximizer_distribution requires a LINEAR objective")
    if search_cfg.objective.scope is not Scope.FULL:
        raise ValueError("maximizer_distribution requires the FULL scope")
    if search_cfg.start is not StartKind.HAAR_RANDOM:
        raise ValueError("maximizer_distribution requires HAAR_RANDOM starts")
    results = multi_start(search_cfg, runs, max_workers)
    best = max(r.best_value for r in results)
    kept = [r for r in results if r.best_value >= best - PLATEAU_TOLERANCE]
    if len(kept) < 2:
        raise DegenerateHistogramError(
            f"only {len(kept)} of {runs} runs reached the linear-measure plateau"
        )
    values = np.array(
        [e_total(r.best_state, MeasureKind.VON_NEUMANN).total for r in kept]
    )
    lo = float(values.min())
    hi = float(values.max())
    if hi - lo < 1e-12:
        hi = lo + 1e-12
    density, edges = np.histogram(values, bins=bins, range=(lo, hi), density=True)
    return MaximizerDistribution(
        bin_edges=edges,
        density=density,
        e_von_neumann_values=values,
        e_linear_best=best,
        total_runs=runs,
    )


def _write_csv(path, header: str, rows, comment: str | None) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        if comment:
            for line in comment.splitlines():
                fh.write(f"# {line}\n")
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(f"{x:.17g}" if isinstance(x, float) else str(x) for x in row))
            fh.write("\n")


def write_curve_csv(curve: BinnedCurve, path, comment: str | None = None) -> None:
    rows = zip(
        (float(x) for x in curve.bin_centers),
        (int(c) for c in curve.counts),
        (float(x) for x in curve.mean_e_linear),
        (float(x) for x in curve.std_e_linear),
        (float(x) for x in curve.mean_e_von_neumann),
        (float(x) for x in curve.std_e_von_neumann),
    )
    _write_csv(path, CURVE_CSV_HEADER, rows, comment)


def write_histogram_csv(dist: MaximizerDistribution, path, comment: str | None = None) -> None:
    centers = 0.5 * (dist.bin_edges[:-1] + dist.bin_edges[1:])
    rows = zip((float(x) for x in centers), (float(d) for d in dist.density))
    _write_csv(path, HISTOGRAM_CSV_HEADER, rows, comment)
