"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criteria 3-8 run real searches and ensembles, so this module takes tens of
minutes end to end. Search results are cached at module scope and shared
between criteria; everything is seeded, so reruns are bit-identical. The
per-criterion lines show up live under `pytest -s`; the default run collects
them in the end-of-run PASSES summary (the -rP flag in addopts).
"""

import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import pytest

import entsearch as es
from entsearch.landscape import maximizer_distribution, neighborhood_curve
from entsearch.measures import MeasureKind, e_m, e_total
from entsearch.partitions import count_bipartitions, enumerate_bipartitions
from entsearch.search import Objective, Scope, SearchConfig, StartKind, hill_climb

from oracles import (
    all_subsets,
    brute_force_partial_trace,
    eigvals_2x2_closed_form,
    eigvals_char_poly,
    apply_qubit_permutation,
    apply_single_qubit_unitary,
    random_hermitian,
    random_unitary,
)

LIN = MeasureKind.LINEAR
VN = MeasureKind.VON_NEUMANN
VN_FULL = Objective(VN, Scope.FULL)
VN_BALANCED = Objective(VN, Scope.BALANCED)

SEEDS = (1, 2, 3)
WORKERS = 2

# published best values targeted by the searches
HS_E_L = 0.9445
HS_E_VN = 0.9481
N7_E_VN = 0.9948

# enlarged budget for the seven-qubit stretch: 60k iterations, twice what the
# six-qubit searches need to converge (the default schedule's own convergence
# test would keep polishing the sixth decimal for hundreds of thousands more)
N7_CONFIG = SearchConfig(
    n_qubits=7, objective=VN_FULL, max_iterations=60_000, seed=1
)

_FULL_CACHE: dict[tuple[int, int], es.SearchResult] = {}
_BALANCED_CACHE: dict[tuple[int, int], es.SearchResult] = {}


def _fill_cache(cache, objective, pairs):
    todo = [(n, s) for (n, s) in pairs if (n, s) not in cache]
    configs = [SearchConfig(n_qubits=n, objective=objective, seed=s) for n, s in todo]
    if len(configs) > 1:
        with ProcessPoolExecutor(max_workers=WORKERS) as pool:
            results = list(pool.map(hill_climb, configs))
    else:
        results = [hill_climb(c) for c in configs]
    cache.update(dict(zip(todo, results)))


def full_result(n, seed):
    _fill_cache(_FULL_CACHE, VN_FULL, [(n, seed)])
    return _FULL_CACHE[(n, seed)]


def balanced_result(n, seed):
    _fill_cache(_BALANCED_CACHE, VN_BALANCED, [(n, seed)])
    return _BALANCED_CACHE[(n, seed)]


def report(criterion, ok, detail):
    print(f"[acceptance] criterion {criterion}: {'PASS' if ok else 'FAIL'} ({detail})",
          flush=True)


def test_criterion_1_reference_state_measures():
    t0 = time.perf_counter()
    hs = es.hs4()
    el = e_total(hs, LIN).total
    evn = e_total(hs, VN).total
    elapsed = time.perf_counter() - t0
    ok = abs(el - HS_E_L) <= 5e-4 and abs(evn - HS_E_VN) <= 5e-4 and elapsed < 1.0
    report(1, ok, f"E_L(HS)={el:.6f}, E_vN(HS)={evn:.6f}, {elapsed*1e3:.0f} ms")
    assert abs(el - HS_E_L) <= 5e-4
    assert abs(evn - HS_E_VN) <= 5e-4
    assert elapsed < 1.0


def test_criterion_2_perfect_value_states():
    t0 = time.perf_counter()
    g = es.ghz(3)
    el = e_total(g, LIN).total
    evn = e_total(g, VN).total
    elapsed = time.perf_counter() - t0
    ok = abs(el - 1.0) <= 1e-10 and abs(evn - 1.0) <= 1e-10 and elapsed < 1.0
    report(2, ok, f"E_L(GHZ3)={el:.12f}, E_vN(GHZ3)={evn:.12f}, {elapsed*1e3:.0f} ms")
    assert abs(el - 1.0) <= 1e-10
    assert abs(evn - 1.0) <= 1e-10
    assert elapsed < 1.0


@pytest.mark.slow
def test_criterion_3_search_attainment_n356():
    t0 = time.perf_counter()
    _fill_cache(_FULL_CACHE, VN_FULL, [(n, s) for n in (3, 5, 6) for s in SEEDS])
    worst = {n: min(full_result(n, s).best_value for s in SEEDS) for n in (3, 5, 6)}
    elapsed = time.perf_counter() - t0
    ok = all(v >= 0.9999 for v in worst.values())
    detail = ", ".join(f"N={n} worst={v:.6f}" for n, v in worst.items())
    report(3, ok, f"{detail}, {elapsed:.0f} s")
    for n, v in worst.items():
        assert v >= 0.9999, f"N={n} best value {v} below 0.9999 for some seed"


def test_criterion_4_search_attainment_n4():
    t0 = time.perf_counter()
    res = full_result(4, 1)
    e1 = e_m(res.best_state, 1, VN)
    elapsed = time.perf_counter() - t0
    ok = abs(res.best_value - HS_E_VN) <= 1e-3 and e1 >= 0.999
    report(4, ok, f"best={res.best_value:.6f}, E^(1)={e1:.6f}, {elapsed:.0f} s")
    assert abs(res.best_value - HS_E_VN) <= 1e-3
    assert e1 >= 0.999


@pytest.mark.slow
def test_criterion_5_balanced_scope_equivalence():
    t0 = time.perf_counter()
    _fill_cache(_FULL_CACHE, VN_FULL, [(n, 1) for n in range(3, 7)])
    _fill_cache(_BALANCED_CACHE, VN_BALANCED, [(n, 1) for n in range(3, 7)])
    gaps = {}
    for n in range(3, 7):
        evn_full = e_total(full_result(n, 1).best_state, VN).total
        evn_bal = e_total(balanced_result(n, 1).best_state, VN).total
        gaps[n] = abs(evn_full - evn_bal)
    counts_ok = all(
        sum(count_bipartitions(n, m) for m in range(1, n // 2 + 1))
        > count_bipartitions(n, n // 2)
        for n in range(4, 7)
    )
    elapsed = time.perf_counter() - t0
    ok = all(g <= 1e-3 for g in gaps.values()) and counts_ok
    detail = ", ".join(f"N={n} gap={g:.2e}" for n, g in gaps.items())
    report(5, ok, f"{detail}, fewer evals for N>=4: {counts_ok}, {elapsed:.0f} s")
    for n, g in gaps.items():
        assert g <= 1e-3, f"N={n} full/balanced E_vN gap {g}"
    assert counts_ok


@pytest.mark.slow
def test_criterion_6_seven_qubit_stretch():
    t0 = time.perf_counter()
    res = hill_climb(N7_CONFIG)
    elapsed = time.perf_counter() - t0
    gap = N7_E_VN - res.best_value
    within = abs(gap) <= 5e-3
    tag = "PASS" if within else "SHORTFALL (reported, not failed)"
    print(
        f"[acceptance] criterion 6: {tag} (best={res.best_value:.6f}, "
        f"target={N7_E_VN}, gap={gap:+.2e}, {res.iterations_used} iterations, "
        f"{elapsed:.0f} s)",
        flush=True,
    )
    # a shortfall is reported with its gap rather than failing the suite, but
    # the search must at least have found a highly entangled state
    assert res.best_value > 0.97


@pytest.mark.slow
def test_criterion_7_neighborhood_curves():
    t0 = time.perf_counter()
    lo, hi, samples, bins = 0.95, 1.0, 100_000, 10
    curve_hs = neighborhood_curve(es.hs4(), lo, hi, samples, bins, seed=101,
                                  max_workers=WORKERS)
    curve_bssb = neighborhood_curve(es.bssb4(), lo, hi, samples, bins, seed=202,
                                    max_workers=WORKERS)

    dominance = bool(np.all(curve_hs.mean_e_von_neumann > curve_bssb.mean_e_von_neumann))

    centers = curve_hs.bin_centers
    slope_hs = float(np.polyfit(centers, curve_hs.mean_e_von_neumann, 1)[0])
    slope_bssb = float(np.polyfit(centers, curve_bssb.mean_e_von_neumann, 1)[0])
    slope_rel = abs(slope_hs - slope_bssb) / max(abs(slope_hs), abs(slope_bssb))

    se_hs = curve_hs.std_e_linear / np.sqrt(curve_hs.counts)
    se_bssb = curve_bssb.std_e_linear / np.sqrt(curve_bssb.counts)
    pooled = np.sqrt(se_hs**2 + se_bssb**2)
    el_close = np.abs(curve_hs.mean_e_linear - curve_bssb.mean_e_linear) <= 2 * pooled
    el_close_bins = int(el_close.sum())

    elapsed = time.perf_counter() - t0
    ok = dominance and slope_rel <= 0.20 and el_close_bins >= bins // 2
    report(
        7,
        ok,
        f"EvN dominance={dominance}, slope rel diff={slope_rel:.3f}, "
        f"E_L within 2 SE in {el_close_bins}/{bins} bins, {elapsed:.0f} s",
    )
    assert dominance, "HS neighbors must beat BSSB4 neighbors in every E_vN bin"
    assert slope_rel <= 0.20
    assert el_close_bins >= bins // 2
    # anchored continuity: the top bin must sit within 5e-3 of the anchor value
    for curve, anchor in ((curve_hs, es.hs4()), (curve_bssb, es.bssb4())):
        evn_anchor = e_total(anchor, VN).total
        assert abs(curve.mean_e_von_neumann[-1] - evn_anchor) <= 5e-3


@pytest.mark.slow
def test_criterion_8_maximizer_distribution():
    t0 = time.perf_counter()
    cfg = SearchConfig(
        n_qubits=4,
        objective=Objective(LIN, Scope.FULL),
        start=StartKind.HAAR_RANDOM,
        seed=7,
    )
    dist = maximizer_distribution(cfg, runs=200, bins=50, max_workers=WORKERS)
    max_evn = float(dist.e_von_neumann_values.max())
    elapsed = time.perf_counter() - t0
    mode_ok = abs(dist.mode - 0.935) <= 0.01
    cap_ok = max_evn <= HS_E_VN + 1e-3
    report(
        8,
        mode_ok and cap_ok,
        f"mode={dist.mode:.4f}, max EvN={max_evn:.4f}, kept={dist.kept_count}/200, "
        f"{elapsed:.0f} s",
    )
    assert mode_ok, f"histogram mode {dist.mode} outside 0.935 +- 0.01"
    assert cap_ok, f"kept state exceeds the four-qubit optimum: {max_evn}"


class TestCriterion9PropertySuites:
    """Always-on property checks, asserted at acceptance tolerances."""

    def test_partial_trace_oracle_equivalence(self):
        worst = 0.0
        for n in range(2, 6):
            s = es.random_haar_state(n, 1000 + n)
            for m in range(1, n):
                for subset in all_subsets(n, m):
                    diff = np.max(
                        np.abs(
                            es.partial_trace(s, subset)
                            - brute_force_partial_trace(s, subset)
                        )
                    )
                    worst = max(worst, float(diff))
        report("9a", worst < 1e-12, f"partial-trace oracle max diff {worst:.2e}")
        assert worst < 1e-12

    def test_complementary_spectrum_equality(self):
        worst = 0.0
        for n in range(2, 7):
            s = es.random_haar_state(n, 2000 + n)
            for m in range(1, n // 2 + 1):
                for part in enumerate_bipartitions(n, m):
                    lam_a = es.hermitian_eigenvalues(es.partial_trace(s, part.subset))
                    lam_b = es.hermitian_eigenvalues(es.partial_trace(s, part.complement))
                    worst = max(worst, float(np.max(np.abs(lam_a - lam_b[: len(lam_a)]))))
        report("9b", worst < 1e-9, f"complementary spectrum max diff {worst:.2e}")
        assert worst < 1e-9

    def test_invariance_of_both_measures(self):
        rng = np.random.default_rng(3000)
        worst = 0.0
        for n in (3, 4, 5):
            s = es.random_haar_state(n, rng)
            base = es.e_total_both(s)
            for q in range(n):
                rotated = es.PureState(
                    n, apply_single_qubit_unitary(s, q, random_unitary(rng, 2))
                )
                vals = es.e_total_both(rotated)
                worst = max(worst, abs(vals[0] - base[0]), abs(vals[1] - base[1]))
            perm = list(rng.permutation(n))
            permuted = es.PureState(n, apply_qubit_permutation(s, perm))
            vals = es.e_total_both(permuted)
            worst = max(worst, abs(vals[0] - base[0]), abs(vals[1] - base[1]))
        report("9c", worst < 1e-9, f"LU/permutation invariance max drift {worst:.2e}")
        assert worst < 1e-9

    def test_eigensolver_checks(self):
        rng = np.random.default_rng(4000)
        worst = 0.0
        for _ in range(20):
            h2 = random_hermitian(rng, 2)
            worst = max(
                worst,
                float(np.max(np.abs(es.hermitian_eigenvalues(h2) - eigvals_2x2_closed_form(h2)))),
            )
            h4 = random_hermitian(rng, 4)
            worst = max(
                worst,
                float(np.max(np.abs(es.hermitian_eigenvalues(h4) - eigvals_char_poly(h4)))),
            )
        s = es.random_haar_state(6, rng)
        rho = es.partial_trace(s, (0, 2, 4))
        lam = es.hermitian_eigenvalues(rho)
        worst = max(worst, abs(float(lam.sum()) - float(np.trace(rho).real)))
        worst = max(worst, abs(float((lam**2).sum()) - es.purity(rho)))
        report("9d", worst < 1e-9, f"eigensolver trace/purity/char-poly max err {worst:.2e}")
        assert worst < 1e-9

    def test_bipartition_exhaustive_counts(self):
        ok = True
        for n in range(2, 11):
            for m in range(1, n // 2 + 1):
                parts = enumerate_bipartitions(n, m)
                ok = ok and len(parts) == count_bipartitions(n, m)
                ok = ok and len({p.subset for p in parts}) == len(parts)
        report("9e", ok, "bipartition counts/enumeration exhaustive to N=10")
        assert ok

    def test_search_monotonicity_and_determinism(self):
        cfg = SearchConfig(n_qubits=3, objective=VN_FULL, max_iterations=2500, seed=77)
        a = hill_climb(cfg)
        b = hill_climb(cfg)
        values = [v for _, v in a.value_history]
        monotone = all(y > x for x, y in zip(values, values[1:]))
        identical = (
            a.best_value == b.best_value
            and np.array_equal(a.best_state.amplitudes, b.best_state.amplitudes)
        )
        report("9f", monotone and identical,
               f"monotone={monotone}, seed-deterministic={identical}")
        assert monotone
        assert identical
