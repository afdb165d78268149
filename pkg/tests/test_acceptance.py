"""End-to-end acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
complete.  Criteria 5, 6 and 8 are replicated long-horizon experiments and
dominate the runtime (tens of minutes on two cores); everything else finishes
in seconds.
"""

import math
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager

import numpy as np
import pytest

import spectra_evolve as se
from spectra_evolve import (
    CrossoverVariant,
    EvolutionConfig,
    InitSpec,
    MutationParams,
    TargetSpec,
    algebraic_connectivity,
    apply_crossover,
    average_path_length,
    density,
    density_values,
    diversity_contributions,
    eigen_spectrum,
    global_clustering,
    make_circulant,
    make_star,
    mutate,
    run_evolution,
    spectral_distance,
)
from spectra_evolve.operators import degree_biased_vertex
from spectra_evolve.spectral import grid_size

from conftest import (
    circulant_spectrum,
    complete_graph,
    complete_spectrum,
    random_connected_graph,
    star_spectrum,
)
from test_metrics import brute_average_path_length, brute_betweenness, brute_transitivity

WORKERS = 2


@contextmanager
def criterion(label):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"\nACCEPTANCE {label}: FAIL ({time.perf_counter() - start:.1f}s)", flush=True)
        raise
    print(f"\nACCEPTANCE {label}: PASS ({time.perf_counter() - start:.1f}s)", flush=True)


# -- criterion 1: spectral oracle suite ------------------------------------------


def test_criterion_1_spectral_oracles():
    with criterion("1 spectral oracles"):
        start = time.perf_counter()
        for n in (8, 12, 24, 64):
            got = eigen_spectrum(make_star(n)).eigenvalues
            assert np.max(np.abs(got - star_spectrum(n))) < 1e-8
            got = eigen_spectrum(complete_graph(n)).eigenvalues
            assert np.max(np.abs(got - complete_spectrum(n))) < 1e-8
            for offsets in ([1], list(range(1, n // 4 + 1)), list(range(1, n // 3 + 1))):
                got = eigen_spectrum(make_circulant(n, offsets)).eigenvalues
                assert np.max(np.abs(got - circulant_spectrum(n, offsets))) < 1e-8
        assert time.perf_counter() - start < 10.0


# -- criterion 2: density / distance calculus --------------------------------------


def _fine_grid_distance(g1, g2, refine=10):
    xs = np.linspace(0.0, 2.0, (grid_size(g1.n) - 1) * refine + 1)
    a = density_values(eigen_spectrum(g1), xs)
    b = density_values(eigen_spectrum(g2), xs)
    return float(np.trapezoid(np.abs(a - b), xs))


def test_criterion_2_density_distance_calculus():
    with criterion("2 density/distance calculus"):
        start = time.perf_counter()
        rng = np.random.default_rng(2024)
        corpus = [make_star(n) for n in (12, 16, 24, 32)]
        corpus += [make_circulant(n, list(range(1, n // 4 + 1))) for n in (12, 16, 24, 32)]
        corpus += [random_connected_graph(rng, n, p) for n in (12, 16, 24, 32)
                   for p in (0.3, 0.5)]
        corpus.append(complete_graph(12))

        mass_xs = np.linspace(-0.5, 2.5, 60001)
        for g in corpus:
            sp = eigen_spectrum(g)
            mass = float(np.trapezoid(density_values(sp, mass_xs), mass_xs))
            assert abs(mass - 1.0) <= 1e-6

        grids = {g: density(eigen_spectrum(g)) for g in corpus}
        for g in corpus:
            assert spectral_distance(grids[g], grids[g]) == 0.0

        same_size = [g for g in corpus if g.n == 24]
        for a in same_size:
            for b in same_size:
                assert spectral_distance(grids[a], grids[b]) == spectral_distance(
                    grids[b], grids[a]
                )

        pool = [random_connected_graph(rng, 16, 0.35) for _ in range(30)]
        pool_grids = [density(eigen_spectrum(g)) for g in pool]
        for _ in range(100):
            i, j, k = rng.choice(len(pool), size=3, replace=False)
            dik = spectral_distance(pool_grids[i], pool_grids[k])
            dij = spectral_distance(pool_grids[i], pool_grids[j])
            djk = spectral_distance(pool_grids[j], pool_grids[k])
            assert dik <= dij + djk + 1e-9

        pairs = [(make_star(4), complete_graph(4))]
        pairs += [(random_connected_graph(rng, n, 0.4), random_connected_graph(rng, n, 0.3))
                  for n in (12, 24)]
        for g1, g2 in pairs:
            d = spectral_distance(density(eigen_spectrum(g1)), density(eigen_spectrum(g2)))
            assert abs(d - _fine_grid_distance(g1, g2)) < 1e-4
        assert time.perf_counter() - start < 30.0


# -- criterion 3: operator invariants ------------------------------------------------


def test_criterion_3_operator_invariants():
    with criterion("3 operator invariants"):
        start = time.perf_counter()
        rng = np.random.default_rng(31)
        n = 24

        params = MutationParams(alpha=1.0, beta=4)
        for _ in range(200):
            g = random_connected_graph(rng, n, float(rng.uniform(0.15, 0.5)))
            target_l2 = float(rng.uniform(0.0, 1.2))
            child = mutate(g, target_l2, params, rng)
            assert child.n == n and child.is_connected()
            if algebraic_connectivity(g) <= target_l2:
                assert child.edge_count == g.edge_count + params.beta
            else:
                assert child.edge_count <= g.edge_count

        for tag in ("bc", "sc1", "sc2"):
            variant = CrossoverVariant(tag, 3)
            for _ in range(200):
                pop = [random_connected_graph(rng, n, float(rng.uniform(0.15, 0.4)))
                       for _ in range(6)]
                children, _ = apply_crossover(variant, pop, rng)
                assert len(children) == 6
                assert all(c.n == n and c.is_connected() for c in children)

        degrees = np.array([23, 1, 2, 2, 3, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12,
                            13, 14, 15, 16, 17, 18, 19, 20, 22])
        draws = 10_000
        for inverse in (False, True):
            weights = 1.0 / degrees if inverse else degrees.astype(float)
            probs = weights / weights.sum()
            counts = np.zeros(len(degrees), dtype=np.int64)
            local = np.random.default_rng(5150 + int(inverse))
            for _ in range(draws):
                counts[degree_biased_vertex(degrees, local, inverse=inverse)] += 1
            for obs, p in zip(counts, probs):
                sigma = math.sqrt(draws * p * (1 - p))
                assert abs(obs - draws * p) <= 3 * sigma
        assert time.perf_counter() - start < 120.0


# -- criterion 4: engine invariants ----------------------------------------------------


def _c4_config(tag, seed):
    return EvolutionConfig(
        n=24,
        target=TargetSpec("circulant", 24, tuple(range(1, 7))),
        init=InitSpec("erdos_renyi", 24, 20),
        seed=seed,
        population_size=20,
        generations=100,
        crossover=CrossoverVariant(tag, 3),
    )


def test_criterion_4_engine_invariants():
    with criterion("4 engine invariants"):
        start = time.perf_counter()
        for tag in ("bc", "sc1", "sc2"):
            records = [run_evolution(_c4_config(tag, seed)) for seed in (0, 1, 2)]
            for rec in records:
                assert all(b2 <= b1 for b1, b2 in zip(rec.best, rec.best[1:]))
                assert len(rec.final_population) == 20
                assert all(g.n == 24 and g.is_connected() for g in rec.final_population)
            again = run_evolution(_c4_config(tag, 0))
            assert again.best == records[0].best
            assert again.mean == records[0].mean
            assert [g.edges() for g in again.final_population] == [
                g.edges() for g in records[0].final_population
            ]
        assert time.perf_counter() - start < 300.0


# -- criterion 5: density-transition benchmark ------------------------------------------


def _c5_run(seed):
    cfg = EvolutionConfig(
        n=24,
        target=TargetSpec("circulant", 24, tuple(range(1, 7))),
        init=InitSpec("regular", 24, 40, k=12),
        seed=seed,
        population_size=40,
        generations=1000,
        crossover=CrossoverVariant("sc2", 3),
    )
    rec = run_evolution(cfg)
    return rec.best[0], rec.final_best


def test_criterion_5_density_transition():
    """Five sc2 replicates, 12-regular populations toward C_24^{1..6}: the
    final best distance must undercut the initial best by 5x in >= 4 of 5.

    Known failure: the search plateaus near d ~ 0.29-0.39 (ratios 1.8-2.6x,
    measured over seeds 100-104 and confirmed out to 5000 generations and
    with elitism raised to 8).  One edge rewire from the target costs
    d ~ 0.076, so a 5x reduction needs a graph within ~2 rewires, while every
    spectral-crossover child has its entire Fiedler cut (~56-60 of 144 edges
    for near-12-regular graphs) rerandomized and mutation moves 4 random
    edges at once; near the optimum virtually no child beats the elite.
    """
    with criterion("5 density-transition benchmark (>=5x reduction, 4/5 runs)"):
        with ProcessPoolExecutor(WORKERS) as pool:
            results = list(pool.map(_c5_run, range(100, 105)))
        ratios = [d0 / dk for d0, dk in results]
        print(f"  reduction factors: {[round(r, 2) for r in ratios]}", flush=True)
        assert sum(r >= 5.0 for r in ratios) >= 4


# -- criterion 6: crossover ranking on the star target -----------------------------------


def _c6_run(args):
    tag, seed = args
    cfg = EvolutionConfig(
        n=24,
        target=TargetSpec("star", 24),
        init=InitSpec("erdos_renyi", 24, 40),
        seed=seed,
        population_size=40,
        generations=1000,
        crossover=CrossoverVariant(tag, 3),
    )
    return tag, run_evolution(cfg).final_best


def test_criterion_6_crossover_ranking():
    """Median final distance over 15 star-target runs: sc2 should not lose
    to bc.

    Known failure: measured medians are 0.6428 (sc2) vs 0.6221 (bc) on the
    pinned seeds — statistically tied, slightly favoring bc.  The normalized
    star spectrum has lambda2 = 1, above every sparse random graph's, so the
    guided mutation densifies the population until it stalls near d ~ 0.62;
    at that point the Fiedler cut of each (dense) individual holds roughly
    half its edges and both crossovers scramble comparably, leaving the
    spectral variant's cluster-preservation advantage nothing to act on.
    """
    with criterion("6 crossover ranking (median sc2 <= median bc)"):
        jobs = [("sc2", 600 + i) for i in range(15)] + [("bc", 600 + i) for i in range(15)]
        finals = {"sc2": [], "bc": []}
        with ProcessPoolExecutor(WORKERS) as pool:
            for tag, final in pool.map(_c6_run, jobs):
                finals[tag].append(final)
        med_sc2 = float(np.median(finals["sc2"]))
        med_bc = float(np.median(finals["bc"]))
        print(f"  median final d: sc2={med_sc2:.4f}  bc={med_bc:.4f}", flush=True)
        assert med_sc2 <= med_bc


# -- criterion 7: metrics oracles -----------------------------------------------------------


def test_criterion_7_metrics_oracles():
    with criterion("7 metrics oracles"):
        start = time.perf_counter()
        rng = np.random.default_rng(7)
        for _ in range(50):
            g = random_connected_graph(rng, int(rng.integers(4, 9)), 0.45)
            assert average_path_length(g) == pytest.approx(
                brute_average_path_length(g), abs=1e-12
            )
            assert global_clustering(g) == pytest.approx(brute_transitivity(g), abs=1e-12)
            assert np.allclose(
                se.betweenness_centrality(g), brute_betweenness(g), atol=1e-12
            )
        for _ in range(20):
            vals = rng.normal(size=30)
            rep = diversity_contributions(vals.tolist())
            lo, hi = vals.min(), vals.max()
            h = np.sort((vals - lo) / (hi - lo))
            for i in range(1, 29):
                assert rep.contributions[i] == (h[i] - h[i - 1]) * (h[i + 1] - h[i])
            assert np.all(rep.contributions[1:-1] >= 0.0)
        assert time.perf_counter() - start < 60.0


# -- criterion 8: scaling smoke test -----------------------------------------------------------


def _c8_run(n):
    cfg = EvolutionConfig(
        n=n,
        target=TargetSpec("circulant", n, tuple(range(1, n // 4 + 1))),
        init=InitSpec("erdos_renyi", n, 40),
        seed=81,
        population_size=40,
        generations=200,
        crossover=CrossoverVariant("sc2", 3),
    )
    rec = run_evolution(cfg)
    return n, rec.best[0], rec.final_best


def test_criterion_8_scaling_smoke():
    """Single sc2 runs at n in {24, 64, 128} with K=200 toward C_n^{1..n/4}.

    The n=128 run must finish and strictly improve on generation 0; across
    the three sizes the final distance should follow an approximate power law
    in n (monotone on log-log axes with no sharp kink), growing with n since
    a fixed budget covers a larger search space less well.
    """
    with criterion("8 scaling smoke (power-law trend over n)"):
        with ProcessPoolExecutor(WORKERS) as pool:
            results = dict()
            for n, d0, dk in pool.map(_c8_run, (24, 64, 128)):
                results[n] = (d0, dk)
        print(f"  final d by size: "
              f"{ {n: round(v[1], 4) for n, v in results.items()} }", flush=True)
        d0_128, dk_128 = results[128]
        assert dk_128 < d0_128  # strict improvement at the largest size
        ns = np.array([24.0, 64.0, 128.0])
        finals = np.array([results[24][1], results[64][1], results[128][1]])
        assert np.all(np.diff(finals) > 0)  # harder as n grows
        slope, intercept = np.polyfit(np.log(ns), np.log(finals), 1)
        fit = slope * np.log(ns) + intercept
        ss_res = float(np.sum((np.log(finals) - fit) ** 2))
        ss_tot = float(np.sum((np.log(finals) - np.log(finals).mean()) ** 2))
        r_squared = 1.0 - ss_res / ss_tot
        print(f"  log-log slope {slope:.3f}, R^2 {r_squared:.3f}", flush=True)
        assert slope > 0
        # three single-run points: qualitative check, exclude sharp kinks only
        assert r_squared >= 0.75
