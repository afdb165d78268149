"""Generational evolution loop: evaluate, select, recombine, mutate, keep elites.

Fitness is the L1 distance between a graph's smoothed spectral density and the
target's, minimized.  The loop is deterministic given the configuration seed.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence, Union

import numpy as np

from .generators import InitSpec, TargetSpec, make_initial_population
from .graph import Graph, write_edge_list
from .operators import CrossoverVariant, MutationParams, apply_crossover, mutate
from .spectral import (
    DensityGrid,
    algebraic_connectivity,
    density,
    eigen_spectrum,
    spectral_distance,
)

TargetLike = Union[TargetSpec, Graph]
InitLike = Union[InitSpec, Sequence[Graph]]


@dataclass
class EvolutionConfig:
    """All run parameters.

    Defaults: population 40, 1000 generations, tournament size 2, mutation
    rate 0.75 with strength 4, spectral crossover 2, one elite.
    """

    n: int
    target: TargetLike
    init: InitLike
    seed: int = 0
    population_size: int = 40
    generations: int = 1000
    tournament_size: int = 2
    mutation: MutationParams = field(default_factory=MutationParams)
    crossover: CrossoverVariant = field(default_factory=CrossoverVariant)
    elite_count: int = 1

    def validate(self) -> None:
        if self.population_size < 4 or self.population_size % 2 != 0:
            raise ValueError(
                f"population size must be even and >= 4, got {self.population_size}"
            )
        if self.generations < 1:
            raise ValueError(f"generations must be >= 1, got {self.generations}")
        if not 2 <= self.tournament_size <= self.population_size:
            raise ValueError(
                f"tournament size must be in [2, {self.population_size}], "
                f"got {self.tournament_size}"
            )
        if not 1 <= self.elite_count < self.population_size:
            raise ValueError(f"elite count must be in [1, population), got {self.elite_count}")
        self.mutation.validate()
        self.crossover.validate()
        if self.crossover.tag == "bc" and self.crossover.nu > self.n - self.crossover.nu:
            raise ValueError(
                f"minimal subset size {self.crossover.nu} too large for n={self.n}"
            )
        if self.crossover.tag in ("sc1", "sc2") and self.n < 4:
            raise ValueError("spectral crossover needs n >= 4")
        if isinstance(self.target, TargetSpec):
            self.target.validate()
            if self.target.n != self.n:
                raise ValueError(f"target size {self.target.n} != graph size {self.n}")
        elif self.target.n != self.n:
            raise ValueError(f"target graph size {self.target.n} != graph size {self.n}")
        if isinstance(self.init, InitSpec):
            self.init.validate()
            if self.init.n != self.n or self.init.count != self.population_size:
                raise ValueError("init spec must match graph size and population size")
        else:
            if len(self.init) != self.population_size:
                raise ValueError(
                    f"{len(self.init)} seed graphs for population of {self.population_size}"
                )
            for g in self.init:
                if g.n != self.n:
                    raise ValueError(f"seed graph size {g.n} != configured size {self.n}")
                if not g.is_connected():
                    raise ValueError("seed graphs must be connected")

    def to_dict(self) -> dict:
        if isinstance(self.target, TargetSpec):
            target = {"kind": self.target.kind, "n": self.target.n,
                      "offsets": list(self.target.offsets)}
        else:
            target = {"kind": "graph", "n": self.target.n, "edges": self.target.edges()}
        if isinstance(self.init, InitSpec):
            init = {"family": self.init.family, "n": self.init.n, "count": self.init.count,
                    "k": self.init.k, "p": self.init.p, "m0": self.init.m0, "m": self.init.m,
                    "ws_k": self.init.ws_k, "ws_beta": self.init.ws_beta}
        else:
            init = {"family": "graphs", "count": len(self.init),
                    "edges": [g.edges() for g in self.init]}
        return {
            "n": self.n,
            "target": target,
            "init": init,
            "seed": self.seed,
            "population_size": self.population_size,
            "generations": self.generations,
            "tournament_size": self.tournament_size,
            "mutation_rate": self.mutation.alpha,
            "mutation_strength": self.mutation.beta,
            "lambda2_threshold": self.mutation.lambda2_threshold,
            "crossover": self.crossover.tag,
            "min_subgraph_size": self.crossover.nu,
            "elite_count": self.elite_count,
        }


@dataclass
class RunRecord:
    """Trace and final state of one evolution run.

    ``best`` and ``mean`` have one entry per generation 0..K (0 is the initial
    population); elitism makes ``best`` non-increasing.
    """

    config: dict
    best: list[float]
    mean: list[float]
    repair_edges: list[int]
    generation_seconds: list[float]
    final_population: list[Graph]
    final_fitness: list[float]

    @property
    def final_best(self) -> float:
        return min(self.final_fitness)

    def to_json_dict(self) -> dict:
        return {
            "config": self.config,
            "best": self.best,
            "mean": self.mean,
            "repair_edges": self.repair_edges,
            "generation_seconds": self.generation_seconds,
            "final_fitness": self.final_fitness,
            "final_best": self.final_best,
        }

    def save(self, out_dir: str | Path) -> None:
        """Write record.json plus the final population as final_<rank>.txt,
        ranked by ascending fitness."""
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "record.json").write_text(json.dumps(self.to_json_dict(), indent=2) + "\n")
        order = sorted(range(len(self.final_population)),
                       key=lambda i: (self.final_fitness[i], i))
        for rank, i in enumerate(order):
            write_edge_list(self.final_population[i], out / f"final_{rank}.txt")


def evaluate_fitness(g: Graph, target_density: DensityGrid,
                     cache: dict[Graph, float] | None = None) -> float:
    """Distance between the graph's spectral density and the target density."""
    if cache is not None:
        hit = cache.get(g)
        if hit is not None:
            return hit
    d = spectral_distance(density(eigen_spectrum(g)), target_density)
    if cache is not None:
        cache[g] = d
    return d


def tournament_select(pop: Sequence[Graph], fitness: Sequence[float], s_t: int,
                      rng: np.random.Generator) -> Graph:
    """Draw s_t distinct individuals uniformly; return the fittest (ties go to
    the earliest drawn)."""
    if s_t > len(pop):
        raise ValueError(f"tournament size {s_t} exceeds population {len(pop)}")
    drawn = rng.choice(len(pop), size=s_t, replace=False)
    best = int(drawn[0])
    for idx in drawn[1:]:
        if fitness[int(idx)] < fitness[best]:
            best = int(idx)
    return pop[best]


def run_evolution(cfg: EvolutionConfig) -> RunRecord:
    """Run the full generational loop and record the fitness trace.

    Each generation: evaluate, snapshot the elites, fill a mating pool by
    tournament, apply the configured crossover, mutate every child, then put
    the elite snapshots back in place of the worst children.  Population size,
    connectivity, and determinism under the seed are all preserved.
    """
    cfg.validate()
    rng = np.random.default_rng(cfg.seed)
    target_graph = cfg.target.build() if isinstance(cfg.target, TargetSpec) else cfg.target
    target_density = density(eigen_spectrum(target_graph))
    target_lambda2 = algebraic_connectivity(target_graph)

    if isinstance(cfg.init, InitSpec):
        pop = make_initial_population(cfg.init, rng)
    else:
        pop = list(cfg.init)

    cache: dict[Graph, float] = {}
    fits = [evaluate_fitness(g, target_density, cache) for g in pop]

    best = [min(fits)]
    mean = [float(np.mean(fits))]
    repair_edges: list[int] = []
    gen_seconds: list[float] = []

    ell = cfg.population_size
    for _ in range(cfg.generations):
        t0 = time.perf_counter()
        elite_order = sorted(range(ell), key=lambda i: (fits[i], i))
        elites = [(pop[i], fits[i]) for i in elite_order[: cfg.elite_count]]

        pool = [tournament_select(pop, fits, cfg.tournament_size, rng) for _ in range(ell)]
        children, xstats = apply_crossover(cfg.crossover, pool, rng)
        children = [mutate(c, target_lambda2, cfg.mutation, rng) for c in children]
        child_fits = [evaluate_fitness(c, target_density, cache) for c in children]

        worst_order = sorted(range(ell), key=lambda i: (-child_fits[i], i))
        for (elite_g, elite_f), slot in zip(elites, worst_order):
            children[slot] = elite_g
            child_fits[slot] = elite_f

        pop, fits = children, child_fits
        best.append(min(fits))
        mean.append(float(np.mean(fits)))
        repair_edges.append(xstats.repair_edges_added)
        gen_seconds.append(time.perf_counter() - t0)

    return RunRecord(
        config=cfg.to_dict(),
        best=best,
        mean=mean,
        repair_edges=repair_edges,
        generation_seconds=gen_seconds,
        final_population=pop,
        final_fitness=fits,
    )
