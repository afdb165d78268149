"""Command line front end: evolve replicated runs, emit targets, metrics,
and density exports.

Run configuration is a flat ``key=value`` text file (one pair per line,
``#`` comments allowed) so experiment setups stay diffable.  Replicates run
in parallel worker processes with seeds ``seed .. seed+runs-1``.
"""

from __future__ import annotations

import argparse
import glob as globlib
import json
import os
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .engine import EvolutionConfig, RunRecord, run_evolution
from .generators import InitSpec, TargetSpec
from .graph import Graph, read_edge_list, write_edge_list
from .metrics import (
    METRIC_NAMES,
    diversity_contributions,
    metric_sample,
    write_diversity_csv,
    write_metrics_csv,
)
from .operators import CrossoverVariant, MutationParams
from .spectral import density, eigen_spectrum, write_density_csv

SEED_ENV_VAR = "SPECTRA_EVOLVE_SEED"

_CONFIG_KEYS = {
    "population_size", "generations", "tournament_size", "mutation_rate",
    "mutation_strength", "lambda2_threshold", "min_subgraph_size", "crossover",
    "graph_size", "target", "init", "seed", "runs", "elite_count",
    "output_dir", "emit_density_svg",
}

_REQUIRED_KEYS = ("graph_size", "target", "init", "crossover")


@dataclass
class ExperimentConfig:
    """One evolution setup plus replication and output options."""

    evolution: EvolutionConfig
    runs: int = 1
    output_dir: Path = Path("spectra_out")
    emit_density_svg: bool = False
    metric_set: tuple[str, ...] = METRIC_NAMES
    raw: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        self.evolution.validate()


# -- config file ---------------------------------------------------------------


def parse_config_text(text: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ValueError(f"line {lineno}: expected key=value, got {stripped!r}")
        key, _, value = stripped.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _CONFIG_KEYS:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        if key in pairs:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        pairs[key] = value
    return pairs


def parse_offsets(text: str) -> list[int]:
    """Offset lists accept commas and ranges: ``1,2,3`` or ``1-8`` or ``1-4,6``."""
    out: list[int] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "-" in item:
            lo, _, hi = item.partition("-")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(item))
    if not out:
        raise ValueError(f"empty offset list {text!r}")
    return out


def parse_target(text: str, n: int, base_dir: Path) -> TargetSpec | Graph:
    kind, _, rest = text.partition(":")
    kind = kind.strip().lower()
    if kind == "star":
        return TargetSpec(kind="star", n=n)
    if kind == "circulant":
        if not rest:
            raise ValueError("circulant target needs offsets, e.g. circulant:1-6")
        return TargetSpec(kind="circulant", n=n, offsets=tuple(parse_offsets(rest)))
    if kind == "file":
        return read_edge_list(base_dir / rest.strip())
    raise ValueError(f"unknown target {text!r} (use star, circulant:<offsets>, file:<path>)")


def parse_init(text: str, n: int, count: int, base_dir: Path) -> InitSpec | list[Graph]:
    family, _, rest = text.partition(":")
    family = family.strip().lower()
    params = [p.strip() for p in rest.split(",")] if rest else []
    if family in ("regular", "reg"):
        if len(params) != 1:
            raise ValueError("regular init needs a degree, e.g. regular:12")
        return InitSpec(family="regular", n=n, count=count, k=int(params[0]))
    if family in ("erdos_renyi", "er"):
        spec = InitSpec(family="erdos_renyi", n=n, count=count)
        if params:
            spec = InitSpec(family="erdos_renyi", n=n, count=count, p=float(params[0]))
        return spec
    if family in ("barabasi_albert", "ba"):
        if params and len(params) != 2:
            raise ValueError("barabasi_albert init takes m0,m e.g. ba:8,5")
        if params:
            return InitSpec(family="barabasi_albert", n=n, count=count,
                            m0=int(params[0]), m=int(params[1]))
        return InitSpec(family="barabasi_albert", n=n, count=count)
    if family in ("watts_strogatz", "ws"):
        if params and len(params) != 2:
            raise ValueError("watts_strogatz init takes K,beta e.g. ws:4,0.3")
        if params:
            return InitSpec(family="watts_strogatz", n=n, count=count,
                            ws_k=int(params[0]), ws_beta=float(params[1]))
        return InitSpec(family="watts_strogatz", n=n, count=count)
    if family == "files":
        paths = sorted(globlib.glob(str(base_dir / rest.strip())))
        if not paths:
            raise ValueError(f"init file pattern matched nothing: {rest!r}")
        return [read_edge_list(p) for p in paths]
    raise ValueError(f"unknown init family {text!r}")


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


def load_experiment(config_path: Path, output_override: str | None = None) -> ExperimentConfig:
    pairs = parse_config_text(config_path.read_text())
    missing = [k for k in _REQUIRED_KEYS if k not in pairs]
    if missing:
        raise ValueError(f"config missing required keys: {', '.join(missing)}")
    base_dir = config_path.parent

    n = int(pairs["graph_size"])
    population = int(pairs.get("population_size", "40"))
    seed = int(pairs.get("seed", "0"))
    env_seed = os.environ.get(SEED_ENV_VAR)
    if env_seed is not None:
        seed = int(env_seed)

    evolution = EvolutionConfig(
        n=n,
        target=parse_target(pairs["target"], n, base_dir),
        init=parse_init(pairs["init"], n, population, base_dir),
        seed=seed,
        population_size=population,
        generations=int(pairs.get("generations", "1000")),
        tournament_size=int(pairs.get("tournament_size", "2")),
        mutation=MutationParams(
            alpha=float(pairs.get("mutation_rate", "0.75")),
            beta=int(pairs.get("mutation_strength", "4")),
            lambda2_threshold=float(pairs.get("lambda2_threshold", "0.001")),
        ),
        crossover=CrossoverVariant(
            tag=pairs["crossover"].strip().lower(),
            nu=int(pairs.get("min_subgraph_size", "3")),
        ),
        elite_count=int(pairs.get("elite_count", "1")),
    )

    if output_override is not None:
        out_dir = Path(output_override)
    elif "output_dir" in pairs:
        out_dir = base_dir / pairs["output_dir"]
    else:
        out_dir = Path(f"{config_path.stem}_out")

    echo = dict(pairs)
    echo["seed"] = str(seed)  # effective seed after any env override

    exp = ExperimentConfig(
        evolution=evolution,
        runs=int(pairs.get("runs", "1")),
        output_dir=out_dir,
        emit_density_svg=_parse_bool(pairs.get("emit_density_svg", "false")),
        raw=echo,
    )
    exp.validate()
    return exp


# -- SVG overlay ---------------------------------------------------------------

_SVG_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def density_overlay_svg(xs: np.ndarray, curves: Sequence[tuple[str, np.ndarray]],
                        path: str | Path, width: int = 720, height: int = 420) -> None:
    """Diagnostic polyline overlay of one or more densities on a shared grid."""
    margin = 40.0
    top = float(max(curve.max() for _, curve in curves)) or 1.0
    x0, x1 = float(xs[0]), float(xs[-1])

    def sx(x: float) -> float:
        return margin + (x - x0) / (x1 - x0) * (width - 2 * margin)

    def sy(y: float) -> float:
        return height - margin - y / top * (height - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" '
        f'stroke="black"/>',
        f'<text x="{width - margin}" y="{height - margin + 16}" font-size="11" '
        f'text-anchor="end">x = {x1:g}</text>',
        f'<text x="{margin}" y="{height - margin + 16}" font-size="11">x = {x0:g}</text>',
        f'<text x="{margin - 4}" y="{margin}" font-size="11" text-anchor="end">'
        f'{top:.3g}</text>',
    ]
    for idx, (label, curve) in enumerate(curves):
        color = _SVG_COLORS[idx % len(_SVG_COLORS)]
        pts = " ".join(f"{sx(float(x)):.2f},{sy(float(y)):.2f}" for x, y in zip(xs, curve))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                     f'stroke-width="1.2"/>')
        parts.append(f'<text x="{margin + 8}" y="{margin + 14 + 14 * idx}" '
                     f'font-size="12" fill="{color}">{label}</text>')
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n")


# -- evolve ----------------------------------------------------------------------


def _write_trace_csv(record: RunRecord, path: Path) -> None:
    lines = ["generation,best_d,mean_d"]
    for gen, (b, m) in enumerate(zip(record.best, record.mean)):
        lines.append(f"{gen},{b!r},{m!r}")
    path.write_text("\n".join(lines) + "\n")


def _run_replicate(payload: tuple[EvolutionConfig, int, str, bool]) -> dict:
    cfg, run_index, out_dir, emit_svg = payload
    record = run_evolution(cfg)
    out = Path(out_dir)
    _write_trace_csv(record, out / f"run_{run_index}_trace.csv")
    run_dir = out / f"run_{run_index}"
    record.save(run_dir)
    if emit_svg:
        best_idx = min(range(len(record.final_population)),
                       key=lambda i: (record.final_fitness[i], i))
        best_density = density(eigen_spectrum(record.final_population[best_idx]))
        target = cfg.target if isinstance(cfg.target, Graph) else cfg.target.build()
        target_density = density(eigen_spectrum(target))
        density_overlay_svg(
            target_density.xs,
            [("target", target_density.phis), ("best evolved", best_density.phis)],
            run_dir / "best_density.svg",
        )
    return {
        "run": run_index,
        "seed": cfg.seed,
        "final_best": record.final_best,
        "initial_best": record.best[0],
        "repair_edges_total": int(sum(record.repair_edges)),
    }


def run_experiment(exp: ExperimentConfig, jobs: int | None = None) -> dict:
    """Execute all replicates and write traces, final graphs, and summary.json."""
    exp.validate()
    exp.output_dir.mkdir(parents=True, exist_ok=True)
    payloads = []
    for i in range(exp.runs):
        cfg_i = EvolutionConfig(**{**exp.evolution.__dict__, "seed": exp.evolution.seed + i})
        payloads.append((cfg_i, i, str(exp.output_dir), exp.emit_density_svg))

    jobs = jobs or os.cpu_count() or 1
    results: list[dict] = []
    failures: list[dict] = []
    if jobs == 1 or exp.runs == 1:
        for payload in payloads:
            try:
                results.append(_run_replicate(payload))
            except Exception:
                failures.append({"run": payload[1], "error": traceback.format_exc()})
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, exp.runs)) as pool:
            futures = {pool.submit(_run_replicate, p): p[1] for p in payloads}
            for future, run_index in futures.items():
                try:
                    results.append(future.result())
                except Exception:
                    failures.append({"run": run_index, "error": traceback.format_exc()})

    results.sort(key=lambda r: r["run"])
    if failures:
        manifest = {"failed_runs": failures, "completed_runs": [r["run"] for r in results]}
        (exp.output_dir / "error_manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
        raise RuntimeError(f"{len(failures)} of {exp.runs} runs failed; "
                           f"see {exp.output_dir / 'error_manifest.json'}")

    finals = [r["final_best"] for r in results]
    q1, med, q3 = (float(v) for v in np.percentile(finals, [25, 50, 75]))
    summary = {
        "config": exp.raw,
        "runs": exp.runs,
        "final_best": finals,
        "median_final_best": med,
        "q1_final_best": q1,
        "q3_final_best": q3,
        "per_run": results,
    }
    (exp.output_dir / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    return summary


# -- subcommands -----------------------------------------------------------------


def cmd_evolve(args: argparse.Namespace) -> int:
    exp = load_experiment(Path(args.config), args.output)
    summary = run_experiment(exp, jobs=args.jobs)
    print(f"{exp.runs} run(s) complete; median final distance "
          f"{summary['median_final_best']:.6g}; outputs in {exp.output_dir}")
    return 0


def _target_label(kind: str, n: int, offsets: list[int] | None) -> str:
    if kind == "star":
        return f"star_{n}"
    return f"circulant_{n}_" + "-".join(str(j) for j in offsets or [])


def cmd_target(args: argparse.Namespace) -> int:
    kind = args.kind.lower()
    offsets = parse_offsets(args.offsets) if args.offsets else None
    if kind == "circulant" and offsets is None:
        raise ValueError("circulant target needs offsets, e.g. 1,2,3 or 1-8")
    spec = TargetSpec(kind=kind, n=args.n, offsets=tuple(offsets or ()))
    g = spec.build()
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    label = _target_label(kind, args.n, offsets)
    write_edge_list(g, out / f"{label}.txt")
    grid = density(eigen_spectrum(g))
    write_density_csv(grid, out / f"{label}_density.csv")
    if args.svg:
        density_overlay_svg(grid.xs, [(label, grid.phis)], out / f"{label}_density.svg")
    print(f"wrote {label}.txt and {label}_density.csv to {out}")
    return 0


def cmd_metrics(args: argparse.Namespace) -> int:
    metric_set = tuple(m.strip() for m in args.metrics.split(",")) if args.metrics else METRIC_NAMES
    for name in metric_set:
        if name not in METRIC_NAMES:
            raise ValueError(f"unknown metric {name!r}; choose from {METRIC_NAMES}")
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)

    samples = []
    disconnected = 0
    for path in args.files:
        g = read_edge_list(path)
        if not g.is_connected():
            print(f"error: {path}: graph is disconnected", file=sys.stderr)
            samples.append(_nan_sample(str(path)))
            disconnected += 1
            continue
        samples.append(metric_sample(g, graph_id=str(path), metric_set=metric_set))
    write_metrics_csv(samples, out / "metrics.csv")

    if args.diversity:
        good = [s for s in samples if not np.isnan(getattr(s, metric_set[0]))]
        if len(good) < 3:
            raise ValueError("diversity needs at least 3 connected graphs")
        reports = []
        ids = [s.graph_id for s in good]
        for name in metric_set:
            reports.append(diversity_contributions([getattr(s, name) for s in good], name))
        write_diversity_csv(reports, ids, out / "diversity.csv")

    print(f"wrote metrics for {len(samples)} graph(s) to {out}")
    return 1 if disconnected else 0


def _nan_sample(graph_id: str):
    from .metrics import MetricSample

    nan = float("nan")
    return MetricSample(graph_id=graph_id, ac=nan, pl=nan, cc=nan, bc=nan)


def cmd_density(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graphfile)
    grid = density(eigen_spectrum(g))
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    stem = Path(args.graphfile).stem
    write_density_csv(grid, out / f"{stem}_density.csv")
    print(f"wrote {stem}_density.csv to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectra-evolve",
        description="Evolve connected graphs toward a target spectral density.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_evolve = sub.add_parser("evolve", help="run replicated evolution from a config file")
    p_evolve.add_argument("--config", required=True, help="key=value config file")
    p_evolve.add_argument("--jobs", type=int, default=None,
                          help="parallel replicate workers (default: all cores)")
    p_evolve.add_argument("--output", default=None, help="output directory override")
    p_evolve.set_defaults(func=cmd_evolve)

    p_target = sub.add_parser("target", help="emit a target graph and its density")
    p_target.add_argument("kind", choices=["star", "circulant"])
    p_target.add_argument("n", type=int)
    p_target.add_argument("offsets", nargs="?", default=None,
                          help="circulant offsets, e.g. 1,2,3 or 1-8")
    p_target.add_argument("--output", default=".", help="output directory")
    p_target.add_argument("--svg", action="store_true", help="also write an SVG plot")
    p_target.set_defaults(func=cmd_target)

    p_metrics = sub.add_parser("metrics", help="compute graph metrics for edge-list files")
    p_metrics.add_argument("files", nargs="+")
    p_metrics.add_argument("--diversity", action="store_true",
                           help="also write per-metric diversity contributions")
    p_metrics.add_argument("--metrics", default=None, help="subset, e.g. ac,pl")
    p_metrics.add_argument("--output", default=".", help="output directory")
    p_metrics.set_defaults(func=cmd_metrics)

    p_density = sub.add_parser("density", help="emit the spectral density of a graph file")
    p_density.add_argument("graphfile")
    p_density.add_argument("--output", default=".", help="output directory")
    p_density.set_defaults(func=cmd_density)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
