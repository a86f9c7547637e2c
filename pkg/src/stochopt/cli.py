"""Command-line front end: instance files, experiment configs, reports.

The `optimize` entry point exposes four subcommands:

* ``run --config cfg.json``: execute a seeded batch of replicas and write
  a CSV row per replica plus a JSON report (config echo, summary,
  success and effort curves, best-so-far curves).
* ``oracle --instance file``: exhaustive brute force on small instances
  (tours up to 10 cities, packings up to 12 items), the reference answer
  the stochastic methods are judged against.
* ``project --class poly:2|exp:5|tsp|factorial --n N [--rate R]``:
  operation-count runtime projections.
* ``plot --input report.json --kind best_curve|pn_curve|effort_curve``:
  two-column text series for plotting tools.

Instance files: a minimal TSPLIB subset (EUC_2D node coordinates) and a
plain bin-packing text format (count, capacity, one size per line).
Budgets are evaluation counts; wall time is measured and reported but
takes part in no comparison and no determinism guarantee.  Replica i
always runs with seed base_seed + i, so a report is reproducible from
its own config echo.  The ``STOCHOPT_OUTPUT_DIR`` environment variable
sets the default output directory.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .aco import AcoConfig, aco_run
from .annealing import CoolingSchedule, simulated_annealing
from .core import (
    Budget,
    OptimizationError,
    ParseError,
    ValidationError,
    success_time,
)
from .effort import (
    ComplexityClass,
    EffortUndefinedError,
    EnsembleStats,
    computational_effort,
    runtime_projection,
)
from .hopfield import TankParams, hopfield_solve
from .local_search import hill_climb_first_accept, hill_climb_steepest, random_search
from .problems import (
    BinPackingInstance,
    ContinuousLandscape,
    TspInstance,
    brute_force_packing,
    brute_force_tour,
    cube_fixture,
)
from .swarm import SwarmConfig, pso_run
from .tabu import TabuConfig, tabu_search

OUTPUT_DIR_ENV = "STOCHOPT_OUTPUT_DIR"
SCHEMA_VERSION = 1
ALGORITHMS = (
    "random",
    "hillclimb",
    "steepest",
    "sa",
    "tabu",
    "hopfield",
    "pso",
    "aco",
)
ORACLE_TSP_LIMIT = 10
ORACLE_PACKING_LIMIT = 12


# ---------------------------------------------------------------- parsing


def parse_tsp_file(path) -> TspInstance:
    """Minimal TSPLIB subset: EUC_2D coordinates, full-precision distances."""
    path = Path(path)
    header: dict = {}
    coords: dict = {}
    in_coords = False
    dim_line = None
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.upper() == "EOF":
                break
            if in_coords:
                parts = line.split()
                if len(parts) != 3:
                    raise ParseError(
                        f"{path}:{lineno}: expected 'index x y' in NODE_COORD_SECTION"
                    )
                try:
                    idx = int(parts[0])
                    xy = (float(parts[1]), float(parts[2]))
                except ValueError:
                    raise ParseError(
                        f"{path}:{lineno}: non-numeric coordinate line"
                    ) from None
                if idx in coords:
                    raise ParseError(f"{path}:{lineno}: duplicate node index {idx}")
                coords[idx] = xy
                continue
            if line.upper().startswith("NODE_COORD_SECTION"):
                if dim_line is None:
                    raise ParseError(
                        f"{path}:{lineno}: DIMENSION must appear before NODE_COORD_SECTION"
                    )
                in_coords = True
                continue
            if ":" in line:
                key, _, value = line.partition(":")
                key = key.strip().upper()
                value = value.strip()
                if key == "DIMENSION":
                    try:
                        header["DIMENSION"] = int(value)
                    except ValueError:
                        raise ParseError(
                            f"{path}:{lineno}: DIMENSION must be an integer"
                        ) from None
                    dim_line = lineno
                elif key == "TYPE" and value.upper() != "TSP":
                    raise ParseError(f"{path}:{lineno}: only TYPE: TSP is supported")
                elif key == "EDGE_WEIGHT_TYPE" and value.upper() != "EUC_2D":
                    raise ParseError(
                        f"{path}:{lineno}: unknown edge weight type {value!r} (only EUC_2D)"
                    )
                else:
                    header[key] = value
                continue
            raise ParseError(f"{path}:{lineno}: unrecognized line {line!r}")
    if "DIMENSION" not in header:
        raise ParseError(f"{path}: missing DIMENSION")
    n = header["DIMENSION"]
    if len(coords) != n:
        raise ParseError(
            f"{path}: NODE_COORD_SECTION has {len(coords)} entries, DIMENSION says {n}"
        )
    indices = sorted(coords)
    if indices != list(range(1, n + 1)) and indices != list(range(n)):
        raise ParseError(f"{path}: node indices must be 1..{n} (or 0..{n - 1})")
    pts = [coords[i] for i in indices]
    return TspInstance.from_coords(pts, name=header.get("NAME", path.stem))


def parse_binpacking_file(path) -> BinPackingInstance:
    """Plain text: item count, capacity, then the sizes ('#' comments ok)."""
    path = Path(path)
    tokens: list = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            for tok in line.split():
                tokens.append((lineno, tok))
    if len(tokens) < 2:
        raise ParseError(f"{path}: need an item count and a capacity")

    def number(pos: int, caster, what: str):
        lineno, tok = tokens[pos]
        try:
            return caster(tok)
        except ValueError:
            raise ParseError(f"{path}:{lineno}: {what} must be a number, got {tok!r}") from None

    count = number(0, int, "item count")
    if count < 1:
        raise ParseError(f"{path}:{tokens[0][0]}: item count must be positive")
    capacity = number(1, float, "capacity")
    if capacity <= 0:
        raise ParseError(f"{path}:{tokens[1][0]}: capacity must be positive")
    if len(tokens) - 2 != count:
        raise ParseError(
            f"{path}: expected {count} sizes, found {len(tokens) - 2}"
        )
    sizes = []
    for pos in range(2, len(tokens)):
        size = number(pos, float, "item size")
        lineno = tokens[pos][0]
        if size <= 0:
            raise ParseError(f"{path}:{lineno}: item size must be positive")
        if size > capacity:
            raise ParseError(
                f"{path}:{lineno}: item size {size} exceeds the capacity {capacity}"
            )
        sizes.append(size)
    return BinPackingInstance(sizes, capacity=capacity, name=path.stem)


def _anchor_instance(desc, base: Path):
    """Rebase a relative instance path that only resolves next to its config.

    Paths that resolve from the working directory win, so command-line
    relative paths keep their usual meaning.
    """

    def rebase(text):
        p = Path(text)
        if p.is_absolute() or p.exists():
            return text
        candidate = base / p
        if candidate.exists():
            return str(candidate)
        for parent in base.resolve().parents:
            candidate = parent / p
            if candidate.exists():
                return str(candidate)
        return text

    if isinstance(desc, str):
        rebased = rebase(desc)
        return desc if rebased == desc else rebased
    if isinstance(desc, dict) and isinstance(desc.get("path"), str):
        rebased = rebase(desc["path"])
        if rebased != desc["path"]:
            return {**desc, "path": rebased}
    return desc


def load_instance(desc):
    """Build a problem from a path string or an inline descriptor dict."""
    if isinstance(desc, str):
        suffix = Path(desc).suffix.lower()
        if suffix == ".tsp":
            return parse_tsp_file(desc)
        if suffix in (".bp", ".bpp", ".pack", ".txt"):
            return parse_binpacking_file(desc)
        raise ValidationError(
            f"cannot infer instance kind from suffix {suffix!r}; use an inline descriptor"
        )
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ValidationError("instance must be a path or a dict with a 'kind' field")
    kind = desc["kind"]
    if kind == "tsp":
        return parse_tsp_file(desc["path"])
    if kind == "binpacking":
        return parse_binpacking_file(desc["path"])
    if kind == "continuous":
        return ContinuousLandscape(
            objective=desc.get("objective", "abs_linear"),
            dim=int(desc.get("dim", 1)),
            bounds=tuple(desc["bounds"]) if "bounds" in desc else None,
            neighbor_radius=desc.get("neighbor_radius"),
        )
    if kind == "cube":
        return cube_fixture()
    raise ValidationError(f"unknown instance kind {kind!r}")


# ----------------------------------------------------------- experiments


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment: an instance, an algorithm, seeds, budget, outputs.

    `params` holds one block per algorithm family (key = algorithm name)
    so a config can carry, say, both `sa` and `tabu` blocks while only
    the active one is read.  Replica i runs with seed `seed + i`.
    """

    instance: object
    algorithm: str
    replicas: int = 1
    seed: int = 0
    budget: Budget = field(default_factory=lambda: Budget(1000))
    params: dict = field(default_factory=dict)
    success: dict | None = None
    start: object = None
    label: str = "experiment"
    output_csv: str | None = None
    output_json: str | None = None

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValidationError(
                f"unknown algorithm {self.algorithm!r}; choose from {ALGORITHMS}"
            )
        if self.replicas < 1:
            raise ValidationError("need at least one replica")

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        if "instance" not in raw or "algorithm" not in raw:
            raise ValidationError("config needs 'instance' and 'algorithm' fields")
        budget_raw = raw.get("budget", 1000)
        if isinstance(budget_raw, dict):
            budget = Budget(
                max_evaluations=int(budget_raw["max_evaluations"]),
                target_fitness=budget_raw.get("target_fitness"),
            )
        else:
            budget = Budget(max_evaluations=int(budget_raw))
        success = raw.get("success")
        if success is not None and budget.target_fitness is None:
            budget = Budget(
                max_evaluations=budget.max_evaluations,
                target_fitness=success_threshold(success),
            )
        known = {
            "instance",
            "algorithm",
            "replicas",
            "seed",
            "budget",
            "params",
            "success",
            "start",
            "label",
            "output_csv",
            "output_json",
        }
        stray = set(raw) - known - set(ALGORITHMS)
        if stray:
            raise ValidationError(f"unknown config fields: {sorted(stray)}")
        params = dict(raw.get("params", {}))
        for name in ALGORITHMS:  # allow algorithm blocks at the top level too
            if name in raw:
                params.setdefault(name, raw[name])
        return cls(
            instance=raw["instance"],
            algorithm=raw["algorithm"],
            replicas=int(raw.get("replicas", 1)),
            seed=int(raw.get("seed", 0)),
            budget=budget,
            params=params,
            success=success,
            start=raw.get("start"),
            label=raw.get("label", "experiment"),
            output_csv=raw.get("output_csv"),
            output_json=raw.get("output_json"),
        )

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        with open(path) as fh:
            raw = json.load(fh)
        cfg = cls.from_dict(raw)
        if cfg.label == "experiment":
            cfg = dataclass_replace(cfg, label=Path(path).stem)
        instance = _anchor_instance(cfg.instance, Path(path).parent)
        if instance is not cfg.instance:
            cfg = dataclass_replace(cfg, instance=instance)
        return cfg

    def echo(self) -> dict:
        return {
            "instance": self.instance,
            "algorithm": self.algorithm,
            "replicas": self.replicas,
            "seed": self.seed,
            "budget": {
                "max_evaluations": self.budget.max_evaluations,
                "target_fitness": self.budget.target_fitness,
            },
            "params": self.params,
            "success": self.success,
            "start": self.start,
            "label": self.label,
        }


def dataclass_replace(cfg: ExperimentConfig, **kw) -> ExperimentConfig:
    from dataclasses import replace

    return replace(cfg, **kw)


def success_threshold(success: dict | None) -> float | None:
    """Cost level counting as success: optimum plus declared slack."""
    if not success:
        return None
    if "threshold" in success:
        return float(success["threshold"])
    if "optimum" not in success:
        raise ValidationError("success block needs 'optimum' or 'threshold'")
    opt = float(success["optimum"])
    rel = float(success.get("relative", 1e-9))
    absolute = float(success.get("absolute", 0.0))
    return opt + abs(opt) * rel + absolute


def _run_one(cfg: ExperimentConfig, problem, seed: int):
    block = dict(cfg.params.get(cfg.algorithm, {}))
    algorithm = cfg.algorithm
    budget = cfg.budget
    start = cfg.start
    if algorithm == "random":
        return random_search(problem, budget, seed)
    if algorithm == "hillclimb":
        return hill_climb_first_accept(
            problem, budget, seed, start=start,
            random_walk=bool(block.get("random_walk", False)),
        )
    if algorithm == "steepest":
        return hill_climb_steepest(
            problem, budget, seed, start=start,
            restart_on_optimum=bool(block.get("restart_on_optimum", False)),
        )
    if algorithm == "sa":
        schedule = CoolingSchedule(
            kind=block.get("kind", "geometric"),
            t0=block.get("t0"),
            rate=float(block.get("lambda", 0.95)),
            decrement=float(block.get("decrement", 0.0)),
            steps_per_temperature=int(block.get("steps_per_temp", 100)),
            max_temperature_steps=block.get("max_temperature_steps"),
        )
        return simulated_annealing(
            problem, budget, seed, schedule=schedule, start=start,
            rescaled=bool(block.get("rescaled", False)),
            alpha=float(block.get("alpha", 1.0)),
        )
    if algorithm == "tabu":
        aspiration = block.get("aspiration", "best_so_far")
        if isinstance(aspiration, bool):
            aspiration = "best_so_far" if aspiration else "off"
        tc = TabuConfig(
            tenure=int(block.get("tenure", 7)),
            aspiration=aspiration,
            intensification_weight=float(block.get("intensification_weight", 0.0)),
            diversification_weight=float(block.get("diversification_weight", 0.0)),
        )
        return tabu_search(problem, budget, seed, cfg=tc, start=start)
    if algorithm == "hopfield":
        p = TankParams(
            a=float(block.get("A", 500.0)),
            b=float(block.get("B", 500.0)),
            c=float(block.get("C", 200.0)),
            d=float(block.get("D", 500.0)),
        )
        return hopfield_solve(
            problem, p,
            max_steps=block.get("max_steps"),
            restarts=int(block.get("restarts", budget.max_evaluations)),
            seed=seed,
        )
    if algorithm == "pso":
        sc = SwarmConfig(
            size=int(block.get("size", 20)),
            p_increment=float(block.get("p_increment", 2.0)),
            g_increment=float(block.get("g_increment", 2.0)),
            vmax=block.get("vmax"),
            inertia=block.get("inertia"),
        )
        return pso_run(problem, budget, seed, cfg=sc)
    if algorithm == "aco":
        ac = AcoConfig(
            ants=block.get("ants"),
            w_tau=float(block.get("w_tau", 1.0)),
            w_eta=block.get("w_eta"),
            rho=float(block.get("rho", 0.1)),
            local_deposit=float(block.get("local_deposit", 0.01)),
            q=float(block.get("q", 1.0)),
            tau0=float(block.get("tau0", 1.0)),
            rule=block.get("rule", "sum"),
        )
        return aco_run(problem, budget, seed, cfg=ac)
    raise ValidationError(f"unknown algorithm {algorithm!r}")


@dataclass
class ResultTable:
    config: dict
    rows: list
    summary: dict
    curves: list
    records: list | None = None
    csv_path: str | None = None
    json_path: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "config": self.config,
            "rows": self.rows,
            "summary": self.summary,
            "curves": self.curves,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ResultTable":
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValidationError(
                f"unsupported report schema_version {data.get('schema_version')!r}"
            )
        return cls(
            config=data["config"],
            rows=data["rows"],
            summary=data["summary"],
            curves=data["curves"],
        )


def run_experiment(cfg: ExperimentConfig, output_dir=None) -> ResultTable:
    """Execute all replicas, assemble the table, write CSV and JSON."""
    problem = load_instance(cfg.instance)
    threshold = success_threshold(cfg.success)
    rows = []
    curves = []
    records = []
    total_wall = 0.0
    for i in range(cfg.replicas):
        seed = cfg.seed + i
        t0 = time.perf_counter()
        record = _run_one(cfg, problem, seed)
        wall = time.perf_counter() - t0
        total_wall += wall
        records.append(record)
        succeeded = (
            success_time(record, threshold) is not None
            if threshold is not None
            else None
        )
        rows.append(
            {
                "seed": seed,
                "status": record.status,
                "best_fitness": record.best_fitness,
                "evaluations": record.evaluations,
                "success": succeeded,
                "wall_time_s": wall,
            }
        )
        curves.append(
            {"seed": seed, "best_curve": [[int(n), float(f)] for n, f in record.best_curve]}
        )
    best = np.array([r.best_fitness for r in records], dtype=float)
    summary: dict = {
        "replicas": cfg.replicas,
        "best_median": float(np.median(best)),
        "best_mean": float(best.mean()),
        "best_min": float(best.min()),
        "best_max": float(best.max()),
        "total_wall_time_s": total_wall,
    }
    if threshold is not None:
        ens = EnsembleStats(
            records=tuple(records),
            budget=cfg.budget.max_evaluations,
            threshold=threshold,
            label=cfg.label,
        )
        times = ens.success_times()
        summary["success_threshold"] = threshold
        summary["successes"] = len(times)
        total = len(records)
        summary["pn_curve"] = [
            [int(t), (i + 1) / total]
            for i, t in enumerate(times)
            if i + 1 == len(times) or times[i + 1] != t
        ]
        z = float(cfg.success.get("confidence", 0.99))
        summary["confidence"] = z
        try:
            n_star, i_min = computational_effort(ens, z)
            summary["effort"] = {"n_star": n_star, "i_min": i_min}
            distinct = sorted(set(times))
            summary["effort_curve"] = [
                [t, _effort_at(ens, t, z)] for t in distinct
            ]
        except EffortUndefinedError:
            summary["effort"] = None
            summary["effort_curve"] = []
    table = ResultTable(
        config=cfg.echo(),
        rows=rows,
        summary=summary,
        curves=curves,
        records=records,
    )
    _write_outputs(table, cfg, output_dir)
    return table


def _effort_at(ens: EnsembleStats, n: int, z: float) -> int:
    from .effort import _runs_needed, cumulative_success

    return n * _runs_needed(cumulative_success(ens, n), z)


def _write_outputs(table: ResultTable, cfg: ExperimentConfig, output_dir=None):
    out_dir = Path(output_dir or os.environ.get(OUTPUT_DIR_ENV, "."))
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = Path(cfg.output_csv) if cfg.output_csv else out_dir / f"{cfg.label}.csv"
    json_path = Path(cfg.output_json) if cfg.output_json else out_dir / f"{cfg.label}.json"
    fieldnames = ["seed", "status", "best_fitness", "evaluations", "success", "wall_time_s"]
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fieldnames)
        writer.writeheader()
        for row in table.rows:
            writer.writerow(row)
    with open(json_path, "w") as fh:
        json.dump(table.to_json_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    table.csv_path = str(csv_path)
    table.json_path = str(json_path)


# ----------------------------------------------------------------- plots


PLOT_KINDS = ("best_curve", "pn_curve", "effort_curve")


def emit_plot_data(table: ResultTable, kind: str) -> str:
    """Two-column text, series separated by blank lines, '#' headers."""
    if kind not in PLOT_KINDS:
        raise ValidationError(f"plot kind must be one of {PLOT_KINDS}")
    if not table.rows:
        raise ValidationError("the table holds no runs to plot")
    lines: list[str] = []
    if kind == "best_curve":
        for series in table.curves:
            lines.append(f"# best-so-far, seed {series['seed']}")
            for n, f in series["best_curve"]:
                lines.append(f"{n} {f}")
            lines.append("")
    elif kind == "pn_curve":
        steps = table.summary.get("pn_curve")
        if steps is None:
            raise ValidationError("no success predicate was configured for this run")
        lines.append("# cumulative success probability")
        for n, p in steps:
            lines.append(f"{n} {p}")
        lines.append("")
    else:
        curve = table.summary.get("effort_curve")
        if curve is None:
            raise ValidationError("no success predicate was configured for this run")
        z = table.summary.get("confidence")
        lines.append(f"# computational effort at confidence {z}")
        for n, i in curve:
            lines.append(f"{n} {i}")
        lines.append("")
    return "\n".join(lines)


# ------------------------------------------------------------------ main


def _parse_complexity(text: str) -> ComplexityClass:
    base, _, param = text.partition(":")
    base = base.strip().lower()
    if base == "poly":
        return ComplexityClass("poly", float(param or 1))
    if base == "exp":
        return ComplexityClass("exp", float(param or 2))
    if base in ("tsp", "tsp_factorial"):
        return ComplexityClass("tsp_factorial")
    if base == "factorial":
        return ComplexityClass("factorial")
    raise ValidationError(
        f"unknown complexity class {text!r}; use poly:k, exp:base, tsp or factorial"
    )


def format_duration(seconds: float) -> str:
    if seconds != seconds or seconds == math.inf:
        return "beyond any horizon"
    if seconds < 1.0:
        return f"{seconds * 1e3:.4g} ms"
    if seconds < 60.0:
        return f"{seconds:.4g} s"
    if seconds < 3600.0:
        return f"{seconds / 60.0:.4g} minutes"
    if seconds < 86400.0:
        return f"{seconds / 3600.0:.4g} hours"
    if seconds < 365.0 * 86400.0:
        return f"{seconds / 86400.0:.4g} days"
    return f"{seconds / (365.0 * 86400.0):.4g} years"


def _cmd_run(args) -> int:
    cfg = ExperimentConfig.from_file(args.config)
    table = run_experiment(cfg, output_dir=args.output_dir)
    s = table.summary
    print(
        f"{cfg.algorithm} on {cfg.label}: {cfg.replicas} replicas, "
        f"best median {s['best_median']:.6g}, best min {s['best_min']:.6g}"
    )
    if "successes" in s:
        print(f"successes: {s['successes']}/{cfg.replicas} at threshold {s['success_threshold']:.6g}")
        if s.get("effort"):
            print(f"effort: n*={s['effort']['n_star']}, I={s['effort']['i_min']}")
    print(f"wrote {table.csv_path} and {table.json_path}")
    return 0


def _cmd_oracle(args) -> int:
    path = Path(args.instance)
    if path.suffix.lower() == ".tsp":
        inst = parse_tsp_file(path)
        if inst.n > ORACLE_TSP_LIMIT:
            raise ValidationError(
                f"exhaustive tour search is capped at {ORACLE_TSP_LIMIT} cities, got {inst.n}"
            )
        tour, length = brute_force_tour(inst, limit=ORACLE_TSP_LIMIT)
        answer = {
            "instance": inst.name,
            "kind": "tsp",
            "optimum": length,
            "tour": [int(c) for c in tour],
        }
    else:
        inst = parse_binpacking_file(path)
        if inst.n > ORACLE_PACKING_LIMIT:
            raise ValidationError(
                f"exhaustive packing search is capped at {ORACLE_PACKING_LIMIT} items, got {inst.n}"
            )
        bins, assignment = brute_force_packing(inst, limit=ORACLE_PACKING_LIMIT)
        answer = {
            "instance": inst.name,
            "kind": "binpacking",
            "optimum": int(bins),
            "assignment": [int(b) for b in assignment],
        }
    text = json.dumps(answer, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def _cmd_project(args) -> int:
    cls = _parse_complexity(args.cls)
    seconds = runtime_projection(cls, args.n, args.rate)
    ops = cls.operations(args.n)
    print(f"operations: {ops}")
    print(f"seconds at {args.rate:g} ops/s: {seconds:.6g} ({format_duration(seconds)})")
    return 0


def _cmd_plot(args) -> int:
    with open(args.input) as fh:
        table = ResultTable.from_json_dict(json.load(fh))
    text = emit_plot_data(table, args.kind)
    if args.out:
        Path(args.out).write_text(text + ("\n" if not text.endswith("\n") else ""))
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optimize",
        description="Stochastic optimization toolkit: run experiments, "
        "query exact oracles, project runtimes, export plot data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute an experiment config")
    p_run.add_argument("--config", required=True, help="JSON experiment config")
    p_run.add_argument(
        "--output-dir",
        default=None,
        help=f"output directory (default: ${OUTPUT_DIR_ENV} or the working directory)",
    )
    p_run.set_defaults(fn=_cmd_run)

    p_oracle = sub.add_parser("oracle", help="exhaustive optimum for a small instance")
    p_oracle.add_argument("--instance", required=True, help=".tsp or bin-packing file")
    p_oracle.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p_oracle.set_defaults(fn=_cmd_oracle)

    p_project = sub.add_parser("project", help="runtime projection for a complexity class")
    p_project.add_argument(
        "--class", dest="cls", required=True, help="poly:k, exp:base, tsp, factorial"
    )
    p_project.add_argument("--n", type=int, required=True, help="problem size")
    p_project.add_argument(
        "--rate", type=float, default=1e9, help="operations per second (default 1e9)"
    )
    p_project.set_defaults(fn=_cmd_project)

    p_plot = sub.add_parser("plot", help="columnar plot data from a JSON report")
    p_plot.add_argument("--input", required=True, help="report JSON from `optimize run`")
    p_plot.add_argument("--kind", required=True, choices=PLOT_KINDS)
    p_plot.add_argument("--out", default=None, help="write here instead of stdout")
    p_plot.set_defaults(fn=_cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (OptimizationError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
