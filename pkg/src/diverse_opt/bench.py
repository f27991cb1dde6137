"""Grid and file benchmarks comparing the diverse solver with the Yen baseline.

Baseline runtimes come from a pure-Python Yen implementation and say
little about fast k-shortest-path enumerators; compare the diversity
columns, not the time columns.
"""

from __future__ import annotations

import csv
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, TextIO

from .baseline import yen_k_shortest
from .dag import build_shortest_path_dag, count_paths
from .diversity import diversity_pairwise
from .errors import InfeasibleError
from .graph import generate_grid, parse_dimacs_gr, parse_snap_edgelist
from .paths import diverse_shortest_paths, shortest_path_dag

log = logging.getLogger(__name__)

CSV_FIELDS = ["instance", "p_or_file", "k", "algo", "diversity", "time_ms", "paths", "avg_len"]
COUNT_CAP = 2**63 - 1
SKIP = "skip"


@dataclass(frozen=True)
class BenchRow:
    instance: str
    p_or_file: str
    k: int
    algo: str  # "ours" or "yen"
    diversity: int | None  # None marks a skipped (infeasible) run
    time_ms: float
    paths: int  # number of shortest s-t paths, saturated at 2^63 - 1
    avg_len: float  # mean length of the returned paths

    def as_csv(self, timing: bool = True) -> list[str]:
        return [
            self.instance,
            self.p_or_file,
            str(self.k),
            self.algo,
            SKIP if self.diversity is None else str(self.diversity),
            f"{self.time_ms:.3f}" if timing else "0",
            str(self.paths),
            f"{self.avg_len:.2f}",
        ]


@dataclass
class BenchConfig:
    k_list: list[int]
    grid_range: tuple[int, int, int] | None = None  # inclusive (start, stop, step)
    files: list[tuple[str, str]] = field(default_factory=list)  # (path, "dimacs" | "snap")
    n_pairs: int = 400
    seed: int = 2021
    round100: bool = False
    min_hops: int = 3
    count_factor: int = 3
    workers: int = 1
    timing: bool = True
    backend: str | None = None

    def __post_init__(self):
        if not self.k_list:
            raise ValueError("k_list must not be empty")
        if any(k < 1 for k in self.k_list):
            raise ValueError("every k must be >= 1")
        if self.grid_range is not None:
            a, b, step = self.grid_range
            if a < 2 or b < a or step < 1:
                raise ValueError(f"bad grid range {self.grid_range}")


def parse_grid_range(text: str) -> tuple[int, int, int]:
    """``"40:140:10"`` -> ``(40, 140, 10)``; the stop value is included."""
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"grid range must be a:b or a:b:step, got {text!r}")
    vals = [int(x) for x in parts]
    return (vals[0], vals[1], vals[2] if len(vals) == 3 else 1)


@dataclass
class _Task:
    instance: str
    label: str
    graph: object
    s: int
    t: int
    k: int
    paths: int


def _run_task(task: _Task, backend) -> list[BenchRow]:
    clock = time.perf_counter
    w = task.graph.weights.tolist()
    rows = []
    t0 = clock()
    try:
        ours = diverse_shortest_paths(task.graph, task.s, task.t, task.k, backend=backend)
    except InfeasibleError:
        rows.append(BenchRow(task.instance, task.label, task.k, "ours", None, 0.0, task.paths, 0.0))
    else:
        elapsed = (clock() - t0) * 1e3
        log.info("%s k=%d phases %s", task.instance, task.k,
                 {k: round(v * 1e3, 3) for k, v in ours.timings.items()})
        rows.append(BenchRow(task.instance, task.label, task.k, "ours", ours.diversity,
                             elapsed, task.paths, float(ours.length)))
    t0 = clock()
    try:
        base = yen_k_shortest(task.graph, task.s, task.t, task.k)
    except InfeasibleError:
        rows.append(BenchRow(task.instance, task.label, task.k, "yen", None, 0.0, task.paths, 0.0))
    else:
        elapsed = (clock() - t0) * 1e3
        div = diversity_pairwise([p.edges for p in base], w)
        avg = sum(p.length for p in base) / len(base)
        rows.append(BenchRow(task.instance, task.label, task.k, "yen", div, elapsed,
                             task.paths, avg))
    return rows


def _grid_tasks(config: BenchConfig) -> Iterable[_Task]:
    a, b, step = config.grid_range
    for p in range(a, b + 1, step):
        g, s, t = generate_grid(p)
        count, _ = count_paths(shortest_path_dag(g, s, t, config.backend))
        for k in config.k_list:
            yield _Task(f"grid-p{p}", str(p), g, s, t, k, min(count, COUNT_CAP))


def load_graph(path: str, fmt: str, round100: bool = False):
    with open(path) as fh:
        if fmt == "dimacs":
            return parse_dimacs_gr(fh, round100=round100)
        if fmt == "snap":
            return parse_snap_edgelist(fh)
    raise ValueError(f"unknown file format {fmt!r}")


def sample_pairs(g, n_pairs, rng, *, min_hops=3, min_count=30, max_attempts=None, backend=None):
    """Random s-t pairs whose shortest paths are numerous and long enough.

    A pair qualifies when it has at least ``min_count`` shortest paths whose
    mean arc count is at least ``min_hops``.  Returns ``(s, t, count)`` triples.
    """
    max_attempts = 50 * n_pairs if max_attempts is None else max_attempts
    out = []
    for _ in range(max_attempts):
        if len(out) == n_pairs or g.n < 2:
            break
        s, t = rng.randrange(g.n), rng.randrange(g.n)
        if s == t:
            continue
        try:
            dag = build_shortest_path_dag(g, s, t, backend)
        except InfeasibleError:
            continue
        count, mean_hops = count_paths(dag)
        if count >= min_count and mean_hops >= min_hops:
            out.append((s, t, count))
    return out


def _file_tasks(config: BenchConfig) -> Iterable[_Task]:
    rng = random.Random(config.seed)
    for path, fmt in config.files:
        g = load_graph(path, fmt, config.round100)
        name = Path(path).name
        pairs = sample_pairs(
            g, config.n_pairs, rng,
            min_hops=config.min_hops,
            min_count=config.count_factor * max(config.k_list),
            backend=config.backend,
        )
        if len(pairs) < config.n_pairs:
            log.warning("%s: only %d of %d pairs passed the filters", name, len(pairs),
                        config.n_pairs)
        for idx, (s, t, count) in enumerate(pairs):
            for k in config.k_list:
                yield _Task(f"{name}#{idx}:{s}->{t}", name, g, s, t, k, min(count, COUNT_CAP))


def run_benchmark(config: BenchConfig) -> list[BenchRow]:
    tasks = []
    if config.grid_range is not None:
        tasks.extend(_grid_tasks(config))
    tasks.extend(_file_tasks(config))
    if config.workers > 1:
        with ThreadPoolExecutor(config.workers) as pool:
            results = list(pool.map(lambda task: _run_task(task, config.backend), tasks))
    else:
        results = [_run_task(task, config.backend) for task in tasks]
    rows = [row for batch in results for row in batch]
    if not config.timing:
        rows = [BenchRow(**{**r.__dict__, "time_ms": 0.0}) for r in rows]
    return rows


def write_csv(rows: Iterable[BenchRow], out: TextIO, timing: bool = True) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in rows:
        writer.writerow(row.as_csv(timing))


def write_plot_data(rows: Iterable[BenchRow], directory: str | Path) -> list[Path]:
    """Two-column ``p value`` files per (algo, k) series for grid rows."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    series: dict[tuple[str, str, int], list[tuple[int, float]]] = {}
    for r in rows:
        if not r.instance.startswith("grid-") or r.diversity is None:
            continue
        p = int(r.p_or_file)
        series.setdefault(("time", r.algo, r.k), []).append((p, r.time_ms))
        series.setdefault(("diversity", r.algo, r.k), []).append((p, r.diversity))
    written = []
    for (what, algo, k), points in sorted(series.items()):
        path = directory / f"{what}_{algo}_k{k}.dat"
        with open(path, "w") as fh:
            fh.write(f"# p {what} ({algo}, k={k})\n")
            for p, v in sorted(points):
                fh.write(f"{p} {v:.3f}\n" if what == "time" else f"{p} {v}\n")
        written.append(path)
    return written
