"""Run orchestration: graph ingestion, cached lambda sweeps, bound checks and report rendering."""

from __future__ import annotations

import csv
import io
import json
import logging
import random
import sys
from dataclasses import dataclass, field
from multiprocessing import Pool

from .bounds import NONE, classify_sum_one, evaluate, is_lambda_extremal, reports_to_csv
from .cache import CacheEntry, LambdaCache
from .canon import canonical_form
from .enumeration import MAX_ENUMERATION_ORDER, enumerate_graphs
from .generators import FamilySpec, class_membership
from .graph import Graph, UnsupportedSizeError, complement, encode_graph6, is_connected, parse_graph6
from .packing import DEFAULT_LAMBDA_CAP, TreePacking, lambda_k, verify_packing
from .spanning import DEFAULT_PARTITION_CAP, nwt_partition_bound, spanning_tree_packing

log = logging.getLogger(__name__)

MODES = ("lambda", "stp", "ng-check", "classify", "enumerate", "gen")
FORMATS = ("json", "csv", "text")


class ConfigError(ValueError):
    """Invalid run configuration (usage error)."""


@dataclass
class RunConfig:
    mode: str
    graphs: tuple[str, ...] = ()
    input_path: str | None = None
    family: str | None = None
    n: int | None = None
    connected: bool = False
    sample: int = 0
    k_range: tuple[int, int] | None = None
    cap: int = 10
    workers: int = 1
    cache_path: str | None = None
    fmt: str | None = None
    seed: int = 0

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.fmt is not None and self.fmt not in FORMATS:
            raise ConfigError(f"unknown format {self.fmt!r}")
        if not 1 <= self.cap <= DEFAULT_LAMBDA_CAP:
            raise ConfigError(f"cap must lie in 1..{DEFAULT_LAMBDA_CAP}")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if self.k_range is not None:
            a, b = self.k_range
            if a < 2 or b < a:
                raise ConfigError(f"k range {a}..{b} must satisfy 2 <= a <= b")
        if self.n is not None and self.n < 1:
            raise ConfigError("n must be positive")
        if self.mode == "enumerate" and self.n is None:
            raise ConfigError("enumerate needs --n")
        if self.mode == "gen" and self.family is None:
            raise ConfigError("gen needs --family")
        if self.sample and self.n is None:
            raise ConfigError("sampling needs --n")
        if self.n is not None and self.n > MAX_ENUMERATION_ORDER and not self.sample \
                and self.mode != "gen":
            raise UnsupportedSizeError(f"enumeration supports n <= {MAX_ENUMERATION_ORDER}")

    @property
    def format(self) -> str:
        if self.fmt:
            return self.fmt
        return "text" if self.mode in ("enumerate", "gen") else "json"


@dataclass
class Report:
    mode: str
    rows: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    bound_reports: list = field(default_factory=list)

    @property
    def counterexamples(self) -> int:
        return int(self.summary.get("counterexamples", 0))


# graph sources -------------------------------------------------------------------

def _read_lines(path: str) -> list[str]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    return [line.strip() for line in text.splitlines() if line.strip()]


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    edges = frozenset((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p)
    return Graph(n, edges)


def load_graphs(cfg: RunConfig) -> list[tuple[str, Graph]]:
    out: list[tuple[str, Graph]] = []
    for text in cfg.graphs:
        out.append((text, parse_graph6(text)))
    if cfg.input_path is not None:
        for line in _read_lines(cfg.input_path):
            out.append((line, parse_graph6(line)))
    if cfg.family is not None:
        g = FamilySpec.parse(cfg.family).build()
        out.append((encode_graph6(g), g))
    if cfg.n is not None:
        if cfg.sample:
            rng = random.Random(cfg.seed)
            for _ in range(cfg.sample):
                g = random_graph(cfg.n, rng)
                out.append((encode_graph6(g), g))
        else:
            for g in enumerate_graphs(cfg.n, cfg.connected):
                out.append((encode_graph6(g), g))
    if cfg.connected:
        out = [(label, g) for label, g in out if is_connected(g)]
    if not out:
        raise ConfigError("no input graphs; use positional graph6, --input, --family or --n")
    return out


def k_values(cfg: RunConfig, n: int, low: int) -> list[int]:
    a, b = cfg.k_range if cfg.k_range is not None else (low, n)
    return list(range(max(a, low), min(b, n) + 1))


# lambda engine -----------------------------------------------------------------

def _solve(task: tuple[str, int, int]) -> CacheEntry:
    key, k, cap = task
    h = parse_graph6(key)
    res = lambda_k(h, k, cap=cap)
    if res.certificate is not None and not verify_packing(h, res.certificate):
        raise AssertionError(f"solver produced an invalid certificate for {key} k={k}")
    return CacheEntry.build(key, k, res.value, res.witness, res.certificate)


class LambdaEngine:
    """Computes ``lambda_k`` on canonical forms, consulting and filling the cache.

    Workers only solve; this object is the single writer of the cache.
    """

    def __init__(self, cache: LambdaCache, workers: int = 1, cap: int = 10):
        self.cache = cache
        self.workers = workers
        self.cap = cap
        self.hits = 0
        self.solved = 0

    def solve_all(self, tasks: list[tuple[str, int]]) -> None:
        todo = sorted({(key, k) for key, k in tasks if self.cache.get(key, k) is None})
        self.hits += len(set(tasks)) - len(todo)
        jobs = [(key, k, self.cap) for key, k in todo]
        if self.workers > 1 and len(jobs) > 1:
            with Pool(self.workers) as pool:
                results = pool.map(_solve, jobs, chunksize=max(1, len(jobs) // (4 * self.workers)))
        else:
            results = [_solve(job) for job in jobs]
        for entry in results:
            self.cache.put(entry)
        self.solved += len(results)

    def get(self, key: str, k: int) -> CacheEntry:
        entry = self.cache.get(key, k)
        if entry is None:
            self.solve_all([(key, k)])
            entry = self.cache.get(key, k)
        return entry


@dataclass
class Canon:
    graph: Graph
    key: str
    inverse: list[int]  # canonical label -> input vertex


def canonize(g: Graph) -> Canon:
    h, key, perm = canonical_form(g, max(10, g.n))
    inv = [0] * g.n
    for v, c in enumerate(perm):
        inv[c] = v
    return Canon(h, key, inv)


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise UnsupportedSizeError(f"graph of order {g.n} exceeds --cap {cap}")


# modes -------------------------------------------------------------------------

def _mode_lambda(cfg, graphs, engine) -> Report:
    canon = []
    tasks = []
    for label, g in graphs:
        _check_cap(g, cfg.cap)
        c = canonize(g)
        canon.append(c)
        tasks += [(c.key, k) for k in k_values(cfg, g.n, 2)]
    engine.solve_all(tasks)
    rows = []
    bad = 0
    for (label, g), c in zip(graphs, canon):
        for k in k_values(cfg, g.n, 2):
            entry = engine.get(c.key, k)
            cert = entry.packing()
            cert_in = cert.relabel(c.inverse) if cert is not None else TreePacking((), ())
            ok = bool(verify_packing(g, cert_in)) and len(cert_in) == entry.value
            bad += not ok
            rows.append({"graph": label, "key": c.key, "n": g.n, "m": g.m, "k": k,
                         "lambda": entry.value,
                         "witness": sorted(c.inverse[v] for v in entry.witness),
                         "certificate": cert_in.to_json(), "verified": ok})
    summary = {"rows": len(rows), "counterexamples": bad}
    return Report("lambda", rows, summary)


def _mode_stp(cfg, graphs, engine) -> Report:
    rows = []
    bad = 0
    for label, g in graphs:
        p = spanning_tree_packing(g)
        value = len(p)
        ok = bool(verify_packing(g, p))
        partition = nwt_partition_bound(g) if 2 <= g.n <= DEFAULT_PARTITION_CAP else None
        if partition is not None and partition != value:
            ok = False
        bad += not ok
        rows.append({"graph": label, "n": g.n, "m": g.m, "stp": value,
                     "partition_bound": partition, "certificate": p.to_json(), "verified": ok})
    return Report("stp", rows, {"rows": len(rows), "counterexamples": bad})


def _mode_ng_check(cfg, graphs, engine) -> Report:
    plan = []
    tasks = []
    for label, g in graphs:
        _check_cap(g, cfg.cap)
        c, cc = canonize(g), canonize(complement(g))
        ks = k_values(cfg, g.n, 3)
        plan.append((label, g, c, cc, ks))
        for k in ks:
            tasks += [(c.key, k), (cc.key, k)]
    engine.solve_all(tasks)
    reports = []
    for label, g, c, cc, ks in plan:
        for k in ks:
            reports.append(evaluate(g, k, engine.get(c.key, k).value, engine.get(cc.key, k).value))
    failing = [r for r in reports if not r.ok]
    summary = {"checked": len(reports), "passed": len(reports) - len(failing),
               "counterexamples": len(failing),
               "statements": sum(len(r.entries) for r in reports),
               "failed_statements": sorted({e.statement for r in failing for e in r.failures})}
    rows = [r.to_dict() for r in reports]
    return Report("ng-check", rows, summary, reports)


def _mode_classify(cfg, graphs, engine) -> Report:
    rows = []
    for label, g in graphs:
        gc = complement(g)
        for k in k_values(cfg, g.n, 3):
            rows.append({"graph": label, "n": g.n, "m": g.m, "k": k,
                         "sum_one_g": classify_sum_one(g, k),
                         "sum_one_complement": classify_sum_one(gc, k),
                         "extremal": is_connected(g) and is_lambda_extremal(g, k),
                         "classes": [c for c in (1, 2, 3, 4) if class_membership(g, c)]})
    fired = sum(1 for r in rows if (r["sum_one_g"], r["sum_one_complement"]) != (NONE, NONE))
    return Report("classify", rows, {"rows": len(rows), "sum_one_predicted": fired,
                                     "counterexamples": 0})


def _mode_graphs(cfg, graphs, engine) -> Report:
    rows = [{"graph": encode_graph6(g), "n": g.n, "m": g.m} for _, g in graphs]
    return Report(cfg.mode, rows, {"rows": len(rows), "counterexamples": 0})


_DISPATCH = {"lambda": _mode_lambda, "stp": _mode_stp, "ng-check": _mode_ng_check,
             "classify": _mode_classify, "enumerate": _mode_graphs, "gen": _mode_graphs}


def execute(cfg: RunConfig, cache: LambdaCache | None = None) -> Report:
    """Run ``cfg`` and return the report; raises on configuration or input errors."""
    cfg.validate()
    graphs = load_graphs(cfg)
    if cache is None:
        cache = LambdaCache(cfg.cache_path)
    engine = LambdaEngine(cache, cfg.workers, cfg.cap)
    report = _DISPATCH[cfg.mode](cfg, graphs, engine)
    log.info("cache hits %d, solved %d", engine.hits, engine.solved)
    return report


def run(cfg: RunConfig, out=None, err=None) -> tuple[Report | None, int]:
    """Execute, render to ``out`` and return ``(report, exit code)``.

    Exit code 0: no counterexamples; 1: counterexamples found; 2: usage or I/O error.
    """
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        report = execute(cfg)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return None, 2
    out.write(render(report, cfg.format))
    return report, 1 if report.counterexamples else 0


# rendering -----------------------------------------------------------------------

def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"mode": report.mode, "rows": report.rows, "summary": report.summary},
                          sort_keys=True, indent=1) + "\n"
    if fmt == "csv":
        if report.mode == "ng-check":
            return reports_to_csv(report.bound_reports)
        return _rows_csv(report.rows)
    return _render_text(report)


def _rows_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        fields = list(rows[0])
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        for row in rows:
            w.writerow([json.dumps(row[f], sort_keys=True) if isinstance(row[f], (list, dict))
                        else row[f] for f in fields])
    return buf.getvalue()


def _render_text(report: Report) -> str:
    lines = []
    if report.mode in ("enumerate", "gen"):
        lines = [row["graph"] for row in report.rows]
        return "\n".join(lines) + "\n"
    for row in report.rows:
        if report.mode == "lambda":
            lines.append(f"{row['graph']} k={row['k']} lambda={row['lambda']} "
                         f"witness={row['witness']} verified={row['verified']}")
        elif report.mode == "stp":
            lines.append(f"{row['graph']} stp={row['stp']} partition={row['partition_bound']} "
                         f"verified={row['verified']}")
        elif report.mode == "ng-check":
            status = "ok" if row["ok"] else "FAIL " + ",".join(
                e["statement"] for e in row["entries"] if not e["ok"])
            lines.append(f"{row['key']} k={row['k']} lambda={row['lambda_g']}+{row['lambda_gc']} "
                         f"{status}")
        else:
            lines.append(f"{row['graph']} k={row['k']} sum_one={row['sum_one_g']}/"
                         f"{row['sum_one_complement']} extremal={row['extremal']} "
                         f"classes={row['classes']}")
    lines.append("summary " + json.dumps(report.summary, sort_keys=True))
    return "\n".join(lines) + "\n"
