"""Benchmark suites: run the GA over many instances and summarise the runs.

A suite file is line oriented; ``#`` starts a comment. Global lines set GA
options for the lines after them::

    sigma 2000
    params 5,33,4,128,30,0
    pop 200
    init-len 1
    group instance            # or: group s

Instance lines name a source and how often to run it::

    instance gen n=10 la=128 lx=16 ly=16 id=I1 repeat 10 seed 1
    instance gen n=10 la_max=750 xy_max=150 smin=15 smax=30 count=10 seed 100
    instance path/to/instance.txt repeat 5 seed 0

``gen`` builds ``count`` instances (default 1) with instance seeds ``seed``,
``seed+1``, ...; each is solved ``repeat`` times (default 1) with GA seeds
``seed``, ``seed+1``, ... . With ``la_max``/``xy_max`` the target lengths are
drawn uniformly from [1, max], redrawn until s falls in ``[smin, smax)``.
"""
from __future__ import annotations

import csv
import io
import math
import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional

from .dcsp import is_solution, load_instance
from .ga import DEFAULT_PARAMS, GaConfig, ParameterSet, run
from .instances import InstanceSpec, generate
from .words import reduced_length

S_WIDTH = 15


class SuiteFormatError(ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class RunRecord:
    instance_id: str
    n: int
    l_a: int
    l_x: Optional[int]
    l_y: Optional[int]
    s: Optional[float]
    seed: int
    success: bool
    generations: int
    time_ms: float
    final_cost: int


@dataclass(frozen=True)
class SummaryStats:
    group: str
    runs: int
    successes: int
    mean_g: float
    mean_t: float
    stddev_g: float
    sec_per_gen: float


@dataclass(frozen=True)
class Job:
    instance_id: str
    source: object  # InstanceSpec or a file path
    params: ParameterSet
    config: GaConfig


@dataclass
class Suite:
    jobs: list
    group: str = "instance"


def _kv(tokens, lineno):
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep:
            raise SuiteFormatError(f"expected key=value, got {tok!r}", lineno)
        out[key] = value
    return out


def _draw_lengths(opts, seed, lineno):
    rng = random.Random(f"lengths-{seed}")
    la_max, xy_max = int(opts.pop("la_max")), int(opts.pop("xy_max", 150))
    smin = float(opts.pop("smin", 0))
    smax = float(opts.pop("smax", math.inf))
    if smin > xy_max:
        raise SuiteFormatError("s interval unreachable", lineno)
    for _ in range(100_000):
        lx, ly = rng.randint(1, xy_max), rng.randint(1, xy_max)
        if smin <= (lx + ly) / 2 < smax:
            return rng.randint(1, la_max), lx, ly
    raise SuiteFormatError("could not draw lengths inside the s interval", lineno)


def parse_suite(text: str, base: Path = Path(".")) -> Suite:
    counts, pop = DEFAULT_PARAMS.counts, None
    sigma, init_len = GaConfig().sigma, 1
    group = "instance"
    jobs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        head, rest = tokens[0], tokens[1:]
        try:
            if head == "sigma":
                sigma = int(rest[0])
            elif head == "params":
                counts = ParameterSet.parse(rest[0]).counts
            elif head == "pop":
                pop = int(rest[0])
            elif head == "init-len":
                init_len = int(rest[0])
            elif head == "group":
                if rest[0] not in ("instance", "s"):
                    raise SuiteFormatError(f"unknown grouping {rest[0]!r}", lineno)
                group = rest[0]
            elif head == "instance":
                # pop and params may come in either order; check them together here
                params = ParameterSet(sum(counts) if pop is None else pop, counts)
                jobs.extend(_instance_line(rest, params, sigma, init_len, base, lineno))
            else:
                raise SuiteFormatError(f"unknown directive {head!r}", lineno)
        except (IndexError, ValueError) as exc:
            if isinstance(exc, SuiteFormatError):
                raise
            raise SuiteFormatError(str(exc) or f"malformed {head!r} line", lineno) from None
    return Suite(jobs, group)


def _instance_line(tokens, params, sigma, init_len, base, lineno):
    if not tokens:
        raise SuiteFormatError("instance needs a source", lineno)
    source, tokens = tokens[0], tokens[1:]
    repeat, seed = 1, 0
    rest = []
    it = iter(tokens)
    for tok in it:
        if tok == "repeat":
            repeat = int(next(it))
        elif tok == "seed":
            seed = int(next(it))
        else:
            rest.append(tok)
    opts = _kv(rest, lineno)
    jobs = []
    if source == "gen":
        count = int(opts.pop("count", 1))
        n = int(opts.pop("n"))
        prefix = opts.pop("id", None)
        for k in range(count):
            inst_seed = seed + k
            if "la_max" in opts:
                la, lx, ly = _draw_lengths(dict(opts), inst_seed, lineno)
            else:
                la, lx, ly = int(opts["la"]), int(opts["lx"]), int(opts["ly"])
            spec = InstanceSpec(n, la, lx, ly, seed=inst_seed)
            name = f"{prefix or f'n{n}'}-{inst_seed}" if count > 1 or not prefix else prefix
            for r in range(repeat):
                cfg = GaConfig(sigma=sigma, initial_length=init_len, seed=seed + r)
                jobs.append(Job(name, spec, params, cfg))
        unknown = set(opts) - {"la", "lx", "ly", "la_max", "xy_max", "smin", "smax"}
    else:
        path = Path(source)
        path = path if path.is_absolute() else base / path
        name = opts.pop("id", path.stem)
        unknown = set(opts)
        for r in range(repeat):
            cfg = GaConfig(sigma=sigma, initial_length=init_len, seed=seed + r)
            jobs.append(Job(name, str(path), params, cfg))
    if unknown:
        raise SuiteFormatError(f"unknown options {sorted(unknown)}", lineno)
    return jobs


def run_job(job: Job) -> RunRecord:
    if isinstance(job.source, InstanceSpec):
        gen = generate(job.source)
        inst, witness = gen.instance, gen.witness
    else:
        inst, witness = load_instance(job.source)
    spec = inst.spec
    l_x = l_y = s = None
    if witness is not None:
        l_x, l_y = reduced_length(witness.chi, spec), reduced_length(witness.zeta, spec)
        s = (l_x + l_y) / 2
    t0 = time.perf_counter()
    result = run(inst, job.params, job.config)
    elapsed = time.perf_counter() - t0
    if result.success and not is_solution(inst, result.solution):
        raise AssertionError(f"unverified solution on {job.instance_id}")
    return RunRecord(job.instance_id, spec.rank, reduced_length(inst.a, spec), l_x, l_y, s,
                     job.config.seed, result.success, result.generations,
                     round(elapsed * 1000, 3), result.final_cost)


def run_suite(suite: Suite, jobs: int = 1, progress=None) -> list:
    """Run every job; records come back sorted by (instance_id, seed)."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(run_job, suite.jobs))
    else:
        records = []
        for job in suite.jobs:
            records.append(run_job(job))
            if progress is not None:
                progress(records[-1])
    return sorted(records, key=lambda r: (r.instance_id, r.seed))


# -- summaries -------------------------------------------------------------

def s_interval(s: float, width: int = S_WIDTH) -> tuple:
    lo = int(s // width) * width
    return lo, lo + width


def summarize(records, grouping: str = "instance") -> list:
    """Means and sample deviation of generation counts over successful runs.

    ``grouping`` is ``"instance"`` or ``"s"``; s groups are keyed like
    ``n10:15-30`` for rank 10 and s in [15, 30).
    """
    groups = {}
    for r in records:
        if grouping == "instance":
            key = r.instance_id
        elif r.s is None:
            key = f"n{r.n}:unknown"
        else:
            # ranks are never pooled: one row of intervals per rank
            lo, hi = s_interval(r.s)
            key = f"n{r.n}:{lo}-{hi}"
        groups.setdefault(key, []).append(r)

    def sort_key(k):
        if grouping != "s":
            return (k,)
        rank, _, interval = k.partition(":")
        lo = interval.split("-")[0]
        return (int(rank[1:]), 0 if lo.isdigit() else 1, int(lo) if lo.isdigit() else 0)

    out = []
    for key in sorted(groups, key=sort_key):
        rs = groups[key]
        ok = [r for r in rs if r.success]
        if ok:
            gs = [r.generations for r in ok]
            mean_g = statistics.fmean(gs)
            mean_t = statistics.fmean(r.time_ms / 1000 for r in ok)
            sd = statistics.stdev(gs) if len(gs) > 1 else 0.0
            spg = mean_t / mean_g if mean_g else 0.0
        else:
            mean_g = mean_t = sd = spg = math.nan
        out.append(SummaryStats(key, len(rs), len(ok), mean_g, mean_t, sd, spg))
    return out


def format_summary(stats) -> str:
    lines = [f"{'group':>14} {'runs':>5} {'ok':>4} {'g_mean':>9} {'t_mean':>9} {'sd_g':>9} {'sec/gen':>8}"]
    for s in stats:
        lines.append(f"{s.group:>14} {s.runs:>5} {s.successes:>4} {s.mean_g:>9.1f} "
                     f"{s.mean_t:>9.2f} {s.stddev_g:>9.1f} {s.sec_per_gen:>8.4f}")
    return "\n".join(lines)


# -- CSV -------------------------------------------------------------------

CSV_COLUMNS = [f.name for f in fields(RunRecord)]
CSV_NOTE = "# summaries use the sample (n-1) standard deviation of generation counts"


def records_to_csv(records) -> str:
    buf = io.StringIO()
    buf.write(CSV_NOTE + "\n")
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        row = asdict(r)
        row = {k: ("" if v is None else v) for k, v in row.items()}
        writer.writerow(row)
    return buf.getvalue()


def _opt(cast):
    return lambda v: None if v == "" else cast(v)


_CASTS = {
    "instance_id": str, "n": int, "l_a": int, "l_x": _opt(int), "l_y": _opt(int),
    "s": _opt(float), "seed": int, "success": lambda v: v == "True",
    "generations": int, "time_ms": float, "final_cost": int,
}


def records_from_csv(text: str) -> list:
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.DictReader(lines)
    return [RunRecord(**{k: _CASTS[k](v) for k, v in row.items()}) for row in reader]


def write_records(path, records) -> None:
    Path(path).write_text(records_to_csv(records))


def read_records(path) -> list:
    return records_from_csv(Path(path).read_text())
