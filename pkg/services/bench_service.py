# services/bench_service.py
from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import pandas as pd

from config.settings import settings
from models.graph_model import degeneracy_ordering
from models.sequence_model import validate_sequence
from services.bound_service import bound_recursion, transform_k_bound
from services.generator_service import GenSpec, gen_colouring, gen_graph, gen_instance
from services.list_recolor_service import transform_k, transform_list
from services.oracle_service import StateSpace, bfs_distance, is_connected
from services.planar_service import transform_planar_bipartite
from utils.errors import InputError, InvariantViolation, PreconditionError

MODES = ('degenerate', 'list', 'planar-bipartite')


@dataclass(frozen=True)
class BenchRow:
    """One cell of the bench matrix; enough to reproduce the run."""

    family: str
    n: int
    seed: int
    mode: str
    k: int
    d: int | None = None
    a: int | None = None
    strategy: str = 'forget'

    @property
    def descriptor(self) -> str:
        return f"{self.family}:n={self.n}:seed={self.seed}"

    def gen_spec(self) -> GenSpec:
        rows = cols = None
        if self.family == 'grid':
            rows = max(1, math.isqrt(self.n))
            cols = max(1, -(-self.n // rows))
        elif self.family == 'cylinder':
            # three rings of an even length
            rows, cols = 3, max(4, 2 * -(-self.n // 6))
        policy = 'random' if self.mode == 'list' else 'uniform'
        return GenSpec(self.family, n=self.n, d=self.d, seed=self.seed, k=self.k,
                       a=self.a if self.mode == 'list' else None,
                       rows=rows, cols=cols, policy=policy)


@dataclass
class BenchRecord:
    instance: str
    engine: str
    n: int
    k: int
    a: int | None
    d: int | None
    length: int | None
    bound: int | None
    per_vertex_max: int | None
    wall_time: float
    oracle_distance: int | None = None
    connected: bool | None = None
    status: str = 'pass'
    seed: int = 0
    error: str | None = None


@dataclass(frozen=True)
class BenchMatrix:
    families: tuple[str, ...]
    sizes: tuple[int, ...]
    seeds: tuple[int, ...]
    mode: str = 'degenerate'
    k: int = 3
    d: int | None = None
    a: int | None = None
    strategy: str = 'forget'
    rows: tuple[BenchRow, ...] = field(init=False, default=())

    def __post_init__(self):
        if self.mode not in MODES:
            raise PreconditionError(f"unknown bench mode {self.mode!r}")
        rows = tuple(
            BenchRow(family, n, seed, self.mode, self.k, self.d, self.a, self.strategy)
            for family in self.families for n in self.sizes for seed in self.seeds
        )
        object.__setattr__(self, 'rows', rows)


def _oracle_columns(inst, alpha, beta):
    cap = settings.bench_oracle_cap
    if cap <= 0 or StateSpace(inst).size > cap:
        return None, None
    distance = bfs_distance(inst, alpha, beta, cap)
    connected = is_connected(inst, cap)
    return (distance.value if distance.ok else None,
            connected.value if connected.ok else None)


def run_row(row: BenchRow) -> BenchRecord:
    """Generate, transform and check one instance. Invariant violations come
    back as a record with status 'violation' so they survive the process pool."""
    started = time.perf_counter()
    record = BenchRecord(row.descriptor, row.mode, row.n, row.k, row.a, row.d,
                         None, None, None, 0.0, seed=row.seed)
    try:
        gen = gen_graph(row.gen_spec())
        g = gen.graph
        record.n = g.n
        record.d = degeneracy_ordering(g).d
        inst = gen_instance(row.gen_spec(), g)
        alpha = gen_colouring(inst, 2 * row.seed + 1)
        beta = gen_colouring(inst, 2 * row.seed + 2)
        if row.mode == 'degenerate':
            seq = transform_k(g, row.k, alpha, beta, row.strategy)
            record.bound = transform_k_bound(g.n, row.k, record.d, row.strategy)
        elif row.mode == 'list':
            record.a = inst.a
            seq = transform_list(inst, alpha, beta)
            record.bound = bound_recursion(g.n, inst.k, inst.a) if g.n else 0
        else:
            if gen.embedding is None:
                raise PreconditionError(f"family {row.family} has no plane embedding")
            seq = transform_planar_bipartite(gen.embedding, alpha, beta)
            record.bound = 4 * g.n * g.n
        record.length = seq.total_length
        record.per_vertex_max = seq.max_per_vertex()
        report = validate_sequence(inst, alpha, seq, beta)
        if not report.ok or record.length > record.bound:
            record.status = 'fail'
        record.oracle_distance, record.connected = _oracle_columns(inst, alpha, beta)
    except InvariantViolation as e:
        record.status = 'violation'
        record.error = str(e)
    except (InputError, PreconditionError) as e:
        record.status = 'skipped'
        record.error = str(e)
    record.wall_time = round(time.perf_counter() - started, 6)
    return record


def run_matrix(matrix: BenchMatrix, jobs: int | None = None) -> list[BenchRecord]:
    """Run every row, in parallel up to `jobs` processes.

    The first invariant violation aborts the run with the row's reproducer.
    """
    jobs = settings.jobs if jobs is None else jobs
    if jobs > 1 and len(matrix.rows) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            records = list(executor.map(run_row, matrix.rows))
    else:
        records = [run_row(row) for row in matrix.rows]
    for row, record in zip(matrix.rows, records):
        if record.status == 'violation':
            raise InvariantViolation(
                f"{record.error} (reproduce with --families {row.family} --sizes {row.n} "
                f"--seeds {row.seed} --mode {row.mode} --colors {row.k})"
            )
    return records


def records_frame(records: list[BenchRecord]) -> pd.DataFrame:
    columns = list(BenchRecord.__dataclass_fields__)
    return pd.DataFrame([asdict(r) for r in records], columns=columns)


def save_records(records: list[BenchRecord], path: str) -> pd.DataFrame:
    """Persist as CSV, or as JSON records when the path ends in .json."""
    frame = records_frame(records)
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    if path.endswith('.json'):
        frame.to_json(path, orient='records', indent=2)
    else:
        frame.to_csv(path, index=False)
    return frame


def summarize(records: list[BenchRecord]) -> dict:
    frame = records_frame(records)
    counts = frame['status'].value_counts().to_dict() if len(frame) else {}
    return {
        'rows': len(frame),
        'passed': int(counts.get('pass', 0)),
        'failed': int(counts.get('fail', 0)),
        'skipped': int(counts.get('skipped', 0)),
        'max_length': int(frame['length'].max()) if frame['length'].notna().any() else 0,
    }
