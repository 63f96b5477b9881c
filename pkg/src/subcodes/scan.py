"""Exhaustive labeling scans, record persistence and summaries.

A scan walks the rotation-orbit representatives of one tiling's labelings.
For each one it builds the edge measurements on the periodic lattice,
constructs and optimizes the subsystem code, and logs a record when some
logical qubit reaches ``min_distance``.  Walker ``w`` of ``W`` takes the
ordinals congruent to ``w`` modulo ``W``.  Shards merge by ordinal.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .codegen import compute_subsystem_code
from .lattice.labeling import (
    labeling_from_ordinal,
    labeling_scheme,
    labeling_to_measurements,
    orbit_representatives,
)
from .lattice.periodic import PeriodicLattice, build_lattice
from .lattice.tiling import load_tiling
from .optimize import optimize_logical_qubits

__all__ = [
    "ScanConfig",
    "ScanRecord",
    "ScanStats",
    "evaluate_labeling",
    "run_scan",
    "scan_to_file",
    "scan_all_walkers",
    "merge_shards",
    "read_records",
    "summarize",
    "format_summary",
    "Summary",
    "shard_path",
]

RECORD_FIELDS = (
    "tiling",
    "radius",
    "num_qubits",
    "ordinal",
    "labeling",
    "n_stab",
    "n_gauge",
    "n_logical",
    "distances",
    "distance_counts",
    "censored",
)


@dataclass(frozen=True)
class ScanConfig:
    tiling: str
    radius: int
    min_distance: int = 3
    walkers: int = 1
    walker_id: int = 0
    out: str | None = None
    cutoff: int | None = None
    allow_excluded: bool = False

    def __post_init__(self):
        if self.walkers < 1 or not 0 <= self.walker_id < self.walkers:
            raise ValueError("need 0 <= walker_id < walkers")
        if self.min_distance < 1:
            raise ValueError("min_distance must be at least 1")
        if self.cutoff is not None and self.cutoff < 1:
            raise ValueError("cutoff must be positive")

    def validate(self) -> PeriodicLattice:
        """Resolve the tiling and build the lattice, rejecting bad configs early."""
        spec = load_tiling(self.tiling)
        if not spec.scan_by_default and not self.allow_excluded:
            raise ValueError(f"{spec.name} is not scanned by default; pass allow_excluded to force it")
        return build_lattice(spec.name, self.radius)


@dataclass(frozen=True)
class ScanRecord:
    tiling: str
    radius: int
    num_qubits: int
    ordinal: int
    labeling: str
    n_stab: int
    n_gauge: int
    n_logical: int
    distances: tuple[int, ...]
    censored: int = 0

    @property
    def distance_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self.distances).items()))

    def to_json(self) -> str:
        doc = {
            "tiling": self.tiling,
            "radius": self.radius,
            "num_qubits": self.num_qubits,
            "ordinal": self.ordinal,
            "labeling": self.labeling,
            "n_stab": self.n_stab,
            "n_gauge": self.n_gauge,
            "n_logical": self.n_logical,
            "distances": list(self.distances),
            "distance_counts": {str(k): v for k, v in self.distance_counts.items()},
            "censored": self.censored,
        }
        return json.dumps(doc)

    @classmethod
    def from_json(cls, line: str) -> ScanRecord:
        doc = json.loads(line)
        missing = [f for f in RECORD_FIELDS[:9] if f not in doc]
        if missing:
            raise ValueError(f"record missing fields {missing}")
        rec = cls(
            tiling=doc["tiling"],
            radius=int(doc["radius"]),
            num_qubits=int(doc["num_qubits"]),
            ordinal=int(doc["ordinal"]),
            labeling=doc["labeling"],
            n_stab=int(doc["n_stab"]),
            n_gauge=int(doc["n_gauge"]),
            n_logical=int(doc["n_logical"]),
            distances=tuple(int(d) for d in doc["distances"]),
            censored=int(doc.get("censored", 0)),
        )
        if list(rec.distances) != sorted(rec.distances) or len(rec.distances) != rec.n_logical:
            raise ValueError("inconsistent distance list in record")
        return rec


@dataclass
class ScanStats:
    scanned: int = 0
    skipped_redundant: int = 0
    logged: int = 0
    no_logical: int = 0
    censored_codes: int = 0

    def merge(self, other: ScanStats) -> ScanStats:
        return ScanStats(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def as_tuple(self):
        return (self.scanned, self.skipped_redundant, self.logged, self.no_logical, self.censored_codes)

    def as_dict(self) -> dict[str, int]:
        return dict(zip(("scanned", "skipped_redundant", "logged", "no_logical", "censored_codes"), self.as_tuple()))


def evaluate_labeling(lattice: PeriodicLattice, ordinal: int, cutoff: int | None = None) -> ScanRecord | None:
    """Code record for one labeling, or None when it has no logical qubits."""
    lab = labeling_from_ordinal(lattice.tiling.name, ordinal)
    ops = labeling_to_measurements(lattice, lab)
    code = compute_subsystem_code(ops, num_qubits=lattice.num_qubits)
    if not code.logical_pairs:
        return None
    _, profile = optimize_logical_qubits(code, cutoff=cutoff)
    return ScanRecord(
        tiling=lattice.tiling.name,
        radius=lattice.radius,
        num_qubits=lattice.num_qubits,
        ordinal=ordinal,
        labeling=str(lab),
        n_stab=code.n_stab,
        n_gauge=code.n_gauge,
        n_logical=code.n_logical,
        distances=profile.distances,
        censored=profile.censored,
    )


def run_scan(config: ScanConfig, stats: ScanStats | None = None) -> Iterator[ScanRecord]:
    """Stream logged records for this walker's share, in ordinal order.

    ``stats`` (if given) is updated in place as the scan proceeds.
    """
    lattice = config.validate()
    stats = stats if stats is not None else ScanStats()
    sch = labeling_scheme(lattice.tiling.name)
    w, W = config.walker_id, config.walkers
    mine = len(range(w, sch.total, W))
    reps = 0
    for o in orbit_representatives(lattice.tiling.name):
        if o % W != w:
            continue
        reps += 1
        stats.scanned += 1
        rec = evaluate_labeling(lattice, o, config.cutoff)
        if rec is None:
            stats.no_logical += 1
            continue
        if rec.censored:
            stats.censored_codes += 1
        if rec.distances[-1] >= config.min_distance:
            stats.logged += 1
            yield rec
    stats.skipped_redundant += mine - reps


def shard_path(out: str | os.PathLike, walker_id: int, walkers: int) -> Path:
    out = Path(out)
    return out.with_name(f"{out.name}.walker{walker_id}-of-{walkers}")


def scan_to_file(config: ScanConfig, path: str | os.PathLike | None = None) -> ScanStats:
    """Run one walker and write its records, one JSON line each, flushed per line."""
    target = Path(path or config.out)
    stats = ScanStats()
    with open(target, "w", encoding="utf-8") as fh:
        for rec in run_scan(config, stats):
            fh.write(rec.to_json() + "\n")
            fh.flush()
    return stats


def _walker_job(args) -> dict:
    config, path = args
    return scan_to_file(config, path).as_dict()


def scan_all_walkers(config: ScanConfig, processes: int | None = None, keep_shards: bool = False) -> ScanStats:
    """Run every walker of ``config`` (in parallel) and merge into ``config.out``."""
    if config.out is None:
        raise ValueError("config.out is required")
    config.validate()
    jobs = []
    for w in range(config.walkers):
        cfg = ScanConfig(**{**config.__dict__, "walker_id": w})
        jobs.append((cfg, shard_path(config.out, w, config.walkers)))
    procs = processes or min(config.walkers, os.cpu_count() or 1)
    if procs <= 1 or config.walkers == 1:
        results = [_walker_job(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=procs) as ex:
            results = list(ex.map(_walker_job, jobs))
    merge_shards([p for _, p in jobs], config.out)
    if not keep_shards:
        for _, p in jobs:
            Path(p).unlink()
    total = ScanStats()
    for r in results:
        total = total.merge(ScanStats(**r))
    return total


def read_records(path: str | os.PathLike) -> list[ScanRecord]:
    with open(path, encoding="utf-8") as fh:
        return [ScanRecord.from_json(line) for line in fh if line.strip()]


def merge_shards(paths: Iterable[str | os.PathLike], out: str | os.PathLike) -> int:
    """Merge shard files into one file ordered by ordinal.  Returns the record count."""
    lines = []
    for p in paths:
        with open(p, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    rec = ScanRecord.from_json(line)
                    lines.append(((rec.tiling, rec.radius, rec.ordinal), rec.to_json()))
    lines.sort(key=lambda t: t[0])
    with open(out, "w", encoding="utf-8") as fh:
        for _, line in lines:
            fh.write(line + "\n")
    return len(lines)


@dataclass
class Summary:
    """Grouped view of records.

    ``rows`` maps (radius, num_qubits, distance, qubits) to the number of
    records that have exactly ``qubits`` logical qubits at ``distance``.
    """

    rows: dict[tuple[int, int, int, int], int] = field(default_factory=dict)

    def plot_columns(self) -> list[tuple[int, int, int, int, int]]:
        return [(*k, v) for k, v in sorted(self.rows.items())]


def summarize(records: Iterable[ScanRecord]) -> Summary:
    rows: Counter = Counter()
    for rec in records:
        for d, c in rec.distance_counts.items():
            rows[(rec.radius, rec.num_qubits, d, c)] += 1
    return Summary(dict(rows))


def format_summary(summary: Summary, csv: bool = False) -> str:
    header = ("radius", "num_qubits", "distance", "qubits", "multiplicity")
    cols = summary.plot_columns()
    if csv:
        return "\n".join([",".join(header)] + [",".join(map(str, r)) for r in cols]) + "\n"
    if not cols:
        return "(no records)\n"
    widths = [max(len(h), *(len(str(r[i])) for r in cols)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(str(v).rjust(w) for v, w in zip(r, widths)) for r in cols]
    return "\n".join(lines) + "\n"
