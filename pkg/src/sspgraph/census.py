"""Batch classification of graph6 streams.

Each line is classified independently with seed ``seed + SEED_STRIDE * index``
(index = 0-based line number), so results do not depend on batching or on
the number of worker processes.  Output order always matches input order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .classify import DEFAULT_TRIALS, IN, OUT, UNKNOWN, Settings, classify
from .documents import verdict_document, verdict_record
from .graph import GraphFormatError, parse_graph6

SEED_STRIDE = 1000


@dataclass
class CensusEntry:
    index: int
    line: str
    record: dict | None = None
    document: dict | None = None
    error: str | None = None


@dataclass
class CensusResult:
    entries: list[CensusEntry] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {IN: 0, OUT: 0, UNKNOWN: 0, "errors": 0}
        for e in self.entries:
            if e.error is not None:
                counts["errors"] += 1
            else:
                counts[e.record["verdict"]] += 1
        counts["total"] = len(self.entries)
        return counts


def classify_line(index: int, line: str, seed: int = 0, trials: int = DEFAULT_TRIALS) -> CensusEntry:
    entry = CensusEntry(index, line)
    try:
        g = parse_graph6(line)
    except GraphFormatError as exc:
        entry.error = str(exc)
        return entry
    settings = Settings(seed=seed + SEED_STRIDE * index, trials=trials)
    v = classify(g, settings)
    entry.record = verdict_record(g, v, settings)
    entry.document = verdict_document(g, v, settings)
    return entry


def _work(args: tuple[int, str, int, int]) -> CensusEntry:
    return classify_line(*args)


def census(lines: Iterable[str], seed: int = 0, trials: int = DEFAULT_TRIALS, jobs: int = 1) -> CensusResult:
    """Classify every non-blank line; parse errors are recorded, not raised."""
    tasks = [(i, ln.strip(), seed, trials) for i, ln in enumerate(lines) if ln.strip()]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_work, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        entries = [_work(t) for t in tasks]
    return CensusResult(entries)
