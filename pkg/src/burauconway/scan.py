"""
Seeded search over braid words w for knots (ww*)^k with unusual Conway leads.

Every sample is drawn from its own stream, seeded by (seed, stream_index),
so the output does not depend on how samples are distributed over workers.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import isqrt

import numpy as np

from .braidword import BraidWord, is_knot_closure, ww_star
from .conway import conway_of_ww_star
from .splitmod4 import conjecture_checks, lead_coeff_restriction, split_mod4

RANDOM_MODEL = "uniform iid letters in +-[1, n-1], uniform length, rejection on knot closure"


class ResampleLimit(RuntimeError):
    pass


class TheoremViolation(AssertionError):
    """A scanned odd-strand (ww*)^k knot failed to split mod 4."""


@dataclass(frozen=True)
class ScanConfig:
    strands: int = 5
    length_min: int = 8
    length_max: int = 14
    power_k: int = 2
    sample_count: int = 100
    seed: int = 0
    workers: int = 1
    max_attempts: int = 10_000

    def __post_init__(self):
        if self.strands < 3 or self.strands % 2 == 0:
            raise ValueError(f"strands must be odd and >= 3, got {self.strands}")
        if not 1 <= self.length_min <= self.length_max:
            raise ValueError(f"bad word length range {self.length_min}..{self.length_max}")
        if self.power_k < 1:
            raise ValueError("power_k must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.sample_count < 0:
            raise ValueError("sample_count must be >= 0")


@dataclass(frozen=True)
class ScanRecord:
    index: int
    braid_word: str
    conway: list[int] = field(default_factory=list)
    lead: int = 0
    lead_is_square: bool = False
    lead_is_prime: bool = False
    sign_ok: bool = False
    split4: bool = False
    restriction_ok: bool = False
    status: str = "ok"

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


CSV_FIELDS = [
    "index", "braid_word", "lead", "lead_is_square", "lead_is_prime",
    "sign_ok", "split4", "restriction_ok", "status", "conway",
]


def is_prime(n: int) -> bool:
    """Trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def random_braid(config: ScanConfig, stream_index: int) -> BraidWord:
    rng = np.random.default_rng([config.seed & (2**64 - 1), stream_index])
    n = config.strands
    for _ in range(config.max_attempts):
        length = int(rng.integers(config.length_min, config.length_max + 1))
        gens = rng.integers(1, n, size=length)
        signs = rng.choice((-1, 1), size=length)
        w = BraidWord(n, tuple(int(g) * int(s) for g, s in zip(gens, signs)))
        if is_knot_closure(ww_star(w, config.power_k)):
            return w
    raise ResampleLimit(f"no knot closure after {config.max_attempts} attempts")


def evaluate_word(w: BraidWord, k: int, index: int = -1) -> ScanRecord:
    try:
        c = conway_of_ww_star(w, k)
        checks = conjecture_checks(c)
        return ScanRecord(
            index=index,
            braid_word=str(w),
            conway=list(c.coeffs),
            lead=c.lead,
            lead_is_square=checks.lead_is_square,
            lead_is_prime=is_prime(abs(c.lead)),
            sign_ok=checks.sign_ok,
            split4=split_mod4(c) is not None,
            restriction_ok=lead_coeff_restriction(c),
        )
    except Exception as exc:  # recorded per sample, the scan goes on
        return ScanRecord(index=index, braid_word=str(w), status=f"error: {type(exc).__name__}: {exc}")


def _scan_one(args) -> ScanRecord:
    config, index = args
    try:
        w = random_braid(config, index)
    except ResampleLimit as exc:
        return ScanRecord(index=index, braid_word="", status=f"error: {exc}")
    return evaluate_word(w, config.power_k, index)


def check_record(rec: ScanRecord, strands: int) -> None:
    if rec.status != "ok":
        return
    if strands % 2 == 1 and not rec.split4:
        raise TheoremViolation(f"odd-strand closure failed to split mod 4: {rec.to_json()}")
    if rec.split4 and abs(rec.lead) % 4 == 2:
        raise TheoremViolation(f"split mod 4 with lead = 2 mod 4: {rec.to_json()}")
    if rec.split4 and not rec.restriction_ok:
        raise TheoremViolation(f"split mod 4 but lead restriction fails: {rec.to_json()}")


def scan(config: ScanConfig, extra_words: tuple[BraidWord, ...] = ()) -> list[ScanRecord]:
    """Evaluate ``extra_words`` (indices -len..-1) and then sample_count random streams."""
    records = [
        evaluate_word(w, config.power_k, i - len(extra_words)) for i, w in enumerate(extra_words)
    ]
    jobs = [(config, i) for i in range(config.sample_count)]
    if config.workers == 1 or len(jobs) < 2:
        records.extend(map(_scan_one, jobs))
    else:
        chunk = max(1, len(jobs) // (4 * config.workers))
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records.extend(pool.map(_scan_one, jobs, chunksize=chunk))
    records.sort(key=lambda r: r.index)
    for rec in records:
        check_record(rec, config.strands)
    return records


def scan_metadata(config: ScanConfig) -> dict:
    meta = asdict(config)
    meta.pop("workers")  # output must not depend on it
    meta["random_model"] = RANDOM_MODEL
    return meta


def format_jsonl(config: ScanConfig, records: list[ScanRecord]) -> str:
    lines = [json.dumps({"meta": scan_metadata(config)}, separators=(",", ":"))]
    lines.extend(r.to_json() for r in records)
    return "\n".join(lines) + "\n"


def format_csv(records: list[ScanRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        row = asdict(r)
        row["conway"] = " ".join(str(c) for c in r.conway)
        writer.writerow({k: row[k] for k in CSV_FIELDS})
    return buf.getvalue()
