"""Append-only JSONL cache of per-prime order profiles.

One JSON object per line, UTF-8, sorted by p within each append batch.
Records are self-contained, so a cache file can be merged into any later
scan; lines that fail to parse or carry malformed fields are counted and
skipped rather than aborting the read.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterable

from .distribution import OrderProfile

__all__ = ["CacheRecord", "read_cache", "append_cache"]


@dataclass(frozen=True)
class CacheRecord:
    """Durable form of an OrderProfile.

    e_irregular_confirmed is present only when the exact sieve actually ran
    for that prime; None means unknown, not false.
    """

    p: int
    r: int
    in_p1: bool
    in_p2: bool
    witness: int | None
    e_irregular_confirmed: bool | None = None

    @classmethod
    def from_profile(cls, prof: OrderProfile) -> "CacheRecord":
        return cls(p=prof.p, r=prof.r, in_p1=prof.in_p1, in_p2=prof.in_p2, witness=prof.witness)

    def to_json(self) -> str:
        doc: dict[str, object] = {
            "p": self.p,
            "r": self.r,
            "in_p1": self.in_p1,
            "in_p2": self.in_p2,
            "witness": self.witness,
        }
        if self.e_irregular_confirmed is not None:
            doc["e_irregular_confirmed"] = self.e_irregular_confirmed
        return json.dumps(doc, separators=(", ", ": "))

    @classmethod
    def from_json(cls, line: str) -> "CacheRecord":
        doc = json.loads(line)
        if not isinstance(doc, dict):
            raise ValueError("cache line is not an object")
        p = doc["p"]
        r = doc["r"]
        in_p1 = doc["in_p1"]
        in_p2 = doc["in_p2"]
        witness = doc.get("witness")
        confirmed = doc.get("e_irregular_confirmed")
        if not (isinstance(p, int) and isinstance(r, int)):
            raise ValueError("p and r must be integers")
        if not (isinstance(in_p1, bool) and isinstance(in_p2, bool)):
            raise ValueError("class flags must be booleans")
        if witness is not None and not isinstance(witness, int):
            raise ValueError("witness must be an integer or null")
        if confirmed is not None and not isinstance(confirmed, bool):
            raise ValueError("e_irregular_confirmed must be a boolean when present")
        if (witness is None) != (in_p1 or in_p2):
            raise ValueError("witness must be present exactly when both class flags are false")
        return cls(p=p, r=r, in_p1=in_p1, in_p2=in_p2, witness=witness,
                   e_irregular_confirmed=confirmed)


def read_cache(path: str | os.PathLike[str]) -> tuple[dict[int, CacheRecord], int]:
    """Load a cache file into {p: record}; returns (records, skipped_line_count).

    A missing file reads as empty.  Duplicate entries for one prime keep
    the last occurrence, matching append order.
    """
    records: dict[int, CacheRecord] = {}
    skipped = 0
    try:
        handle = open(path, encoding="utf-8")
    except FileNotFoundError:
        return records, skipped
    with handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            try:
                record = CacheRecord.from_json(line)
            except (ValueError, KeyError):
                skipped += 1
                continue
            records[record.p] = record
    return records, skipped


def append_cache(path: str | os.PathLike[str], records: Iterable[CacheRecord]) -> int:
    """Append records to path (created if absent), sorted by p; returns count written."""
    batch = sorted(records, key=lambda rec: rec.p)
    if not batch:
        return 0
    with open(path, "a", encoding="utf-8") as handle:
        for record in batch:
            handle.write(record.to_json() + "\n")
    return len(batch)
