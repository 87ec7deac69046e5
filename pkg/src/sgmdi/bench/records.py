"""Benchmark records and their CSV form."""

import csv
import dataclasses
import math
import os
import typing
from dataclasses import dataclass

__all__ = ["BenchRecord", "emit_csv", "read_csv", "append_csv", "record_key",
           "FIELDS"]


@dataclass
class BenchRecord:
    """One benchmark observation.

    ``q`` is the total level budget and ``level`` the table-style accuracy
    level (``q - d + 1``). ``N`` is the largest 1-d node count used.
    ``status`` is ``ok`` or ``failed``; failed rows carry ``reason``
    (``timeout``, ``memory-cap``, ``sample-cap`` or ``error``).
    ``repetitions`` is how many timed runs ``wall_time`` is the median of.
    """

    method: str
    integrand: str
    rule: int
    d: int
    q: int
    level: int
    m: typing.Optional[int] = None
    s: typing.Optional[int] = None
    N: typing.Optional[int] = None
    merged_nodes: typing.Optional[int] = None
    unmerged_nodes: typing.Optional[int] = None
    value: typing.Optional[float] = None
    reference: typing.Optional[float] = None
    rel_error: typing.Optional[float] = None
    wall_time: typing.Optional[float] = None
    repetitions: int = 0
    seed: typing.Optional[int] = None
    samples: typing.Optional[int] = None
    status: str = "ok"
    reason: str = ""
    timestamp: str = ""
    version: str = ""

    def __post_init__(self):
        if self.rel_error is not None and not self.rel_error >= 0:
            if not math.isnan(self.rel_error):
                raise ValueError("rel_error must be >= 0")
        if self.wall_time is not None and self.wall_time < 0:
            raise ValueError("wall_time must be >= 0")


FIELDS = [f.name for f in dataclasses.fields(BenchRecord)]
_TYPES = {name: tp for name, tp in typing.get_type_hints(BenchRecord).items()}

# Fields that identify a parameter point (used when resuming a suite).
_KEY_FIELDS = ("method", "integrand", "rule", "d", "q", "m", "s", "seed", "samples")


def record_key(rec):
    return tuple(getattr(rec, k) for k in _KEY_FIELDS)


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _base(tp):
    args = typing.get_args(tp)
    return args[0] if args else tp


def _parse(name, text):
    tp = _TYPES[name]
    optional = type(None) in typing.get_args(tp)
    if text == "" and optional:
        return None
    base = _base(tp)
    if base is int:
        return int(text)
    if base is float:
        return float(text)
    return text


def _writer(fh):
    return csv.writer(fh, quoting=csv.QUOTE_MINIMAL, lineterminator="\r\n")


def emit_csv(records, path):
    """Write a header and one row per record (floats at 17 digits).

    ``path`` may also be an open text file.
    """
    if hasattr(path, "write"):
        _emit(records, path)
        return
    with open(path, "w", newline="") as fh:
        _emit(records, fh)


def _emit(records, fh):
    w = _writer(fh)
    w.writerow(FIELDS)
    for rec in records:
        w.writerow([_fmt(getattr(rec, k)) for k in FIELDS])


def append_csv(rec, path):
    """Append one row, writing the header first if the file is new/empty."""
    new = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", newline="") as fh:
        w = _writer(fh)
        if new:
            w.writerow(FIELDS)
        w.writerow([_fmt(getattr(rec, k)) for k in FIELDS])


def read_csv(path):
    """Records from a file written by :func:`emit_csv`."""
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [BenchRecord(**{k: _parse(k, row[k]) for k in FIELDS}) for row in rows]
