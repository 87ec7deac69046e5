"""Benchmark harness: experiment suites, CSV records and power-law fits."""

from .fit import FitResult, fit_arrays, fit_power_law
from .records import BenchRecord, emit_csv, read_csv
from .suites import SUITES, Point, run_point, run_suite, suite_points

__all__ = [
    "BenchRecord", "FitResult", "Point", "SUITES", "emit_csv", "fit_arrays",
    "fit_power_law", "read_csv", "run_point", "run_suite", "suite_points",
]
