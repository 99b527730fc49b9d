"""Desk-scale conformance run for the construction, with timings.

Checks, in order:
  1. the base sequence and the length/bound table up to --table
  2. construct(d) for d = 2..6, materialized: valid, cyclic, non-dominating
  3. construct(8), never materialized: streaming validity + cyclicity scan,
     then --samples random pairs each certified by the witness oracle
  4. exhaustive search at d = 1 and d = 2 (cyclic) against the base length

Usage:
    python scripts/conformance_report.py                      # everything
    python scripts/conformance_report.py --skip-d8            # seconds, not minutes
    python scripts/conformance_report.py --samples 1000000 --seed 7

Exits 1 if any check fails, so it can sit in CI as-is.
"""
import argparse
import os
import sys
import time

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from badseq import configure_logging
from badseq.services.construction_service import (
    base_sequence,
    closed_form_bound,
    construct,
    length_of,
    make_spec,
)
from badseq.services.search_service import max_cyclic_length, max_valid_length
from badseq.services.verifier_service import (
    check_cyclic,
    check_non_dominating_full,
    check_non_dominating_sampled,
    scan_spec,
)

EXPECTED_LENGTHS = {2: 4, 4: 36, 6: 2628, 8: 13815396}


class Report:
    def __init__(self):
        self.failures = []

    def check(self, label, ok, detail=""):
        mark = "ok  " if ok else "FAIL"
        print(f"  [{mark}] {label}" + (f"  ({detail})" if detail else ""))
        if not ok:
            self.failures.append(label)


def _timed(fn, *args, **kwargs):
    started = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, time.perf_counter() - started


def run(table: int, skip_d8: bool, samples: int, seed: int, workers: int) -> int:
    report = Report()

    print("base case and lengths")
    base = base_sequence()
    report.check("base sequence", list(base) == [(1, 1), (0, 2), (1, 0), (0, 0)])
    for d, expected in EXPECTED_LENGTHS.items():
        report.check(f"length_of({d}) = {expected}", length_of(d) == expected)
    for d in range(2, table + 1):
        length, bound = length_of(d), closed_form_bound(d)
        report.check(f"d={d:<3} bound <= length", bound <= length, f"{bound} <= {length}")
    print()

    print("materialized conformance")
    for d in range(2, 7):
        seq, built = _timed(construct, d)
        cyc, t_cyc = _timed(check_cyclic, seq)
        dom, t_dom = _timed(check_non_dominating_full, seq, workers=workers)
        report.check(
            f"construct({d}) length {len(seq)}",
            cyc is None and dom is None,
            f"build {built:.2f}s, cyclic {t_cyc:.2f}s, pairs {t_dom:.2f}s"
            + (f", {cyc or dom}" if cyc or dom else ""),
        )
    print()

    if skip_d8:
        print("d=8 skipped\n")
    else:
        print("construct(8), streamed")
        spec = make_spec(8)
        scan, t_scan = _timed(scan_spec, spec)
        report.check("validity + cyclicity scan", scan is None, f"{t_scan:.1f}s" + (f", {scan}" if scan else ""))
        sampled, t_sampled = _timed(check_non_dominating_sampled, spec, samples, seed)
        report.check(sampled.summary(), sampled.ok, f"{t_sampled:.1f}s")
        print()

    print("exhaustive search")
    valid1 = max_valid_length(1, workers=workers)
    report.check(f"L_1 = {valid1.max_length}", valid1.max_length == 2 and valid1.exact)
    cyclic2, t_search = _timed(max_cyclic_length, 2, length_budget=6, workers=workers)
    report.check(
        f"cyclic d=2 reaches {cyclic2.max_length}",
        cyclic2.max_length >= length_of(2),
        f"{cyclic2.nodes_explored} nodes, {t_search:.1f}s, exact={'yes' if cyclic2.exact else 'no'}",
    )
    print()

    if report.failures:
        print(f"{len(report.failures)} check(s) failed.")
        return 1
    print("All checks passed.")
    return 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--table", type=int, default=40, help="largest d in the bound table")
    parser.add_argument("--skip-d8", action="store_true", help="skip the streamed d=8 checks")
    parser.add_argument("--samples", type=int, default=100_000, help="sampled pairs at d=8")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    args = parser.parse_args()
    configure_logging(args.verbose)
    sys.exit(run(args.table, args.skip_d8, args.samples, args.seed, args.workers))
