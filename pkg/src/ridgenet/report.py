"""Batch verification report: delimited summary plus rendered figures."""

from __future__ import annotations

import csv
import json
import os
from typing import Callable

from . import verify
from .render import (
    save_length8_distance_figure,
    save_octahedron_nets_figure,
    save_polynomial_figure,
)

EXPECTED_STATUS = {
    "orthoplex-counterexamples": verify.COUNTEREXAMPLE,
}


def _default_checks(jobs: int) -> list[tuple[str, Callable[[], verify.TheoremReport]]]:
    return [
        ("simplex-sign-structure", lambda: verify.verify_simplex_sign_structure(6, 12)),
        ("simplex-allnet-3", lambda: verify.verify_simplex_allnet(3)),
        ("simplex-allnet-4", lambda: verify.verify_simplex_allnet(4)),
        ("orthoplex4-allnet", lambda: verify.verify_orthoplex4_allnet(jobs=jobs)),
        ("orthoplex-counterexamples", verify.verify_orthoplex_counterexamples),
        ("polynomials", verify.verify_polynomials),
        ("census-counts", verify.verify_counts),
    ]


def run_report(
    output_dir: str,
    jobs: int = 1,
    reproducible: bool = False,
    skip_figures: bool = False,
) -> list[dict]:
    """Run the default verification suite; write ``summary.csv``,
    ``report.json``, and the figures into ``output_dir``. Returns the
    summary rows."""
    os.makedirs(output_dir, exist_ok=True)
    rows = []
    reports = []
    for name, runner in _default_checks(jobs):
        report = runner()
        reports.append(report)
        expected = EXPECTED_STATUS.get(name, verify.VERIFIED)
        rows.append(
            {
                "check": name,
                "status": report.status,
                "expected": expected,
                "ok": report.status == expected,
                "elapsed_s": "" if reproducible else f"{report.elapsed:.2f}",
            }
        )
    with open(os.path.join(output_dir, "summary.csv"), "w", newline="") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["check", "status", "expected", "ok", "elapsed_s"]
        )
        writer.writeheader()
        writer.writerows(rows)
    with open(os.path.join(output_dir, "report.json"), "w") as fh:
        json.dump(
            [r.as_json(include_elapsed=not reproducible) for r in reports],
            fh,
            indent=2,
            sort_keys=True,
        )
        fh.write("\n")
    if not skip_figures:
        save_octahedron_nets_figure(os.path.join(output_dir, "octahedron_nets.png"))
        save_polynomial_figure(os.path.join(output_dir, "image_polynomials.png"))
        save_length8_distance_figure(
            os.path.join(output_dir, "length8_distances.png")
        )
    return rows
