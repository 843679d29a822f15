"""Inequality verdicts and parameter sweeps over the generated families.

All comparisons use exact rational arithmetic; floats appear only in the
CSV/JSON artifacts, which are display surfaces for external plotters.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import BoundViolation, ParameterOutOfRange
from .families import FamilySpec, generate
from .index import measures
from .text import MeasureReport


@dataclass(frozen=True)
class BoundCheck:
    """One inequality: holds iff lhs related-to rhs; slack = rhs - lhs.

    Chain inequalities (mr <= x <= mr*sigma) report the outer values as
    lhs/rhs and the smaller of the two gaps as slack.
    """

    name: str
    lhs: Fraction
    rhs: Fraction
    holds: bool
    slack: Fraction


@dataclass(frozen=True)
class BoundVerdict:
    checks: tuple[BoundCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def violated(self) -> list[str]:
        return [c.name for c in self.checks if not c.holds]


def check_bounds(report: MeasureReport) -> BoundVerdict:
    """Evaluate the seven inequalities every genuine text must satisfy.

    A false flag detects a defect in the measuring code (or a doctored
    report); it is never an expected data point.
    """
    n = Fraction(report.n)
    sigma = Fraction(report.sigma)
    mr = Fraction(report.mr)
    er = Fraction(report.er)
    el = Fraction(report.el)
    ratio = report.ratio

    def le(name: str, lhs: Fraction, rhs: Fraction) -> BoundCheck:
        return BoundCheck(name, lhs, rhs, lhs <= rhs, rhs - lhs)

    def lt(name: str, lhs: Fraction, rhs: Fraction) -> BoundCheck:
        return BoundCheck(name, lhs, rhs, lhs < rhs, rhs - lhs)

    def chain(name: str, lo: Fraction, mid: Fraction, hi: Fraction) -> BoundCheck:
        return BoundCheck(name, lo, hi, lo <= mid <= hi, min(mid - lo, hi - mid))

    checks = (
        le("ratio_le_sigma", ratio, sigma),
        le("ratio_le_2n_over_sigma", ratio, 2 * n / sigma),
        le("er_ge_sigma", sigma, er),
        chain("mr_le_er_le_mr_sigma", mr, er, mr * sigma),
        chain("mr_le_el_le_mr_sigma", mr, el, mr * sigma),
        lt("el_lt_2n", el, 2 * n),
        lt("er_lt_2n", er, 2 * n),
    )
    return BoundVerdict(checks)


def ratio_bound(n: int, sigma: int) -> Fraction:
    """The alphabet-dependent ceiling min{2n/sigma, sigma} for el/er."""
    return min(Fraction(2 * n, sigma), Fraction(sigma))


@dataclass(frozen=True)
class SweepRow:
    family: str
    k: int | None
    sigma_nominal: int | None
    sigma_actual: int
    n: int
    mr: int
    er: int
    el: int
    ratio: Fraction
    bound: Fraction
    tightness: Fraction


SWEEP_COLUMNS = [
    "family",
    "k",
    "sigma_nominal",
    "sigma_actual",
    "n",
    "mr",
    "er",
    "el",
    "ratio",
    "bound",
    "tightness",
]


def sweep(specs: Iterable[FamilySpec]) -> tuple[list[SweepRow], list[tuple[FamilySpec, Exception]]]:
    """One row per generated text, sorted by (family, n, sigma).

    Parameter errors are collected per row and the sweep continues; a bound
    violation, by contrast, aborts loudly since it means the toolkit itself
    is broken.
    """
    rows: list[SweepRow] = []
    failures: list[tuple[FamilySpec, Exception]] = []
    for spec in specs:
        try:
            t, _ = generate(spec)
        except ParameterOutOfRange as exc:
            failures.append((spec, exc))
            continue
        rep = measures(t)
        verdict = check_bounds(rep)
        if not verdict.all_hold:
            raise BoundViolation(
                f"{spec} violates {', '.join(verdict.violated())} — measuring bug"
            )
        bound = ratio_bound(rep.n, rep.sigma)
        rows.append(
            SweepRow(
                family=spec.family,
                k=spec.k,
                sigma_nominal=spec.sigma,
                sigma_actual=rep.sigma,
                n=rep.n,
                mr=rep.mr,
                er=rep.er,
                el=rep.el,
                ratio=rep.ratio,
                bound=bound,
                tightness=rep.ratio / bound,
            )
        )
    rows.sort(key=lambda r: (r.family, r.n, r.sigma_actual))
    return rows, failures


def _row_dict(row: SweepRow) -> dict:
    return {
        "family": row.family,
        "k": row.k,
        "sigma_nominal": row.sigma_nominal,
        "sigma_actual": row.sigma_actual,
        "n": row.n,
        "mr": row.mr,
        "er": row.er,
        "el": row.el,
        "ratio": float(row.ratio),
        "bound": float(row.bound),
        "tightness": float(row.tightness),
    }


def write_sweep_csv(rows: list[SweepRow], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=SWEEP_COLUMNS)
        writer.writeheader()
        for row in rows:
            d = _row_dict(row)
            d = {k: ("" if v is None else v) for k, v in d.items()}
            writer.writerow(d)


def write_sweep_json(rows: list[SweepRow], path) -> None:
    with open(path, "w") as fh:
        json.dump([_row_dict(r) for r in rows], fh, indent=2)
        fh.write("\n")
