"""Rank-table reports over persisted run records.

For each scenario the optimizers are ranked per indicator (spread, lower
is better; hypervolume, higher is better; evaluations, lower is better)
with Scott-Knott over the 20-repeat samples.  Indicators measure the
population each optimizer returned (survivor set for sampling runs, final
front otherwise); all records of a scenario share one normalization so
values are comparable.  Everything is computed from persisted points; no
model is ever re-evaluated here.  Output: Markdown report, ranks.csv, and one bar
figure per scenario x indicator.
"""

import csv
import statistics
import warnings
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .core import MAXIMIZE
from .metrics import (UndefinedIndicator, hypervolume, normalize_fronts,
                      spread)
from .models import make_problem
from .stats import Treatment, scott_knott

INDICATORS = (
    ("spread", "lower-better"),
    ("hypervolume", "higher-better"),
    ("evaluations", "lower-better"),
)


def _to_min(front, senses):
    return [tuple(-v if s == MAXIMIZE else v for v, s in zip(p, senses))
            for p in front]


def indicator_samples(records, scenario):
    """Per-optimizer indicator samples for one scenario.

    Returns {indicator: {optimizer: [value per repeat]}}.  Spread and
    hypervolume are computed over the population each optimizer returned:
    the full survivor set for sampling runs (its coverage is the point of
    measuring them), the final front for evolutionary runs.  Point sets
    are flipped to minimization form and normalized with bounds shared
    across every record of the scenario first.
    """
    cell = [r for r in records if r.scenario == scenario]
    senses = make_problem(scenario).senses
    usable = [(r, list(r.survivors) or list(r.front)) for r in cell]
    usable = [(r, pts) for r, pts in usable if pts]
    fronts = normalize_fronts([_to_min(pts, senses) for _, pts in usable])
    out = {name: {} for name, _ in INDICATORS}
    for (r, _), nf in zip(usable, fronts):
        try:
            s = spread(nf)
        except UndefinedIndicator:
            s = None
        h = hypervolume(nf)
        for name, value in (("spread", s), ("hypervolume", h),
                            ("evaluations", float(r.eval_count))):
            if value is not None:
                out[name].setdefault(r.optimizer, []).append(value)
    return out


def rank_tables(records):
    """Scott-Knott tables for every scenario x indicator present.

    Returns [(scenario, indicator, [RankedTreatment...])].  Cells with no
    usable samples are omitted with a warning.
    """
    tables = []
    scenarios = sorted({r.scenario for r in records})
    for scenario in scenarios:
        samples = indicator_samples(records, scenario)
        for indicator, direction in INDICATORS:
            per_opt = samples[indicator]
            treatments = [Treatment(name, vals)
                          for name, vals in sorted(per_opt.items()) if vals]
            if not treatments:
                warnings.warn(
                    f"no usable {indicator} samples for {scenario}; "
                    "cell omitted")
                continue
            ranked = scott_knott(treatments, direction=direction)
            tables.append((scenario, indicator, ranked))
    return tables


def _markdown(tables, records):
    lines = ["# Optimizer comparison", ""]
    current = None
    for scenario, indicator, ranked in tables:
        if scenario != current:
            lines += [f"## {scenario}", ""]
            current = scenario
        lines += [f"### {indicator}", "",
                  "| rank | optimizer | median | IQR | near top |",
                  "| ---: | :-- | ---: | ---: | :-: |"]
        for row in ranked:
            mark = "+" if row.close_to_top else ""
            lines.append(f"| {row.rank} | {row.name} | {row.median:.4f} "
                         f"| {row.iqr:.4f} | {mark} |")
        lines.append("")
    lines += ["## Median evaluations", "",
              "| scenario | optimizer | median evaluations |",
              "| :-- | :-- | ---: |"]
    cells = sorted({(r.scenario, r.optimizer) for r in records})
    for scenario, optimizer in cells:
        med = statistics.median(r.eval_count for r in records
                                if r.scenario == scenario
                                and r.optimizer == optimizer)
        lines.append(f"| {scenario} | {optimizer} | {med:g} |")
    lines.append("")
    return "\n".join(lines)


def _write_ranks_csv(tables, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["scenario", "indicator", "rank", "optimizer",
                    "median", "iqr", "near_top"])
        for scenario, indicator, ranked in tables:
            for row in ranked:
                w.writerow([scenario, indicator, row.rank, row.name,
                            repr(row.median), repr(row.iqr),
                            int(row.close_to_top)])


def _write_figures(tables, fig_dir):
    fig_dir.mkdir(parents=True, exist_ok=True)
    for scenario, indicator, ranked in tables:
        names = [row.name for row in ranked]
        medians = [row.median for row in ranked]
        errors = [row.iqr / 2 for row in ranked]
        fig, ax = plt.subplots(figsize=(6, 3.2))
        ax.bar(names, medians, yerr=errors, capsize=3, color="#4878a8")
        ax.set_title(f"{scenario}: {indicator} (median, IQR/2 bars)")
        ax.set_ylabel(indicator)
        if indicator == "evaluations" and max(medians) / max(
                min(m for m in medians if m > 0), 1e-9) > 50:
            ax.set_yscale("log")
        fig.tight_layout()
        fig.savefig(fig_dir / f"{scenario}-{indicator}.png", dpi=120)
        plt.close(fig)


def report(records, out_dir):
    """Render report.md, ranks.csv and figures/ from run records.

    Pure with respect to the models: works entirely from persisted fronts
    and eval counts.  Returns the Markdown text.
    """
    if not records:
        raise ValueError("no records to report on")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    tables = rank_tables(records)
    text = _markdown(tables, records)
    (out_dir / "report.md").write_text(text)
    _write_ranks_csv(tables, out_dir / "ranks.csv")
    _write_figures(tables, out_dir / "figures")
    return text
