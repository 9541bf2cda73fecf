"""CSV and plot-script writers for sweep results.

CSV columns: ``snr_db,scheme,metric,mode,value,std_err``. Numbers carry ten
significant digits, rows are sorted by (metric, scheme, snr_db, mode) and
lines end in ``\\n`` so identical rows always give identical bytes.

The plot script is a standalone matplotlib program. Its first line declares
``# plot-script-format: 1``; it reads the CSV it was generated for and draws
one panel per metric (outage on a log axis, capacity on a linear one) with one
series per (scheme, mode).
"""

import csv
import logging
import os
from pathlib import Path
from string import Template
from typing import Iterable, List, Optional, TextIO, Union

from swipt_relay.exceptions import OutputError
from swipt_relay.models.sweep import Metric, SweepRow

logger = logging.getLogger(__name__)

CSV_HEADER = ["snr_db", "scheme", "metric", "mode", "value", "std_err"]
PLOT_SCRIPT_FORMAT = 1

PathLike = Union[str, os.PathLike]


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.10g}"


def sort_rows(rows: Iterable[SweepRow]) -> List[SweepRow]:
    return sorted(rows, key=lambda r: (r.metric.value, r.scheme, r.snr_db, r.mode.value))


def write_csv(rows: Iterable[SweepRow], stream: TextIO) -> int:
    """Write the CSV text of ``rows`` to an open stream; returns the row count."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    count = 0
    for row in sort_rows(rows):
        writer.writerow(
            [
                _fmt(row.snr_db),
                row.scheme,
                row.metric.value,
                row.mode.value,
                _fmt(row.value),
                _fmt(row.std_err),
            ]
        )
        count += 1
    return count


def emit_csv(rows: Iterable[SweepRow], path: PathLike) -> Path:
    """Write ``rows`` to ``path``.

    Raises:
        OutputError: If the file cannot be written
    """
    path = Path(path)
    try:
        with path.open("w", newline="", encoding="utf-8") as f:
            count = write_csv(rows, f)
    except OSError as e:
        raise OutputError(f"Cannot write CSV to '{path}': {e}") from e
    logger.info(f"Wrote {count} row(s) to {path}")
    return path


_PLOT_TEMPLATE = Template(
    '''# plot-script-format: $format_version
"""Plot sweep results from $csv_name (generated by swipt-relay)."""

import csv
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

HERE = Path(__file__).resolve().parent
CSV_PATH = HERE / $csv_relpath
PNG_PATH = HERE / $png_name
METRICS = $metrics
YLABELS = {"outage": "Outage probability", "capacity": "Ergodic capacity (bits/s/Hz)"}
STYLES = {"exact": "-", "approx": "--", "mc": "o"}


def load(path):
    series = defaultdict(list)
    with open(path, newline="", encoding="utf-8") as f:
        for row in csv.DictReader(f):
            key = (row["metric"], row["scheme"], row["mode"])
            series[key].append((float(row["snr_db"]), float(row["value"])))
    return series


def main():
    series = load(CSV_PATH)
    fig, axes = plt.subplots(1, len(METRICS), figsize=(6 * len(METRICS), 4.5), squeeze=False)
    for ax, metric in zip(axes[0], METRICS):
        for (m, scheme, mode), points in sorted(series.items()):
            if m != metric:
                continue
            points.sort()
            xs = [p[0] for p in points]
            ys = [p[1] for p in points]
            if metric == "outage":
                kept = [(x, y) for x, y in zip(xs, ys) if y > 0]
                xs = [p[0] for p in kept]
                ys = [p[1] for p in kept]
            ax.plot(xs, ys, STYLES.get(mode, "-"), label=f"{scheme} ({mode})", fillstyle="none")
        if metric == "outage":
            ax.set_yscale("log")
        ax.set_xlabel("Transmit SNR (dB)")
        ax.set_ylabel(YLABELS[metric])
        ax.grid(True, which="both", alpha=0.3)
        ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(PNG_PATH, dpi=150)


if __name__ == "__main__":
    main()
'''
)


def _panel_metrics(rows: List[SweepRow]) -> List[str]:
    present = {r.metric for r in rows}
    return [m.value for m in (Metric.OUTAGE, Metric.CAPACITY) if m in present]


def emit_plot_script(
    rows: Iterable[SweepRow], path: PathLike, csv_path: Optional[PathLike] = None
) -> Path:
    """Write a plotting script for ``rows``.

    The script reads ``csv_path``; when it is not given the rows are written
    to a CSV next to the script (same name, ``.csv`` suffix).

    Raises:
        OutputError: If either file cannot be written
    """
    rows = list(rows)
    path = Path(path)
    if csv_path is None:
        csv_path = emit_csv(rows, path.with_suffix(".csv"))
    csv_path = Path(csv_path)

    try:
        csv_relpath = os.path.relpath(csv_path.resolve(), path.resolve().parent)
    except ValueError:
        # different drives on Windows
        csv_relpath = str(csv_path.resolve())

    script = _PLOT_TEMPLATE.substitute(
        format_version=PLOT_SCRIPT_FORMAT,
        csv_name=csv_path.name,
        csv_relpath=repr(Path(csv_relpath).as_posix()),
        png_name=repr(path.with_suffix(".png").name),
        metrics=repr(_panel_metrics(rows)),
    )
    try:
        path.write_text(script, encoding="utf-8")
    except OSError as e:
        raise OutputError(f"Cannot write plot script to '{path}': {e}") from e
    logger.info(f"Wrote plot script to {path}")
    return path
