"""Tab-separated study tables: one header line, then one row per record."""

from typing import Iterable, Sequence

from .types import QuantileRow, TValueHistogram, VarianceReport


def _table(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _cell(value: object) -> str:
    if value is None:
        return "NA"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def quantile_table(rows: Sequence[QuantileRow]) -> str:
    levels = sorted(rows[0].quantiles) if rows else []
    header = ["k", *(f"q{level:g}" for level in levels), "reference"]
    return _table(header, ([r.k, *(r.quantiles[q] for q in levels), r.reference] for r in rows))


def variance_table(report: VarianceReport) -> str:
    body = _table(
        ["k", "n", "variance", "mean", "seconds"],
        ([r.k, r.n, r.variance, r.mean, r.seconds] for r in report.rows),
    )
    return body + f"# m = {report.m}, fitted slope = {_cell(report.fit_slope)}\n"


def histogram_table(histogram: TValueHistogram) -> str:
    rows = [
        [order, t, count]
        for order, by_t in sorted(histogram.counts.items())
        for t, count in by_t.items()
    ]
    body = _table(["order", "t", "count"], rows)
    means = ", ".join(f"order {o}: {_cell(m)}" for o, m in sorted(histogram.means.items()))
    return body + f"# mean t-value: {means}\n"
