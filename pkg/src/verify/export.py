"""Report output: JSON, CSV summary rows, plain text and standalone witness files."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Union

import pandas as pd

from ..exceptions import DomainError
from ..graphs.core import BipartiteGraph, Graph
from ..graphs.graph6 import decode_graph6, write_graph
from ..models import VerifyReport

FORMATS = ("json", "csv", "plain")

SUMMARY_COLUMNS = [
    "claim",
    "params",
    "class_size",
    "threshold",
    "violation_count",
    "extremal_value",
    "tight",
    "construction_witnessed",
    "seed",
]


def _params_cell(params: dict) -> str:
    return ";".join(f"{key}={params[key]}" for key in sorted(params))


def summary_frame(reports: Iterable[VerifyReport]) -> pd.DataFrame:
    rows = [
        {
            "claim": r.claim,
            "params": _params_cell(r.params),
            "class_size": r.class_size,
            "threshold": r.threshold,
            "violation_count": r.violation_count,
            "extremal_value": r.extremal_value,
            "tight": r.tight,
            "construction_witnessed": r.construction_witnessed,
            "seed": r.seed,
        }
        for r in reports
    ]
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


def render_plain(report: VerifyReport) -> str:
    lines = [
        f"claim: {report.claim}",
        f"params: {_params_cell(report.params)}",
        f"class size: {report.class_size}",
    ]
    if report.threshold is not None:
        lines.append(f"threshold: {report.threshold}")
    lines.append(f"violations: {report.violation_count}")
    lines.extend(f"  {record}" for record in report.violations)
    if report.extremal_value is not None:
        lines.append(f"extremal value: {report.extremal_value} (tight: {str(report.tight).lower()})")
        lines.extend(f"  {record}" for record in report.witnesses)
    return "\n".join(lines)


def render_report(report: VerifyReport, fmt: str = "json", timing: bool = False) -> str:
    if fmt == "json":
        return report.to_json(timing=timing)
    if fmt == "csv":
        return summary_frame([report]).to_csv(index=False).rstrip("\n")
    if fmt == "plain":
        return render_plain(report)
    raise DomainError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def write_report(report: VerifyReport, path: Union[str, Path], fmt: str = "json", timing: bool = False) -> Path:
    path = Path(path)
    path.write_text(render_report(report, fmt, timing) + "\n")
    return path


def write_witnesses(report: VerifyReport, directory: Union[str, Path]) -> list[Path]:
    """One graph6 file (plus sidecar) per violation and extremal witness."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for kind, records in (("violation", report.violations), ("witness", report.witnesses)):
        for index, record in enumerate(records):
            # audit records may carry a trailing annotation
            g = decode_graph6(record.split()[0])
            host: Union[Graph, BipartiteGraph] = g
            if report.class_spec.get("mode") == "bipartite":
                host = BipartiteGraph(g, (1 << report.class_spec["n"]) - 1)
            path = directory / f"{report.claim}-{kind}-{index}.g6"
            write_graph(path, host, params={"claim": report.claim, **report.params})
            written.append(path)
    return written
