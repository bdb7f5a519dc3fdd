"""Text, CSV and JSON renderings of results.  All counts print as exact decimals."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .closedform import SupportWeightDistribution, WeightEnumerator, WeightHierarchy

SWD_HEADER = ("Support weight", "Frequency")


@dataclass
class Report:
    q: int
    k: int
    n: int
    swd: SupportWeightDistribution | None = None
    hierarchy: WeightHierarchy | None = None
    enumerator: WeightEnumerator | None = None


def _swd_table(swd: SupportWeightDistribution) -> str:
    w = len(SWD_HEADER[0])
    head = f"{SWD_HEADER[0]}  {SWD_HEADER[1]}"
    blocks = []
    for j in sorted(swd.table):
        lines = [f"Case {j}: j={j}", head]
        lines += [f"{i:<{w}}  {c}" for i, c in swd.column(j).items()]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) if blocks else head


def render_table(r: Report) -> str:
    parts = []
    if r.swd is not None:
        parts.append(_swd_table(r.swd))
    if r.hierarchy is not None:
        parts.append(str(r.hierarchy))
    if r.enumerator is not None:
        parts.append(str(r.enumerator))
    return "\n\n".join(parts) + "\n"


def render_csv(r: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    sections = 0
    if r.swd is not None:
        w.writerow(["j", "i", "count"])
        w.writerows(r.swd.entries())
        sections += 1
    if r.hierarchy is not None:
        if sections:
            buf.write("\n")
        w.writerow(["j", "d_j"])
        w.writerows(enumerate(r.hierarchy.values, start=1))
        sections += 1
    if r.enumerator is not None:
        if sections:
            buf.write("\n")
        w.writerow(["weight", "count"])
        w.writerows(r.enumerator.terms())
    return buf.getvalue()


def to_json_obj(r: Report) -> dict:
    return {
        "q": r.q,
        "k": r.k,
        "n": r.n,
        "swd": None
        if r.swd is None
        else {str(j): {str(i): str(c) for i, c in r.swd.column(j).items()} for j in sorted(r.swd.table)},
        "hierarchy": None if r.hierarchy is None else list(r.hierarchy.values),
        "enumerator": None if r.enumerator is None else {str(e): str(c) for e, c in r.enumerator.terms()},
    }


def from_json_obj(obj: dict) -> Report:
    swd = None
    if obj.get("swd") is not None:
        swd = SupportWeightDistribution(
            obj["q"], obj["k"], obj["n"], {int(j): {int(i): int(c) for i, c in col.items()} for j, col in obj["swd"].items()}
        )
    hier = None if obj.get("hierarchy") is None else WeightHierarchy(tuple(obj["hierarchy"]))
    enum = None
    if obj.get("enumerator") is not None:
        enum = WeightEnumerator({int(e): int(c) for e, c in obj["enumerator"].items()})
    return Report(obj["q"], obj["k"], obj["n"], swd, hier, enum)


def render(r: Report, fmt: str = "table") -> str:
    if fmt == "table":
        return render_table(r)
    if fmt == "csv":
        return render_csv(r)
    if fmt == "json":
        return json.dumps(to_json_obj(r), indent=2) + "\n"
    raise ValueError(f"unknown output format {fmt!r}")
