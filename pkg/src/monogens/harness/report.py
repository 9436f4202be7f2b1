"""Rendering suite reports and search results as table, JSON or CSV text."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

FORMATS = ("table", "json", "csv")


def to_json(obj) -> str:
    """Canonical JSON: insertion-ordered keys, two-space indent, trailing newline."""
    data = obj.to_dict() if hasattr(obj, "to_dict") else obj
    return json.dumps(data, indent=2) + "\n"


def _witness_text(v: dict) -> str:
    return " | ".join(w["text"] for w in v["witness"])


def report_table(report) -> str:
    d = report.to_dict()
    lines = [f"suite: {d['suite']}  seed: {d['config']['seed']}  workers: {d['config']['workers']}"]
    c = d["counts"]
    lines.append("counts: " + "  ".join(f"{k}={v}" for k, v in c.items()))
    if d["partial"]:
        lines.append("PARTIAL: a resource ceiling was hit")
    if d["verdicts"]:
        rows = [("case", "status", "witness", "detail")]
        rows += [(v["case"], v["status"], _witness_text(v), v["detail"]) for v in d["verdicts"]]
        widths = [min(48, max(len(r[i]) for r in rows)) for i in range(3)]
        for r in rows:
            cells = [r[i][:widths[i]].ljust(widths[i]) for i in range(3)]
            lines.append("  ".join(cells + [r[3]]).rstrip())
    lines.append(f"duration_ms: {d['duration_ms']}")
    return "\n".join(lines) + "\n"


def report_csv(report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check", "case", "status", "witness", "detail"])
    for v in report.to_dict()["verdicts"]:
        w.writerow([v["check"], v["case"], v["status"], _witness_text(v), v["detail"]])
    return buf.getvalue()


def render_report(report, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return report_csv(report)
    return report_table(report)


def search_table(result) -> str:
    d = result.to_dict()
    lines = [f"predicate: {d['predicate']}  space: {d['space']}  bounds: {d['bounds']}"]
    if d["witness"] is None:
        lines.append(f"exhausted: no witness among {d['scanned']} instances")
    else:
        lines.append(f"witness at index {d['index']}: " + " | ".join(w["text"] for w in d["witness"]))
        if d["violation"]:
            lines.append("VIOLATION: the witness contradicts a published statement")
    lines.append(f"duration_ms: {d['duration_ms']}")
    return "\n".join(lines) + "\n"


def search_csv(result) -> str:
    d = result.to_dict()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["predicate", "space", "exhausted", "index", "scanned", "witness"])
    witness = "" if d["witness"] is None else " | ".join(x["text"] for x in d["witness"])
    w.writerow([d["predicate"], d["space"], d["exhausted"], d["index"], d["scanned"], witness])
    return buf.getvalue()


def render_search(result, fmt: str) -> str:
    if fmt == "json":
        return to_json(result)
    if fmt == "csv":
        return search_csv(result)
    return search_table(result)


def write_report_dir(report, directory: str | Path, fmt: str = "json", figures: bool = True) -> list[Path]:
    """Write the delimited report and its figures into ``directory``."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    ext = {"table": "txt", "json": "json", "csv": "csv"}[fmt]
    path = out / f"{report.suite}.{ext}"
    path.write_text(render_report(report, fmt))
    written = [path]
    if figures:
        from . import plotting
        written += plotting.report_figures(report, out)
    return written
