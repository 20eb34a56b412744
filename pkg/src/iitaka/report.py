"""Report container and the json / csv / md renderers.

Rationals are always "p/q" strings; a report never contains a float.
"""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from typing import Any

STATUSES = ("reproduced", "refuted", "error")
FLOAT_TOKEN = re.compile(r"(?<![\w/])-?\d+\.\d+(?:[eE][+-]?\d+)?|\b\d+[eE][+-]?\d+\b")


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    results: Any
    status: str = "reproduced"
    timing_ms: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "status": self.status,
            "results": self.results,
            "timing_ms": self.timing_ms,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Report":
        return cls(data["command"], data["inputs"], data["results"], data["status"],
                   data["timing_ms"])


def check_no_floats(obj: Any, path: str = "$") -> None:
    if isinstance(obj, float):
        raise TypeError(f"float value at {path}")
    if isinstance(obj, dict):
        for k, v in obj.items():
            check_no_floats(v, f"{path}.{k}")
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            check_no_floats(v, f"{path}[{i}]")


def to_json(report: Report) -> str:
    data = report.to_dict()
    check_no_floats(data)
    return json.dumps(data, indent=2) + "\n"


def flatten(obj: Any, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(obj, dict):
        out = []
        for k, v in obj.items():
            out += flatten(v, f"{prefix}.{k}" if prefix else str(k))
        return out
    if isinstance(obj, (list, tuple)):
        if not obj:
            return [(prefix, "[]")]
        out = []
        for i, v in enumerate(obj):
            out += flatten(v, f"{prefix}[{i}]")
        return out
    if obj is None:
        return [(prefix, "null")]
    if isinstance(obj, bool):
        return [(prefix, "true" if obj else "false")]
    return [(prefix, str(obj))]


def to_csv(report: Report) -> str:
    data = report.to_dict()
    check_no_floats(data)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    writer.writerows(flatten(data))
    return buf.getvalue()


def _md_cell(text: str) -> str:
    return text.replace("|", "\\|")


def to_markdown(report: Report) -> str:
    data = report.to_dict()
    check_no_floats(data)
    lines = [f"# {report.command}", "", f"status: **{report.status}**", "",
             f"timing: {report.timing_ms} ms", "", "| key | value |", "| --- | --- |"]
    for key, value in flatten({"inputs": data["inputs"], "results": data["results"]}):
        lines.append(f"| {_md_cell(key)} | {_md_cell(value)} |")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": to_json, "csv": to_csv, "md": to_markdown}
