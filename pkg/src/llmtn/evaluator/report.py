"""Error-count reports in the layout of the per-label error table."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from ..types import ErrorCategory, ErrorRecord, LabelSource

# display order and row names of the table
ROWS = (
    (ErrorCategory.TRANSLATION, "Foreign Language"),
    (ErrorCategory.FORMAT, "Format"),
    (ErrorCategory.PARAPHRASE, "Paraphrase"),
    (ErrorCategory.FIX, "Fix"),
    (ErrorCategory.ARTIFACT, "Artifact"),
    (ErrorCategory.OTHER, "Other"),
)


class UnlabeledError(ValueError):
    def __init__(self, ids: list[str], reason: str = "unlabeled"):
        super().__init__(f"{len(ids)} {reason} record(s): {', '.join(ids)}")
        self.ids = ids


@dataclass
class Report:
    total: int
    auto_errors: int
    manual_errors: int
    counts: dict[str, int] = field(default_factory=lambda: {c.value: 0 for c, _ in ROWS})
    unrecoverable: int = 0

    @property
    def accuracy(self) -> float:
        return 1.0 - self.manual_errors / self.total if self.total else 1.0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["accuracy"] = self.accuracy
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(d["total"], d["auto_errors"], d["manual_errors"], dict(d["counts"]),
                   d.get("unrecoverable", 0))


def build_report(records: list[ErrorRecord], total: int, accept_heuristics: bool = False
                 ) -> Report:
    """Count final labels. Records resolved as correct are not errors."""
    missing = [r.sentence_id for r in records if r.label is None]
    if missing:
        raise UnlabeledError(missing)
    if not accept_heuristics:
        heuristic = [r.sentence_id for r in records if r.label.source is not LabelSource.HUMAN]
        if heuristic:
            raise UnlabeledError(heuristic, "heuristically labeled")
    rep = Report(total, len(records), 0)
    for r in records:
        if r.label.correct:
            continue
        rep.manual_errors += 1
        rep.counts[r.label.category.value] += 1
        rep.unrecoverable += r.label.unrecoverable
    return rep


def live_stats(records: list[ErrorRecord], total: int) -> dict:
    """Progress view: counts over human labels only, plus the labeling backlog."""
    human = [r for r in records if r.label is not None and r.label.source is LabelSource.HUMAN]
    rep = build_report(human, total)
    rep.auto_errors = len(records)
    d = rep.to_dict()
    d["labeled"] = len(human)
    d["unlabeled"] = len(records) - len(human)
    return d


def _acc(x: float) -> str:
    s = f"{x:.3f}"
    return s[1:] if s.startswith("0") else s


def format_table(columns: dict[str, Report]) -> str:
    """Aligned plain-text table, one column per system."""
    names = list(columns)
    lines = [("Error Type", names)]
    reps = [columns[n] for n in names]
    lines.append(("Errors (Post Auto)", [str(r.auto_errors) for r in reps]))
    lines.append(("Errors (Post Manual)", [str(r.manual_errors) for r in reps]))
    for cat, title in ROWS:
        lines.append((title, [str(r.counts[cat.value]) for r in reps]))
    lines.append(("Final Accuracy", [_acc(r.accuracy) for r in reps]))
    lines.append(("Unrecoverable Errors", [str(r.unrecoverable) for r in reps]))
    w0 = max(len(t) for t, _ in lines)
    widths = [max(len(row[k]) for _, row in lines) for k in range(len(names))]
    out = []
    for k, (title, cells) in enumerate(lines):
        out.append(title.ljust(w0) + " | " + " | ".join(c.rjust(w) for c, w in zip(cells, widths)))
        if k == 0:
            out.append("-" * len(out[0]))
    return "\n".join(out) + "\n"
