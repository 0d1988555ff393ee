"""Append-only label log and the HTTP API over it."""

from __future__ import annotations

import json
import os
import threading
import time
from dataclasses import replace
from importlib import resources
from pathlib import Path
from typing import Literal

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import HTMLResponse
from pydantic import BaseModel

from .evaluator.report import live_stats
from .types import ErrorCategory, ErrorLabel, ErrorRecord, LabelError, LabelSource


class LabelStore:
    """JSONL log of ``{id, label, ts}`` lines; the current view is last write wins.

    Every append is flushed and fsynced before returning. A torn final line
    (a crash mid-write) is cut off when the store is opened.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self.current: dict[str, ErrorLabel] = {}
        self.replay()

    def replay(self) -> dict[str, ErrorLabel]:
        view: dict[str, ErrorLabel] = {}
        if self.path.exists():
            data = self.path.read_bytes()
            good = data.rfind(b"\n") + 1
            for line in data[:good].decode("utf-8").splitlines():
                if line.strip():
                    d = json.loads(line)
                    view[d["id"]] = ErrorLabel.from_dict(d["label"])
            if good < len(data):
                with self.path.open("r+b") as f:
                    f.truncate(good)
        self.current = view
        return view

    def append(self, error_id: str, label: ErrorLabel, ts: float | None = None) -> None:
        line = json.dumps({"id": error_id, "label": label.to_dict(),
                           "ts": time.time() if ts is None else ts},
                          ensure_ascii=False, sort_keys=True)
        with self._lock:
            with self.path.open("a", encoding="utf-8") as f:
                f.write(line + "\n")
                f.flush()
                os.fsync(f.fileno())
            self.current[error_id] = label

    def get(self, error_id: str) -> ErrorLabel | None:
        return self.current.get(error_id)


def read_errors(path: str | Path) -> list[ErrorRecord]:
    out = []
    with Path(path).open(encoding="utf-8") as f:
        for line in f:
            if line.strip():
                out.append(ErrorRecord.from_dict(json.loads(line)))
    return out


def merge_labels(records: list[ErrorRecord], store: LabelStore) -> list[ErrorRecord]:
    """Records carrying their stored label where one exists, else their prelabel."""
    return [replace(r, label=store.get(r.sentence_id) or r.label) for r in records]


def _human(label: ErrorLabel | None) -> bool:
    return label is not None and label.source is LabelSource.HUMAN


class LabelBody(BaseModel):
    category: ErrorCategory
    unrecoverable: bool = False
    note: str | None = None
    correct: bool = False


def create_app(records: list[ErrorRecord], store: LabelStore, total: int) -> FastAPI:
    app = FastAPI(title="llmtn label service")
    by_id = {r.sentence_id: r for r in records}
    order = [r.sentence_id for r in records]

    def view(eid: str) -> dict:
        r = by_id[eid]
        d = r.to_dict()
        stored = store.get(eid)
        d["id"] = eid
        d["suggested"] = None if r.label is None else r.label.to_dict()
        d["label"] = None if stored is None else stored.to_dict()
        d["status"] = "labeled" if _human(stored) else "unlabeled"
        return d

    @app.get("/api/errors")
    def list_errors(status: Literal["unlabeled", "labeled", "all"] = "all",
                    offset: int = Query(0, ge=0), limit: int = Query(50, ge=1, le=1000)):
        ids = [e for e in order
               if status == "all" or (status == "labeled") == _human(store.get(e))]
        return {"total": len(ids), "offset": offset, "limit": limit,
                "items": [view(e) for e in ids[offset:offset + limit]]}

    @app.get("/api/errors/{eid}")
    def get_error(eid: str):
        if eid not in by_id:
            raise HTTPException(404, f"unknown error id {eid!r}")
        return view(eid)

    @app.post("/api/errors/{eid}/label")
    def post_label(eid: str, body: LabelBody):
        if eid not in by_id:
            raise HTTPException(404, f"unknown error id {eid!r}")
        try:
            label = ErrorLabel(body.category, body.unrecoverable, LabelSource.HUMAN,
                               body.note, body.correct)
        except LabelError as exc:
            raise HTTPException(422, str(exc)) from None
        store.append(eid, label)
        return view(eid)

    @app.get("/api/stats")
    def stats():
        return live_stats(merge_labels(records, store), total)

    @app.get("/", response_class=HTMLResponse)
    def index():
        return resources.files("llmtn").joinpath("static").joinpath("index.html") \
            .read_text("utf-8")

    return app
