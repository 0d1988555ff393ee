import json
import threading

import pytest
from fastapi.testclient import TestClient

from llmtn.service import LabelStore, create_app
from llmtn.types import ErrorLabel, ErrorRecord, LabelSource


def records(n=5):
    return [ErrorRecord(f"s:{k}", "w", "t", "p", "none", ErrorLabel("FORMAT")) for k in range(n)]


@pytest.fixture
def client(tmp_path):
    store = LabelStore(tmp_path / "labels.jsonl")
    return TestClient(create_app(records(), store, total=50)), store


def test_write_then_read(client):
    c, _ = client
    r = c.post("/api/errors/s:1/label", json={"category": "PARAPHRASE", "unrecoverable": True,
                                              "note": "swap"})
    assert r.status_code == 200
    got = c.get("/api/errors/s:1").json()
    assert got["label"] == {"category": "PARAPHRASE", "unrecoverable": True, "source": "HUMAN",
                            "note": "swap", "correct": False}
    assert got["suggested"]["source"] == "HEURISTIC"
    assert got["status"] == "labeled"


def test_format_unrecoverable_rejected(client):
    c, store = client
    r = c.post("/api/errors/s:0/label", json={"category": "FORMAT", "unrecoverable": True})
    assert r.status_code == 422
    assert "FORMAT implies unrecoverable=false" in r.json()["detail"]
    assert store.get("s:0") is None
    assert c.post("/api/errors/s:0/label", json={"category": "NOPE"}).status_code == 422


def test_unknown_id(client):
    c, _ = client
    assert c.get("/api/errors/zzz").status_code == 404
    assert c.post("/api/errors/zzz/label", json={"category": "FIX"}).status_code == 404


def test_listing_and_paging(client):
    c, _ = client
    c.post("/api/errors/s:2/label", json={"category": "FIX"})
    assert c.get("/api/errors?status=labeled").json()["total"] == 1
    page = c.get("/api/errors?status=unlabeled&offset=1&limit=2").json()
    assert page["total"] == 4
    assert [i["id"] for i in page["items"]] == ["s:1", "s:3"]
    assert c.get("/api/errors?status=bogus").status_code == 422


def test_stats_count_only_human_labels(client):
    c, _ = client
    c.post("/api/errors/s:0/label", json={"category": "FORMAT"})
    c.post("/api/errors/s:1/label", json={"category": "OTHER", "unrecoverable": True})
    s = c.get("/api/stats").json()
    assert (s["manual_errors"], s["auto_errors"], s["labeled"], s["unlabeled"]) == (2, 5, 2, 3)
    assert s["counts"]["OTHER"] == 1 and s["unrecoverable"] == 1
    assert s["accuracy"] == 1 - 2 / 50
    c.post("/api/errors/s:1/label", json={"category": "FORMAT", "correct": True})
    s = c.get("/api/stats").json()
    assert s["manual_errors"] == 1 and s["labeled"] == 2


def test_index_page(client):
    c, _ = client
    r = c.get("/")
    assert r.status_code == 200 and "/api/errors" in r.text


def test_store_replay_and_torn_tail(tmp_path):
    path = tmp_path / "labels.jsonl"
    store = LabelStore(path)
    store.append("a", ErrorLabel("FIX", source=LabelSource.HUMAN), ts=1)
    store.append("a", ErrorLabel("OTHER", True, LabelSource.HUMAN), ts=2)
    store.append("b", ErrorLabel("FORMAT", source=LabelSource.HUMAN), ts=3)
    with path.open("a") as f:
        f.write('{"id": "c", "label": {"categ')
    again = LabelStore(path)
    assert again.current == store.current
    assert again.current["a"].category.value == "OTHER"
    again.append("c", ErrorLabel("FIX", source=LabelSource.HUMAN), ts=4)
    assert LabelStore(path).current["c"].category.value == "FIX"


def test_concurrent_appends(tmp_path):
    path = tmp_path / "labels.jsonl"
    store = LabelStore(path)

    def work(k):
        for j in range(20):
            store.append(f"{k}:{j}", ErrorLabel("FIX", source=LabelSource.HUMAN))

    threads = [threading.Thread(target=work, args=(k,)) for k in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    lines = path.read_text().splitlines()
    assert len(lines) == 160
    assert all(json.loads(ln)["label"]["category"] == "FIX" for ln in lines)
    assert LabelStore(path).current == store.current
