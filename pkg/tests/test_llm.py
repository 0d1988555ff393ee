import json
import random
from collections import Counter

import httpx
import pytest

from llmtn.llm import (ChatExchange, CompletionError, CompletionParams, EchoClient, HttpClient,
                       RecordingClient, ReplayClient, build_exchange, complete_many,
                       exchange_key, majority_vote, vote_key)
from llmtn.sampler import Method, PromptSet

PS = PromptSet(Method.WITH_CONTEXT, 1, [("on 1/4", "on january fourth"), ("cd", "c d")], 0, 0)


def test_build_exchange_shapes():
    ex = build_exchange(PS, "call 911")
    assert len(ex.turns) == 2 * 2 + 1
    assert [r for r, _ in ex.turns] == ["user", "assistant", "user", "assistant", "user"]
    assert all(c.startswith("Normalize: ") for r, c in ex.turns if r == "user")
    assert ex.turns[1][1] == "on january fourth"
    assert build_exchange(None, "q").turns == (("user", "Normalize: q"),)
    one = PromptSet(Method.RANDOM, 1, [("a", "b")], 0, 0)
    assert len(build_exchange(one, "q").turns) == 3


def test_exchange_validation():
    with pytest.raises(ValueError):
        ChatExchange((("user", "a"), ("assistant", "b")))
    with pytest.raises(ValueError):
        ChatExchange((("assistant", "a"), ("user", "b")))


def test_params_validation():
    with pytest.raises(ValueError):
        CompletionParams(n=0)
    with pytest.raises(ValueError):
        CompletionParams(temperature=-0.1)


def test_echo_keeps_digits():
    out = EchoClient().complete(build_exchange(PS, "call 911"), CompletionParams(n=3))
    assert out == ["call 911"] * 3


def test_replay_and_recording(tmp_path):
    path = tmp_path / "r.jsonl"
    params = CompletionParams(n=2)
    ex = build_exchange(PS, "q")
    rec = RecordingClient(EchoClient(), path)
    assert rec.complete(ex, params) == ["q", "q"]
    line = json.loads(path.read_text().strip())
    assert line == {"key": exchange_key(ex, params), "completions": ["q", "q"]}
    replay = ReplayClient(path)
    assert replay.complete(ex, params) == ["q", "q"]
    with pytest.raises(CompletionError):
        replay.complete(build_exchange(PS, "other"), params)
    with pytest.raises(CompletionError):
        replay.complete(ex, CompletionParams(n=3))


def test_http_client_against_stub(monkeypatch):
    seen = []
    calls = Counter()

    def handler(request):
        calls["n"] += 1
        if calls["n"] == 1:
            return httpx.Response(429)
        body = json.loads(request.content)
        seen.append((request.headers.get("authorization"), body))
        return httpx.Response(200, json={"choices": [
            {"message": {"role": "assistant", "content": f"out {k}"}} for k in range(body["n"])]})

    monkeypatch.setenv("TEST_KEY", "sekret")
    client = HttpClient("http://stub/v1", "m", "TEST_KEY", transport=httpx.MockTransport(handler))
    out = client.complete(build_exchange(PS, "q"), CompletionParams(n=3, backoff=0))
    assert out == ["out 0", "out 1", "out 2"]
    auth, body = seen[0]
    assert auth == "Bearer sekret"
    assert body["model"] == "m" and body["temperature"] == 0.5
    assert body["messages"][-1] == {"role": "user", "content": "Normalize: q"}


def test_http_client_gives_up_with_status():
    client = HttpClient("http://stub", transport=httpx.MockTransport(
        lambda r: httpx.Response(503)))
    with pytest.raises(CompletionError, match="503"):
        client.complete(build_exchange(None, "q"), CompletionParams(n=1, max_retries=2,
                                                                     backoff=0))
    client = HttpClient("http://stub", transport=httpx.MockTransport(
        lambda r: httpx.Response(400)))
    with pytest.raises(CompletionError, match="400"):
        client.complete(build_exchange(None, "q"), CompletionParams(n=1, backoff=0))


def test_complete_many_keeps_order():
    exs = [build_exchange(None, str(k)) for k in range(30)]
    out = complete_many(EchoClient(), exs, CompletionParams(n=1), parallelism=8)
    assert [o[0] for o in out] == [str(k) for k in range(30)]


def test_vote_examples():
    assert majority_vote(["a", "b", "a"]) == ("a", {"a": 2, "b": 1})
    assert majority_vote(["a", "b"])[0] == "a"
    assert majority_vote(["b", "a"])[0] == "b"
    assert majority_vote(["x y .", "x  y", "z"])[0] == "x y ."
    assert vote_key("  a   b . ") == "a b"
    with pytest.raises(ValueError):
        majority_vote([])
    outs = ["the cat"] * 11 + ["a cat"] * 6 + ["cat"] * 3
    random.Random(0).shuffle(outs)
    assert majority_vote(outs)[0] == "the cat"


def test_tally_permutation_invariant():
    rng = random.Random(1)
    outs = [rng.choice(["a", "b", "c", "c ."]) for _ in range(20)]
    tally = majority_vote(outs)[1]
    for _ in range(20):
        rng.shuffle(outs)
        assert majority_vote(outs)[1] == tally
