"""Chat prompt assembly, completion clients, and majority voting."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import re
import threading
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

from .sampler import PROMPT_PREFIX, PromptSet

log = logging.getLogger(__name__)

USER = "user"
ASSISTANT = "assistant"


@dataclass(frozen=True)
class ChatExchange:
    turns: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "turns", tuple(tuple(t) for t in self.turns))
        if not self.turns or self.turns[-1][0] != USER:
            raise ValueError("an exchange must end with a user turn")
        for k, (role, _) in enumerate(self.turns):
            if role != (USER if k % 2 == 0 else ASSISTANT):
                raise ValueError(f"turn {k} should be {'user' if k % 2 == 0 else 'assistant'}")

    def messages(self) -> list[dict]:
        return [{"role": r, "content": c} for r, c in self.turns]


@dataclass(frozen=True)
class CompletionParams:
    n: int = 20
    temperature: float = 0.5
    max_output_tokens: int = 256
    timeout: float = 60.0
    max_retries: int = 5
    backoff: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.temperature < 0:
            raise ValueError("temperature must be non-negative")


def build_exchange(prompt_set: PromptSet | None, query: str) -> ChatExchange:
    turns = []
    for inp, target in (prompt_set.examples if prompt_set else []):
        turns.append((USER, PROMPT_PREFIX + inp))
        turns.append((ASSISTANT, target))
    turns.append((USER, PROMPT_PREFIX + query))
    return ChatExchange(tuple(turns))


def exchange_key(exchange: ChatExchange, params: CompletionParams) -> str:
    payload = json.dumps({"turns": [list(t) for t in exchange.turns], "n": params.n,
                          "temperature": params.temperature,
                          "max_output_tokens": params.max_output_tokens},
                         ensure_ascii=False, sort_keys=True)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class Client(Protocol):
    def complete(self, exchange: ChatExchange, params: CompletionParams) -> list[str]: ...


class CompletionError(RuntimeError):
    pass


class ReplayClient:
    """Serves completions recorded in a JSONL file of ``{key, completions}`` lines."""

    def __init__(self, path: str | Path):
        self.records: dict[str, list[str]] = {}
        with Path(path).open(encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    d = json.loads(line)
                    self.records[d["key"]] = list(d["completions"])

    def complete(self, exchange, params):
        key = exchange_key(exchange, params)
        try:
            return list(self.records[key])
        except KeyError:
            raise CompletionError(f"no recorded completions for key {key}") from None


class EchoClient:
    """Test double: returns the query text n times."""

    def complete(self, exchange, params):
        query = exchange.turns[-1][1]
        if query.startswith(PROMPT_PREFIX):
            query = query[len(PROMPT_PREFIX):]
        return [query] * params.n


class HttpClient:
    """OpenAI-compatible chat-completions client with retry on 429 and 5xx."""

    def __init__(self, base_url: str = "https://api.openai.com/v1", model: str = "gpt-4",
                 api_key_env: str = "OPENAI_API_KEY", transport=None):
        import httpx

        self.model = model
        key = os.environ.get(api_key_env, "")
        headers = {"Authorization": f"Bearer {key}"} if key else {}
        self._http = httpx.Client(base_url=base_url.rstrip("/"), headers=headers,
                                  transport=transport)

    def complete(self, exchange, params):
        body = {"model": self.model, "messages": exchange.messages(), "n": params.n,
                "temperature": params.temperature, "max_tokens": params.max_output_tokens}
        status = None
        for attempt in range(params.max_retries + 1):
            resp = self._http.post("/chat/completions", json=body, timeout=params.timeout)
            status = resp.status_code
            if status == 200:
                choices = resp.json()["choices"]
                return [c["message"]["content"] for c in choices]
            if status != 429 and status < 500:
                break
            delay = params.backoff * 2 ** attempt
            log.warning("completion request got %s, retrying in %.1fs", status, delay)
            time.sleep(delay)
        raise CompletionError(f"completion request failed with status {status}")


class RecordingClient:
    """Wraps a client and appends every result to a replay file."""

    def __init__(self, inner, path: str | Path):
        self.inner = inner
        self.path = Path(path)
        self._lock = threading.Lock()

    def complete(self, exchange, params):
        out = self.inner.complete(exchange, params)
        line = json.dumps({"key": exchange_key(exchange, params), "completions": out},
                          ensure_ascii=False)
        with self._lock, self.path.open("a", encoding="utf-8") as f:
            f.write(line + "\n")
        return out


def complete_many(client, exchanges: list[ChatExchange], params: CompletionParams,
                  parallelism: int = 4) -> list[list[str]]:
    """Run exchanges with bounded concurrency; results keep the input order."""
    if parallelism <= 1:
        return [client.complete(e, params) for e in exchanges]
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(lambda e: client.complete(e, params), exchanges))


_WS = re.compile(r"\s+")


def vote_key(text: str) -> str:
    return _WS.sub(" ", text).strip().rstrip(".").rstrip()


def majority_vote(outputs: list[str]) -> tuple[str, dict[str, int]]:
    """Plurality winner on normalized keys; ties go to the earliest candidate.

    Returns the earliest original string of the winning key and the tally by key.
    """
    if not outputs:
        raise ValueError("cannot vote on an empty list")
    tally: Counter = Counter()
    first: dict[str, int] = {}
    for k, text in enumerate(outputs):
        key = vote_key(text)
        tally[key] += 1
        first.setdefault(key, k)
    winner = min(tally, key=lambda key: (-tally[key], first[key]))
    return outputs[first[winner]], dict(tally)

