"""Few-shot example selection with per-class coverage."""

from __future__ import annotations

import enum
import json
import math
import random
from collections import Counter
from dataclasses import dataclass, field

from .types import TN_CLASSES, SemioticClass, Sentence, Token, target_form, written_form

PROMPT_PREFIX = "Normalize: "


class Method(str, enum.Enum):
    WITH_CONTEXT = "WITH_CONTEXT"
    PSEUDO = "PSEUDO"
    RANDOM = "RANDOM"


class CoverageError(ValueError):
    def __init__(self, deficient: dict[SemioticClass, int], r: int):
        names = ", ".join(f"{c.value} ({n})" for c, n in sorted(deficient.items()))
        super().__init__(f"pool cannot cover r={r} for: {names}")
        self.deficient = deficient


@dataclass
class PromptSet:
    method: Method
    r: int
    examples: list[tuple[str, str]]
    token_estimate: int
    seed: int
    sources: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"method": self.method.value, "r": self.r,
                "examples": [list(e) for e in self.examples],
                "token_estimate": self.token_estimate, "seed": self.seed,
                "sources": list(self.sources)}

    @classmethod
    def from_dict(cls, d: dict) -> PromptSet:
        return cls(Method(d["method"]), d["r"], [tuple(e) for e in d["examples"]],
                   d["token_estimate"], d["seed"], list(d.get("sources", [])))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def estimate_tokens(text: str) -> int:
    """Rough token count: a quarter of the characters per word, at least one per word."""
    return sum(max(1, math.ceil(len(w) / 4)) for w in text.split())


def _estimate(examples: list[tuple[str, str]]) -> int:
    return sum(estimate_tokens(PROMPT_PREFIX + i) + estimate_tokens(t) for i, t in examples)


def coverage_classes(tokens) -> set[SemioticClass]:
    return {t.cls for t in tokens if t.cls in TN_CLASSES}


def class_counts(examples_tokens) -> Counter:
    """Number of examples whose input contains each coverage class."""
    counts: Counter = Counter()
    for toks in examples_tokens:
        counts.update(coverage_classes(toks))
    return counts


def _check_pool(pool: list[Sentence], r: int) -> set[SemioticClass]:
    counts = class_counts(s.tokens for s in pool)
    short = {c: n for c, n in counts.items() if n < r}
    if short:
        raise CoverageError(short, r)
    return set(counts)


def sample_with_context(pool: list[Sentence], r: int, seed: int) -> PromptSet:
    """Draw sentences at random, keeping a draw only if it helps an under-covered class."""
    needed = _check_pool(pool, r)
    rng = random.Random(seed)
    order = list(range(len(pool)))
    rng.shuffle(order)
    counts: Counter = Counter()
    chosen: list[Sentence] = []
    for k in order:
        if all(counts[c] >= r for c in needed):
            break
        classes = coverage_classes(pool[k].tokens)
        if any(counts[c] < r for c in classes):
            chosen.append(pool[k])
            counts.update(classes)
    examples = [(written_form(s), target_form(s)) for s in chosen]
    return PromptSet(Method.WITH_CONTEXT, r, examples, _estimate(examples), seed,
                     [s.id for s in chosen])


def _span_target(tokens) -> str:
    return " ".join(t.written if t.cls is SemioticClass.PUNCT else t.spoken_target
                    for t in tokens if t.spoken_target or t.cls is SemioticClass.PUNCT)


def sample_pseudo(pool: list[Sentence], r: int, seed: int, min_window: int = 2,
                  max_window: int = 6, max_tokens: int = 30) -> PromptSet:
    """Pack random token windows around non-plain tokens into pseudo-sentences.

    Coverage is counted per pseudo-sentence, so a window only starts a new
    pseudo-sentence when its useful classes are already in the current one.
    ``sources[i]`` lists example i's windows as ``id[start:end]`` joined by "+".
    """
    needed = _check_pool(pool, r)
    rng = random.Random(seed)
    centers = [(si, k) for si, s in enumerate(pool) for k, t in enumerate(s.tokens)
               if t.cls in TN_CLASSES]
    rng.shuffle(centers)
    counts: Counter = Counter()
    groups: list[list[Token]] = []
    sources: list[str] = []
    current: list[Token] = []
    current_src: list[str] = []
    current_classes: set[SemioticClass] = set()

    def flush():
        nonlocal current, current_src, current_classes
        if current:
            groups.append(current)
            sources.append("+".join(current_src))
        current, current_src, current_classes = [], [], set()

    # a token already counted inside a pseudo-sentence can be drawn again for
    # a later one, so keep passing over the centers while coverage improves
    def draws():
        while True:
            before = sum(counts.values())
            yield from centers
            if sum(counts.values()) == before:
                return

    for si, k in draws():
        if all(counts[c] >= r for c in needed):
            break
        tokens = pool[si].tokens
        size = min(rng.randint(min_window, max_window), len(tokens))
        start = max(0, min(k - (size - 1) // 2, len(tokens) - size))
        window = list(tokens[start:start + size])
        classes = coverage_classes(window)
        useful = {c for c in classes if counts[c] < r}
        if not useful:
            continue
        if useful <= current_classes or len(current) + len(window) > max_tokens:
            flush()
        current.extend(window)
        for c in classes - current_classes:
            counts[c] += 1
        current_classes |= classes
        current_src.append(f"{pool[si].id}[{start}:{start + size}]")
    flush()
    short = {c: counts[c] for c in needed if counts[c] < r}
    if short:
        raise CoverageError(short, r)
    examples = [(" ".join(t.written for t in g), _span_target(g)) for g in groups]
    return PromptSet(Method.PSEUDO, r, examples, _estimate(examples), seed, sources)


def sample_random(pool: list[Sentence], count: int, seed: int) -> PromptSet:
    if count < 0 or count > len(pool):
        raise ValueError(f"cannot draw {count} sentences from a pool of {len(pool)}")
    rng = random.Random(seed)
    chosen = rng.sample(pool, count)
    examples = [(written_form(s), target_form(s)) for s in chosen]
    return PromptSet(Method.RANDOM, count, examples, _estimate(examples), seed,
                     [s.id for s in chosen])


def sample(pool: list[Sentence], method: Method, r: int, seed: int,
           count: int | None = None) -> PromptSet:
    if method is Method.WITH_CONTEXT:
        return sample_with_context(pool, r, seed)
    if method is Method.PSEUDO:
        return sample_pseudo(pool, r, seed)
    if count is None:
        count = len(sample_with_context(pool, r, seed).examples)
    return sample_random(pool, count, seed)
