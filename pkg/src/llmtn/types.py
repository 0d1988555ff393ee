"""Shared record types: semiotic classes, corpus tokens, predictions, labels."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class SemioticClass(str, enum.Enum):
    DATE = "DATE"
    TIME = "TIME"
    ADDRESS = "ADDRESS"
    ELECTRONIC = "ELECTRONIC"
    DIGIT = "DIGIT"
    FRACTION = "FRACTION"
    TELEPHONE = "TELEPHONE"
    MONEY = "MONEY"
    MEASURE = "MEASURE"
    DECIMAL = "DECIMAL"
    CARDINAL = "CARDINAL"
    ORDINAL = "ORDINAL"
    LETTERS = "LETTERS"
    VERBATIM = "VERBATIM"
    PLAIN = "PLAIN"
    PUNCT = "PUNCT"

    @classmethod
    def parse(cls, name: str) -> SemioticClass:
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown semiotic class {name!r}") from None

    @property
    def is_self_mapping(self) -> bool:
        return self in (SemioticClass.PLAIN, SemioticClass.PUNCT)


# classes that count toward prompt coverage and get real grammars
TN_CLASSES = tuple(c for c in SemioticClass if not c.is_self_mapping)


class ErrorCategory(str, enum.Enum):
    FORMAT = "FORMAT"
    PARAPHRASE = "PARAPHRASE"
    FIX = "FIX"
    ARTIFACT = "ARTIFACT"
    TRANSLATION = "TRANSLATION"
    OTHER = "OTHER"


class LabelSource(str, enum.Enum):
    HEURISTIC = "HEURISTIC"
    HUMAN = "HUMAN"


class LabelError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    cls: SemioticClass
    written: str
    spoken_target: str

    def __post_init__(self):
        if not self.written:
            raise ValueError("token written form must be non-empty")

    def to_dict(self) -> dict:
        return {"class": self.cls.value, "written": self.written,
                "spoken_target": self.spoken_target}

    @classmethod
    def from_dict(cls, d: dict) -> Token:
        return cls(SemioticClass.parse(d["class"]), d["written"], d["spoken_target"])


@dataclass(frozen=True)
class Sentence:
    id: str
    tokens: tuple[Token, ...]

    def __post_init__(self):
        if not self.tokens:
            raise ValueError(f"sentence {self.id!r} has no tokens")
        object.__setattr__(self, "tokens", tuple(self.tokens))

    def to_dict(self) -> dict:
        return {"id": self.id, "tokens": [t.to_dict() for t in self.tokens]}

    @classmethod
    def from_dict(cls, d: dict) -> Sentence:
        return cls(d["id"], tuple(Token.from_dict(t) for t in d["tokens"]))

    def classes(self) -> set[SemioticClass]:
        return {t.cls for t in self.tokens}


def written_form(s: Sentence) -> str:
    return " ".join(t.written for t in s.tokens)


def target_form(s: Sentence) -> str:
    parts = []
    for t in s.tokens:
        text = t.written if t.cls is SemioticClass.PUNCT else t.spoken_target
        if text:
            parts.append(text)
    return " ".join(parts)


def target_words(s: Sentence) -> list[tuple[str, int]]:
    """Target words paired with the index of the token that produced them."""
    out = []
    for k, t in enumerate(s.tokens):
        text = t.written if t.cls is SemioticClass.PUNCT else t.spoken_target
        out.extend((w, k) for w in text.split())
    return out


@dataclass(frozen=True)
class PredictionRecord:
    sentence_id: str
    raw_completions: tuple[str, ...]
    voted_output: str
    filtered_output: str = ""

    def __post_init__(self):
        object.__setattr__(self, "raw_completions", tuple(self.raw_completions))
        if self.voted_output not in self.raw_completions:
            raise ValueError("voted_output must be one of raw_completions")

    def to_dict(self) -> dict:
        return {"sentence_id": self.sentence_id,
                "raw_completions": list(self.raw_completions),
                "voted_output": self.voted_output,
                "filtered_output": self.filtered_output}

    @classmethod
    def from_dict(cls, d: dict) -> PredictionRecord:
        return cls(d["sentence_id"], tuple(d["raw_completions"]), d["voted_output"],
                   d.get("filtered_output", ""))


@dataclass(frozen=True)
class ErrorLabel:
    """A taxonomy verdict for one mismatch.

    ``correct`` marks a mismatch that review found to be a felicitous
    alternative; such records do not count as errors.
    """

    category: ErrorCategory
    unrecoverable: bool = False
    source: LabelSource = LabelSource.HEURISTIC
    note: str | None = None
    correct: bool = False

    def __post_init__(self):
        object.__setattr__(self, "category", ErrorCategory(self.category))
        object.__setattr__(self, "source", LabelSource(self.source))
        if self.category is ErrorCategory.FORMAT and self.unrecoverable:
            raise LabelError("FORMAT implies unrecoverable=false")
        if self.correct and self.unrecoverable:
            raise LabelError("a record resolved as correct cannot be unrecoverable")

    def to_dict(self) -> dict:
        return {"category": self.category.value, "unrecoverable": self.unrecoverable,
                "source": self.source.value, "note": self.note, "correct": self.correct}

    @classmethod
    def from_dict(cls, d: dict) -> ErrorLabel:
        return cls(ErrorCategory(d["category"]), bool(d.get("unrecoverable", False)),
                   LabelSource(d.get("source", LabelSource.HEURISTIC.value)),
                   d.get("note"), bool(d.get("correct", False)))


@dataclass(frozen=True)
class ErrorRecord:
    sentence_id: str
    written: str
    target: str
    prediction: str
    stage: str
    label: ErrorLabel | None = None
    diff_spans: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = field(default=())

    def to_dict(self) -> dict:
        return {"sentence_id": self.sentence_id, "written": self.written,
                "target": self.target, "prediction": self.prediction, "stage": self.stage,
                "label": None if self.label is None else self.label.to_dict(),
                "diff_spans": [[list(t), list(p)] for t, p in self.diff_spans]}

    @classmethod
    def from_dict(cls, d: dict) -> ErrorRecord:
        label = d.get("label")
        return cls(d["sentence_id"], d["written"], d["target"], d["prediction"], d["stage"],
                   None if label is None else ErrorLabel.from_dict(label),
                   tuple((tuple(t), tuple(p)) for t, p in d.get("diff_spans", [])))
