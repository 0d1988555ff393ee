"""Reading the TN dataset TSV format, cleanup, and the non-English filter."""

from __future__ import annotations

import json
import re
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import IO, Iterable

from .types import SemioticClass, Sentence, Token, written_form

EOS = "<eos>"
SELF = "<self>"
SIL = "sil"


class CorpusFormatError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_tn_tsv(stream: IO[str] | Iterable[str], source: str = "corpus") -> list[Sentence]:
    """Group TSV rows into sentences at ``<eos>`` rows.

    Each row is ``class<TAB>written<TAB>spoken``; the ``<eos>`` row may carry
    one or two fields. A trailing sentence without ``<eos>`` is kept.
    """
    sentences: list[Sentence] = []
    tokens: list[Token] = []

    def close():
        if tokens:
            sentences.append(Sentence(f"{source}:{len(sentences)}", tuple(tokens)))
            tokens.clear()

    for line_no, line in enumerate(stream, 1):
        line = line.rstrip("\r\n")
        if not line:
            continue
        fields = line.split("\t")
        if fields[0] == EOS:
            if len(fields) > 3:
                raise CorpusFormatError(line_no, "too many fields in <eos> row")
            close()
            continue
        if len(fields) != 3:
            raise CorpusFormatError(line_no, f"expected 3 tab-separated fields, got {len(fields)}")
        name, written, spoken = fields
        try:
            cls = SemioticClass.parse(name)
        except ValueError as e:
            raise CorpusFormatError(line_no, str(e)) from None
        if not written:
            raise CorpusFormatError(line_no, "empty written field")
        if spoken == SELF:
            spoken = written.lower()
        tokens.append(Token(cls, written, spoken))
    close()
    return sentences


def load_tsv(path: str | Path, source: str | None = None) -> list[Sentence]:
    path = Path(path)
    with path.open(encoding="utf-8") as f:
        return parse_tn_tsv(f, source or path.name)


def fixture_path() -> Path:
    """The bundled 50-sentence fixture corpus."""
    return Path(str(resources.files("llmtn").joinpath("data").joinpath("fixture.tsv")))


def load_fixture() -> list[Sentence]:
    return [preprocess(s) for s in load_tsv(fixture_path(), "fixture")]


DEFAULT_SUFFIXES = ("_letter",)


def _strip_suffix(word: str, suffixes: tuple[str, ...]) -> str:
    for suffix in suffixes:
        if word.endswith(suffix) and len(word) > len(suffix):
            return word[: -len(suffix)]
    return word


def preprocess(s: Sentence, suffixes: tuple[str, ...] = DEFAULT_SUFFIXES) -> Sentence:
    """Drop "sil" artifacts and single-character suffix markers from targets."""
    tokens = []
    for t in s.tokens:
        words = t.spoken_target.split()
        if t.cls is SemioticClass.PUNCT:
            spoken = t.written if words == [SIL] or not words else t.spoken_target
        else:
            spoken = " ".join(_strip_suffix(w, suffixes) for w in words if w != SIL)
        tokens.append(Token(t.cls, t.written, spoken) if spoken != t.spoken_target else t)
    return Sentence(s.id, tuple(tokens))


# non-English detection

_ALLOWED = re.compile(r"[a-z0-9\s!-/:-@\[-`{-~]")
_FOREIGN_WORDS = frozenset("""
le la les de du des et est était une avec dans pour sur sont
der das und ist nicht mit ein eine
el los las una del y
di che il della
""".split())


@dataclass
class LanguageFilter:
    threshold: float = 0.3
    script_run: int = 3
    foreign_words: frozenset = field(default=_FOREIGN_WORDS)
    min_foreign_words: int = 2

    def check(self, text: str) -> bool:
        low = text.lower()
        chars = [ch for ch in low if not ch.isspace()]
        if chars:
            odd = sum(1 for ch in chars if not _ALLOWED.match(ch))
            if odd / len(chars) > self.threshold:
                return True
        for word in low.split():
            run = 0
            for ch in word:
                run = run + 1 if ch.isalpha() and not _is_latin(ch) else 0
                if run >= self.script_run:
                    return True
        # accented Latin text: needs function words and a diacritic to fire
        words = re.findall(r"\w+", low)
        foreign = sum(1 for w in words if w in self.foreign_words)
        accented = any(_has_diacritic(w) for w in words)
        return foreign >= self.min_foreign_words and accented


def _is_latin(ch: str) -> bool:
    return unicodedata.name(ch, "").startswith("LATIN")


def _has_diacritic(word: str) -> bool:
    return any(unicodedata.combining(c) for c in unicodedata.normalize("NFD", word))


DEFAULT_FILTER = LanguageFilter()


def is_non_english(s: Sentence | str, flt: LanguageFilter = DEFAULT_FILTER) -> bool:
    text = s if isinstance(s, str) else written_form(s)
    return flt.check(text)


# JSONL


def write_jsonl(sentences: Iterable[Sentence], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as f:
        for s in sentences:
            f.write(json.dumps(s.to_dict(), ensure_ascii=False) + "\n")


def read_jsonl(path: str | Path) -> list[Sentence]:
    with Path(path).open(encoding="utf-8") as f:
        return [Sentence.from_dict(json.loads(line)) for line in f if line.strip()]
