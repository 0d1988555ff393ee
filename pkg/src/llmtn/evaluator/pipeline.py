"""The automatic evaluation chain: filters, felicity correction, exact match."""

from __future__ import annotations

import difflib
from dataclasses import dataclass, field

from ..corpus import DEFAULT_FILTER, LanguageFilter, is_non_english
from ..grammars import GrammarSet, default_grammars
from ..types import ErrorRecord, PredictionRecord, Sentence, target_form, written_form
from .align import felicity_correct
from .filters import canonical, normalize_spelling, strip_insertions

# order of the chain; an error record names the last stage that changed its text
STAGES = ("insertions", "language", "felicity", "spelling", "punct_articles")


class MissingPrediction(KeyError):
    pass


@dataclass
class Evaluation:
    total: int
    errors: list[ErrorRecord]
    filtered: dict[str, str] = field(default_factory=dict)
    excluded: list[str] = field(default_factory=list)

    @property
    def accuracy(self) -> float:
        return 1.0 - len(self.errors) / self.total if self.total else 1.0


def diff_spans(target: str, prediction: str) -> tuple:
    """Word-index spans where target and prediction differ after canonicalization."""
    tw, pw = target.split(), prediction.split()
    tk = [canonical(w) for w in tw]
    pk = [canonical(w) for w in pw]
    sm = difflib.SequenceMatcher(a=tk, b=pk, autojunk=False)
    spans = []
    for op, i1, i2, j1, j2 in sm.get_opcodes():
        if op == "equal":
            continue
        if canonical(" ".join(tw[i1:i2])) == canonical(" ".join(pw[j1:j2])):
            continue
        spans.append(((i1, i2), (j1, j2)))
    return tuple(spans)


def filter_prediction(raw: str, sentence: Sentence, grammars: GrammarSet) -> tuple[str, str]:
    """Run the text stages; returns (filtered text, last stage that changed it)."""
    stage = "none"
    text = strip_insertions(raw)
    if text != raw:
        stage = "insertions"
    corrected = felicity_correct(text, sentence, grammars)
    if corrected != text:
        stage = "felicity"
    spelled = normalize_spelling(corrected)
    if spelled != corrected:
        stage = "spelling"
    return spelled, stage


def evaluate(predictions: dict[str, PredictionRecord] | list[PredictionRecord],
             corpus: list[Sentence], grammars: GrammarSet | None = None,
             language: LanguageFilter = DEFAULT_FILTER) -> Evaluation:
    grammars = grammars or default_grammars()
    if not isinstance(predictions, dict):
        predictions = {p.sentence_id: p for p in predictions}
    errors, filtered, excluded = [], {}, []
    for s in corpus:
        if s.id not in predictions:
            raise MissingPrediction(f"no prediction for sentence {s.id}")
        if is_non_english(s, language):
            excluded.append(s.id)
            continue
        raw = predictions[s.id].voted_output
        text, stage = filter_prediction(raw, s, grammars)
        filtered[s.id] = text
        target = target_form(s)
        if canonical(text) == canonical(target):
            continue
        errors.append(ErrorRecord(s.id, written_form(s), target, text, stage,
                                  diff_spans=diff_spans(target, text)))
    return Evaluation(len(corpus), errors, filtered, excluded)


def auto_evaluate(predictions, corpus: list[Sentence], grammars: GrammarSet | None = None
                  ) -> tuple[float, list[ErrorRecord]]:
    ev = evaluate(predictions, corpus, grammars)
    return ev.accuracy, ev.errors
