"""Automatic evaluation, taxonomy pre-labeling and reporting."""

from .align import align, felicity_correct
from .filters import canonical, normalize_punct_articles, normalize_spelling, strip_insertions
from .labeling import prelabel
from .pipeline import Evaluation, MissingPrediction, auto_evaluate, evaluate
from .report import Report, UnlabeledError, build_report, format_table, live_stats

__all__ = [
    "align", "felicity_correct", "canonical", "normalize_punct_articles", "normalize_spelling",
    "strip_insertions", "prelabel", "Evaluation", "MissingPrediction", "auto_evaluate",
    "evaluate", "Report", "UnlabeledError", "build_report", "format_table", "live_stats",
]
