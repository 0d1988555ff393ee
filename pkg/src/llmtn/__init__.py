"""Text normalization with few-shot language models, checked against weighted grammars."""

__version__ = "0.1.0"
