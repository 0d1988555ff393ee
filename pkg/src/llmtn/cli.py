"""Command-line entry point: one subcommand per pipeline stage, all sharing a workdir."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path

from . import corpus as corpus_mod
from .evaluator import build_report, evaluate, format_table, prelabel
from .evaluator.report import UnlabeledError
from .grammars import UnsupportedWritten, default_grammars
from .llm import (CompletionError, CompletionParams, EchoClient, HttpClient, RecordingClient,
                  ReplayClient, build_exchange, complete_many, majority_vote)
from .sampler import CoverageError, Method, PromptSet, sample
from .service import LabelStore, create_app, merge_labels, read_errors
from .types import PredictionRecord, SemioticClass, written_form

log = logging.getLogger("llmtn")

CORPUS = "corpus.jsonl"
PROMPTSET = "promptset.json"
PREDICTIONS = "predictions.jsonl"
ERRORS = "errors.jsonl"
LABELS = "labels.jsonl"
REPORT = "report.json"
ACCURACY = "accuracy.json"

METHODS = {"context": Method.WITH_CONTEXT, "pseudo": Method.PSEUDO, "random": Method.RANDOM}


class CliError(Exception):
    pass


def _need(path: Path) -> Path:
    if not path.exists():
        raise CliError(f"missing {path.name} in {path.parent}; run the earlier stage first")
    return path


def _write_text(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def cmd_ingest(args, wd: Path) -> None:
    if args.fixture:
        sentences = corpus_mod.load_fixture()
    elif args.tsv:
        sentences = corpus_mod.load_tsv(args.tsv)
        if not args.raw:
            sentences = [corpus_mod.preprocess(s) for s in sentences]
    else:
        raise CliError("give a TSV path or --fixture")
    corpus_mod.write_jsonl(sentences, wd / CORPUS)
    print(f"wrote {len(sentences)} sentences to {wd / CORPUS}")


def cmd_sample(args, wd: Path) -> None:
    pool = corpus_mod.read_jsonl(args.pool or _need(wd / CORPUS))
    ps = sample(pool, METHODS[args.method], args.r, args.seed, args.count)
    _write_text(wd / PROMPTSET, ps.to_json())
    print(f"{len(ps.examples)} examples, ~{ps.token_estimate} tokens -> {wd / PROMPTSET}")


def _client(args, wd: Path):
    if args.client == "echo":
        client = EchoClient()
    elif args.client == "replay":
        if not args.replay:
            raise CliError("--client replay needs --replay FILE")
        client = ReplayClient(args.replay)
    else:
        client = HttpClient(args.base_url, args.model, args.api_key_env)
    if args.record:
        client = RecordingClient(client, args.record)
    return client


def cmd_normalize(args, wd: Path) -> None:
    sentences = corpus_mod.read_jsonl(_need(wd / CORPUS))
    ps_path = wd / PROMPTSET
    ps = PromptSet.from_dict(json.loads(ps_path.read_text("utf-8"))) if ps_path.exists() \
        else None
    params = CompletionParams(n=args.n, temperature=args.temperature,
                              max_output_tokens=args.max_tokens)
    exchanges = [build_exchange(ps, written_form(s)) for s in sentences]
    outputs = complete_many(_client(args, wd), exchanges, params, args.parallelism)
    with (wd / PREDICTIONS).open("w", encoding="utf-8") as f:
        for s, outs in zip(sentences, outputs):
            voted, _ = majority_vote(outs)
            f.write(_dump(PredictionRecord(s.id, tuple(outs), voted).to_dict()) + "\n")
    print(f"wrote {len(sentences)} predictions to {wd / PREDICTIONS}")


def _read_predictions(path: Path) -> dict[str, PredictionRecord]:
    with path.open(encoding="utf-8") as f:
        recs = [PredictionRecord.from_dict(json.loads(ln)) for ln in f if ln.strip()]
    return {p.sentence_id: p for p in recs}


def cmd_evaluate(args, wd: Path) -> None:
    sentences = corpus_mod.read_jsonl(_need(wd / CORPUS))
    predictions = _read_predictions(_need(wd / PREDICTIONS))
    grammars = default_grammars()
    ev = evaluate(predictions, sentences, grammars)
    by_id = {s.id: s for s in sentences}
    with (wd / ERRORS).open("w", encoding="utf-8") as f:
        for e in ev.errors:
            labeled = replace(e, label=prelabel(e, by_id[e.sentence_id], grammars))
            f.write(_dump(labeled.to_dict()) + "\n")
    summary = {"total": ev.total, "excluded": len(ev.excluded), "auto_errors": len(ev.errors),
               "accuracy": ev.accuracy}
    _write_text(wd / ACCURACY, json.dumps(summary, indent=2, sort_keys=True) + "\n")
    print(f"accuracy {ev.accuracy:.4f} ({len(ev.errors)} errors / {ev.total})")


def _total(wd: Path) -> int:
    return json.loads(_need(wd / ACCURACY).read_text("utf-8"))["total"]


def cmd_report(args, wd: Path) -> None:
    records = merge_labels(read_errors(_need(wd / ERRORS)), LabelStore(wd / LABELS))
    try:
        rep = build_report(records, _total(wd), args.accept_heuristics)
    except UnlabeledError as exc:
        raise CliError(f"{exc}; label them or pass --accept-heuristics") from None
    _write_text(wd / REPORT, rep.to_json())
    sys.stdout.write(format_table({args.column: rep}))


def cmd_label_serve(args, wd: Path) -> None:
    import uvicorn

    host, _, port = args.listen.rpartition(":")
    app = create_app(read_errors(_need(wd / ERRORS)), LabelStore(wd / LABELS), _total(wd))
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))


def grammar_check(limit: int, sentences=None, out=None) -> int:
    """Cardinal round trip over 0..limit plus a containment scan; returns failures."""
    from .grammars import numbers as num, verbalize_cardinal

    out = out or sys.stdout
    g = default_grammars()
    failures = 0
    for n in range(limit + 1):
        spoken = verbalize_cardinal(n)
        if spoken != num.cardinal_words(n) or \
                str(n) not in g.inverse_normalize(SemioticClass.CARDINAL, spoken):
            failures += 1
            print(f"cardinal round trip failed for {n}", file=out)
    outside = 0
    for s in sentences or []:
        for t in s.tokens:
            if t.cls.is_self_mapping:
                continue
            try:
                ok = g.is_felicitous(t.cls, t.written, t.spoken_target)
            except UnsupportedWritten:
                ok = False
            if not ok:
                outside += 1
                print(f"note: {s.id} {t.cls.value} {t.written!r} -> {t.spoken_target!r} "
                      "is outside the felicity set", file=out)
    print(f"cardinals 0..{limit}: {failures} failures; corpus targets outside grammar: "
          f"{outside}", file=out)
    return failures


def cmd_grammar_check(args, wd: Path) -> None:
    path = wd / CORPUS
    sentences = corpus_mod.read_jsonl(path) if path.exists() else None
    if grammar_check(args.max, sentences):
        raise CliError("grammar round trip failed")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="llmtn", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--workdir", type=Path, default=Path("."))
        sp.set_defaults(fn=fn)
        return sp

    sp = add("ingest", cmd_ingest, "read a token TSV into corpus.jsonl")
    sp.add_argument("tsv", nargs="?")
    sp.add_argument("--fixture", action="store_true", help="use the bundled fixture corpus")
    sp.add_argument("--raw", action="store_true", help="skip target clean-up")

    sp = add("sample", cmd_sample, "choose few-shot examples into promptset.json")
    sp.add_argument("--method", choices=sorted(METHODS), default="context")
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, help="example count for --method random")
    sp.add_argument("--pool", type=Path, help="JSONL pool (default: the workdir corpus)")

    sp = add("normalize", cmd_normalize, "query the model and vote into predictions.jsonl")
    sp.add_argument("--client", choices=["replay", "echo", "http"], default="replay")
    sp.add_argument("--replay", type=Path)
    sp.add_argument("--record", type=Path, help="append completions to a replay file")
    sp.add_argument("--n", type=int, default=20)
    sp.add_argument("--temperature", type=float, default=0.5)
    sp.add_argument("--max-tokens", type=int, default=256)
    sp.add_argument("--parallelism", type=int, default=4)
    sp.add_argument("--base-url", default="https://api.openai.com/v1")
    sp.add_argument("--model", default="gpt-4")
    sp.add_argument("--api-key-env", default="OPENAI_API_KEY")

    add("evaluate", cmd_evaluate, "filter, compare and prelabel into errors.jsonl")

    sp = add("report", cmd_report, "count final labels into report.json")
    sp.add_argument("--accept-heuristics", action="store_true")
    sp.add_argument("--column", default="Model")

    sp = add("label-serve", cmd_label_serve, "serve the labeling API")
    sp.add_argument("--listen", default="127.0.0.1:8000")

    sp = add("grammar-check", cmd_grammar_check, "run the grammar round-trip suite")
    sp.add_argument("--max", type=int, default=99999)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    args.workdir.mkdir(parents=True, exist_ok=True)
    try:
        args.fn(args, args.workdir)
    except (CliError, CoverageError, CompletionError, corpus_mod.CorpusFormatError,
            KeyError, ValueError, OSError) as exc:
        print(f"llmtn {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
