import json
import shutil
from pathlib import Path

import pytest

from llmtn.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(wd, *args):
    return main([*args, "--workdir", str(wd)])


def test_sample_is_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for wd in (a, b):
        assert run(wd, "ingest", "--fixture") == 0
        assert run(wd, "sample", "--method", "context", "--r", "2", "--seed", "7") == 0
    assert (a / "promptset.json").read_bytes() == (b / "promptset.json").read_bytes()


def test_echo_then_evaluate(tmp_path):
    assert run(tmp_path, "ingest", "--fixture") == 0
    assert run(tmp_path, "normalize", "--client", "echo", "--n", "3") == 0
    assert run(tmp_path, "evaluate") == 0
    acc = json.loads((tmp_path / "accuracy.json").read_text())
    # echoing the written form is right only for the four sentences made of
    # plain words and punctuation (two of them Greek, so excluded but counted)
    assert acc["total"] == 50 and acc["excluded"] == 2
    assert acc["auto_errors"] == 46
    assert acc["accuracy"] == pytest.approx(4 / 50)
    errors = (tmp_path / "errors.jsonl").read_text().splitlines()
    assert len(errors) == 46
    assert all(json.loads(e)["label"]["source"] == "HEURISTIC" for e in errors)


def test_report_needs_human_labels(tmp_path, capsys):
    run(tmp_path, "ingest", "--fixture")
    run(tmp_path, "sample", "--method", "context", "--r", "2", "--seed", "7")
    run(tmp_path, "normalize", "--client", "replay", "--replay", str(FIXTURES / "replay.jsonl"))
    run(tmp_path, "evaluate")
    assert run(tmp_path, "report") == 1
    assert "--accept-heuristics" in capsys.readouterr().err
    shutil.copy(FIXTURES / "labels.jsonl", tmp_path / "labels.jsonl")
    assert run(tmp_path, "report", "--column", "GPT-4.0") == 0
    out = capsys.readouterr().out
    assert "Errors (Post Manual) |      11" in out
    assert "Final Accuracy       |    .780" in out


def test_usage_errors_exit_2(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["sample", "--bogus"])
    assert info.value.code == 2


def test_missing_inputs_are_diagnosed(tmp_path, capsys):
    assert run(tmp_path, "evaluate") == 1
    assert "corpus.jsonl" in capsys.readouterr().err
    assert run(tmp_path, "normalize", "--client", "replay") == 1


def test_grammar_check(tmp_path, capsys):
    run(tmp_path, "ingest", "--fixture")
    assert run(tmp_path, "grammar-check", "--max", "500") == 0
    assert "0 failures" in capsys.readouterr().out
