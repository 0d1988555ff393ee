"""Regenerate replay.jsonl: recorded completions for the bundled fixture corpus.

Usage: python3 tests/fixtures/make_replay.py

The prompt set is the one `llmtn sample --method context --r 2 --seed 7`
writes for the fixture corpus. Each sentence gets 20 completions; where a
planted output is listed it wins the vote, otherwise the target reading does.
"""

import json
import random
from pathlib import Path

from llmtn.corpus import load_fixture
from llmtn.llm import CompletionParams, build_exchange, exchange_key
from llmtn.sampler import Method, sample
from llmtn.types import target_form, written_form

HERE = Path(__file__).parent
PARAMS = CompletionParams(n=20, temperature=0.5)

PLANTED = {
    0: "two o o seven i e e e conference .",
    1: "twenty seventh oct . two thousand ten : eight",
    2: "it was originally suggested",
    3: "c d four zero four nine one three .",
    4: "student stories of nine eleven",
    5: "in eighteen ninety three ninety fourths",
    6: "more than ten crore",
    7: "the crowd shouted long live the republic .",
    8: "the greek word for cat is gata .",
    10: "the meeting is at three thirty p m on the fifth of january .",
    11: "call three twelve two thirty six twenty twelve for details .",
    12: "Sure, I can do that. the package weighs five kilograms .",
    13: "about one thousand two hundred people attended the show",
    20: '"the score was three to one ."',
    21: "mix one half cups of flour .",
    34: "he ran ten kilometres this morning .",
    45: "the flight departs at seven am .",
    49: "forty three is the answer .",
}


def completions(k, sentence, rng):
    target = target_form(sentence)
    winner = PLANTED.get(k, target)
    runner_up = target if winner != target else written_form(sentence)
    votes = [winner] * 11 + [runner_up] * 6
    words = target.split()
    for _ in range(3):
        cut = rng.randrange(len(words))
        votes.append(" ".join(words[:cut] + words[cut + 1:]) or target)
    rng.shuffle(votes)
    # keep the winner's first appearance ahead of every rival's
    votes.remove(winner)
    return [winner] + votes


def main():
    corpus = load_fixture()
    ps = sample(corpus, Method.WITH_CONTEXT, 2, 7)
    rng = random.Random(20240101)
    with (HERE / "replay.jsonl").open("w", encoding="utf-8") as f:
        for k, s in enumerate(corpus):
            key = exchange_key(build_exchange(ps, written_form(s)), PARAMS)
            outs = completions(k, s, rng)
            f.write(json.dumps({"key": key, "completions": outs}, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
