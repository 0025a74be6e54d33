"""Shared fixtures and helpers for the test suite."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from phrasemine import (
    Corpus,
    Document,
    ExtractConfig,
    RectifyConfig,
    StopList,
    DEFAULT_BLOCK_PUNCTUATION,
    DEFAULT_STOP_WORDS,
    mine_corpus,
)

import walkthrough


def walkthrough_corpus() -> Corpus:
    docs = [
        Document(id=f"s{i:02d}", text=text)
        for i, text in enumerate(walkthrough.SENTENCES, 1)
    ]
    return Corpus(docs)


def mine_walkthrough(**overrides):
    """Run the full pipeline on the walkthrough corpus with its intended settings."""
    corpus = walkthrough_corpus()
    args = dict(
        extract_config=ExtractConfig(min_n=walkthrough.MIN_N, max_n=walkthrough.MAX_N),
        rectify_config=RectifyConfig(min_frequency=walkthrough.MIN_FREQUENCY),
    )
    args.update(overrides)
    return corpus, mine_corpus(corpus, **args)


@pytest.fixture
def walkthrough_result():
    return mine_walkthrough()


def engine_output_tuples(principals):
    """Engine principals as oracle-comparable (text, freq, locations) tuples."""
    return [
        (p.text, p.frequency, tuple((loc.doc, loc.block, loc.start) for loc in p.locations))
        for p in principals
    ]


def oracle_settings():
    """The default punctuation and stop list in plain-set form for the oracle."""
    return set(DEFAULT_BLOCK_PUNCTUATION), set(DEFAULT_STOP_WORDS)
