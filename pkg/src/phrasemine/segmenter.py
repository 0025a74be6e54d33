"""Splitting document text into punctuation-bounded token blocks.

A block is a maximal run of tokens with no intervening block punctuation.
Phrases never cross block boundaries, so the punctuation set decides which
word sequences can ever become candidates. Hyphens, apostrophes, and the
percent sign are deliberately not in the default set: tokens like
"sars-cov-2" and "95%" must survive whole.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

DEFAULT_BLOCK_PUNCTUATION = frozenset('.,;:!?()[]{}"…—–/\\' + "‘’“”«»")

DEFAULT_STOP_WORDS = frozenset(
    """
    a an and are as at be by for from has he in is it its of on that the to
    was we were will with not no this here their they have or but if then
    than so such these those there been being do does did can could should
    would may might also into about over under after before between during
    each other some any all most more very own same our us you your i my me
    his her she him them who what which when where why how
    """.split()
)


@dataclass(frozen=True)
class SegmenterConfig:
    """Controls block splitting: which characters break blocks, and casing."""

    punctuation: frozenset[str] = DEFAULT_BLOCK_PUNCTUATION
    lowercase: bool = True

    def __post_init__(self):
        if not self.punctuation:
            raise ValueError("punctuation set must not be empty")
        for ch in self.punctuation:
            if len(ch) != 1:
                raise ValueError(f"punctuation entries must be single characters: {ch!r}")
            if ch.isspace():
                raise ValueError("whitespace characters cannot act as block punctuation")


class Block(NamedTuple):
    """A run of tokens from one document, bounded by punctuation."""

    doc: int
    block: int
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class StopList:
    """A set of words that cannot sit on phrase boundaries."""

    words: frozenset[str] = field(default_factory=lambda: DEFAULT_STOP_WORDS)

    def __contains__(self, token: str) -> bool:
        return token in self.words

    def __len__(self) -> int:
        return len(self.words)


def load_stop_list(path=None) -> StopList:
    """Load one word per line (lowercased, # comments allowed), or the default list."""
    if path is None:
        return StopList(DEFAULT_STOP_WORDS)
    words = set()
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            word = line.strip()
            if not word or word.startswith("#"):
                continue
            words.add(word.lower())
    return StopList(frozenset(words))


def is_stop_word(token: str, stops: StopList) -> bool:
    """True when the token is on the stop list. Tokens are compared as given."""
    return token in stops


_SPLIT_CACHE: dict[frozenset[str], re.Pattern] = {}


def _splitter(punctuation: frozenset[str]) -> re.Pattern:
    pattern = _SPLIT_CACHE.get(punctuation)
    if pattern is None:
        pattern = re.compile("[" + re.escape("".join(sorted(punctuation))) + "]")
        _SPLIT_CACHE[punctuation] = pattern
    return pattern


def split_blocks(doc: int, text: str, config: SegmenterConfig | None = None) -> list[Block]:
    """Split one document's text into its non-empty token blocks, in order.

    Block indices count only non-empty blocks, starting at 0. Tokens are
    separated by whitespace within a segment; consecutive punctuation or
    punctuation around empty space yields no block.
    """
    if config is None:
        config = SegmenterConfig()
    if config.lowercase:
        text = text.lower()
    blocks = []
    index = 0
    for segment in _splitter(config.punctuation).split(text):
        tokens = segment.split()
        if tokens:
            blocks.append(Block(doc, index, tuple(tokens)))
            index += 1
    return blocks


def segment_corpus(texts: Iterable[str], config: SegmenterConfig | None = None) -> list[Block]:
    """Split a sequence of texts, numbering documents by position."""
    out = []
    for doc, text in enumerate(texts):
        out.extend(split_blocks(doc, text, config))
    return out
