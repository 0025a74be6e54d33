"""Candidate n-gram extraction with stop-word boundary rules.

A token window is admissible when it does not start with a stop word
(except "not" and "no", which may open a phrase), does not end with a stop
word, and is not on the exclusion list. Stop words may appear freely in the
interior. Every admissible window inside a block is recorded with its exact
position, because rectification later needs to know which occurrences
overlap which.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .segmenter import Block, StopList

PHRASE_START_EXCEPTIONS = frozenset({"not", "no"})

_FIELD_BITS = 21
_FIELD_MAX = (1 << _FIELD_BITS) - 1
_DOC_SHIFT = 2 * _FIELD_BITS
_BLOCK_SHIFT = _FIELD_BITS


class Location(NamedTuple):
    """Where one occurrence of a phrase starts: document, block, token offset."""

    doc: int
    block: int
    start: int


def _pack(doc: int, block: int, start: int) -> int:
    return (doc << _DOC_SHIFT) | (block << _BLOCK_SHIFT) | start


def _unpack(code: int) -> Location:
    return Location(code >> _DOC_SHIFT, (code >> _BLOCK_SHIFT) & _FIELD_MAX, code & _FIELD_MAX)


@dataclass(frozen=True)
class ExtractConfig:
    """Bounds and boundary rules for candidate extraction."""

    min_n: int = 2
    max_n: int = 8
    stops: StopList = field(default_factory=StopList)
    exclusions: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.min_n < 1:
            raise ValueError("min_n must be at least 1")
        if self.max_n < self.min_n:
            raise ValueError("max_n must not be smaller than min_n")


def admissible(tokens, stops: StopList, exclusions: frozenset[str] = frozenset()) -> bool:
    """Decide whether a token window may become a candidate phrase.

    A single stop word is never admissible, even "not" or "no": the start
    exception only opens longer phrases, and a 1-gram's start is also its
    end.
    """
    if not tokens:
        return False
    first, last = tokens[0], tokens[-1]
    if first in stops and first not in PHRASE_START_EXCEPTIONS:
        return False
    if last in stops:
        return False
    return " ".join(tokens) not in exclusions


class PhraseIndex:
    """Candidate phrases mapped to every location where they occur.

    Locations are stored packed into integers (21 bits each for document,
    block, and start) so that a large corpus stays in a handful of flat int
    lists. Entry order is the order in which phrases were first seen, which
    makes downstream tie-handling reproducible.
    """

    __slots__ = ("_entries",)

    def __init__(self):
        self._entries: dict[str, list[int]] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, phrase: str) -> bool:
        return phrase in self._entries

    def phrases(self) -> Iterator[str]:
        return iter(self._entries)

    def frequency(self, phrase: str) -> int:
        return len(self._entries.get(phrase, ()))

    def locations(self, phrase: str) -> list[Location]:
        return [_unpack(code) for code in self._entries.get(phrase, ())]

    def total_locations(self) -> int:
        return sum(len(codes) for codes in self._entries.values())

    def as_dict(self) -> dict[str, list[Location]]:
        """Decode the whole index; intended for tests and small corpora."""
        return {phrase: self.locations(phrase) for phrase in self._entries}

    def without(self, phrases) -> "PhraseIndex":
        """A copy of this index minus the given phrases."""
        banned = set(phrases)
        out = PhraseIndex()
        out._entries = {
            phrase: list(codes)
            for phrase, codes in self._entries.items()
            if phrase not in banned
        }
        return out

    @classmethod
    def from_locations(cls, mapping) -> "PhraseIndex":
        """Build an index from {phrase: [(doc, block, start), ...]}."""
        out = cls()
        for phrase, locs in mapping.items():
            out._entries[phrase] = [_pack(d, b, s) for d, b, s in locs]
        return out

    @classmethod
    def merge(cls, parts: Iterable["PhraseIndex"]) -> "PhraseIndex":
        """Concatenate part indexes in order; parts must not be reused after."""
        merged: dict[str, list[int]] = {}
        for part in parts:
            for phrase, codes in part._entries.items():
                existing = merged.get(phrase)
                if existing is None:
                    merged[phrase] = codes
                else:
                    existing.extend(codes)
        out = cls()
        out._entries = merged
        return out


def extract(blocks: Iterable[Block], config: ExtractConfig | None = None) -> PhraseIndex:
    """Index every admissible n-gram occurrence in the given blocks."""
    if config is None:
        config = ExtractConfig()
    min_n = config.min_n
    max_n = config.max_n
    stop_words = config.stops.words
    starters = PHRASE_START_EXCEPTIONS
    exclusions = config.exclusions
    has_exclusions = bool(exclusions)
    singles = min_n == 1
    index = PhraseIndex()
    entries = index._entries
    entries_get = entries.get

    for block in blocks:
        tokens = block.tokens
        count = len(tokens)
        if block.doc > _FIELD_MAX or block.block > _FIELD_MAX or count - 1 > _FIELD_MAX:
            raise ValueError("corpus exceeds location index capacity (2^21 per field)")
        base = (block.doc << _DOC_SHIFT) | (block.block << _BLOCK_SHIFT)

        # Stop-word flags and character offsets into the joined block text,
        # so each admissible window becomes a single string slice instead of
        # incremental concatenation across the whole window.
        joined = " ".join(tokens)
        is_stop = []
        char_end = []
        pos = 0
        for token in tokens:
            is_stop.append(token in stop_words)
            pos += len(token)
            char_end.append(pos)
            pos += 1

        for start in range(count):
            if is_stop[start] and tokens[start] not in starters:
                continue
            loc = base | start
            if singles and not is_stop[start]:
                phrase = tokens[start]
                if not has_exclusions or phrase not in exclusions:
                    slot = entries_get(phrase)
                    if slot is None:
                        entries[phrase] = [loc]
                    else:
                        slot.append(loc)
            char_start = char_end[start] - len(tokens[start])
            first_end = start + min_n - 1
            if first_end <= start:
                first_end = start + 1
            for end in range(first_end, min(count, start + max_n)):
                if is_stop[end]:
                    continue
                phrase = joined[char_start:char_end[end]]
                if has_exclusions and phrase in exclusions:
                    continue
                slot = entries_get(phrase)
                if slot is None:
                    entries[phrase] = [loc]
                else:
                    slot.append(loc)
    return index


def load_exclusions(path) -> frozenset[str]:
    """Load excluded phrases: one per line, lowercased, whitespace collapsed."""
    phrases = set()
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            phrases.add(" ".join(stripped.lower().split()))
    return frozenset(phrases)
