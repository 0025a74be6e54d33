"""Rectification: turning overlapping candidate counts into principal phrases.

Raw candidate frequencies double-count text, because every occurrence of a
long phrase also produces occurrences of all its admissible sub-phrases.
Rectification walks the candidates from longest (ties: most frequent, then
alphabetical) to shortest. A candidate whose surviving occurrence count
still meets the frequency threshold is designated a principal phrase, and
every not-yet-visited candidate loses those of its occurrences that start
or end inside one of the designated spans. Already-designated phrases are
never revisited, so a phrase keeps the count it had at designation time.

The walk order is fixed once, up front, from the raw counts; removals never
reorder it. Overlaps between two occurrences of the same phrase are left
alone, and occurrences merely containing a designated span (without a shared
endpoint region) survive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .extractor import Location, PhraseIndex, _FIELD_BITS, _FIELD_MAX, _unpack


@dataclass(frozen=True)
class RectifyConfig:
    """Frequency threshold a candidate must still meet when its turn comes."""

    min_frequency: int = 3

    def __post_init__(self):
        if self.min_frequency < 1:
            raise ValueError("min_frequency must be at least 1")


class PrincipalPhrase(NamedTuple):
    """A designated phrase with its rectified frequency and surviving locations."""

    text: str
    n: int
    frequency: int
    locations: tuple[Location, ...]


def order_candidates(index: PhraseIndex) -> list[str]:
    """Evaluation order: word count desc, then raw frequency desc, then text asc."""
    entries = index._entries
    return sorted(
        entries,
        key=lambda phrase: (-(phrase.count(" ") + 1), -len(entries[phrase]), phrase),
    )


def starts_or_ends_within(candidate: Location, candidate_n: int,
                          principal: Location, principal_n: int) -> bool:
    """True when the candidate occurrence loses tokens to the principal span.

    Both occurrences must sit in the same block; the candidate is removed
    when its first or last token falls inside the principal's token span.
    """
    if candidate.doc != principal.doc or candidate.block != principal.block:
        return False
    lo = principal.start
    hi = principal.start + principal_n - 1
    first = candidate.start
    last = candidate.start + candidate_n - 1
    return lo <= first <= hi or lo <= last <= hi


def rectify(index: PhraseIndex, config: RectifyConfig | None = None) -> list[PrincipalPhrase]:
    """Designate principal phrases in evaluation order, removing swallowed occurrences.

    The index is not modified; occurrence liveness is tracked in overlay
    arrays so the same index can be rectified again (for example after
    banning a phrase).
    """
    if config is None:
        config = RectifyConfig()
    min_frequency = config.min_frequency
    entries = index._entries

    # Candidates below the threshold on raw counts can never be designated
    # (counts only shrink) and thus never remove anything; skip them early.
    ordered = [
        (phrase, codes)
        for phrase, codes in entries.items()
        if len(codes) >= min_frequency
    ]
    ordered.sort(key=lambda item: (-(item[0].count(" ") + 1), -len(item[1]), item[0]))

    texts = [phrase for phrase, _ in ordered]
    sizes = [phrase.count(" ") + 1 for phrase in texts]
    code_lists = [codes for _, codes in ordered]
    alive = [bytearray(b"\x01") * len(codes) for codes in code_lists]
    live_counts = [len(codes) for codes in code_lists]

    # Occupancy per (doc, block): every occurrence of every candidate that
    # could still be removed, keyed by the packed doc/block prefix.
    occupancy: dict[int, list[tuple[int, int, int, int]]] = {}
    for rank, codes in enumerate(code_lists):
        span = sizes[rank] - 1
        for idx, code in enumerate(codes):
            start = code & _FIELD_MAX
            occupancy.setdefault(code >> _FIELD_BITS, []).append(
                (rank, idx, start, start + span)
            )

    principals = []
    for rank, codes in enumerate(code_lists):
        if live_counts[rank] < min_frequency:
            continue
        flags = alive[rank]
        surviving = [code for code, flag in zip(codes, flags) if flag]
        size = sizes[rank]
        principals.append(
            PrincipalPhrase(
                text=texts[rank],
                n=size,
                frequency=len(surviving),
                locations=tuple(_unpack(code) for code in surviving),
            )
        )
        span = size - 1
        for code in surviving:
            lo = code & _FIELD_MAX
            hi = lo + span
            for other_rank, idx, first, last in occupancy[code >> _FIELD_BITS]:
                if other_rank <= rank:
                    continue
                if (lo <= first <= hi) or (lo <= last <= hi):
                    flags_other = alive[other_rank]
                    if flags_other[idx]:
                        flags_other[idx] = 0
                        live_counts[other_rank] -= 1
    return principals
