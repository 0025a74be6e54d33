"""Reporting on mined phrases: document-phrase counts, rankings, exports.

All file output is UTF-8 with LF line endings, and every ordering rule is
total, so repeated runs over the same corpus produce byte-identical files.
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass

from .extractor import PhraseIndex
from .rectifier import PrincipalPhrase, RectifyConfig, rectify

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DocumentPhraseMatrix:
    """Sparse counts of principal-phrase occurrences per document.

    counts maps (document index, phrase index) to the number of surviving
    occurrences; pairs with count zero are absent.
    """

    doc_ids: tuple[str, ...]
    phrases: tuple[str, ...]
    counts: dict[tuple[int, int], int]


def build_matrix(principals, corpus) -> DocumentPhraseMatrix:
    """Count each principal phrase's surviving occurrences per document."""
    doc_ids = tuple(doc.id for doc in corpus)
    phrases = tuple(p.text for p in principals)
    counts: dict[tuple[int, int], int] = {}
    for phrase_idx, principal in enumerate(principals):
        for loc in principal.locations:
            if loc.doc >= len(doc_ids):
                raise ValueError(
                    f"location references document index {loc.doc}, "
                    f"but the corpus has {len(doc_ids)} documents"
                )
            key = (loc.doc, phrase_idx)
            counts[key] = counts.get(key, 0) + 1
    return DocumentPhraseMatrix(doc_ids=doc_ids, phrases=phrases, counts=counts)


def top_k(principals, k: int) -> list[tuple[str, int]]:
    """The k most frequent phrases as (text, frequency), ties alphabetical."""
    if k < 0:
        raise ValueError("k must not be negative")
    ranked = sorted(principals, key=lambda p: (-p.frequency, p.text))
    return [(p.text, p.frequency) for p in ranked[:k]]


def phrases_for_document(principals, doc: int) -> list[tuple[str, int]]:
    """Alphabetical (phrase, count) pairs for one document index."""
    out = []
    for principal in principals:
        count = sum(1 for loc in principal.locations if loc.doc == doc)
        if count:
            out.append((principal.text, count))
    out.sort()
    return out


def remove_phrases(principals, banned, mode: str = "drop", *,
                   index: PhraseIndex | None = None,
                   config: RectifyConfig | None = None) -> list[PrincipalPhrase]:
    """Ban phrases after mining.

    "drop" removes them from the result list, leaving every other phrase
    untouched. "re-rectify" removes them from the candidate index and runs
    rectification again, which lets previously swallowed candidates emerge.
    Banned phrases that are not present are reported via logging and
    otherwise ignored.
    """
    banned = set(banned)
    if mode == "drop":
        known = {p.text for p in principals}
        for missing in sorted(banned - known):
            logger.warning("phrase not in result set: %s", missing)
        return [p for p in principals if p.text not in banned]
    if mode == "re-rectify":
        if index is None:
            raise ValueError("re-rectify mode needs the candidate index")
        for missing in sorted(b for b in banned if b not in index):
            logger.warning("phrase not in candidate index: %s", missing)
        return rectify(index.without(banned), config or RectifyConfig())
    raise ValueError(f"unknown mode: {mode!r}")


def phrase_records(principals) -> list[dict]:
    """Principal phrases as plain dicts, in designation order."""
    return [
        {"phrase": p.text, "n": p.n, "frequency": p.frequency}
        for p in principals
    ]


def matrix_records(matrix: DocumentPhraseMatrix) -> list[dict]:
    """Matrix cells as plain dicts: document order, then phrase order."""
    return [
        {
            "doc_id": matrix.doc_ids[doc_idx],
            "phrase": matrix.phrases[phrase_idx],
            "count": count,
        }
        for (doc_idx, phrase_idx), count in sorted(matrix.counts.items())
    ]


def write_phrases_csv(principals, path) -> None:
    """Write phrase,n,frequency rows in designation order."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["phrase", "n", "frequency"])
        for p in principals:
            writer.writerow([p.text, p.n, p.frequency])


def write_matrix_csv(matrix: DocumentPhraseMatrix, path) -> None:
    """Write doc_id,phrase,count triplets; zero cells are omitted."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["doc_id", "phrase", "count"])
        for (doc_idx, phrase_idx), count in sorted(matrix.counts.items()):
            writer.writerow([matrix.doc_ids[doc_idx], matrix.phrases[phrase_idx], count])


def write_json(value, path) -> None:
    """Write phrases or a matrix as a stable JSON document."""
    if isinstance(value, DocumentPhraseMatrix):
        records = matrix_records(value)
    else:
        records = phrase_records(value)
    _dump_json(records, path)


def write_run_json(principals, matrix: DocumentPhraseMatrix, path) -> None:
    """Write one JSON document holding both the phrase table and the matrix."""
    payload = {
        "phrases": phrase_records(principals),
        "matrix": matrix_records(matrix),
    }
    _dump_json(payload, path)


def _dump_json(payload, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(payload, handle, ensure_ascii=False, indent=2)
        handle.write("\n")
