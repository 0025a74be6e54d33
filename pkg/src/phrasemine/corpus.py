"""Corpus ingestion from plaintext directories, JSONL, CSV, and MEDLINE files.

Readers return documents with their text exactly as found in the source;
lowercasing and tokenization happen later, in the segmenter. Any structural
problem in the input (bad encoding, malformed rows, duplicate ids) raises
IngestError rather than producing a partial corpus.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator


class IngestError(ValueError):
    """Raised when an input file cannot be turned into a corpus."""


@dataclass(frozen=True)
class Document:
    """One unit of text with a stable id and optional source metadata."""

    id: str
    text: str
    meta: dict[str, str] = field(default_factory=dict)


class Corpus:
    """An ordered collection of documents with unique, non-empty ids."""

    def __init__(self, documents, meta=None):
        docs = tuple(documents)
        seen = set()
        for doc in docs:
            if not doc.id:
                raise IngestError("document with empty id")
            if doc.id in seen:
                raise IngestError(f"duplicate document id: {doc.id!r}")
            seen.add(doc.id)
        self.documents = docs
        self.meta: dict[str, str] = dict(meta or {})

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    def __getitem__(self, index: int) -> Document:
        return self.documents[index]

    def ids(self) -> tuple[str, ...]:
        return tuple(doc.id for doc in self.documents)


def read_plaintext_dir(path) -> Corpus:
    """Read every .txt file in a directory; file order is by name, id is the stem."""
    root = Path(path)
    if not root.is_dir():
        raise IngestError(f"not a directory: {root}")
    docs = []
    for file in sorted(root.iterdir(), key=lambda p: p.name):
        if not (file.is_file() and file.suffix == ".txt"):
            continue
        try:
            text = file.read_bytes().decode("utf-8")
        except UnicodeDecodeError as exc:
            raise IngestError(f"{file.name}: not valid UTF-8 ({exc})") from exc
        docs.append(Document(id=file.stem, text=text))
    return Corpus(docs)


def read_jsonl(path, id_field: str = "id", text_field: str = "text") -> Corpus:
    """Read one JSON object per line.

    A missing id field falls back to the 1-based line number. Other
    top-level string fields are kept as document metadata.
    """
    docs = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise IngestError(f"line {lineno}: malformed JSON ({exc.msg})") from exc
            if not isinstance(obj, dict):
                raise IngestError(f"line {lineno}: expected a JSON object")
            text = obj.get(text_field)
            if not isinstance(text, str):
                raise IngestError(f"line {lineno}: missing text field {text_field!r}")
            raw_id = obj.get(id_field)
            if raw_id is None:
                doc_id = str(lineno)
            elif isinstance(raw_id, (str, int)):
                doc_id = str(raw_id)
            else:
                raise IngestError(f"line {lineno}: id field {id_field!r} must be a string or integer")
            meta = {
                key: value
                for key, value in obj.items()
                if key not in (id_field, text_field) and isinstance(value, str)
            }
            docs.append(Document(id=doc_id, text=text, meta=meta))
    return Corpus(docs)


def read_csv(path, id_field: str = "id", text_field: str = "text") -> Corpus:
    """Read a CSV file with a header row naming at least the id and text columns."""
    docs = []
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None:
            raise IngestError("no header row")
        try:
            id_idx = header.index(id_field)
        except ValueError:
            raise IngestError(f"column {id_field!r} not found") from None
        try:
            text_idx = header.index(text_field)
        except ValueError:
            raise IngestError(f"column {text_field!r} not found") from None
        for rowno, row in enumerate(reader, 1):
            if not row:
                continue
            if len(row) != len(header):
                raise IngestError(
                    f"row {rowno}: expected {len(header)} fields, got {len(row)}"
                )
            meta = {
                header[i]: row[i]
                for i in range(len(header))
                if i not in (id_idx, text_idx)
            }
            docs.append(Document(id=row[id_idx], text=row[text_idx], meta=meta))
    return Corpus(docs)


def read_medline(path) -> Corpus:
    """Read a MEDLINE tagged-field export.

    Records are separated by blank lines. A field line is a tag padded to
    four characters, then "- ", then the value; continuation lines start
    with six spaces and are joined to the running value with single spaces.
    Records without an AB (abstract) field are skipped and counted in the
    corpus meta under "skipped_no_abstract".
    """
    source = Path(path)
    try:
        raw = source.read_bytes().decode("utf-8")
    except FileNotFoundError as exc:
        raise IngestError(f"no such file: {source}") from exc
    except UnicodeDecodeError as exc:
        raise IngestError(f"{source.name}: not valid UTF-8 ({exc})") from exc

    docs = []
    skipped = 0
    record_no = 0
    fields: dict[str, list[str]] = {}
    current: str | None = None

    def flush():
        nonlocal record_no, skipped
        if not fields:
            return
        record_no += 1
        abstracts = fields.get("AB")
        if abstracts is None:
            skipped += 1
        else:
            pmids = fields.get("PMID")
            if pmids is None:
                raise IngestError(f"record {record_no}: has an abstract but no PMID")
            meta = {}
            titles = fields.get("TI")
            if titles:
                meta["title"] = " ".join(titles)
            docs.append(
                Document(id=pmids[0].strip(), text=" ".join(abstracts), meta=meta)
            )
        fields.clear()

    for line in raw.splitlines():
        if not line.strip():
            flush()
            current = None
            continue
        if line.startswith("      "):
            if current is not None and fields.get(current):
                fields[current][-1] += " " + line[6:].strip()
            continue
        if len(line) >= 6 and line[4] == "-" and line[5] == " ":
            tag = line[:4].strip()
            fields.setdefault(tag, []).append(line[6:].rstrip())
            current = tag
    flush()

    corpus = Corpus(docs)
    corpus.meta["skipped_no_abstract"] = str(skipped)
    return corpus
