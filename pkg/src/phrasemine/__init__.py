"""Principal-phrase mining for text corpora.

The pipeline: ingest documents, split them into punctuation-bounded blocks,
index every admissible n-gram occurrence, then rectify the overlapping
counts so each stretch of text is credited to one principal phrase.
"""

from .analytics import (
    DocumentPhraseMatrix,
    build_matrix,
    phrases_for_document,
    remove_phrases,
    top_k,
    write_matrix_csv,
    write_phrases_csv,
    write_json,
    write_run_json,
)
from .corpus import (
    Corpus,
    Document,
    IngestError,
    read_csv,
    read_jsonl,
    read_medline,
    read_plaintext_dir,
)
from .extractor import (
    ExtractConfig,
    Location,
    PhraseIndex,
    admissible,
    extract,
    load_exclusions,
)
from .pipeline import MiningResult, mine_corpus
from .rectifier import (
    PrincipalPhrase,
    RectifyConfig,
    order_candidates,
    rectify,
    starts_or_ends_within,
)
from .segmenter import (
    DEFAULT_BLOCK_PUNCTUATION,
    DEFAULT_STOP_WORDS,
    Block,
    SegmenterConfig,
    StopList,
    is_stop_word,
    load_stop_list,
    split_blocks,
)

__version__ = "0.1.0"

__all__ = [
    "Block",
    "Corpus",
    "DEFAULT_BLOCK_PUNCTUATION",
    "DEFAULT_STOP_WORDS",
    "Document",
    "DocumentPhraseMatrix",
    "ExtractConfig",
    "IngestError",
    "Location",
    "MiningResult",
    "PhraseIndex",
    "PrincipalPhrase",
    "RectifyConfig",
    "SegmenterConfig",
    "StopList",
    "admissible",
    "build_matrix",
    "extract",
    "is_stop_word",
    "load_exclusions",
    "load_stop_list",
    "mine_corpus",
    "order_candidates",
    "phrases_for_document",
    "read_csv",
    "read_jsonl",
    "read_medline",
    "read_plaintext_dir",
    "rectify",
    "remove_phrases",
    "split_blocks",
    "starts_or_ends_within",
    "top_k",
    "write_json",
    "write_matrix_csv",
    "write_phrases_csv",
    "write_run_json",
    "__version__",
]
