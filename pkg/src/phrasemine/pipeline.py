"""End-to-end mining: segment, extract, rectify.

Extraction can fan out over a thread pool. Documents are split into
contiguous chunks, one per worker, and the per-chunk indexes are merged in
chunk order, so the merged index is identical to a sequential run no matter
how many threads execute it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .corpus import Corpus
from .extractor import ExtractConfig, PhraseIndex, extract
from .rectifier import PrincipalPhrase, RectifyConfig, rectify
from .segmenter import SegmenterConfig, split_blocks


@dataclass
class MiningResult:
    """Everything a run produced, plus the counters the summary reports."""

    principals: list[PrincipalPhrase]
    index: PhraseIndex | None
    documents: int
    blocks: int
    tokens: int
    candidates: int


def _extract_range(corpus, lo, hi, seg_config, ext_config):
    blocks = []
    for doc in range(lo, hi):
        blocks.extend(split_blocks(doc, corpus[doc].text, seg_config))
    index = extract(blocks, ext_config)
    tokens = sum(len(block.tokens) for block in blocks)
    return index, len(blocks), tokens


def mine_corpus(corpus: Corpus, *,
                segmenter_config: SegmenterConfig | None = None,
                extract_config: ExtractConfig | None = None,
                rectify_config: RectifyConfig | None = None,
                threads: int = 1,
                keep_index: bool = True) -> MiningResult:
    """Mine principal phrases from a corpus.

    keep_index=False discards the candidate index after rectification to
    free memory; re-rectification then needs a fresh run.
    """
    if threads < 1:
        raise ValueError("threads must be at least 1")
    seg_config = segmenter_config or SegmenterConfig()
    ext_config = extract_config or ExtractConfig()

    total = len(corpus)
    workers = max(1, min(threads, total))
    if workers == 1:
        index, blocks, tokens = _extract_range(corpus, 0, total, seg_config, ext_config)
    else:
        bounds = [total * i // workers for i in range(workers + 1)]
        ranges = [(bounds[i], bounds[i + 1]) for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    lambda span: _extract_range(corpus, span[0], span[1], seg_config, ext_config),
                    ranges,
                )
            )
        index = PhraseIndex.merge(part for part, _, _ in parts)
        blocks = sum(nblocks for _, nblocks, _ in parts)
        tokens = sum(ntokens for _, _, ntokens in parts)

    candidates = len(index)
    principals = rectify(index, rectify_config)
    return MiningResult(
        principals=principals,
        index=index if keep_index else None,
        documents=total,
        blocks=blocks,
        tokens=tokens,
        candidates=candidates,
    )
