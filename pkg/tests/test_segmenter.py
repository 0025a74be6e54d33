"""Block splitting, tokenization, casing, and stop-list behaviour."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phrasemine import (
    DEFAULT_BLOCK_PUNCTUATION,
    DEFAULT_STOP_WORDS,
    Block,
    SegmenterConfig,
    StopList,
    is_stop_word,
    load_stop_list,
    split_blocks,
)
from oracle import naive_blocks


class TestSplitBlocks:
    def test_single_sentence_single_block(self):
        blocks = split_blocks(0, "The authors wrote abstract phrase mining papers.")
        assert blocks == [
            Block(0, 0, ("the", "authors", "wrote", "abstract", "phrase", "mining", "papers"))
        ]

    def test_semicolon_splits(self):
        blocks = split_blocks(3, "severe disease; the spike protein binds")
        assert [b.tokens for b in blocks] == [
            ("severe", "disease"),
            ("the", "spike", "protein", "binds"),
        ]
        assert [(b.doc, b.block) for b in blocks] == [(3, 0), (3, 1)]

    def test_empty_text(self):
        assert split_blocks(0, "") == []
        assert split_blocks(0, "   \n\t ") == []

    def test_hyphen_and_percent_stay_inside_tokens(self):
        blocks = split_blocks(0, "SARS-CoV-2 variants emerged")
        assert blocks[0].tokens == ("sars-cov-2", "variants", "emerged")
        blocks = split_blocks(0, "a 95% interval")
        assert blocks[0].tokens == ("a", "95%", "interval")

    def test_straight_apostrophe_is_word_internal(self):
        blocks = split_blocks(0, "the patient's response wasn't immediate")
        assert blocks[0].tokens == ("the", "patient's", "response", "wasn't", "immediate")

    def test_typographic_quotes_split_blocks(self):
        blocks = split_blocks(0, "said “new variant” yesterday")
        assert [b.tokens for b in blocks] == [("said",), ("new", "variant"), ("yesterday",)]

    def test_consecutive_punctuation_yields_no_empty_blocks(self):
        blocks = split_blocks(0, "one.. two (). three")
        assert [b.tokens for b in blocks] == [("one",), ("two",), ("three",)]
        assert [b.block for b in blocks] == [0, 1, 2]

    def test_whitespace_separates_tokens_but_not_blocks(self):
        blocks = split_blocks(0, "alpha\nbeta\tgamma")
        assert blocks == [Block(0, 0, ("alpha", "beta", "gamma"))]

    def test_lowercase_can_be_disabled(self):
        config = SegmenterConfig(lowercase=False)
        blocks = split_blocks(0, "Spike Protein.", config)
        assert blocks[0].tokens == ("Spike", "Protein")

    def test_custom_punctuation_replaces_default(self):
        config = SegmenterConfig(punctuation=frozenset(";"))
        blocks = split_blocks(0, "keeps. the dot; splits here")
        assert len(blocks) == 3  # default config: '.' and ';' both split
        blocks = split_blocks(0, "keeps. the dot; splits here", config)
        assert [b.tokens for b in blocks] == [
            ("keeps.", "the", "dot"),
            ("splits", "here"),
        ]

    def test_tokens_never_contain_punctuation_or_whitespace(self):
        blocks = split_blocks(0, "a.b,c;d e(f)g")
        for block in blocks:
            for token in block.tokens:
                assert not any(ch in DEFAULT_BLOCK_PUNCTUATION for ch in token)
                assert not any(ch.isspace() for ch in token)

    def test_resegmenting_a_block_is_idempotent(self):
        blocks = split_blocks(0, "mutations in the spike protein; antibody escape")
        for block in blocks:
            again = split_blocks(0, " ".join(block.tokens))
            assert again == [Block(0, 0, block.tokens)]


class TestSegmenterConfig:
    def test_default_set_excludes_word_internal_characters(self):
        for ch in "-'%+=<>":
            assert ch not in DEFAULT_BLOCK_PUNCTUATION

    def test_empty_punctuation_rejected(self):
        with pytest.raises(ValueError):
            SegmenterConfig(punctuation=frozenset())

    def test_whitespace_punctuation_rejected(self):
        with pytest.raises(ValueError):
            SegmenterConfig(punctuation=frozenset(". \t"))

    def test_multicharacter_entry_rejected(self):
        with pytest.raises(ValueError):
            SegmenterConfig(punctuation=frozenset({"ab"}))


class TestStopList:
    def test_default_membership(self):
        stops = load_stop_list()
        assert is_stop_word("the", stops)
        assert is_stop_word("of", stops)
        assert is_stop_word("not", stops)
        assert is_stop_word("no", stops)
        assert not is_stop_word("authors", stops)
        assert not is_stop_word("protein", stops)

    def test_comparison_is_case_sensitive_on_the_token(self):
        stops = load_stop_list()
        assert not is_stop_word("The", stops)  # callers normalize first

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "stops.txt"
        path.write_text("# comment\nthe\nOF\n\n  and  \n", encoding="utf-8")
        stops = load_stop_list(path)
        assert stops.words == frozenset({"the", "of", "and"})

    def test_file_replaces_default_entirely(self, tmp_path):
        path = tmp_path / "stops.txt"
        path.write_text("zzz\n", encoding="utf-8")
        stops = load_stop_list(path)
        assert not is_stop_word("the", stops)
        assert is_stop_word("zzz", stops)

    def test_default_words_are_lowercase(self):
        assert all(word == word.lower() for word in DEFAULT_STOP_WORDS)
        assert len(StopList()) == len(DEFAULT_STOP_WORDS)


# Alphabet mixing word characters, block punctuation, and whitespace so the
# splitter faces boundary pile-ups, unicode, and case folding at once.
_text_alphabet = st.sampled_from(
    list("abZ9 .;,(\n\t-'%“—xé") + ["no", "the"]
)


class TestAgainstOracle:
    @settings(max_examples=300, deadline=None)
    @given(st.lists(_text_alphabet, max_size=60).map("".join))
    def test_matches_naive_character_scan(self, text):
        engine = split_blocks(5, text)
        naive = naive_blocks(text, set(DEFAULT_BLOCK_PUNCTUATION))
        assert [list(b.tokens) for b in engine] == naive
        assert [(b.doc, b.block) for b in engine] == [(5, i) for i in range(len(naive))]

    @settings(max_examples=300, deadline=None)
    @given(st.lists(_text_alphabet, max_size=60).map("".join))
    def test_no_word_is_lost(self, text):
        flattened = [t for b in split_blocks(0, text) for t in b.tokens]
        table = {ord(ch): " " for ch in DEFAULT_BLOCK_PUNCTUATION}
        assert flattened == text.lower().translate(table).split()
