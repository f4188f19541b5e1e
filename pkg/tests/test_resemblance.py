"""Resemblance score R, sentence matching, candidate ranking."""
import random

import pytest

from crossplag.errors import GramLengthMismatch
from crossplag.fingerprint import (
    DocumentFingerprintSet,
    build_frequency_table,
    fingerprint_document,
    fingerprint_sentence,
)
from crossplag.resemblance import match_sentences, rank_candidates, resemblance

from conftest import random_normalized_doc


def fps_from_keys(doc_id, keys, k=4):
    return DocumentFingerprintSet(
        doc_id=doc_id,
        gram_length=k,
        sentence_map={key: [i] for i, key in enumerate(sorted(keys))},
    )


class TestResemblance:
    def test_identical_sets(self):
        a = fps_from_keys("a", {"aaaabbbbcccc", "ddddeeeeffff"})
        b = fps_from_keys("b", {"aaaabbbbcccc", "ddddeeeeffff"})
        assert resemblance(a, b).value == 1.0

    def test_disjoint_sets(self):
        a = fps_from_keys("a", {"aaaabbbbcccc"})
        b = fps_from_keys("b", {"ddddeeeeffff"})
        score = resemblance(a, b)
        assert score.value == 0.0
        assert score.intersection_size == 0 and score.union_size == 2

    def test_half_overlap(self):
        a = fps_from_keys("a", {"k1", "k2", "k3"})
        b = fps_from_keys("b", {"k2", "k3", "k4"})
        score = resemblance(a, b)
        assert (score.intersection_size, score.union_size) == (2, 4)
        assert score.value == 0.5

    def test_both_empty(self):
        assert resemblance(fps_from_keys("a", set()), fps_from_keys("b", set())).value == 0.0

    def test_gram_length_mismatch(self):
        a = fps_from_keys("a", {"aaaabbbbcccc"}, k=4)
        b = fps_from_keys("b", {"aaaaabbbbbccccc"}, k=5)
        with pytest.raises(GramLengthMismatch):
            resemblance(a, b)

    def test_random_pairs_against_set_oracle(self):
        rng = random.Random(5)
        for _ in range(200):
            a = fingerprint_document(random_normalized_doc(rng, doc_id="a"))
            b = fingerprint_document(random_normalized_doc(rng, doc_id="b"))
            score = resemblance(a, b)
            assert 0.0 <= score.value <= 1.0
            assert score.value == resemblance(b, a).value
            union = a.keys | b.keys
            expected = len(a.keys & b.keys) / len(union) if union else 0.0
            assert score.value == expected
            if a.keys:
                assert resemblance(a, a).value == 1.0

    def test_monotone_under_shared_key(self):
        rng = random.Random(17)
        for _ in range(50):
            a = fingerprint_document(random_normalized_doc(rng, doc_id="a"))
            b = fingerprint_document(random_normalized_doc(rng, doc_id="b"))
            before = resemblance(a, b).value
            a.sentence_map["zzzzyyyyxxxx"] = [0]
            b.sentence_map["zzzzyyyyxxxx"] = [0]
            assert resemblance(a, b).value >= before


class TestMatchSentences:
    def test_no_shared_keys(self):
        rng = random.Random(23)
        doc_a = random_normalized_doc(rng, doc_id="a")
        doc_b = random_normalized_doc(rng, doc_id="b")
        a = fps_from_keys("a", {"k1"})
        b = fps_from_keys("b", {"k2"})
        assert match_sentences(a, doc_a, b, doc_b) == []

    def test_cross_product(self):
        rng = random.Random(29)
        doc_a = random_normalized_doc(rng, max_sentences=3, doc_id="a")
        doc_b = random_normalized_doc(rng, max_sentences=3, doc_id="b")
        a = DocumentFingerprintSet("a", 4, {"kkkk": [0]})
        b = DocumentFingerprintSet("b", 4, {"kkkk": [0, 1]})
        matches = match_sentences(a, doc_a, b, doc_b)
        assert len(matches) == 2
        assert {m.source_sentence_index for m in matches} == {0, 1}

    def test_self_match_reflexive(self):
        rng = random.Random(31)
        doc = random_normalized_doc(rng, doc_id="a")
        fps = fingerprint_document(doc)
        matches = match_sentences(fps, doc, fps, doc)
        matched_pairs = {(m.suspect_sentence_index, m.source_sentence_index) for m in matches}
        for indices in fps.sentence_map.values():
            for i in indices:
                assert (i, i) in matched_pairs

    def test_match_soundness(self):
        """Re-fingerprinting both matched sentences reproduces the key."""
        rng = random.Random(37)
        doc_a = random_normalized_doc(rng, doc_id="a")
        doc_b = random_normalized_doc(rng, doc_id="b")
        fps_a = fingerprint_document(doc_a)
        fps_b = fingerprint_document(doc_b)
        table_a = build_frequency_table(doc_a)
        table_b = build_frequency_table(doc_b)
        for m in match_sentences(fps_a, doc_a, fps_b, doc_b):
            sa = doc_a.sentences[m.suspect_sentence_index]
            sb = doc_b.sentences[m.source_sentence_index]
            assert fingerprint_sentence(sa, table_a).key == m.fingerprint_key
            assert fingerprint_sentence(sb, table_b).key == m.fingerprint_key


class TestRankCandidates:
    def test_zero_threshold_returns_all_sorted(self):
        suspect = fps_from_keys("s", {"k1", "k2"})
        candidates = [
            fps_from_keys("c1", {"k1", "k2"}),
            fps_from_keys("c2", {"k1", "k3"}),
            fps_from_keys("c3", {"k9"}),
        ]
        ranked = rank_candidates(suspect, candidates, 0.0)
        assert [doc_id for doc_id, _ in ranked] == ["c1", "c2", "c3"]
        assert ranked[0][1].value == 1.0

    def test_threshold_one_keeps_exact_duplicates_only(self):
        suspect = fps_from_keys("s", {"k1", "k2"})
        candidates = [fps_from_keys("dup", {"k1", "k2"}), fps_from_keys("near", {"k1"})]
        ranked = rank_candidates(suspect, candidates, 1.0)
        assert [doc_id for doc_id, _ in ranked] == ["dup"]

    def test_identical_candidate_ranked_first(self):
        rng = random.Random(41)
        suspect_doc = random_normalized_doc(rng, doc_id="s")
        suspect = fingerprint_document(suspect_doc)
        if not suspect.keys:
            pytest.skip("degenerate random doc")
        twin = DocumentFingerprintSet("twin", 4, dict(suspect.sentence_map))
        others = [
            fingerprint_document(random_normalized_doc(rng, doc_id=f"o{i}"))
            for i in range(5)
        ]
        ranked = rank_candidates(suspect, [twin] + others, 0.0)
        assert ranked[0][0] == "twin"
        assert ranked[0][1].value == 1.0

    def test_tie_broken_by_doc_id(self):
        suspect = fps_from_keys("s", {"k1"})
        ranked = rank_candidates(
            suspect, [fps_from_keys("b", {"k1"}), fps_from_keys("a", {"k1"})], 0.0
        )
        assert [doc_id for doc_id, _ in ranked] == ["a", "b"]

    def test_invalid_threshold(self):
        with pytest.raises(ValueError):
            rank_candidates(fps_from_keys("s", set()), [], 1.5)
