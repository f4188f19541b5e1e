"""Fingerprint-set comparison: the resemblance score R and sentence alignment.

R is the Jaccard coefficient of two documents' fingerprint key sets. Two
sentences count as the same when their fingerprint keys are identical.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GramLengthMismatch
from .fingerprint import DocumentFingerprintSet
from .textnorm import NormalizedDocument


@dataclass(frozen=True)
class ResemblanceScore:
    value: float
    intersection_size: int
    union_size: int


@dataclass(frozen=True)
class SentenceMatch:
    suspect_sentence_index: int
    source_sentence_index: int
    fingerprint_key: str
    suspect_span: tuple[int, int]
    source_span: tuple[int, int]


def _check_gram_length(a: DocumentFingerprintSet, b: DocumentFingerprintSet):
    if a.gram_length != b.gram_length:
        raise GramLengthMismatch(
            f"cannot compare fingerprints built with K={a.gram_length} "
            f"and K={b.gram_length}"
        )


def resemblance(
    a: DocumentFingerprintSet, b: DocumentFingerprintSet
) -> ResemblanceScore:
    """Jaccard coefficient of the two fingerprint key sets.

    Two documents with no fingerprintable content at all score 0: they
    provide no evidence of resemblance.
    """
    _check_gram_length(a, b)
    inter = len(a.keys & b.keys)
    union = len(a.keys | b.keys)
    return ResemblanceScore(
        value=inter / union if union else 0.0,
        intersection_size=inter,
        union_size=union,
    )


def match_sentences(
    suspect_fps: DocumentFingerprintSet,
    suspect_doc: NormalizedDocument,
    source_fps: DocumentFingerprintSet,
    source_doc: NormalizedDocument,
) -> list[SentenceMatch]:
    """Pair up sentences sharing a fingerprint key (full cross product)."""
    _check_gram_length(suspect_fps, source_fps)
    suspect_spans = {s.index: s.raw_span for s in suspect_doc.sentences}
    source_spans = {s.index: s.raw_span for s in source_doc.sentences}
    matches = []
    for key in sorted(suspect_fps.keys & source_fps.keys):
        for i in suspect_fps.sentence_map[key]:
            for j in source_fps.sentence_map[key]:
                matches.append(
                    SentenceMatch(
                        suspect_sentence_index=i,
                        source_sentence_index=j,
                        fingerprint_key=key,
                        suspect_span=suspect_spans[i],
                        source_span=source_spans[j],
                    )
                )
    return matches


def rank_candidates(
    suspect: DocumentFingerprintSet,
    candidates: list[DocumentFingerprintSet],
    threshold: float,
) -> list[tuple[str, ResemblanceScore]]:
    """Score every candidate and keep those at or above the threshold,
    best first; ties are ordered by document id."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError("threshold must be in [0, 1]")
    scored = [(c.doc_id, resemblance(suspect, c)) for c in candidates]
    kept = [(doc_id, s) for doc_id, s in scored if s.value >= threshold]
    kept.sort(key=lambda item: (-item[1].value, item[0]))
    return kept
