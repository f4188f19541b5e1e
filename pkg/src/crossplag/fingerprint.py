"""Character k-gram sentence fingerprints.

A sentence is represented by its three least-frequent 4-grams, where
frequency is counted over the whole document; the three grams are
concatenated into a single key that identifies the sentence during
comparison. Grams are taken from the sentence text with spaces and
punctuation removed, so a gram may span a word boundary.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import GramNotFound
from .textnorm import NormalizedDocument, Sentence

DEFAULT_GRAM_LENGTH = 4
FINGERPRINT_GRAMS = 3

_NON_ALNUM = re.compile(r"[\W_]+", re.UNICODE)


def _clean(text: str) -> str:
    return _NON_ALNUM.sub("", text.lower())


@dataclass
class GramFrequencyTable:
    """Document-level occurrence counts for every distinct gram."""

    counts: dict[str, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def distinct(self) -> int:
        return len(self.counts)

    def count(self, gram: str) -> int:
        try:
            return self.counts[gram]
        except KeyError:
            raise GramNotFound(f"gram {gram!r} not in frequency table") from None


@dataclass(frozen=True)
class SentenceFingerprint:
    grams: tuple[str, ...]

    @property
    def key(self) -> str:
        return "".join(self.grams)


@dataclass
class DocumentFingerprintSet:
    doc_id: str
    gram_length: int
    sentence_map: dict[str, list[int]] = field(default_factory=dict)

    @property
    def keys(self) -> frozenset[str]:
        return frozenset(self.sentence_map)

    def to_json(self) -> str:
        payload = {
            "doc_id": self.doc_id,
            "K": self.gram_length,
            "fingerprints": [
                {"key": key, "sentences": self.sentence_map[key]}
                for key in sorted(self.sentence_map)
            ],
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "DocumentFingerprintSet":
        payload = json.loads(text)
        return cls(
            doc_id=payload["doc_id"],
            gram_length=payload["K"],
            sentence_map={f["key"]: list(f["sentences"]) for f in payload["fingerprints"]},
        )


def extract_grams(text: str, k: int = DEFAULT_GRAM_LENGTH) -> list[str]:
    """All contiguous k-character windows of the cleaned sentence text."""
    if k < 1:
        raise ValueError("gram length must be >= 1")
    cleaned = _clean(text)
    return [cleaned[i:i + k] for i in range(len(cleaned) - k + 1)]


def _sentence_text(sentence: Sentence) -> str:
    return "".join(sentence.tokens)


def build_frequency_table(
    doc: NormalizedDocument, k: int = DEFAULT_GRAM_LENGTH
) -> GramFrequencyTable:
    table = GramFrequencyTable()
    for sentence in doc.sentences:
        for gram in extract_grams(_sentence_text(sentence), k):
            table.counts[gram] = table.counts.get(gram, 0) + 1
    return table


def gram_weight(table: GramFrequencyTable, gram: str) -> float:
    """Relative frequency of one gram: its count over the document total."""
    return table.count(gram) / table.total


def select_least_frequent(
    sentence_grams: list[str],
    table: GramFrequencyTable,
    n: int = FINGERPRINT_GRAMS,
) -> list[str]:
    """Pick the n distinct grams of the sentence with the lowest document
    count; ties broken by first occurrence within the sentence, then
    lexicographically."""
    first_seen: dict[str, int] = {}
    for position, gram in enumerate(sentence_grams):
        first_seen.setdefault(gram, position)
    ranked = sorted(
        first_seen,
        key=lambda g: (table.count(g), first_seen[g], g),
    )
    return ranked[:n]


def fingerprint_sentence(
    sentence: Sentence,
    table: GramFrequencyTable,
    k: int = DEFAULT_GRAM_LENGTH,
) -> SentenceFingerprint | None:
    grams = extract_grams(_sentence_text(sentence), k)
    if not grams:
        return None
    return SentenceFingerprint(grams=tuple(select_least_frequent(grams, table)))


def fingerprint_document(
    doc: NormalizedDocument, k: int = DEFAULT_GRAM_LENGTH
) -> DocumentFingerprintSet:
    table = build_frequency_table(doc, k)
    result = DocumentFingerprintSet(doc_id=doc.source_id, gram_length=k)
    for sentence in doc.sentences:
        fp = fingerprint_sentence(sentence, table, k)
        if fp is None:
            continue
        result.sentence_map.setdefault(fp.key, []).append(sentence.index)
    return result
