"""crossplag: cross-language plagiarism detection.

A suspect document is translated into the corpus language, normalized
(sentence split, stop-word removal, Porter stemming), fingerprinted by its
three least-frequent character 4-grams per sentence, and scored against
retrieved corpus candidates with the Jaccard resemblance of the two
fingerprint sets.
"""

__version__ = "0.1.0"

from .fingerprint import (
    DocumentFingerprintSet,
    build_frequency_table,
    extract_grams,
    fingerprint_document,
    fingerprint_sentence,
    gram_weight,
    select_least_frequent,
)
from .resemblance import ResemblanceScore, match_sentences, rank_candidates, resemblance
from .textnorm import (
    NormalizedDocument,
    RawDocument,
    Sentence,
    StopwordList,
    normalize_document,
    remove_stopwords,
    split_sentences,
    stem_token,
    tokenize,
)

__all__ = [
    "DocumentFingerprintSet",
    "NormalizedDocument",
    "RawDocument",
    "ResemblanceScore",
    "Sentence",
    "StopwordList",
    "build_frequency_table",
    "extract_grams",
    "fingerprint_document",
    "fingerprint_sentence",
    "gram_weight",
    "match_sentences",
    "normalize_document",
    "rank_candidates",
    "remove_stopwords",
    "resemblance",
    "select_least_frequent",
    "split_sentences",
    "stem_token",
    "tokenize",
]
