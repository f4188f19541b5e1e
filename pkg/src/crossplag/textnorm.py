"""Raw text to normalized, stemmed sentence sequences.

The pipeline here is: sentence segmentation -> tokenization -> stop-word
removal -> stemming. Sentences keep character spans into the raw text so a
report can quote the original wording later.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .errors import MissingStoplist, UnknownStemmer
from . import porter

SUPPORTED_LANGUAGES = frozenset({"en", "ms"})

_SENTENCE_END = re.compile(r"[.!?]+(?=\s|$)")
_WORD = re.compile(r"[^\W_]+", re.UNICODE)
_HAS_DIGIT = re.compile(r"\d")


@dataclass(frozen=True)
class RawDocument:
    """A document as admitted to the pipeline, before any processing."""

    id: str
    text: str
    language: str
    origin: str = "corpus"  # suspect-input | corpus | fetched

    def __post_init__(self):
        if not self.text.strip():
            raise ValueError(f"document {self.id!r} is empty")
        if self.language not in SUPPORTED_LANGUAGES:
            raise ValueError(f"unsupported language {self.language!r}")


@dataclass(frozen=True)
class Sentence:
    index: int
    raw_span: tuple[int, int]
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class NormalizedDocument:
    source_id: str
    sentences: tuple[Sentence, ...]
    stopword_list_id: str
    stemmer_id: str


@dataclass(frozen=True)
class StopwordList:
    """Named stop-word list loaded from a one-word-per-line file."""

    id: str
    words: frozenset[str]

    @classmethod
    def load(cls, path: str | Path, list_id: str | None = None) -> "StopwordList":
        path = Path(path)
        try:
            lines = path.read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise MissingStoplist(f"cannot read stop-word list {path}: {exc}") from exc
        words = frozenset(
            line.strip().lower()
            for line in lines
            if line.strip() and not line.lstrip().startswith("#")
        )
        if not words:
            raise MissingStoplist(f"stop-word list {path} is empty")
        return cls(id=list_id or path.name, words=words)

    def __contains__(self, token: str) -> bool:
        return token in self.words


STEMMERS: dict[str, Callable[[str], str]] = {"porter": porter.stem}


def split_sentences(doc: RawDocument) -> list[tuple[tuple[int, int], str]]:
    """Split raw text into sentences on terminal punctuation.

    Returns (span, text) pairs where span indexes into ``doc.text``. A final
    fragment without terminal punctuation forms its own sentence; whitespace
    between sentences is discarded.
    """
    text = doc.text
    pieces: list[tuple[tuple[int, int], str]] = []
    cursor = 0
    boundaries = [m.end() for m in _SENTENCE_END.finditer(text)]
    if not boundaries or boundaries[-1] < len(text):
        boundaries.append(len(text))
    for end in boundaries:
        fragment = text[cursor:end]
        stripped = fragment.strip()
        if stripped:
            start = cursor + (len(fragment) - len(fragment.lstrip()))
            pieces.append(((start, start + len(stripped)), text[start:start + len(stripped)]))
        cursor = end
    return pieces


def tokenize(raw_sentence_text: str) -> list[str]:
    """Lowercase and split on non-alphanumeric characters; digits are kept."""
    return _WORD.findall(raw_sentence_text.lower())


def remove_stopwords(tokens: list[str], stoplist: StopwordList) -> list[str]:
    return [t for t in tokens if t.lower() not in stoplist]


def stem_token(token: str, stemmer: str = "porter") -> str:
    """Stem one token; digit-bearing or very short tokens pass through."""
    try:
        fn = STEMMERS[stemmer]
    except KeyError:
        raise UnknownStemmer(f"no stemmer registered under {stemmer!r}") from None
    if len(token) <= 2 or _HAS_DIGIT.search(token):
        return token
    return fn(token)


def normalize_document(
    doc: RawDocument,
    stoplist: StopwordList,
    stemmer: str = "porter",
) -> NormalizedDocument:
    """Run the full normalization chain over a raw document.

    Sentences whose tokens are all stop words are kept with empty token
    lists; they simply yield no fingerprint downstream.
    """
    if stemmer not in STEMMERS:
        raise UnknownStemmer(f"no stemmer registered under {stemmer!r}")
    sentences = []
    for index, (span, text) in enumerate(split_sentences(doc)):
        tokens = remove_stopwords(tokenize(text), stoplist)
        stemmed = tuple(stem_token(t, stemmer) for t in tokens)
        sentences.append(Sentence(index=index, raw_span=span, tokens=stemmed))
    return NormalizedDocument(
        source_id=doc.id,
        sentences=tuple(sentences),
        stopword_list_id=stoplist.id,
        stemmer_id=stemmer,
    )
