"""Suspect-document translation through pluggable backends.

Detection runs monolingually in the corpus language, so a foreign-language
suspect is translated first. Two backends are provided: a deterministic
word-by-word bilingual dictionary (the reference backend, used by all
tests) and a generic HTTP adaptor that any real machine-translation
service can be wired to.
"""
from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from pathlib import Path

import requests

from .errors import BackendUnavailable, UnsupportedPair
from .textnorm import RawDocument, tokenize

_WORD = re.compile(r"[^\W_]+", re.UNICODE)


@dataclass(frozen=True)
class BilingualDictionary:
    """One-to-one word map loaded from a two-column TSV file."""

    source_lang: str
    target_lang: str
    entries: dict[str, str]

    @classmethod
    def load(cls, path: str | Path, source_lang: str, target_lang: str) -> "BilingualDictionary":
        entries: dict[str, str] = {}
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                src, tgt = line.split("\t")
            except ValueError:
                raise ValueError(f"malformed dictionary line: {line!r}") from None
            src, tgt = src.strip().lower(), tgt.strip().lower()
            if not src or not tgt:
                raise ValueError(f"empty word in dictionary line: {line!r}")
            entries[src] = tgt
        return cls(source_lang=source_lang, target_lang=target_lang, entries=entries)

    def inverse(self) -> "BilingualDictionary":
        return BilingualDictionary(
            source_lang=self.target_lang,
            target_lang=self.source_lang,
            entries={v: k for k, v in self.entries.items()},
        )


@dataclass
class TranslationResult:
    document: RawDocument
    untranslated: tuple[str, ...] = ()

    @property
    def partial(self) -> bool:
        return bool(self.untranslated)


def dictionary_translate(text: str, dictionary: BilingualDictionary) -> tuple[str, list[str]]:
    """Word-by-word substitution; punctuation and spacing are untouched.

    Words missing from the dictionary pass through verbatim and are
    returned in the second element.
    """
    unknown: list[str] = []

    def _sub(match: re.Match) -> str:
        word = match.group(0)
        try:
            return dictionary.entries[word.lower()]
        except KeyError:
            unknown.append(word)
            return word

    return _WORD.sub(_sub, text), unknown


class DictionaryBackend:
    """Deterministic translation backend backed by a bilingual dictionary."""

    backend_id = "dictionary"

    def __init__(self, dictionary: BilingualDictionary):
        self._dictionary = dictionary

    @property
    def supported_pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset({(self._dictionary.source_lang, self._dictionary.target_lang)})

    def translate(self, text: str, source: str, target: str) -> tuple[str, list[str]]:
        if (source, target) not in self.supported_pairs:
            raise UnsupportedPair(f"dictionary backend has no {source}->{target} mapping")
        return dictionary_translate(text, self._dictionary)


class HttpTranslationBackend:
    """Adaptor for a remote translation service.

    Wire format: POST {"text", "source", "target"} -> {"text"}. In-flight
    requests are bounded and each request carries a timeout.
    """

    backend_id = "http"

    def __init__(
        self,
        endpoint: str,
        supported_pairs: frozenset[tuple[str, str]] | None = None,
        timeout: float = 10.0,
        auth_header: str | None = None,
        max_in_flight: int = 4,
    ):
        self.endpoint = endpoint
        self._pairs = supported_pairs
        self.timeout = timeout
        self._headers = {}
        if auth_header:
            name, _, value = auth_header.partition(":")
            self._headers[name.strip()] = value.strip()
        self._slots = threading.Semaphore(max_in_flight)

    @property
    def supported_pairs(self) -> frozenset[tuple[str, str]] | None:
        # None means "any pair": the remote service decides.
        return self._pairs

    def translate(self, text: str, source: str, target: str) -> tuple[str, list[str]]:
        if self._pairs is not None and (source, target) not in self._pairs:
            raise UnsupportedPair(f"backend does not translate {source}->{target}")
        with self._slots:
            try:
                response = requests.post(
                    self.endpoint,
                    json={"text": text, "source": source, "target": target},
                    headers=self._headers,
                    timeout=self.timeout,
                )
            except requests.RequestException as exc:
                raise BackendUnavailable(
                    f"translation endpoint {self.endpoint} unreachable "
                    f"({exc}); retry when the service is back"
                ) from exc
        if not 200 <= response.status_code < 300:
            raise BackendUnavailable(
                f"translation endpoint returned HTTP {response.status_code}; "
                "retry later"
            )
        return response.json()["text"], []


def detect_language(
    text: str,
    function_words: dict[str, frozenset[str]],
    default: str = "en",
) -> tuple[str, float]:
    """Guess the language by function-word hit rate.

    The winner is the language whose function words cover the largest
    fraction of the text's tokens; confidence is the margin over the
    runner-up. With no evidence at all, the default language is returned
    with confidence 0.
    """
    tokens = tokenize(text)
    if not tokens:
        return default, 0.0
    rates = {
        lang: sum(1 for t in tokens if t in words) / len(tokens)
        for lang, words in function_words.items()
    }
    best = max(rates, key=lambda lang: (rates[lang], lang))
    if rates[best] == 0.0:
        return default, 0.0
    others = [r for lang, r in rates.items() if lang != best]
    margin = rates[best] - max(others) if others else rates[best]
    return best, margin


def translate_document(doc: RawDocument, target: str, backend) -> TranslationResult:
    """Translate a document into the target language.

    A document already in the target language is returned unchanged.
    """
    if doc.language == target:
        return TranslationResult(document=doc)
    pairs = backend.supported_pairs
    if pairs is not None and (doc.language, target) not in pairs:
        raise UnsupportedPair(
            f"backend {backend.backend_id!r} does not translate "
            f"{doc.language}->{target}"
        )
    text, unknown = backend.translate(doc.text, doc.language, target)
    translated = RawDocument(id=doc.id, text=text, language=target, origin=doc.origin)
    return TranslationResult(document=translated, untranslated=tuple(unknown))
