"""Candidate retrieval: corpus ingestion, query building, and search.

The reference backend is a local inverted index over a directory of plain
text files; the same search contract can be served by a remote HTTP search
adaptor. Retrieval only needs recall — precision comes from the
fingerprint comparison stage afterwards.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import requests

from .errors import BackendUnavailable, EmptyCorpus
from .fingerprint import DocumentFingerprintSet, fingerprint_document
from .textnorm import NormalizedDocument, RawDocument, StopwordList, normalize_document

CACHE_FILENAME = ".crossplag_index.json"
CACHE_SCHEMA = "crossplag-index/1"


@dataclass(frozen=True)
class Query:
    terms: tuple[str, ...]
    origin_sentence: int


@dataclass(frozen=True)
class SearchHit:
    doc_id: str
    score: float
    snippet: str | None = None


@dataclass
class CorpusIndex:
    corpus_dir: Path
    language: str
    gram_length: int
    stoplist_id: str
    stemmer_id: str
    postings: dict[str, list[tuple[str, int]]] = field(default_factory=dict)
    doc_store: dict[str, RawDocument] = field(default_factory=dict)
    fingerprints: dict[str, DocumentFingerprintSet] = field(default_factory=dict)
    file_mtimes: dict[str, int] = field(default_factory=dict)

    @property
    def doc_count(self) -> int:
        return len(self.doc_store)

    def document_frequency(self, token: str) -> int:
        return len(self.postings.get(token, ()))


def _corpus_files(directory: Path) -> list[Path]:
    return sorted(
        p for p in directory.rglob("*")
        if p.is_file() and not p.name.startswith(".")
    )


def ingest_corpus(
    directory: str | Path,
    stoplist: StopwordList,
    stemmer: str = "porter",
    k: int = 4,
    language: str = "en",
) -> tuple[CorpusIndex, list[str]]:
    """Index every readable text file under the directory.

    Unreadable files are skipped with a warning; an entirely unreadable or
    empty directory raises EmptyCorpus.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise EmptyCorpus(f"corpus directory {directory} does not exist")
    index = CorpusIndex(
        corpus_dir=directory,
        language=language,
        gram_length=k,
        stoplist_id=stoplist.id,
        stemmer_id=stemmer,
    )
    warnings: list[str] = []
    for path in _corpus_files(directory):
        doc_id = path.relative_to(directory).as_posix()
        try:
            text = path.read_text(encoding="utf-8")
            doc = RawDocument(id=doc_id, text=text, language=language, origin="corpus")
        except (OSError, UnicodeDecodeError, ValueError) as exc:
            warnings.append(f"skipped {doc_id}: {exc}")
            continue
        normalized = normalize_document(doc, stoplist, stemmer)
        index.doc_store[doc_id] = doc
        index.file_mtimes[doc_id] = path.stat().st_mtime_ns
        index.fingerprints[doc_id] = fingerprint_document(normalized, k)
        tf: dict[str, int] = {}
        for sentence in normalized.sentences:
            for token in sentence.tokens:
                tf[token] = tf.get(token, 0) + 1
        for token, count in tf.items():
            index.postings.setdefault(token, []).append((doc_id, count))
    if not index.doc_store:
        raise EmptyCorpus(f"no readable documents under {directory}")
    for plist in index.postings.values():
        plist.sort(key=lambda entry: entry[0])
    return index, warnings


def serialize_index(index: CorpusIndex) -> str:
    payload = {
        "schema": CACHE_SCHEMA,
        "language": index.language,
        "k": index.gram_length,
        "stoplist": index.stoplist_id,
        "stemmer": index.stemmer_id,
        "files": index.file_mtimes,
        "documents": {doc_id: doc.text for doc_id, doc in index.doc_store.items()},
        "postings": index.postings,
        "fingerprints": {
            doc_id: fps.sentence_map for doc_id, fps in index.fingerprints.items()
        },
    }
    return json.dumps(payload, sort_keys=True)


def save_index(index: CorpusIndex, path: str | Path | None = None) -> Path:
    path = Path(path) if path else index.corpus_dir / CACHE_FILENAME
    path.write_text(serialize_index(index), encoding="utf-8")
    return path


def load_index(
    corpus_dir: str | Path, path: str | Path | None = None
) -> CorpusIndex | None:
    """Load a cached index, or None when absent, incompatible, or stale."""
    corpus_dir = Path(corpus_dir)
    path = Path(path) if path else corpus_dir / CACHE_FILENAME
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return None
    if payload.get("schema") != CACHE_SCHEMA:
        return None
    index = CorpusIndex(
        corpus_dir=corpus_dir,
        language=payload["language"],
        gram_length=payload["k"],
        stoplist_id=payload["stoplist"],
        stemmer_id=payload["stemmer"],
        postings={t: [(d, c) for d, c in pl] for t, pl in payload["postings"].items()},
        doc_store={
            doc_id: RawDocument(
                id=doc_id, text=text, language=payload["language"], origin="corpus"
            )
            for doc_id, text in payload["documents"].items()
        },
        fingerprints={
            doc_id: DocumentFingerprintSet(
                doc_id=doc_id,
                gram_length=payload["k"],
                sentence_map={key: list(idx) for key, idx in fmap.items()},
            )
            for doc_id, fmap in payload["fingerprints"].items()
        },
        file_mtimes={d: int(m) for d, m in payload["files"].items()},
    )
    return index


def index_is_stale(index: CorpusIndex) -> bool:
    """True when the corpus directory changed since the index was built."""
    current = {
        p.relative_to(index.corpus_dir).as_posix(): p.stat().st_mtime_ns
        for p in _corpus_files(index.corpus_dir)
    }
    if set(current) != set(index.file_mtimes):
        return True
    return any(
        current.get(doc_id, -1) > mtime for doc_id, mtime in index.file_mtimes.items()
    )


class LocalSearchBackend:
    """Coordination-level matching over the in-process inverted index."""

    backend_id = "local"

    def __init__(self, index: CorpusIndex):
        self.index = index

    def search(self, terms: tuple[str, ...], top_k: int) -> list[SearchHit]:
        scores: dict[str, int] = {}
        for term in set(terms):
            for doc_id, _tf in self.index.postings.get(term, ()):
                scores[doc_id] = scores.get(doc_id, 0) + 1
        ranked = sorted(scores.items(), key=lambda item: (-item[1], item[0]))
        return [
            SearchHit(doc_id=doc_id, score=float(score))
            for doc_id, score in ranked[:top_k]
            if score > 0
        ]


class HttpSearchBackend:
    """Adaptor for a remote search service.

    Wire format: GET with query parameter ``q``, JSON response
    {"hits": [{"id", "score", "snippet"}]}.
    """

    backend_id = "http"

    def __init__(self, endpoint: str, timeout: float = 10.0, auth_header: str | None = None):
        self.endpoint = endpoint
        self.timeout = timeout
        self._headers = {}
        if auth_header:
            name, _, value = auth_header.partition(":")
            self._headers[name.strip()] = value.strip()

    def search(self, terms: tuple[str, ...], top_k: int) -> list[SearchHit]:
        try:
            response = requests.get(
                self.endpoint,
                params={"q": " ".join(terms)},
                headers=self._headers,
                timeout=self.timeout,
            )
        except requests.RequestException as exc:
            raise BackendUnavailable(
                f"search endpoint {self.endpoint} unreachable ({exc})"
            ) from exc
        if not 200 <= response.status_code < 300:
            raise BackendUnavailable(
                f"search endpoint returned HTTP {response.status_code}"
            )
        hits = response.json().get("hits", [])
        return [
            SearchHit(doc_id=h["id"], score=float(h["score"]), snippet=h.get("snippet"))
            for h in hits[:top_k]
        ]


def build_queries(
    doc: NormalizedDocument,
    index: CorpusIndex | None,
    w: int = 8,
    max_queries: int = 50,
) -> list[Query]:
    """One query per sentence from its leading stemmed tokens.

    When the sentence count exceeds ``max_queries``, the queries whose
    terms are rarest in the index are kept (discriminative queries first).
    """
    if w < 1:
        raise ValueError("query window must be >= 1")
    queries = [
        Query(terms=sentence.tokens[:w], origin_sentence=sentence.index)
        for sentence in doc.sentences
        if sentence.tokens
    ]
    if len(queries) <= max_queries:
        return queries

    def rarity(query: Query) -> tuple[int, int]:
        df = sum(index.document_frequency(t) for t in query.terms) if index else 0
        return (df, query.origin_sentence)

    return sorted(queries, key=rarity)[:max_queries]


def search(query: Query, backend, top_k: int = 10) -> list[SearchHit]:
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    return backend.search(query.terms, top_k)


def gather_candidates(
    queries: list[Query],
    backend,
    top_k: int = 10,
    cap: int = 50,
) -> list[str]:
    """Union of hits over all queries, ranked by how many queries hit each
    document and then by summed score, truncated to the cap."""
    votes: dict[str, int] = {}
    total_score: dict[str, float] = {}
    for query in queries:
        for hit in search(query, backend, top_k):
            votes[hit.doc_id] = votes.get(hit.doc_id, 0) + 1
            total_score[hit.doc_id] = total_score.get(hit.doc_id, 0.0) + hit.score
    ranked = sorted(
        votes,
        key=lambda doc_id: (-votes[doc_id], -total_score[doc_id], doc_id),
    )
    return ranked[:cap]
