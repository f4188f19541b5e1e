"""End-to-end orchestration: translate, normalize, retrieve, compare, report."""
from __future__ import annotations

from pathlib import Path

from .config import PipelineConfig, data_path
from .errors import PipelineError
from .fingerprint import fingerprint_document
from .report import DetectionReport, assemble_report
from .resemblance import rank_candidates, resemblance
from .retrieval import (
    CorpusIndex,
    HttpSearchBackend,
    LocalSearchBackend,
    build_queries,
    gather_candidates,
    index_is_stale,
    ingest_corpus,
    load_index,
    save_index,
)
from .textnorm import RawDocument, StopwordList, normalize_document
from .translation import (
    BilingualDictionary,
    DictionaryBackend,
    HttpTranslationBackend,
    detect_language,
    translate_document,
)


def load_stoplist(config: PipelineConfig) -> StopwordList:
    return StopwordList.load(config.stoplist_path)


def language_profiles() -> dict[str, frozenset[str]]:
    """Function-word sets used for language identification."""
    profiles = {}
    for lang, filename in (("en", "stopwords_en.txt"), ("ms", "function_words_ms.txt")):
        profiles[lang] = StopwordList.load(data_path(filename)).words
    return profiles


def make_translation_backend(config: PipelineConfig, source_language: str):
    if config.translation_backend == "http":
        return HttpTranslationBackend(
            endpoint=config.translation_endpoint,
            timeout=config.http_timeout,
            auth_header=config.auth_header,
        )
    dictionary = BilingualDictionary.load(
        config.dictionary_path, source_language, config.corpus_language
    )
    return DictionaryBackend(dictionary)


def make_search_backend(config: PipelineConfig, index: CorpusIndex):
    if config.search_backend == "http":
        return HttpSearchBackend(
            endpoint=config.search_endpoint,
            timeout=config.http_timeout,
            auth_header=config.auth_header,
        )
    return LocalSearchBackend(index)


def index_is_current(index: CorpusIndex, config: PipelineConfig, stoplist: StopwordList) -> bool:
    return (
        index.gram_length == config.k
        and index.stoplist_id == stoplist.id
        and index.language == config.corpus_language
        and not index_is_stale(index)
    )


def ensure_index(
    corpus_dir: str | Path, config: PipelineConfig, stoplist: StopwordList
) -> tuple[CorpusIndex, list[str], bool]:
    """Load the cached index if current, otherwise rebuild and cache it.

    Returns (index, warnings, rebuilt).
    """
    cached = load_index(corpus_dir)
    if cached is not None and index_is_current(cached, config, stoplist):
        return cached, [], False
    index, warnings = ingest_corpus(
        corpus_dir,
        stoplist,
        stemmer="porter",
        k=config.k,
        language=config.corpus_language,
    )
    save_index(index)
    return index, warnings, True


def _report_parameters(config: PipelineConfig, stoplist: StopwordList) -> dict:
    return {
        "k": config.k,
        "threshold": config.threshold,
        "stoplist": stoplist.id,
        "stemmer": "porter",
        "w": config.w,
        "top_k": config.top_k,
        "cap": config.cap,
    }


def detect(
    suspect_path: str | Path, corpus_dir: str | Path, config: PipelineConfig
) -> DetectionReport:
    """Run the full detection pipeline for one suspect file."""
    suspect_path = Path(suspect_path)
    try:
        text = suspect_path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise PipelineError(f"cannot read suspect file {suspect_path}: {exc}") from exc

    stoplist = load_stoplist(config)
    index, warnings, _ = ensure_index(corpus_dir, config, stoplist)

    if config.source_language:
        source_language = config.source_language
    else:
        source_language, _confidence = detect_language(
            text, language_profiles(), default=config.corpus_language
        )
    suspect = RawDocument(
        id=suspect_path.name, text=text, language=source_language, origin="suspect-input"
    )

    if suspect.language != config.corpus_language:
        backend = make_translation_backend(config, suspect.language)
        result = translate_document(suspect, config.corpus_language, backend)
        suspect = result.document
        if result.partial:
            warnings.append(
                f"partial translation: {len(result.untranslated)} word(s) "
                "passed through untranslated"
            )

    normalized = normalize_document(suspect, stoplist, "porter")
    queries = build_queries(normalized, index, w=config.w, max_queries=config.max_queries)
    search_backend = make_search_backend(config, index)
    candidate_ids = gather_candidates(
        queries, search_backend, top_k=config.top_k, cap=config.cap
    )
    resolvable = [doc_id for doc_id in candidate_ids if doc_id in index.fingerprints]
    for doc_id in set(candidate_ids) - set(resolvable):
        warnings.append(f"search hit {doc_id!r} not present in local corpus; skipped")

    suspect_fps = fingerprint_document(normalized, config.k)
    scored = rank_candidates(
        suspect_fps,
        [index.fingerprints[doc_id] for doc_id in resolvable],
        config.threshold,
    )
    sources = {}
    for doc_id, _score in scored:
        raw = index.doc_store[doc_id]
        sources[doc_id] = (
            raw,
            normalize_document(raw, stoplist, "porter"),
            index.fingerprints[doc_id],
        )
    return assemble_report(
        suspect_raw=suspect,
        suspect_doc=normalized,
        suspect_fps=suspect_fps,
        scored=scored,
        sources=sources,
        parameters=_report_parameters(config, stoplist),
        warnings=warnings,
        source_language=source_language,
        target_language=config.corpus_language,
    )


def compare(
    path_a: str | Path, path_b: str | Path, config: PipelineConfig
) -> DetectionReport:
    """Score a single document pair, bypassing retrieval and thresholding."""
    stoplist = load_stoplist(config)
    docs = []
    for path in (Path(path_a), Path(path_b)):
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise PipelineError(f"cannot read {path}: {exc}") from exc
        docs.append(
            RawDocument(id=path.name, text=text, language=config.corpus_language)
        )
    raw_a, raw_b = docs
    doc_a = normalize_document(raw_a, stoplist, "porter")
    doc_b = normalize_document(raw_b, stoplist, "porter")
    fps_a = fingerprint_document(doc_a, config.k)
    fps_b = fingerprint_document(doc_b, config.k)
    score = resemblance(fps_a, fps_b)
    return assemble_report(
        suspect_raw=raw_a,
        suspect_doc=doc_a,
        suspect_fps=fps_a,
        scored=[(raw_b.id, score)],
        sources={raw_b.id: (raw_b, doc_b, fps_b)},
        parameters=_report_parameters(config, stoplist),
        warnings=[],
        source_language=config.corpus_language,
        target_language=config.corpus_language,
    )
