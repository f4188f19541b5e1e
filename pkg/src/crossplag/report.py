"""Detection summary assembly and rendering.

The JSON rendering is the contract of record; the text rendering and the
optional bar-chart figure are derived views of the same report.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .fingerprint import DocumentFingerprintSet
from .resemblance import ResemblanceScore, match_sentences
from .textnorm import NormalizedDocument, RawDocument


@dataclass(frozen=True)
class MatchRecord:
    suspect_sentence: int
    source_sentence: int
    fingerprint_key: str
    suspect_excerpt: str
    source_excerpt: str


@dataclass(frozen=True)
class SourceMatch:
    source_doc_id: str
    resemblance: ResemblanceScore
    matches: tuple[MatchRecord, ...]

    @property
    def similarity_percent(self) -> float:
        return 100.0 * self.resemblance.value


@dataclass(frozen=True)
class DetectionReport:
    suspect_id: str
    source_language: str
    target_language: str
    parameters: dict
    warnings: tuple[str, ...]
    candidates: tuple[SourceMatch, ...]

    @property
    def detected(self) -> bool:
        return bool(self.candidates)

    def to_dict(self) -> dict:
        return {
            "suspect_id": self.suspect_id,
            "source_language": self.source_language,
            "target_language": self.target_language,
            "parameters": dict(self.parameters),
            "warnings": list(self.warnings),
            "candidates": [
                {
                    "source_doc_id": c.source_doc_id,
                    "similarity_percent": c.similarity_percent,
                    "intersection_size": c.resemblance.intersection_size,
                    "union_size": c.resemblance.union_size,
                    "matches": [
                        {
                            "suspect_sentence": m.suspect_sentence,
                            "source_sentence": m.source_sentence,
                            "fingerprint_key": m.fingerprint_key,
                            "suspect_excerpt": m.suspect_excerpt,
                            "source_excerpt": m.source_excerpt,
                        }
                        for m in c.matches
                    ],
                }
                for c in self.candidates
            ],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "DetectionReport":
        candidates = []
        for c in payload["candidates"]:
            inter, union = c["intersection_size"], c["union_size"]
            score = ResemblanceScore(
                value=inter / union if union else 0.0,
                intersection_size=inter,
                union_size=union,
            )
            matches = tuple(
                MatchRecord(
                    suspect_sentence=m["suspect_sentence"],
                    source_sentence=m["source_sentence"],
                    fingerprint_key=m["fingerprint_key"],
                    suspect_excerpt=m["suspect_excerpt"],
                    source_excerpt=m["source_excerpt"],
                )
                for m in c["matches"]
            )
            candidates.append(
                SourceMatch(source_doc_id=c["source_doc_id"], resemblance=score, matches=matches)
            )
        return cls(
            suspect_id=payload["suspect_id"],
            source_language=payload["source_language"],
            target_language=payload["target_language"],
            parameters=dict(payload["parameters"]),
            warnings=tuple(payload["warnings"]),
            candidates=tuple(candidates),
        )


def assemble_report(
    suspect_raw: RawDocument,
    suspect_doc: NormalizedDocument,
    suspect_fps: DocumentFingerprintSet,
    scored: list[tuple[str, ResemblanceScore]],
    sources: Mapping[str, tuple[RawDocument, NormalizedDocument, DocumentFingerprintSet]],
    parameters: dict,
    warnings: list[str],
    source_language: str,
    target_language: str,
) -> DetectionReport:
    """Build the final report from ranked candidates and their documents.

    ``scored`` is expected to already be thresholded and ordered by
    resemblance descending.
    """
    candidates = []
    for doc_id, score in scored:
        source_raw, source_doc, source_fps = sources[doc_id]
        pairs = match_sentences(suspect_fps, suspect_doc, source_fps, source_doc)
        records = tuple(
            MatchRecord(
                suspect_sentence=m.suspect_sentence_index,
                source_sentence=m.source_sentence_index,
                fingerprint_key=m.fingerprint_key,
                suspect_excerpt=suspect_raw.text[m.suspect_span[0]:m.suspect_span[1]],
                source_excerpt=source_raw.text[m.source_span[0]:m.source_span[1]],
            )
            for m in pairs
        )
        candidates.append(
            SourceMatch(source_doc_id=doc_id, resemblance=score, matches=records)
        )
    return DetectionReport(
        suspect_id=suspect_raw.id,
        source_language=source_language,
        target_language=target_language,
        parameters=parameters,
        warnings=tuple(warnings),
        candidates=tuple(candidates),
    )


def render(report: DetectionReport, format: str = "text") -> str:
    if format == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    if format == "text":
        return _render_text(report)
    raise ValueError(f"unknown report format {format!r}")


def parse_report(text: str) -> DetectionReport:
    return DetectionReport.from_dict(json.loads(text))


def _render_text(report: DetectionReport) -> str:
    lines = [
        f"suspect: {report.suspect_id}",
        f"languages: {report.source_language} -> {report.target_language}",
        "parameters: "
        + ", ".join(f"{k}={v}" for k, v in sorted(report.parameters.items())),
    ]
    for warning in report.warnings:
        lines.append(f"warning: {warning}")
    if not report.candidates:
        lines.append("no plagiarism detected above threshold")
        return "\n".join(lines) + "\n"
    lines.append(f"sources detected: {len(report.candidates)}")
    for c in report.candidates:
        lines.append("")
        lines.append(
            f"source: {c.source_doc_id}  similarity {c.similarity_percent:.1f}% "
            f"({c.resemblance.intersection_size}/{c.resemblance.union_size} fingerprints)"
        )
        for m in c.matches:
            lines.append(
                f"  suspect sentence {m.suspect_sentence} ~ "
                f"source sentence {m.source_sentence} [{m.fingerprint_key}]"
            )
            lines.append(f"    suspect: {m.suspect_excerpt}")
            lines.append(f"    source : {m.source_excerpt}")
    return "\n".join(lines) + "\n"


def render_figure(report: DetectionReport, path: str | Path) -> Path:
    """Save a horizontal bar chart of per-source similarity percentages."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    labels = [c.source_doc_id for c in report.candidates]
    values = [c.similarity_percent for c in report.candidates]
    fig, ax = plt.subplots(figsize=(8, max(2, 0.5 * len(labels) + 1)))
    if labels:
        positions = range(len(labels))
        ax.barh(positions, values, color="#1f77b4")
        ax.set_yticks(list(positions))
        ax.set_yticklabels(labels)
        ax.invert_yaxis()
    else:
        ax.text(0.5, 0.5, "no candidates above threshold",
                ha="center", va="center", transform=ax.transAxes)
    ax.set_xlabel("similarity (%)")
    ax.set_xlim(0, 100)
    ax.set_title(f"suspect: {report.suspect_id}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
