"""Pipeline configuration: defaults, config file parsing, validation.

Precedence is CLI flags over config-file values over built-in defaults.
The effective configuration is echoed into report metadata so results are
reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, fields, replace
from importlib import resources
from pathlib import Path

from .errors import ConfigError

TRANSLATION_BACKENDS = ("dictionary", "http")
SEARCH_BACKENDS = ("local", "http")
REPORT_FORMATS = ("text", "json")


def data_path(name: str) -> Path:
    """Path of a bundled data file."""
    return Path(resources.files("crossplag") / "data" / name)


@dataclass
class PipelineConfig:
    corpus: Path | None = None
    source_language: str | None = None  # None -> auto-detect
    corpus_language: str = "en"
    k: int = 4
    threshold: float = 0.2
    w: int = 8
    top_k: int = 10
    cap: int = 50
    max_queries: int = 50
    stoplist: Path | None = None  # None -> bundled English list
    dictionary: Path | None = None  # None -> bundled ms->en demo dictionary
    translation_backend: str = "dictionary"
    search_backend: str = "local"
    translation_endpoint: str | None = None
    search_endpoint: str | None = None
    http_timeout: float = 10.0
    auth_header: str | None = None
    format: str = "text"

    @property
    def stoplist_path(self) -> Path:
        return Path(self.stoplist) if self.stoplist else data_path("stopwords_en.txt")

    @property
    def dictionary_path(self) -> Path:
        return Path(self.dictionary) if self.dictionary else data_path("dictionary_ms_en.tsv")

    def validate(self) -> "PipelineConfig":
        if self.k < 1:
            raise ConfigError("k must be >= 1")
        if not 0.0 <= self.threshold <= 1.0:
            raise ConfigError("threshold must be in [0, 1]")
        for name in ("w", "top_k", "cap", "max_queries"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1")
        if self.http_timeout <= 0:
            raise ConfigError("http_timeout must be positive")
        if self.translation_backend not in TRANSLATION_BACKENDS:
            raise ConfigError(f"unknown translation backend {self.translation_backend!r}")
        if self.search_backend not in SEARCH_BACKENDS:
            raise ConfigError(f"unknown search backend {self.search_backend!r}")
        if self.format not in REPORT_FORMATS:
            raise ConfigError(f"unknown report format {self.format!r}")
        if self.translation_backend == "http" and not self.translation_endpoint:
            raise ConfigError("translation_endpoint required for the http backend")
        if self.search_backend == "http" and not self.search_endpoint:
            raise ConfigError("search_endpoint required for the http backend")
        if not self.stoplist_path.is_file():
            raise ConfigError(f"stop-word list not found: {self.stoplist_path}")
        if self.translation_backend == "dictionary" and not self.dictionary_path.is_file():
            raise ConfigError(f"dictionary not found: {self.dictionary_path}")
        return self


_INT_KEYS = {"k", "w", "top_k", "cap", "max_queries"}
_FLOAT_KEYS = {"threshold", "http_timeout"}
_PATH_KEYS = {"corpus", "stoplist", "dictionary"}


def parse_config_file(path: str | Path) -> dict:
    """Read a flat key=value config file; '#' starts a comment line."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    known = {f.name for f in fields(PipelineConfig)}
    values: dict = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key = key.strip().replace("-", "_")
        value = value.strip()
        if key not in known:
            raise ConfigError(f"{path}:{lineno}: unknown option {key!r}")
        try:
            if key in _INT_KEYS:
                values[key] = int(value)
            elif key in _FLOAT_KEYS:
                values[key] = float(value)
            elif key in _PATH_KEYS:
                values[key] = Path(value)
            else:
                values[key] = value
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {value!r}") from exc
    return values


def build_config(file_values: dict | None = None, overrides: dict | None = None) -> PipelineConfig:
    """Merge defaults, config-file values, and CLI overrides, then validate."""
    config = PipelineConfig()
    if file_values:
        config = replace(config, **file_values)
    if overrides:
        config = replace(config, **{k: v for k, v in overrides.items() if v is not None})
    return config.validate()
