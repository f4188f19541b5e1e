"""Exception types shared across the detection pipeline."""


class PipelineError(Exception):
    """Base class for all crossplag errors."""


class ConfigError(PipelineError):
    """Invalid configuration value or missing referenced file."""


class MissingStoplist(PipelineError):
    """Stop-word list file absent or empty."""


class UnknownStemmer(PipelineError):
    """Stemmer id not present in the registry."""


class UnsupportedPair(PipelineError):
    """Translation backend does not handle the requested language pair."""


class BackendUnavailable(PipelineError):
    """Remote backend unreachable or returned an error response.

    The operation is safe to retry once the endpoint recovers.
    """


class GramNotFound(PipelineError):
    """Gram looked up in a frequency table that does not contain it."""


class GramLengthMismatch(PipelineError):
    """Fingerprint sets built with different gram lengths were compared."""


class EmptyCorpus(PipelineError):
    """Corpus directory holds no readable document."""
