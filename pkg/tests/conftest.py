import random

import pytest

from crossplag.config import data_path
from crossplag.textnorm import NormalizedDocument, Sentence, StopwordList


@pytest.fixture(scope="session")
def stoplist():
    return StopwordList.load(data_path("stopwords_en.txt"))


# Small vocabulary shared by the synthetic-corpus tests; overlaps the
# English side of the bundled demo dictionary so cross-language round
# trips can cover every word.
VOCABULARY = [
    "soccer", "game", "fantastic", "book", "read", "cat", "dog", "house",
    "school", "ball", "teacher", "student", "paper", "write", "language",
    "library", "day", "night", "morning", "water", "drink", "eat", "big",
    "small", "fast", "slow", "good", "bad", "new", "old", "person", "work",
    "time", "year", "country", "city", "road", "car", "sea", "mountain",
    "river", "garden", "window", "music", "story", "letter", "friend",
    "market", "bridge", "forest", "winter", "summer", "journey", "village",
    "harvest", "lantern", "shadow", "thunder", "meadow", "copper",
]


def random_sentence(rng: random.Random, n_words: int | None = None) -> str:
    n = n_words or rng.randint(6, 10)
    return " ".join(rng.choice(VOCABULARY) for _ in range(n)).capitalize() + "."


def random_text(rng: random.Random, n_sentences: int | None = None) -> str:
    n = n_sentences or rng.randint(5, 9)
    return " ".join(random_sentence(rng) for _ in range(n))


def write_corpus(directory, n_docs: int, seed: int = 7) -> dict[str, str]:
    """Write n deterministic pseudo-random documents; returns id -> text."""
    rng = random.Random(seed)
    docs = {}
    for i in range(n_docs):
        doc_id = f"doc{i:02d}.txt"
        text = random_text(rng)
        (directory / doc_id).write_text(text, encoding="utf-8")
        docs[doc_id] = text
    return docs


def random_normalized_doc(
    rng: random.Random,
    max_sentences: int = 10,
    doc_id: str = "rand",
) -> NormalizedDocument:
    """Random normalized document over a tiny alphabet so gram counts collide."""
    sentences = []
    cursor = 0
    for index in range(rng.randint(1, max_sentences)):
        tokens = tuple(
            "".join(rng.choice("abcde") for _ in range(rng.randint(3, 8)))
            for _ in range(rng.randint(0, 6))
        )
        length = sum(len(t) for t in tokens) + len(tokens)
        sentences.append(
            Sentence(index=index, raw_span=(cursor, cursor + length), tokens=tokens)
        )
        cursor += length + 1
    return NormalizedDocument(
        source_id=doc_id,
        sentences=tuple(sentences),
        stopword_list_id="test",
        stemmer_id="porter",
    )
