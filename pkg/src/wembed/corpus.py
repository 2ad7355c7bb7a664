"""Text ingestion: tokenization, vocabulary, co-occurrence counts, relation files.

All functions here are pure and Unicode-safe: tokens are NFC-normalized so
diacritic-bearing text (ɔ, ɛ, â, û, ğ and friends) survives round-trips
byte-identically.
"""

from __future__ import annotations

import io
import re
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import (
    EmptyVocabulary,
    InvalidUtf8,
    MalformedLine,
    SelfRelation,
)

Token = str

_FIELD_SPLIT = re.compile(r"[\t ]+")


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def tokenize(text: str, lowercase: bool = False) -> list[Token]:
    """Split ``text`` on Unicode whitespace into NFC-normalized tokens.

    Leading and trailing punctuation (Unicode category P) is stripped from
    each piece; pieces that become empty are dropped. Case is preserved
    unless ``lowercase`` is set.
    """
    out: list[Token] = []
    for piece in unicodedata.normalize("NFC", text).split():
        start, end = 0, len(piece)
        while start < end and _is_punct(piece[start]):
            start += 1
        while end > start and _is_punct(piece[end - 1]):
            end -= 1
        piece = piece[start:end]
        if not piece:
            continue
        if lowercase:
            piece = piece.lower()
        # lowercasing can denormalize in rare scripts; renormalize to keep
        # the NFC invariant unconditional
        out.append(unicodedata.normalize("NFC", piece))
    return out


class Vocabulary:
    """Dense token <-> id map with frequencies, filtered by ``min_count``.

    Ids are assigned in order of first occurrence in the corpus and are
    contiguous ``0..V-1``.
    """

    def __init__(self, tokens: list[Token], counts: list[int], min_count: int):
        if not tokens:
            raise EmptyVocabulary("no token met the min_count threshold")
        self.tokens = list(tokens)
        self.counts = np.asarray(counts, dtype=np.int64)
        self.min_count = min_count
        self.index: dict[Token, int] = {t: i for i, t in enumerate(self.tokens)}

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self.index

    def items(self) -> Iterable[tuple[Token, int]]:
        return zip(self.tokens, self.counts.tolist())

    def __repr__(self) -> str:
        return f"Vocabulary(size={len(self)}, min_count={self.min_count})"


def build_vocabulary(sentences: Iterable[list[Token]], min_count: int = 1) -> Vocabulary:
    """Count tokens over ``sentences`` and keep those seen >= ``min_count`` times.

    Raises EmptyVocabulary when nothing survives the threshold.
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    counts: Counter[str] = Counter()
    order: list[Token] = []
    seen: set[str] = set()
    for sent in sentences:
        for tok in sent:
            counts[tok] += 1
            if tok not in seen:
                seen.add(tok)
                order.append(tok)
    kept = [t for t in order if counts[t] >= min_count]
    return Vocabulary(kept, [counts[t] for t in kept], min_count)


@dataclass
class Corpus:
    """Sentences encoded as id sequences over a fixed vocabulary."""

    vocab: Vocabulary
    sentences: list[np.ndarray]
    total_tokens: int

    @classmethod
    def encode(cls, token_sentences: Iterable[list[Token]], vocab: Vocabulary) -> "Corpus":
        """Map tokens to ids, silently dropping out-of-vocabulary tokens."""
        encoded = []
        total = 0
        for sent in token_sentences:
            ids = [vocab.index[t] for t in sent if t in vocab.index]
            encoded.append(np.asarray(ids, dtype=np.int64))
            total += len(ids)
        return cls(vocab=vocab, sentences=encoded, total_tokens=total)


class CooccurrenceMatrix:
    """Sparse symmetric word-word co-occurrence weights.

    Both (i, j) and (j, i) are stored for i != j so that row sums and the
    regression loss can iterate plain stored entries.
    """

    def __init__(self, vocab: Vocabulary):
        self.vocab = vocab
        self.entries: dict[tuple[int, int], float] = {}
        self.row_sums = np.zeros(len(vocab), dtype=np.float64)

    def add(self, i: int, j: int, w: float) -> None:
        """Add weight ``w`` to cell (i, j) and symmetrically to (j, i)."""
        self.entries[(i, j)] = self.entries.get((i, j), 0.0) + w
        self.row_sums[i] += w
        if i != j:
            self.entries[(j, i)] = self.entries.get((j, i), 0.0) + w
            self.row_sums[j] += w
        else:
            # the symmetric increment lands on the same cell
            self.entries[(i, j)] += w
            self.row_sums[i] += w

    def weight(self, i: int, j: int) -> float:
        return self.entries.get((i, j), 0.0)

    def nonzero(self) -> int:
        return len(self.entries)

    def to_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Stored entries as (rows, cols, weights), sorted by (row, col)."""
        keys = sorted(self.entries)
        rows = np.asarray([k[0] for k in keys], dtype=np.int64)
        cols = np.asarray([k[1] for k in keys], dtype=np.int64)
        vals = np.asarray([self.entries[k] for k in keys], dtype=np.float64)
        return rows, cols, vals


def build_cooccurrence(
    corpus: Corpus, window: int, distance_weighting: bool = False
) -> CooccurrenceMatrix:
    """Count within-sentence co-occurrences up to ``window`` positions apart.

    Each ordered pair at offset k (1 <= k <= window) contributes weight 1,
    or 1/k with ``distance_weighting``, to both symmetric cells. Sentence
    boundaries are never crossed.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    matrix = CooccurrenceMatrix(corpus.vocab)
    for sent in corpus.sentences:
        n = len(sent)
        for i in range(n):
            for k in range(1, window + 1):
                j = i + k
                if j >= n:
                    break
                w = 1.0 / k if distance_weighting else 1.0
                matrix.add(int(sent[i]), int(sent[j]), w)
    return matrix


@dataclass
class RelationSet:
    """Unique (child, parent) pairs plus a dense entity index."""

    pairs: list[tuple[str, str]]
    entity_index: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seen: set[tuple[str, str]] = set()
        unique = []
        for child, parent in self.pairs:
            if child == parent:
                raise ValueError(f"self-relation for entity {child!r}")
            if (child, parent) in seen:
                continue
            seen.add((child, parent))
            unique.append((child, parent))
        self.pairs = unique
        if not self.entity_index:
            for child, parent in self.pairs:
                for e in (child, parent):
                    if e not in self.entity_index:
                        self.entity_index[e] = len(self.entity_index)

    @property
    def entities(self) -> list[str]:
        return list(self.entity_index)

    def __len__(self) -> int:
        return len(self.pairs)


def read_hyperlex(source) -> RelationSet:
    """Parse a HyperLex-style relation file into a :class:`RelationSet`.

    ``source`` may be a path or a binary/text stream. Each non-blank,
    non-comment line holds two entities separated by a tab or runs of
    spaces; an optional numeric third field (a graded score) is ignored.
    Duplicate pairs collapse silently.
    """
    if isinstance(source, (str, Path)):
        data = Path(source).read_bytes()
    elif isinstance(source, io.TextIOBase):
        data = source.read().encode("utf-8")
    else:
        data = source.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidUtf8(str(exc)) from exc

    pairs: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    index: dict[str, int] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        fields = [f for f in _FIELD_SPLIT.split(line) if f]
        if len(fields) < 2:
            raise MalformedLine(lineno)
        if len(fields) == 3:
            try:
                float(fields[2])
            except ValueError:
                raise MalformedLine(lineno, f"unexpected third field {fields[2]!r}")
        elif len(fields) > 3:
            raise MalformedLine(lineno, f"{len(fields)} fields")
        child = unicodedata.normalize("NFC", fields[0])
        parent = unicodedata.normalize("NFC", fields[1])
        if child == parent:
            raise SelfRelation(lineno, child)
        if (child, parent) in seen:
            continue
        seen.add((child, parent))
        pairs.append((child, parent))
        for e in (child, parent):
            if e not in index:
                index[e] = len(index)
    return RelationSet(pairs=pairs, entity_index=index)


def _term_universe(terms) -> list[str]:
    if isinstance(terms, Vocabulary):
        return terms.tokens
    if isinstance(terms, RelationSet):
        return terms.entities
    return list(terms)


def find_matching_terms(terms, query: str) -> list[str]:
    """All known terms containing ``query`` as a substring, best match first.

    Substring matching (not mere prefix matching) so queries buried inside a
    longer entity still surface. Results are ordered by match position, then
    lexicographically. Case-sensitive; the query is NFC-normalized first.
    """
    query = unicodedata.normalize("NFC", query)
    hits = []
    for term in _term_universe(terms):
        pos = term.find(query)
        if pos >= 0:
            hits.append((pos, term))
    hits.sort()
    return [t for _, t in hits]


def suggest_terms(terms, query: str, limit: int = 5) -> list[str]:
    """Fuzzy suggestions for a failed lookup.

    Retries ``find_matching_terms`` on progressively shorter prefixes of the
    query until something matches, so e.g. an ASCII approximation of a
    diacritic-bearing token still yields candidates.
    """
    query = unicodedata.normalize("NFC", query)
    for end in range(len(query), 0, -1):
        hits = find_matching_terms(terms, query[:end])
        if hits:
            return hits[:limit]
    return []
