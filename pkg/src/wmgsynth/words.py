"""Words, Parikh vectors and the circular LTS induced by a word."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import BadLabel, BadProjection, BadVector, EmptyWord

_LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_SEPARATORS = re.compile(r"[,\s]+")


@dataclass(frozen=True)
class Word:
    """A finite non-empty label sequence.

    The alphabet lists the distinct labels in order of first occurrence, so
    every alphabet member occurs in ``labels``.
    """

    labels: tuple[str, ...]
    alphabet: tuple[str, ...] = field(init=False)

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        if not labels:
            raise EmptyWord("a word needs at least one label")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "alphabet", tuple(dict.fromkeys(labels)))

    @classmethod
    def of(cls, labels: str | Iterable[str]) -> "Word":
        """Build a word from a string of one-letter labels or an iterable of labels."""
        if isinstance(labels, str):
            return parse_word(labels)
        return cls(tuple(labels))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __getitem__(self, i):
        return self.labels[i]

    def __str__(self) -> str:
        if all(len(t) == 1 for t in self.alphabet):
            return "".join(self.labels)
        return " ".join(self.labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {t: i for i, t in enumerate(self.alphabet)}

    @cached_property
    def codes(self) -> np.ndarray:
        """Alphabet indices of the letters, as an int64 array (kernel input)."""
        idx = self.index
        return np.fromiter((idx[t] for t in self.labels), dtype=np.int64, count=len(self.labels))

    def rotate(self, k: int) -> "Word":
        k %= len(self.labels)
        return Word(self.labels[k:] + self.labels[:k])


@dataclass(frozen=True)
class TVector:
    """Label-indexed vector of positive counts (Parikh vector or T-vector)."""

    labels: tuple[str, ...]
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        labels, counts = tuple(self.labels), tuple(int(c) for c in self.counts)
        if len(labels) != len(counts):
            raise BadVector("labels and counts differ in length")
        if len(set(labels)) != len(labels):
            raise BadVector("labels must be distinct")
        if any(c <= 0 for c in counts):
            raise BadVector("all counts must be strictly positive")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_counts(cls, counts: Sequence[int] | Mapping[str, int],
                    labels: Sequence[str] | None = None) -> "TVector":
        if isinstance(counts, Mapping):
            return cls(tuple(counts), tuple(counts.values()))
        if labels is None:
            labels = [f"t{i + 1}" for i in range(len(counts))]
        return cls(tuple(labels), tuple(counts))

    def __getitem__(self, label: str) -> int:
        return self.counts[self.labels.index(label)]

    def __len__(self) -> int:
        return len(self.counts)

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.labels, self.counts))

    @property
    def total(self) -> int:
        return sum(self.counts)

    def gcd(self) -> int:
        return math.gcd(*self.counts)


@dataclass(frozen=True)
class CircularLts:
    """The circle s_0 -w_1-> s_1 ... -w_n-> s_0 induced by a word."""

    word: Word

    @property
    def states(self) -> range:
        return range(len(self.word))

    @property
    def initial(self) -> int:
        return 0

    @property
    def arcs(self) -> list[tuple[int, str, int]]:
        n = len(self.word)
        return [(i, t, (i + 1) % n) for i, t in enumerate(self.word.labels)]


def parse_word(text: str, multi: bool | None = None) -> Word:
    """Parse ``text`` into a Word.

    In single-character mode every character is a label.  Multi-character
    mode splits on commas and whitespace; it is selected automatically when
    the text contains a separator, or forced with ``multi=True``.
    """
    text = text.strip()
    if not text:
        raise EmptyWord("empty input")
    if multi is None:
        multi = bool(_SEPARATORS.search(text))
    if multi:
        tokens = [tok for tok in _SEPARATORS.split(text) if tok]
    else:
        tokens = list(text)
    if not tokens:
        raise EmptyWord("empty input")
    for pos, tok in enumerate(tokens):
        if not _LABEL_RE.match(tok):
            raise BadLabel(pos, tok)
    return Word(tuple(tokens))


def parikh(w: Word) -> TVector:
    counts = dict.fromkeys(w.alphabet, 0)
    for t in w.labels:
        counts[t] += 1
    return TVector(tuple(counts), tuple(counts.values()))


def is_prime(v: TVector) -> bool:
    return v.gcd() == 1


def project(w: Word, subset: Iterable[str]) -> Word:
    """Subsequence of ``w`` made of the letters in ``subset``."""
    keep = set(subset)
    if not keep or not keep <= set(w.alphabet):
        raise BadProjection(f"cannot project on {sorted(keep)}; alphabet is {list(w.alphabet)}")
    return Word(tuple(t for t in w.labels if t in keep))


def adjacent_pairs(w: Word) -> list[tuple[str, str, int]]:
    """Circularly adjacent distinct pairs ``(w[q], w[q+1], q)``, wrap-around included."""
    labels, n = w.labels, len(w.labels)
    out = []
    for q in range(n):
        a, b = labels[q], labels[(q + 1) % n]
        if a != b:
            out.append((a, b, q))
    return out


def induced_circular_lts(w: Word) -> CircularLts:
    return CircularLts(w)


def factor_primitive(w: Word) -> tuple[Word, int]:
    """Return ``(v, l)`` with ``w == v**l`` and ``v`` as short as possible."""
    labels, n = w.labels, len(w.labels)
    # smallest rotation period: first k > 0 with w == rotate(w, k)
    doubled = labels + labels
    for k in range(1, n + 1):
        if n % k == 0 and doubled[k:k + n] == labels:
            return Word(labels[:k]), n // k
    raise AssertionError("unreachable")  # k == n always matches
