"""Doubling benchmarks for word synthesis (in |w|) and weak synthesis (in |T|)."""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .cyclic import synthesize_cyclic_wmg
from .weak import weak_synthesize, witness_word
from .words import Word

MODES = ("word-synth", "weak-synth")
WORD_LABELS = ("a", "b", "c", "d")
MAX_COMPONENT = 20


@dataclass
class BenchReport:
    mode: str
    sizes: list[int]
    seconds: list[float]
    exponent: float | None
    seed: int
    backend: str

    def to_json(self) -> dict:
        return asdict(self)


def random_prime_composition(rng: np.random.Generator, total: int, parts: int) -> tuple[int, ...]:
    """Positive ``parts``-tuple summing to ``total`` with gcd 1."""
    if total < parts:
        raise ValueError(f"cannot split {total} into {parts} positive parts")
    while True:
        cuts = np.sort(rng.choice(np.arange(1, total), size=parts - 1, replace=False))
        v = tuple(int(x) for x in np.diff(np.concatenate(([0], cuts, [total]))))
        if math.gcd(*v) == 1:
            return v


def random_prime_tuple(rng: np.random.Generator, size: int, hi: int = MAX_COMPONENT) -> tuple[int, ...]:
    while True:
        v = tuple(int(x) for x in rng.integers(1, hi + 1, size=size))
        if math.gcd(*v) == 1:
            return v


def word_instance(rng: np.random.Generator, n: int) -> Word:
    """A solvable word of length n: the witness of a weakly synthesised net."""
    v = random_prime_composition(rng, n, len(WORD_LABELS))
    return witness_word(weak_synthesize(v, WORD_LABELS), v)


def fit_exponent(sizes: Sequence[int], seconds: Sequence[float]) -> float | None:
    """Slope of log(seconds) against log(size); None below two distinct sizes."""
    if len(set(sizes)) < 2:
        return None
    slope, _ = np.polyfit(np.log(sizes), np.log(seconds), 1)
    return float(slope)


def _best_of(fn, arg, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - t0)
    return best


def bench(mode: str, sizes: Sequence[int], seed: int = 0, repeats: int = 3,
          backend: str | None = None) -> BenchReport:
    if mode not in MODES:
        raise ValueError(f"unknown bench mode {mode!r}; expected one of {MODES}")
    sizes = [int(s) for s in sizes]
    if sizes != sorted(sizes):
        raise ValueError("sizes must be ascending")
    previous = kernels.set_backend(backend)
    try:
        rng = np.random.default_rng(seed)
        if mode == "word-synth":
            instances = [word_instance(rng, n) for n in sizes]
            fn = synthesize_cyclic_wmg
            fn(word_instance(np.random.default_rng(seed), 8))  # JIT warm-up
        else:
            instances = [random_prime_tuple(rng, m) for m in sizes]
            fn = weak_synthesize
            fn((1, 2))
        seconds = [_best_of(fn, inst, repeats) for inst in instances]
        return BenchReport(mode, sizes, seconds, fit_exponent(sizes, seconds), seed, kernels.BACKEND)
    finally:
        kernels.set_backend(previous)
