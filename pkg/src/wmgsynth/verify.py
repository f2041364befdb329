"""Checking a system against the circle induced by a word, plus the CF
decision for alphabets of at most three letters and the bundled fixtures."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import kernels
from .cyclic import SynthResult, synthesize_cyclic_wmg
from .errors import AlphabetTooLarge
from .netio import parse_text
from .petri import System, enabled_transitions, fire
from .words import Word


@dataclass(frozen=True)
class RgVerdict:
    """Outcome of :func:`circular_rg`; ``reason`` is None when Ok."""

    reason: str | None = None
    step: int | None = None
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.reason is None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        if self.ok:
            return {"verdict": "Ok"}
        return {"verdict": "Fail", "reason": self.reason, "step": self.step, **self.detail}


def _dense(sys: System, w: Word):
    """Kernel inputs with transitions indexed as in the net."""
    tidx = {t: j for j, t in enumerate(sys.net.transitions)}
    consume, produce = sys.net.matrices()
    word = np.fromiter((tidx.get(t, -1) for t in w.labels), dtype=np.int64, count=len(w))
    return consume, produce, sys.marking_vector(), word


def circular_rg(sys: System, w: Word) -> RgVerdict:
    """Is RG(sys) the circle induced by ``w``?

    Plays ``w`` from M0: every step must enable exactly one transition, the
    expected one; the visited markings must be pairwise distinct and the
    last firing must restore M0.
    """
    missing = [t for t in w.alphabet if t not in sys.net.transitions]
    if missing:
        return RgVerdict("WrongLabel", 0, {"unknown_labels": missing})
    consume, produce, m0, word = _dense(sys, w)
    status, step = kernels.simulate_cycle(consume, produce, m0, word)
    status, step = int(status), int(step)
    if status == kernels.OK:
        return RgVerdict()
    return RgVerdict(kernels.STATUS_NAMES[status], step, _explain(sys, w, status, step))


def _explain(sys: System, w: Word, status: int, step: int) -> dict:
    m = dict(sys.m0)
    for t in w.labels[:step]:
        m = fire(sys, m, t)
    detail: dict = {"expected": w.labels[step]}
    if status in (kernels.WRONG_LABEL, kernels.EXTRA_ENABLED, kernels.DEADLOCK):
        detail["enabled"] = enabled_transitions(sys, m)
    detail["marking"] = m
    return detail


def cf_solve_small(w: Word) -> SynthResult:
    """Cyclic CF synthesis for at most three letters.

    Over <= 3 letters cyclic CF-solvability coincides with cyclic
    WMG-solvability, so the WMG synthesis is a complete answer.
    """
    if len(w.alphabet) > 3:
        raise AlphabetTooLarge(len(w.alphabet))
    return synthesize_cyclic_wmg(w)


FIXTURES = {
    "aacbbdabd_wmg": "aacbbdabd",
    "aacbbeabd_wmg": "aacbbeabd",
    "abcabdabd_wmg": "abcabdabd",
    "abcbad_cf": "abcbad",
    "cabdaaab_cf": "cabdaaab",
    "bcafdeaaabcdaafdcaaa_cf": "bcafdeaaabcdaafdcaaa",
}


def fixture_text(name: str) -> str:
    return resources.files("wmgsynth.fixtures").joinpath(f"{name}.net").read_text(encoding="utf-8")


def load_fixture(name: str) -> System:
    """Load a bundled net by file stem, e.g. ``load_fixture("abcbad_cf")``."""
    return parse_text(fixture_text(name))
