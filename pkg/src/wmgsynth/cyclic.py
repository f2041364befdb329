"""Cyclic WMG-solvability of words: decision, synthesis, SSP places and the
projection-based sufficient condition."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import kernels
from .errors import NonPrimeParikh
from .petri import PetriNet, Place, System, fire, normalize
from .words import Word, adjacent_pairs, factor_primitive, parikh, project


def place_id(a: str, b: str) -> str:
    return f"p[{a},{b}]"


@dataclass(frozen=True)
class Diagnostic:
    """Why a word is not cyclically WMG-solvable.

    ``kind`` is "non_prime" (with ``gcd``) or "inequality".  For an
    inequality violation, the adjacent pair ``a b`` starts at position ``q``
    and the segment w[j..q-1] (circular) has ``pjq_a`` a's and ``pjq_b``
    b's with m * pjq_a >= n * (pjq_b + 1).
    """

    kind: str
    gcd: int | None = None
    a: str | None = None
    b: str | None = None
    q: int | None = None
    j: int | None = None
    pjq_a: int | None = None
    pjq_b: int | None = None
    m: int | None = None
    n: int | None = None

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


@dataclass(frozen=True)
class Verdict:
    diagnostic: Diagnostic | None = None

    @property
    def solvable(self) -> bool:
        return self.diagnostic is None

    def __bool__(self) -> bool:
        return self.solvable

    def __repr__(self) -> str:
        return "Solvable" if self.solvable else f"Unsolvable({self.diagnostic})"


SOLVABLE = Verdict()


@dataclass(frozen=True)
class SynthResult:
    system: System | None = None
    diagnostic: Diagnostic | None = None

    @property
    def ok(self) -> bool:
        return self.system is not None


def _pair_ratio(pa: int, pb: int) -> tuple[int, int]:
    g = math.gcd(pa, pb)
    return pb // g, pa // g


def _tightest_violation(w: Word, counts: dict[str, int], q: int) -> tuple[int, int, int] | None:
    """Shortest segment ending at q violating the inequality of the pair at q,
    as (length, na, nb), or None."""
    labels, n = w.labels, len(w)
    a, b = labels[q], labels[(q + 1) % n]
    m, nn = _pair_ratio(counts[a], counts[b])
    na = nb = 0
    for length in range(1, n):
        c = labels[(q - length) % n]
        if c == a:
            na += 1
        elif c == b:
            nb += 1
        if na and m * na >= nn * (nb + 1):
            return length, na, nb
    return None


def _diagnose(w: Word, counts: dict[str, int]) -> Diagnostic:
    """Pick the reported witness among all violations.

    Pairs are ranked by the alphabet indices of (a, b); within the chosen
    pair the shortest violating segment wins, then the smallest q.
    """
    idx = w.index
    best = None
    for a, b, q in adjacent_pairs(w):
        hit = _tightest_violation(w, counts, q)
        if hit is None:
            continue
        length, na, nb = hit
        key = (idx[a], idx[b], length, q)
        if best is None or key < best[0]:
            best = (key, a, b, q, length, na, nb)
    assert best is not None, "diagnose called on a word without violations"
    _, a, b, q, length, na, nb = best
    m, n = _pair_ratio(counts[a], counts[b])
    return Diagnostic("inequality", a=a, b=b, q=q, j=(q - length) % len(w),
                      pjq_a=na, pjq_b=nb, m=m, n=n)


def check_cyclic_wmg(w: Word) -> Verdict:
    """Decide whether some WMG has the circle induced by ``w`` as reachability graph.

    Solvable iff P(w) is prime and, for every adjacent pair ab at position q
    and every j with P_jq(a) > 0, m * P_jq(a) < n * (P_jq(b) + 1) where
    m/n = P(w)(b)/P(w)(a) in lowest terms.
    """
    v = parikh(w)
    g = v.gcd()
    if g != 1:
        return Verdict(Diagnostic("non_prime", gcd=g))
    counts = np.asarray(v.counts, dtype=np.int64)
    q, _ = kernels.first_violation(w.codes, counts)
    if q < 0:
        return SOLVABLE
    return Verdict(_diagnose(w, v.as_dict()))


def canonical_system(w: Word) -> System:
    """One place per ordered adjacent pair (a, b) with W(a,p) = P(b),
    W(p,b) = P(a) and the least initial marking keeping the token trace
    along ``w`` non-negative.  No solvability check is made."""
    v = parikh(w)
    counts = v.as_dict()
    idx = w.index
    codes = w.codes
    places, m0 = [], {}
    for a, b, _ in adjacent_pairs(w):
        pid = place_id(a, b)
        if pid in m0:
            continue  # repeated pair: same weights, same trace, same marking
        pa, pb = counts[a], counts[b]
        places.append(Place(pid, {a: pb}, {b: pa}))
        m0[pid] = int(kernels.marking_floor(codes, idx[a], idx[b], pa, pb))
    return System(PetriNet(w.alphabet, tuple(places)), m0)


def synthesize_cyclic_wmg(w: Word, normalized: bool = False) -> SynthResult:
    """Build a WMG cyclically solving ``w`` or explain why none exists."""
    verdict = check_cyclic_wmg(w)
    if not verdict.solvable:
        return SynthResult(diagnostic=verdict.diagnostic)
    sys = canonical_system(w)
    return SynthResult(normalize(sys) if normalized else sys)


def build_adjacent_places(w: Word) -> System:
    """Places p_{a,b} and p_{b,a} for every adjacent pair, with W(a,p) = m,
    W(p,b) = n (lowest terms) and M0 = n * P(w)(b); these separate all
    states of the circle when P(w) is prime."""
    v = parikh(w)
    g = v.gcd()
    if g != 1:
        raise NonPrimeParikh(g)
    counts = v.as_dict()
    places, m0 = [], {}
    for x, y, _ in adjacent_pairs(w):
        for a, b in ((x, y), (y, x)):
            pid = place_id(a, b)
            if pid in m0:
                continue
            m, n = _pair_ratio(counts[a], counts[b])
            places.append(Place(pid, {a: m}, {b: n}))
            m0[pid] = n * counts[b]
    return System(PetriNet(w.alphabet, tuple(places)), m0)


def marking_trace(sys: System, w: Word) -> list[tuple[int, ...]]:
    """Markings visited while firing ``w`` once from M0 (length |w|)."""
    ids = sys.net.place_ids
    m = dict(sys.m0)
    out = []
    for t in w.labels:
        out.append(tuple(m[p] for p in ids))
        m = fire(sys, m, t)
    return out


def check_by_projection(w: Word) -> bool:
    """Sufficient condition: every projection on an adjacent pair is a power
    v**l of a prime binary word v that is itself cyclically WMG-solvable."""
    g = parikh(w).gcd()
    if g != 1:
        raise NonPrimeParikh(g)
    done = set()
    for a, b, _ in adjacent_pairs(w):
        key = frozenset((a, b))
        if key in done:
            continue
        done.add(key)
        v, _ = factor_primitive(project(w, key))
        if parikh(v).gcd() != 1 or not check_cyclic_wmg(v).solvable:
            return False
    return True
