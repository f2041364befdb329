"""Weak synthesis: a WMG with circular reachability graph from a prime T-vector."""

from __future__ import annotations

import math
from typing import Sequence

from .cyclic import place_id
from .errors import EmptyAlphabet, NonPrimeVector, SimulationDiverged
from .petri import PetriNet, Place, System, enabled_transitions, fire
from .words import TVector, Word, parikh


def weak_synthesize(v: TVector | Sequence[int], labels: Sequence[str] | None = None) -> System:
    """Complete WMG over the labels of ``v``.

    Every pair t_i, t_j (i < j) gets a binary circuit p_{i,j}, p_{j,i} with
    W(p_{i,j}, t_j) = W(t_j, p_{j,i}) = v_i / g and
    W(p_{j,i}, t_i) = W(t_i, p_{i,j}) = v_j / g, g = gcd(v_i, v_j).
    Visiting t_2 .. t_m in order, each output place of t_i towards a smaller
    index is filled up to its output weight and each input place from a
    smaller index gets its output weight minus one.
    """
    if not isinstance(v, TVector):
        if not len(v):
            raise EmptyAlphabet("empty T-vector")
        v = TVector.from_counts(list(v), labels)
    elif labels is not None:
        v = TVector(tuple(labels), v.counts)
    if not len(v):
        raise EmptyAlphabet("empty T-vector")
    g = v.gcd()
    if g != 1:
        raise NonPrimeVector(g)

    ts, ups = v.labels, v.counts
    m = len(ts)
    places: list[Place] = []
    out_weight: dict[str, int] = {}
    for i in range(m):
        for j in range(i + 1, m):
            gij = math.gcd(ups[i], ups[j])
            wi, wj = ups[i] // gij, ups[j] // gij
            # p_{i,j}: t_i -> t_j ; p_{j,i}: t_j -> t_i
            pij, pji = place_id(ts[i], ts[j]), place_id(ts[j], ts[i])
            places.append(Place(pij, {ts[i]: wj}, {ts[j]: wi}))
            places.append(Place(pji, {ts[j]: wi}, {ts[i]: wj}))
            out_weight[pij], out_weight[pji] = wi, wj

    m0 = {}
    for i in range(1, m):
        for h in range(i):
            m0[place_id(ts[i], ts[h])] = out_weight[place_id(ts[i], ts[h])]
            m0[place_id(ts[h], ts[i])] = out_weight[place_id(ts[h], ts[i])] - 1
    return System(PetriNet(ts, tuple(places)), m0)


def witness_word(sys: System, v: TVector | Sequence[int]) -> Word:
    """The label sequence played from M0 for sum(v) steps.

    Each step must have exactly one enabled transition; the run must end
    back at M0 with Parikh vector ``v``.
    """
    counts = v.counts if isinstance(v, TVector) else tuple(v)
    steps = sum(counts)
    m = dict(sys.m0)
    out = []
    for step in range(steps):
        en = enabled_transitions(sys, m)
        if len(en) != 1:
            raise SimulationDiverged(f"{len(en)} transitions enabled at step {step}: {en}")
        out.append(en[0])
        m = fire(sys, m, en[0])
    if m != sys.m0:
        raise SimulationDiverged(f"run of {steps} steps does not return to the initial marking")
    w = Word(tuple(out))
    got = parikh(w).as_dict()
    want = dict(zip(sys.net.transitions, counts))
    if got != want:
        raise SimulationDiverged(f"witness Parikh vector {got} differs from {want}")
    return w
