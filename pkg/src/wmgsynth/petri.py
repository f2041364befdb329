"""Weighted P/T nets: token game, reachability graphs, classification,
place scaling, CF purification and liveness checks for circuits."""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import (
    NetFormatError,
    NonIntegerScaling,
    NotChoiceFree,
    NotCircuit,
    NotConservative,
    NotEnabled,
    NotReversible,
    PreconditionViolated,
    StateBudgetExceeded,
)

DEFAULT_MAX_STATES = 100_000

Marking = Mapping[str, int]


def default_max_states() -> int:
    """Budget for reachability exploration; WMG_SYNTH_MAX_STATES overrides."""
    env = os.environ.get("WMG_SYNTH_MAX_STATES")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"WMG_SYNTH_MAX_STATES must be an integer, got {env!r}") from None
        if value >= 1:
            return value
    return DEFAULT_MAX_STATES


def _clean_weights(arcs: Mapping[str, int], what: str) -> dict[str, int]:
    out = {}
    for t, w in arcs.items():
        w = int(w)
        if w < 0:
            raise NetFormatError(f"negative {what} weight {w} on {t}")
        if w:
            out[t] = w
    return out


@dataclass(frozen=True)
class Place:
    """A place with sparse arc weights.

    ``pre`` holds W(t, p) (arcs from transitions into the place), ``post``
    holds W(p, t) (arcs from the place to transitions).
    """

    id: str
    pre: Mapping[str, int] = field(default_factory=dict)
    post: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "pre", _clean_weights(self.pre, "input"))
        object.__setattr__(self, "post", _clean_weights(self.post, "output"))

    @property
    def gcd(self) -> int:
        """gcd of all weights adjacent to the place (0 for an isolated place)."""
        return math.gcd(*self.pre.values(), *self.post.values())

    def scaled(self, num: int, den: int) -> "Place":
        return Place(
            self.id,
            {t: w * num // den for t, w in self.pre.items()},
            {t: w * num // den for t, w in self.post.items()},
        )


@dataclass(frozen=True)
class PetriNet:
    transitions: tuple[str, ...]
    places: tuple[Place, ...] = ()

    def __post_init__(self) -> None:
        transitions = tuple(self.transitions)
        places = tuple(self.places)
        if len(set(transitions)) != len(transitions):
            raise NetFormatError("duplicate transition names")
        ids = [p.id for p in places]
        if len(set(ids)) != len(ids):
            raise NetFormatError("duplicate place ids")
        known = set(transitions)
        for p in places:
            for t in (*p.pre, *p.post):
                if t not in known:
                    raise NetFormatError(f"place {p.id} refers to unknown transition {t}")
        object.__setattr__(self, "transitions", transitions)
        object.__setattr__(self, "places", places)

    @property
    def place_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.places)

    def place(self, pid: str) -> Place:
        for p in self.places:
            if p.id == pid:
                return p
        raise KeyError(pid)

    def matrices(self) -> tuple[np.ndarray, np.ndarray]:
        """(consume, produce) as |P| x |T| int64 arrays: W(p,t) and W(t,p)."""
        tidx = {t: j for j, t in enumerate(self.transitions)}
        consume = np.zeros((len(self.places), len(self.transitions)), dtype=np.int64)
        produce = np.zeros_like(consume)
        for i, p in enumerate(self.places):
            for t, w in p.post.items():
                consume[i, tidx[t]] = w
            for t, w in p.pre.items():
                produce[i, tidx[t]] = w
        return consume, produce

    def incidence(self) -> np.ndarray:
        """I(p, t) = W(t, p) - W(p, t)."""
        consume, produce = self.matrices()
        return produce - consume


@dataclass(frozen=True)
class System:
    """A net together with its initial marking (every place listed, zeros included)."""

    net: PetriNet
    m0: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ids = self.net.place_ids
        unknown = set(self.m0) - set(ids)
        if unknown:
            raise NetFormatError(f"marking refers to unknown places {sorted(unknown)}")
        m0 = {pid: int(self.m0.get(pid, 0)) for pid in ids}
        if any(v < 0 for v in m0.values()):
            raise NetFormatError("negative initial marking")
        object.__setattr__(self, "m0", m0)

    @property
    def transitions(self) -> tuple[str, ...]:
        return self.net.transitions

    def marking_vector(self) -> np.ndarray:
        return np.array([self.m0[pid] for pid in self.net.place_ids], dtype=np.int64)


@dataclass
class Lts:
    """Reachability graph: states are marking tuples over ``place_ids`` (sorted)."""

    place_ids: tuple[str, ...]
    states: list[tuple[int, ...]]
    arcs: list[tuple[int, str, int]]
    initial: int = 0

    def __len__(self) -> int:
        return len(self.states)

    def marking(self, s: int) -> dict[str, int]:
        return dict(zip(self.place_ids, self.states[s]))

    def successors(self) -> list[dict[str, int]]:
        succ: list[dict[str, int]] = [{} for _ in self.states]
        for s, t, d in self.arcs:
            succ[s][t] = d
        return succ

    def _components(self) -> tuple[int, np.ndarray]:
        n = len(self.states)
        if not self.arcs:
            return n, np.arange(n)
        src = [s for s, _, _ in self.arcs]
        dst = [d for _, _, d in self.arcs]
        graph = csr_matrix((np.ones(len(src)), (src, dst)), shape=(n, n))
        return connected_components(graph, directed=True, connection="strong")

    def is_reversible(self) -> bool:
        ncomp, _ = self._components()
        return ncomp == 1

    def is_circle(self) -> bool:
        """True iff the graph is one oriented cycle through every state."""
        n = len(self.states)
        if len(self.arcs) != n:
            return False
        outdeg = [0] * n
        indeg = [0] * n
        for s, _, d in self.arcs:
            outdeg[s] += 1
            indeg[d] += 1
        if any(x != 1 for x in outdeg) or any(x != 1 for x in indeg):
            return False
        return self.is_reversible()

    def cycle_word(self) -> list[str]:
        """Labels read along the unique path from the initial state (circle only)."""
        succ = self.successors()
        out, s = [], self.initial
        for _ in range(len(self.states)):
            (t, s), = succ[s].items()
            out.append(t)
        return out


class _Compiled:
    """Dense per-transition firing data over a fixed place order."""

    def __init__(self, net: PetriNet, order: tuple[str, ...]):
        pos = {pid: i for i, pid in enumerate(order)}
        self.order = order
        self.transitions = net.transitions
        self.consume: list[list[tuple[int, int]]] = []
        self.delta: list[list[tuple[int, int]]] = []
        for t in net.transitions:
            cons, delta = [], {}
            for p in net.places:
                w_in, w_out = p.post.get(t, 0), p.pre.get(t, 0)
                if w_in:
                    cons.append((pos[p.id], w_in))
                if w_out != w_in:
                    delta[pos[p.id]] = w_out - w_in
            self.consume.append(cons)
            self.delta.append(sorted(delta.items()))

    def enabled(self, m: tuple[int, ...]) -> list[int]:
        return [j for j, cons in enumerate(self.consume) if all(m[i] >= w for i, w in cons)]

    def fire(self, m: tuple[int, ...], j: int) -> tuple[int, ...]:
        new = list(m)
        for i, d in self.delta[j]:
            new[i] += d
        return tuple(new)


def _sorted_order(net: PetriNet) -> tuple[str, ...]:
    return tuple(sorted(net.place_ids))


def enabled(sys: System, m: Marking, t: str) -> bool:
    return _blocking_place(sys.net, m, t) is None


def _blocking_place(net: PetriNet, m: Marking, t: str) -> str | None:
    if t not in net.transitions:
        raise KeyError(t)
    for p in net.places:
        if m.get(p.id, 0) < p.post.get(t, 0):
            return p.id
    return None


def fire(sys: System, m: Marking, t: str) -> dict[str, int]:
    """Fire ``t`` at ``m``; raises NotEnabled naming the first blocking place."""
    blocking = _blocking_place(sys.net, m, t)
    if blocking is not None:
        raise NotEnabled(t, blocking)
    return {
        p.id: m.get(p.id, 0) - p.post.get(t, 0) + p.pre.get(t, 0)
        for p in sys.net.places
    }


def enabled_transitions(sys: System, m: Marking) -> list[str]:
    return [t for t in sys.net.transitions if _blocking_place(sys.net, m, t) is None]


def enabled_places(net: PetriNet, m: Marking) -> frozenset[str]:
    """Places p with M(p) >= W(p, t) for every output transition t."""
    return frozenset(
        p.id for p in net.places if all(m.get(p.id, 0) >= w for w in p.post.values())
    )


def classify(net: PetriNet) -> dict[str, bool]:
    is_cf = all(len(p.post) <= 1 for p in net.places)
    return {
        "is_wmg": is_cf and all(len(p.pre) <= 1 for p in net.places),
        "is_cf": is_cf,
        "is_pure": all(not (set(p.pre) & set(p.post)) for p in net.places),
        "is_plain": all(w == 1 for p in net.places for w in (*p.pre.values(), *p.post.values())),
    }


def reachability_graph(sys: System, max_states: int | None = None) -> Lts:
    """Breadth-first exploration of all reachable markings.

    States are numbered in BFS order, transitions tried in net order.
    """
    if max_states is None:
        max_states = default_max_states()
    if max_states < 1:
        raise ValueError("max_states must be >= 1")
    order = _sorted_order(sys.net)
    comp = _Compiled(sys.net, order)
    m0 = tuple(sys.m0[pid] for pid in order)
    index = {m0: 0}
    states = [m0]
    arcs: list[tuple[int, str, int]] = []
    queue = deque([0])
    while queue:
        s = queue.popleft()
        m = states[s]
        for j in comp.enabled(m):
            m2 = comp.fire(m, j)
            d = index.get(m2)
            if d is None:
                if len(states) >= max_states:
                    raise StateBudgetExceeded(max_states)
                d = index[m2] = len(states)
                states.append(m2)
                queue.append(d)
            arcs.append((s, comp.transitions[j], d))
    return Lts(order, states, arcs, 0)


def isomorphic_by_sequences(g1: Lts, g2: Lts) -> dict[int, int] | None:
    """Map states of ``g1`` to ``g2`` along identical label sequences.

    Returns the bijection if both graphs have the same arcs under it, else None.
    """
    succ1, succ2 = g1.successors(), g2.successors()
    mapping = {g1.initial: g2.initial}
    seen2 = {g2.initial}
    queue = deque([g1.initial])
    while queue:
        s = queue.popleft()
        t_s = mapping[s]
        if succ1[s].keys() != succ2[t_s].keys():
            return None
        for label, d1 in succ1[s].items():
            d2 = succ2[t_s][label]
            if d1 in mapping:
                if mapping[d1] != d2:
                    return None
            else:
                if d2 in seen2:
                    return None
                mapping[d1] = d2
                seen2.add(d2)
                queue.append(d1)
    if len(mapping) != len(g1.states) or len(seen2) != len(g2.states):
        return None
    return mapping


def scale_place(sys: System, p: str, num: int, den: int = 1) -> System:
    """Multiply every weight of place ``p`` and its marking by num/den."""
    if num < 1 or den < 1:
        raise NonIntegerScaling("scaling factors must be positive")
    place = sys.net.place(p)
    values = [*place.pre.values(), *place.post.values(), sys.m0[p]]
    if any((v * num) % den for v in values):
        raise NonIntegerScaling(f"scaling {p} by {num}/{den} leaves non-integer values")
    places = tuple(q.scaled(num, den) if q.id == p else q for q in sys.net.places)
    m0 = dict(sys.m0)
    m0[p] = m0[p] * num // den
    return System(PetriNet(sys.net.transitions, places), m0)


def normalize(sys: System) -> System:
    """Divide every place by its gcd (weights and marking must stay integral)."""
    out = sys
    for p in sys.net.places:
        g = p.gcd
        if g > 1 and sys.m0[p.id] % g == 0:
            out = scale_place(out, p.id, 1, g)
    return out


@dataclass(frozen=True)
class PurifyResult:
    system: System
    dropped: tuple[str, ...] = ()
    replaced: tuple[str, ...] = ()


def purify_cf(sys: System, max_states: int | None = None) -> PurifyResult:
    """Remove side conditions from a reversible CF system.

    A side-condition place p with unique output x, W(p,x) = k+h and
    W(x,p) = h > 0 becomes a pure place with W(p,x) = k and marking
    M0(p) - h.  Places that can never change (k = 0) and never block x are
    dropped and reported; places whose output never fires are replaced by
    an empty place feeding x.
    """
    if not classify(sys.net)["is_cf"]:
        raise NotChoiceFree("some place has more than one output transition")
    lts = reachability_graph(sys, max_states)
    if not lts.is_reversible():
        raise NotReversible("initial marking is not reachable from every reachable marking")
    fired = {t for _, t, _ in lts.arcs}
    # least marking of each place over the reachability graph
    pos = {pid: i for i, pid in enumerate(lts.place_ids)}
    least = {pid: min(s[pos[pid]] for s in lts.states) for pid in lts.place_ids}

    places, m0 = [], {}
    dropped, replaced = [], []
    for p in sys.net.places:
        (x, kh), = p.post.items() if p.post else ((None, 0),)
        h = p.pre.get(x, 0) if x is not None else 0
        if h == 0:
            places.append(p)
            m0[p.id] = sys.m0[p.id]
            continue
        k = kh - h
        if x not in fired:
            # x is dead everywhere: an empty place keeps it dead without a loop
            places.append(Place(p.id, {}, {x: 1}))
            m0[p.id] = 0
            replaced.append(p.id)
        elif k <= 0:
            # marking never decreases through x; reversibility keeps it constant
            # and at least h on every reachable marking, so p never disables x
            dropped.append(p.id)
        else:
            assert least[p.id] >= h, "reversible CF place keeps h tokens"
            pre = {t: w for t, w in p.pre.items() if t != x}
            places.append(Place(p.id, pre, {x: k}))
            m0[p.id] = sys.m0[p.id] - h
            replaced.append(p.id)
    out = System(PetriNet(sys.net.transitions, tuple(places)), m0)
    return PurifyResult(out, tuple(dropped), tuple(replaced))


# --- circuits and liveness -------------------------------------------------


def circuit_order(net: PetriNet) -> list[tuple[str, str]]:
    """Return the circuit as [(t_0, p_0), (t_1, p_1), ...] with t_i -> p_i -> t_{i+1}.

    Raises NotCircuit unless places and transitions alternate on one cycle.
    """
    if not net.places or len(net.places) != len(net.transitions):
        raise NotCircuit("a circuit has as many places as transitions (at least one)")
    out_place: dict[str, str] = {}
    in_place: dict[str, str] = {}
    for p in net.places:
        if len(p.pre) != 1 or len(p.post) != 1:
            raise NotCircuit(f"place {p.id} needs exactly one input and one output")
        (src,), (dst,) = p.pre, p.post
        if src in out_place or dst in in_place:
            raise NotCircuit("a transition has two input or two output places")
        out_place[src] = p.id
        in_place[dst] = p.id
    if set(out_place) != set(net.transitions) or set(in_place) != set(net.transitions):
        raise NotCircuit("some transition lacks an input or an output place")
    order = []
    t = net.transitions[0]
    for _ in net.transitions:
        p = out_place[t]
        order.append((t, p))
        (t,) = net.place(p).post
    if t != net.transitions[0] or len({p for _, p in order}) != len(net.places):
        raise NotCircuit("places and transitions do not form a single cycle")
    return order


def circuit_conservativeness(net: PetriNet) -> dict[str, int]:
    """Smallest positive integer P-vector X with X . I = 0 on a circuit."""
    order = circuit_order(net)
    x: dict[str, Fraction] = {}
    k = len(order)
    x[order[0][1]] = Fraction(1)
    # transition t_{i+1} consumes from p_i and produces into p_{i+1}
    for i in range(k):
        _, p = order[i]
        t_next, q = order[(i + 1) % k]
        w_in = net.place(p).post[t_next]
        w_out = net.place(q).pre[t_next]
        value = x[p] * w_in / w_out
        if q in x:
            if x[q] != value:
                raise NotConservative("weight products around the circuit differ")
        else:
            x[q] = value
    lcm = math.lcm(*(f.denominator for f in x.values()))
    ints = {p: int(f * lcm) for p, f in x.items()}
    g = math.gcd(*ints.values())
    return {p: v // g for p, v in ints.items()}


def is_one_conservative(net: PetriNet) -> bool:
    """Every transition's input weights sum to its output weights."""
    return not np.any(net.incidence().sum(axis=0))


def circuit_live_sufficient(sys: System) -> bool:
    """Structural sufficient liveness test for a conservative circuit.

    Some place p0 holds at least W(p0, t0) tokens and every other place p
    holds at least W(p, t) - gcd_p.
    """
    net = sys.net
    circuit_conservativeness(net)
    slack = {}
    for p in net.places:
        (w,) = p.post.values()
        slack[p.id] = (sys.m0[p.id] >= w, sys.m0[p.id] >= w - p.gcd)
    if not all(low for _, low in slack.values()):
        return False
    return any(full for full, _ in slack.values())


def binary_circuit_live(sys: System) -> bool:
    """Exact liveness test for 1-conservative binary circuits with useful tokens:
    live iff M0(p_ab) + M0(p_ba) > m + n - 2 gcd(m, n)."""
    net = sys.net
    if len(net.transitions) != 2:
        raise PreconditionViolated("binary")
    try:
        order = circuit_order(net)
    except NotCircuit:
        raise PreconditionViolated("circuit") from None
    if not is_one_conservative(net):
        raise PreconditionViolated("1-conservative")
    for p in net.places:
        if sys.m0[p.id] % p.gcd:
            raise PreconditionViolated("useful tokens")
    (a, p_ab), (b, _) = order
    m = net.place(p_ab).pre[a]
    n = net.place(p_ab).post[b]
    return sum(sys.m0.values()) > m + n - 2 * math.gcd(m, n)


def is_live_exhaustive(sys: System, max_states: int | None = None) -> bool:
    """Brute-force liveness over the whole reachability graph.

    Live iff every bottom strongly connected component carries every
    transition on one of its arcs.
    """
    lts = reachability_graph(sys, max_states)
    ncomp, labels = lts._components()
    leaves = np.ones(ncomp, dtype=bool)
    seen: list[set[str]] = [set() for _ in range(ncomp)]
    for s, t, d in lts.arcs:
        if labels[s] != labels[d]:
            leaves[labels[s]] = False
        else:
            seen[labels[s]].add(t)
    need = set(sys.net.transitions)
    return all(seen[c] >= need for c in range(ncomp) if leaves[c])


def semiflow_residual(net: PetriNet, vector: Iterable[int]) -> np.ndarray:
    """I . v, which vanishes exactly when v is a T-semiflow."""
    return net.incidence() @ np.asarray(list(vector), dtype=np.int64)
