"""Acceptance gate: one test per criterion, reported in the terminal summary."""

import math

import numpy as np
import pytest

from conftest import all_words, multiset_permutations, random_prime_word, random_word
from wmgsynth import (
    Word,
    binary_circuit_live,
    build_adjacent_places,
    check_by_projection,
    check_cyclic_wmg,
    circular_rg,
    is_live_exhaustive,
    load_fixture,
    parse_word,
    reachability_graph,
    scale_place,
    synthesize_cyclic_wmg,
    weak_synthesize,
    witness_word,
)
from wmgsynth.bench import bench
from wmgsynth.cyclic import canonical_system, marking_trace
from wmgsynth.petri import (
    PetriNet, Place, System, enabled_places, isomorphic_by_sequences, semiflow_residual,
)

SWEEP_MAX_LEN = 8


@pytest.fixture(scope="module")
def sweep():
    """Every word of length <= 8 over subsets of {a,b,c,d}, with its verdict."""
    return [(w, check_cyclic_wmg(w)) for w in all_words(SWEEP_MAX_LEN)]


def test_c01_fixture_verdicts():
    for text in ("aacbbdabd", "aacbbeabd", "abcabdabd"):
        assert check_cyclic_wmg(parse_word(text)).solvable, text
    for text in ("abcbadabd", "abcbad", "cabdaaab"):
        assert not check_cyclic_wmg(parse_word(text)).solvable, text
    d = check_cyclic_wmg(parse_word("abcbadabd")).diagnostic
    assert (d.kind, d.a, d.b) == ("inequality", "a", "b")
    assert (d.m, d.n) == (1, 1)
    assert (d.pjq_a, d.pjq_b) == (1, 0)
    # the witness is recomputable: 1 * 1 >= 1 * (0 + 1)
    assert d.m * d.pjq_a >= d.n * (d.pjq_b + 1)


def test_c02_solvable_verdicts_certified(sweep, rng):
    failures = []
    solvable = 0
    for w, verdict in sweep:
        if verdict.solvable:
            solvable += 1
            res = synthesize_cyclic_wmg(w)
            if not circular_rg(res.system, w).ok:
                failures.append(str(w))
    random_solvable = 0
    for _ in range(1000):
        w = random_word(rng, 40)
        if check_cyclic_wmg(w).solvable:
            random_solvable += 1
            if not circular_rg(synthesize_cyclic_wmg(w).system, w).ok:
                failures.append(str(w))
    assert len(sweep) == 87380
    assert solvable == 19768
    assert random_solvable > 0
    assert failures == []


def test_c03_completeness_via_canonical_net(sweep):
    disagreements = [
        str(w) for w, verdict in sweep
        if verdict.solvable != circular_rg(canonical_system(w), w).ok
    ]
    assert disagreements == []


def test_c04_weak_synthesis_instance():
    v = (2, 3, 2, 4)
    sys_ = weak_synthesize(v)
    assert sys_ == load_fixture("weak_2_3_2_4")
    assert sys_.m0["p[t1,t2]"] == 1 and sys_.m0["p[t2,t1]"] == 3
    lts = reachability_graph(sys_)
    assert len(lts) == 11 and lts.is_circle()
    w = witness_word(sys_, v)
    assert tuple(w.labels.count(t) for t in ("t1", "t2", "t3", "t4")) == v
    assert str(w) == "t1 t2 t3 t4 t4 t2 t1 t3 t4 t2 t4"


def _prime_vectors(max_m=4, max_c=5):
    import itertools

    for m in range(1, max_m + 1):
        for v in itertools.product(range(1, max_c + 1), repeat=m):
            if math.gcd(*v) == 1:
                yield v


def test_c05_weak_synthesis_properties():
    failures = []
    count = 0
    for v in _prime_vectors():
        count += 1
        sys_ = weak_synthesize(v)
        lts = reachability_graph(sys_)
        ok = (
            not np.any(semiflow_residual(sys_.net, v))
            and lts.is_circle()
            and len(lts) == sum(v)
            and all(len(s) == 1 for s in lts.successors())
            and is_live_exhaustive(sys_)
        )
        if not ok:
            failures.append(v)
    # by inclusion-exclusion per length: 1 + (25-6) + (125-10) + (625-18)
    assert count == 742
    assert failures == []


def _binary_circuits(max_w=6):
    for m in range(1, max_w + 1):
        for n in range(1, max_w + 1):
            g = math.gcd(m, n)
            net = PetriNet(("a", "b"), (
                Place("p_ab", {"a": m}, {"b": n}),
                Place("p_ba", {"b": n}, {"a": m}),
            ))
            for x in range(0, m + n + 1, g):
                for y in range(0, m + n + 1 - x, g):
                    yield System(net, {"p_ab": x, "p_ba": y})


def test_c06_binary_circuit_liveness():
    cases = list(_binary_circuits())
    disagreements = [s for s in cases if binary_circuit_live(s) != is_live_exhaustive(s)]
    assert len(cases) > 500
    assert disagreements == []


def _random_conservative_circuit(rng):
    k = int(rng.integers(2, 5))
    ts = tuple(f"t{i}" for i in range(k))
    v = rng.integers(1, 5, size=k)
    places, m0 = [], {}
    for i in range(k):
        j = (i + 1) % k
        g = math.gcd(int(v[i]), int(v[j]))
        c = int(rng.integers(1, 3))
        # W(t_i, p) * v_i = W(p, t_j) * v_j keeps v a T-semiflow
        w_in, w_out = c * int(v[j]) // g, c * int(v[i]) // g
        pid = f"p{i}"
        places.append(Place(pid, {ts[i]: w_in}, {ts[j]: w_out}))
        m0[pid] = int(rng.integers(0, 2 * max(w_in, w_out) + 1))
    return System(PetriNet(ts, tuple(places)), m0)


def _random_legal_scaling(rng, sys_):
    out = sys_
    for p in sys_.net.places:
        g = math.gcd(p.gcd, sys_.m0[p.id])
        divisors = [d for d in range(1, g + 1) if g % d == 0]
        den = int(rng.choice(divisors))
        num = int(rng.integers(1, 4))
        out = scale_place(out, p.id, num, den)
    return out


def test_c07_scaling_invariance(rng):
    failures = 0
    for _ in range(200):
        before = _random_conservative_circuit(rng)
        after = _random_legal_scaling(rng, before)
        g1, g2 = reachability_graph(before), reachability_graph(after)
        mapping = isomorphic_by_sequences(g1, g2)
        if mapping is None:
            failures += 1
            continue
        for s, t in mapping.items():
            if enabled_places(before.net, g1.marking(s)) != enabled_places(after.net, g2.marking(t)):
                failures += 1
                break
    assert failures == 0


def test_c08_ssp_separation(rng):
    collisions = []
    for _ in range(500):
        w = random_prime_word(rng, 40)
        trace = marking_trace(build_adjacent_places(w), w)
        if len(set(trace)) != len(w):
            collisions.append(str(w))
    assert collisions == []


def test_c09_ternary_projection_agreement(sweep):
    disagreements = []
    total = 0
    for x in range(1, 4):
        for y in range(1, 6):
            if math.gcd(x, y) != 1:
                continue
            for big in "abc":
                counts = {c: (y if c == big else x) for c in "abc"}
                for tup in multiset_permutations(counts):
                    w = Word(tup)
                    total += 1
                    if check_by_projection(w) != check_cyclic_wmg(w).solvable:
                        disagreements.append(str(w))
    assert total == 45738
    assert disagreements == []
    unsound = [
        str(w) for w, verdict in sweep
        if math.gcd(*(w.labels.count(c) for c in w.alphabet)) == 1
        and check_by_projection(w) and not verdict.solvable
    ]
    assert unsound == []
    strict = parse_word("aacbbdabd")
    assert check_by_projection(strict) is False and check_cyclic_wmg(strict).solvable


def test_c10_cf_fixtures():
    for name, text in (
        ("abcbad_cf", "abcbad"),
        ("cabdaaab_cf", "cabdaaab"),
        ("bcafdeaaabcdaafdcaaa_cf", "bcafdeaaabcdaafdcaaa"),
    ):
        assert circular_rg(load_fixture(name), parse_word(text)).ok, name
    assert not check_cyclic_wmg(parse_word("abcbad")).solvable
    assert not check_cyclic_wmg(parse_word("cabdaaab")).solvable


def test_c11_growth_exponents():
    words = bench("word-synth", [1000, 2000, 4000, 8000], seed=0)
    weak = bench("weak-synth", [8, 16, 32, 64], seed=0)
    print(f"word-synth exponent {words.exponent:.2f}, weak-synth exponent {weak.exponent:.2f}")
    assert words.exponent <= 2.5
    assert weak.exponent <= 2.5
