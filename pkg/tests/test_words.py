import pytest
from hypothesis import given
from hypothesis import strategies as st

from wmgsynth import (
    TVector,
    Word,
    adjacent_pairs,
    factor_primitive,
    induced_circular_lts,
    is_prime,
    parikh,
    parse_word,
    project,
)
from wmgsynth.errors import BadLabel, BadProjection, BadVector, EmptyWord

words = st.lists(st.sampled_from("abcd"), min_size=1, max_size=30).map(lambda xs: Word(tuple(xs)))


def test_parse_word_single_letters():
    w = parse_word("aacbbdabd")
    assert len(w) == 9
    assert w.alphabet == ("a", "c", "b", "d")
    assert set(w.alphabet) == {"a", "b", "c", "d"}
    assert parse_word("a").alphabet == ("a",)


def test_parse_word_multi_char_labels():
    assert parse_word("t1 t2 t1").labels == ("t1", "t2", "t1")
    assert parse_word("t1,t2,,t3").labels == ("t1", "t2", "t3")
    assert parse_word("ab", multi=True).labels == ("ab",)


@pytest.mark.parametrize("text", ["", "   "])
def test_parse_word_empty(text):
    with pytest.raises(EmptyWord):
        parse_word(text)


def test_parse_word_bad_label_position():
    with pytest.raises(BadLabel) as exc:
        parse_word("ab-c")
    assert exc.value.position == 2
    with pytest.raises(BadLabel) as exc:
        parse_word("t1 t$ t3")
    assert exc.value.position == 1


def test_parikh_examples():
    assert parikh(parse_word("abcabdabd")).as_dict() == {"a": 3, "b": 3, "c": 1, "d": 2}
    assert parikh(parse_word("a")).as_dict() == {"a": 1}
    assert parikh(parse_word("abab")).as_dict() == {"a": 2, "b": 2}


def test_is_prime_examples():
    assert is_prime(TVector.from_counts([3, 3, 1, 2]))
    assert not is_prime(TVector.from_counts([2, 2]))
    assert is_prime(TVector.from_counts([1]))


def test_tvector_validation():
    with pytest.raises(BadVector):
        TVector(("a", "b"), (1,))
    with pytest.raises(BadVector):
        TVector(("a", "a"), (1, 1))
    with pytest.raises(BadVector):
        TVector.from_counts([1, 0])
    v = TVector.from_counts({"x": 2, "y": 5})
    assert v["y"] == 5 and v.total == 7 and v.labels == ("x", "y")


def test_project_examples():
    assert str(project(parse_word("aacbbdabd"), {"a", "b"})) == "aabbab"
    assert str(project(parse_word("abc"), {"a", "b", "c"})) == "abc"
    assert str(project(parse_word("abcbad"), {"a", "b"})) == "abba"


@pytest.mark.parametrize("subset", [set(), {"a", "z"}])
def test_project_bad_subset(subset):
    with pytest.raises(BadProjection):
        project(parse_word("abc"), subset)


def test_adjacent_pairs_examples():
    assert adjacent_pairs(parse_word("ab")) == [("a", "b", 0), ("b", "a", 1)]
    pairs = adjacent_pairs(parse_word("aacbbdabd"))
    assert ("d", "a", 5) in pairs and ("a", "c", 1) in pairs
    assert ("d", "a", 8) in pairs  # wrap-around
    assert adjacent_pairs(parse_word("aaa")) == []


def test_induced_circular_lts_examples():
    lts = induced_circular_lts(parse_word("ab"))
    assert list(lts.states) == [0, 1]
    assert lts.arcs == [(0, "a", 1), (1, "b", 0)]
    assert len(induced_circular_lts(parse_word("abcbad")).states) == 6
    assert induced_circular_lts(parse_word("a")).arcs == [(0, "a", 0)]


def test_factor_primitive_examples():
    assert factor_primitive(parse_word("abab")) == (parse_word("ab"), 2)
    assert factor_primitive(parse_word("aabbab")) == (parse_word("aabbab"), 1)
    assert factor_primitive(parse_word("aaa")) == (parse_word("a"), 3)


def test_rotate():
    w = parse_word("abc")
    assert str(w.rotate(1)) == "bca"
    assert w.rotate(3) == w


@given(words, st.data())
def test_projection_preserves_counts(w, data):
    subset = data.draw(st.sets(st.sampled_from(w.alphabet), min_size=1))
    pw, pp = parikh(w), parikh(project(w, subset))
    for t in subset:
        assert pp[t] == pw[t]


@given(words)
def test_factor_primitive_reconstructs(w):
    v, k = factor_primitive(w)
    assert v.labels * k == w.labels
    assert all(parikh(w)[t] == k * parikh(v)[t] for t in w.alphabet)
    assert factor_primitive(v) == (v, 1)


@given(words)
def test_circular_lts_spells_word(w):
    lts = induced_circular_lts(w)
    assert len(lts.states) == len(w) == len(lts.arcs)
    succ = {s: (t, d) for s, t, d in lts.arcs}
    s, read = lts.initial, []
    for _ in range(len(w)):
        t, s = succ[s]
        read.append(t)
    assert tuple(read) == w.labels and s == lts.initial


@given(words)
def test_adjacent_pairs_distinct(w):
    for a, b, q in adjacent_pairs(w):
        assert a != b
        assert (w[q], w[(q + 1) % len(w)]) == (a, b)
