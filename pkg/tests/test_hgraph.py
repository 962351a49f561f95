import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from superstring import InputSet, build_graph, tough
from superstring.strings import pref1, suff1


def test_vertex_count_and_numbering(quad_graph):
    g = quad_graph
    assert len(g) == 13
    assert g.labels[0] == ""
    # level 1 then level 2 then level 3, lexicographic inside each level
    assert g.labels[1:4] == ["a", "c", "e"]
    assert g.labels[4:9] == ["aa", "ae", "ca", "ec", "ee"]
    assert g.labels[9:] == ["aaa", "aec", "cae", "eee"]


def test_levels_are_contiguous_ranges(quad_graph):
    g = quad_graph
    assert g.max_level == 3
    assert list(g.vertices_at_level(0)) == [0]
    assert [g.labels[v] for v in g.vertices_at_level(2)] == [
        "aa", "ae", "ca", "ec", "ee"
    ]
    with pytest.raises(ValueError):
        g.vertices_at_level(4)


def test_pref_suff_arcs(quad_graph):
    g = quad_graph
    for v in range(1, len(g)):
        s = g.labels[v]
        assert g.labels[g.pref[v]] == pref1(s)
        assert g.labels[g.suff[v]] == suff1(s)
    assert g.pref[0] == -1 and g.suff[0] == -1


def test_input_vids(quad_graph, quad_inputs):
    g = quad_graph
    assert [g.labels[v] for v in g.input_vids] == list(quad_inputs)
    for i, v in enumerate(g.input_vids):
        assert g.is_input_vid(v)
        assert g.input_index_of[v] == i
    assert not g.is_input_vid(0)


def test_vid_lookup(quad_graph):
    assert quad_graph.vid("") == 0
    assert quad_graph.labels[quad_graph.vid("cae")] == "cae"
    with pytest.raises(KeyError):
        quad_graph.vid("zz")


def test_children_and_parents_are_inverse(quad_graph):
    g = quad_graph
    for v in range(len(g)):
        for c in g.children_of(v):
            assert g.pref[c] == v
        for p in g.parents_of(v):
            assert g.suff[p] == v
    # every non-root vertex appears exactly once in each flat list
    child_all = [c for v in range(len(g)) for c in g.children_of(v)]
    parent_all = [p for v in range(len(g)) for p in g.parents_of(v)]
    assert sorted(child_all) == list(range(1, len(g)))
    assert sorted(parent_all) == list(range(1, len(g)))


def test_children_sorted_lexicographically(quad_graph):
    g = quad_graph
    a = g.vid("a")
    assert [g.labels[c] for c in g.children_of(a)] == ["aa", "ae"]
    assert [g.labels[p] for p in g.parents_of(a)] == ["aa", "ca"]


def test_tough_max_level():
    g = build_graph(tough(2))
    assert g.max_level == 6
    assert sorted(g.labels[v] for v in g.input_vids) == [
        "aeaecc", "ccaeae", "eaeaea"
    ]


def test_kernel_arrays_consistency(trio_graph):
    g = trio_graph
    a = g.arrays()
    assert a.pref.dtype == np.int32 and a.suff.dtype == np.int32
    np.testing.assert_array_equal(a.level_of, np.array(g.level_of))
    np.testing.assert_array_equal(a.inputs, np.array(g.input_vids))
    assert a.is_input.sum() == len(g.inputs)
    assert a.child_start[0] == 0 and a.child_start[-1] == len(g) - 1
    assert a.parent_start[-1] == len(g) - 1
    assert g.arrays() is a  # cached


@given(st.lists(st.text(alphabet="abc", min_size=1, max_size=5),
                min_size=1, max_size=5, unique=True))
def test_every_substring_present(strings):
    try:
        ins = InputSet(tuple(strings))
    except ValueError:
        return  # a string contains another; not a valid input set
    g = build_graph(ins)
    subs = {s[i:j] for s in strings
            for i in range(len(s)) for j in range(i + 1, len(s) + 1)}
    assert set(g.labels) == subs | {""}
    # numbering is (level, lexicographic)
    keys = [(g.level_of[v], g.labels[v]) for v in range(len(g))]
    assert keys == sorted(keys)


def test_build_graph_accepts_plain_sequence():
    g = build_graph(["ab", "ba"])
    assert isinstance(g.inputs, InputSet)
    assert len(g) == 5
