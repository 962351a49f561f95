import itertools

import pytest

from superstring import (
    ArcMultiset,
    CollapseStep,
    InvalidSolutionError,
    ca,
    collapse_at,
    collapse_keeps_valid,
    disjoint_union,
    gha,
    is_eulerian_solution,
    spell,
    zigzag,
)


class TestCollapseAt:
    def test_moves_pair_one_level_down(self, quad_graph):
        g = quad_graph
        d = zigzag(g, (0, 1, 2, 3))
        before = (d.up[g.vid("cae")], d.down[g.vid("cae")],
                  d.down[g.vid("ca")], d.up[g.vid("ae")])
        out = collapse_at(g, d, "cae")
        assert out.up[g.vid("cae")] == before[0] - 1
        assert out.down[g.vid("cae")] == before[1] - 1
        assert out.down[g.vid("ca")] == before[2] + 1
        assert out.up[g.vid("ae")] == before[3] + 1
        assert out.weight == d.weight  # weight changes only at level 1
        assert is_eulerian_solution(g, out).balanced

    def test_level_one_removes_pair(self, trio_graph):
        g = trio_graph
        d = zigzag(g, (0, 1, 2))
        assert d.up[g.vid("a")] >= 1 and d.down[g.vid("a")] >= 1
        out = collapse_at(g, d, "a")
        assert out.weight == d.weight - 1
        assert out.up[g.vid("a")] == d.up[g.vid("a")] - 1
        assert out.down[g.vid("a")] == d.down[g.vid("a")] - 1

    def test_accepts_vid_or_label(self, trio_graph):
        g = trio_graph
        d = zigzag(g, (0, 1, 2))
        assert collapse_at(g, d, "a") == collapse_at(g, d, g.vid("a"))

    def test_rejects_epsilon_and_missing_pair(self, trio_graph):
        g = trio_graph
        d = zigzag(g, (0, 1, 2))
        with pytest.raises(ValueError):
            collapse_at(g, d, "")
        with pytest.raises(ValueError):
            collapse_at(g, d, "c")  # up-arc only in the identity zigzag

    def test_does_not_mutate_argument(self, trio_graph):
        d = zigzag(trio_graph, (0, 1, 2))
        w = d.weight
        collapse_at(trio_graph, d, "a")
        assert d.weight == w


class TestCollapseKeepsValid:
    def test_uncovering_an_input_is_invalid(self, trio_graph):
        g = trio_graph
        d = gha(g)
        # every pair in the optimal solution sits on an input vertex whose
        # only remaining arcs are that pair, so nothing may collapse
        pairs = [v for v in range(1, len(g)) if d.up[v] > 0 and d.down[v] > 0]
        assert [g.labels[v] for v in pairs] == ["aa", "ae", "ca"]
        for v in pairs:
            assert not collapse_keeps_valid(g, d, v)

    def test_valid_collapse_reported(self, trio_graph):
        g = trio_graph
        d = zigzag(g, (0, 1, 2))
        assert collapse_keeps_valid(g, d, "a")


class TestCA:
    def test_requires_valid_start(self, trio_graph):
        with pytest.raises(InvalidSolutionError):
            ca(trio_graph, ArcMultiset(trio_graph))

    def test_trio_identity_zigzag(self, trio_graph):
        d = zigzag(trio_graph, (0, 1, 2))
        res = ca(trio_graph, d)
        assert res.weight == 4
        assert spell(trio_graph, res).superstring == "caae"
        assert d.weight == 6  # argument untouched

    def test_quad_examples_reach_greedy_solution(self, quad_graph):
        g = quad_graph
        target = gha(g)
        assert target.weight == 10
        for start in (zigzag(g, (0, 1, 2, 3)), zigzag(g, (0, 2, 1, 3))):
            assert ca(g, disjoint_union(start, start)) == target
        assert ca(g, zigzag(g, (0, 1, 2, 3))) == target

    def test_greedy_solution_is_fixed_point(self, quad_graph, trio_graph):
        for g in (quad_graph, trio_graph):
            target = gha(g)
            assert ca(g, disjoint_union(target, target)) == target

    def test_output_admits_no_further_collapse(self, quad_graph, trio_graph):
        for g in (quad_graph, trio_graph):
            res = ca(g, zigzag(g, range(len(g.inputs))))
            for v in range(1, len(g)):
                if res.up[v] > 0 and res.down[v] > 0:
                    assert not collapse_keeps_valid(g, res, v)

    def test_trace_replays_to_result(self, quad_graph):
        g = quad_graph
        d = disjoint_union(zigzag(g, (0, 1, 2, 3)), zigzag(g, (3, 2, 1, 0)))
        trace: list[CollapseStep] = []
        res = ca(g, d, trace=trace)
        cur = d
        for step in trace:
            cur = collapse_at(g, cur, step.vertex)
            v = g.vid(step.vertex)
            assert step.level == g.level_of[v]
            assert cur.up[v] == step.up_after
            assert cur.down[v] == step.down_after
        assert cur == res

    def test_weight_drop_equals_level_one_steps(self, quad_graph):
        g = quad_graph
        d = disjoint_union(zigzag(g, (0, 1, 2, 3)), zigzag(g, (0, 1, 2, 3)))
        trace: list[CollapseStep] = []
        res = ca(g, d, trace=trace)
        level_one = sum(1 for s in trace if s.level == 1)
        assert d.weight - res.weight == level_one

    def test_levels_processed_top_down_lex_within(self, quad_graph):
        g = quad_graph
        d = disjoint_union(zigzag(g, (1, 0, 3, 2)), zigzag(g, (1, 0, 3, 2)))
        trace: list[CollapseStep] = []
        ca(g, d, trace=trace)
        keys = [(-s.level, s.vertex) for s in trace]
        assert keys == sorted(keys)

    def test_deterministic(self, quad_graph):
        g = quad_graph
        d = disjoint_union(zigzag(g, (2, 0, 3, 1)), zigzag(g, (1, 3, 0, 2)))
        assert ca(g, d) == ca(g, d)

    def test_repeat_levels_agrees_on_examples(self, quad_graph, trio_graph):
        for g in (quad_graph, trio_graph):
            d = zigzag(g, range(len(g.inputs)))
            assert ca(g, d, repeat_levels=True) == ca(g, d)

    def test_all_doubled_starts_collapse_alike(self, quad_graph):
        g = quad_graph
        results = set()
        for perm in itertools.permutations(range(4)):
            d = zigzag(g, perm)
            results.add(ca(g, disjoint_union(d, d)))
        assert len(results) == 1
