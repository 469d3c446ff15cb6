"""Graph extraction, chromatic/Tutte polynomials, and the graph-side vacuum routes."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from tljones.coeffs import VertexWeights, pair_structure, vacuum
from tljones.forests import ThompsonElement, Tree, enumerate_elements, generator, multiply
from tljones.graphpoly import (
    Graph,
    _hist_jit,
    _histogram_loop,
    _wiring,
    chromatic,
    chromatic_at,
    chromatic_whitney,
    cone_chromatic,
    cone_identity_check,
    inequality_check,
    is_bipartite,
    state_sum_euler_check,
    choice_histogram,
    state_sum_histogram,
    thompson_graph,
    tree_arcs,
    tutte,
    tutte_at,
    vacuum_via_chromatic,
    vacuum_via_state_sum,
    vacuum_via_tutte,
)
from tljones.scalars import GOLDEN, Scalar

X0 = generator(0)
X1 = generator(1)
C = multiply(X0, X1)

rat = Scalar.rational
one = rat(1)


def poly_of(*coeffs):
    return tuple(coeffs)


class TestGraph:
    def test_edges_normalised_and_sorted(self):
        g = Graph(3, [(3, 1), (2, 1), (1, 3)])
        assert g.edges == ((1, 2), (1, 3), (1, 3))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Graph(2, [(1, 3)])

    def test_immutable_and_hashable(self):
        g = Graph(2, [(1, 2)])
        with pytest.raises(AttributeError):
            g.n = 5
        assert g == Graph(2, [(2, 1)])
        assert len({g, Graph(2, [(1, 2)])}) == 1

    def test_delete_one_copy(self):
        g = Graph(2, [(1, 2), (1, 2)])
        assert g.delete((1, 2)).edges == ((1, 2),)

    def test_contract_parallel_becomes_loop(self):
        g = Graph(2, [(1, 2), (1, 2)])
        c = g.contract((1, 2))
        assert c.n == 1 and c.edges == ((1, 1),)
        assert c.has_loop

    def test_contract_relabels(self):
        g = Graph(3, [(1, 2), (2, 3)])
        c = g.contract((1, 2))
        assert c.n == 2 and c.edges == ((1, 2),)

    def test_quotient_keeps_multiset(self):
        g = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 2)])
        q = g.quotient([2, 3])
        assert q.n == 3
        assert q.edges == ((1, 2), (1, 2), (2, 2), (2, 3))

    def test_components(self):
        assert Graph(4, [(1, 2), (3, 4)]).components() == 2
        assert Graph(5, [(1, 2)]).components() == 4

    def test_bipartite(self):
        assert is_bipartite(Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)]))
        assert not is_bipartite(Graph(3, [(1, 2), (2, 3), (1, 3)]))
        assert not is_bipartite(Graph(1, [(1, 1)]))
        assert is_bipartite(Graph(2, [(1, 2), (1, 2)]))


class TestThompsonGraph:
    def test_x0_edge_multiset(self):
        g = thompson_graph(X0)
        assert g.n == 3
        assert g.edges == ((1, 2), (1, 2), (1, 3), (2, 3))

    def test_left_comb_gives_star(self):
        arcs = tree_arcs(Tree("1110000"))
        assert sorted(arcs) == [(1, 2), (1, 3), (1, 4)]

    def test_right_comb_gives_path(self):
        arcs = tree_arcs(Tree("1010100"))
        assert sorted(arcs) == [(1, 2), (2, 3), (3, 4)]

    def test_five_leaf_pair(self):
        g = ThompsonElement(Tree("111001000"), Tree("101100100"))
        assert g.encode() == "pair:111001000,101100100"  # already reduced
        arcs_top = tree_arcs(g.tplus)
        arcs_bottom = tree_arcs(g.tminus)
        assert sorted(arcs_top) == [(1, 2), (1, 3), (1, 5), (3, 4)]
        assert sorted(arcs_bottom) == [(1, 2), (2, 3), (2, 4), (4, 5)]
        graph = thompson_graph(g)
        assert graph.edges == (
            (1, 2), (1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4), (4, 5),
        )

    def test_contracting_last_edge_gives_k4(self):
        g = ThompsonElement(Tree("111001000"), Tree("101100100"))
        k4 = thompson_graph(g).contract((4, 5))
        assert k4.simple_edges() == (
            (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        )

    def test_edge_count_always_doubled_carets(self):
        for g in enumerate_elements(5):
            graph = thompson_graph(g)
            assert len(graph.edges) == 2 * (g.leaves - 1)
            assert graph.components() == 1


class TestChromatic:
    def test_x0_polynomial(self):
        # t (t - 1) (t - 2)
        assert chromatic(thompson_graph(X0)) == poly_of(0, 2, -3, 1)

    def test_k4(self):
        k4 = Graph(4, [(u, v) for u in range(1, 5) for v in range(u + 1, 5)])
        assert chromatic(k4) == poly_of(0, -6, 11, -6, 1)

    def test_tree_formula(self):
        path = Graph(4, [(1, 2), (2, 3), (3, 4)])
        assert chromatic(path) == poly_of(0, -1, 3, -3, 1)  # t (t-1)^3

    def test_cycle(self):
        c4 = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        assert chromatic(c4) == poly_of(0, -3, 6, -4, 1)  # (t-1)^4 + (t-1)

    def test_loop_kills(self):
        assert chromatic(Graph(2, [(1, 2), (2, 2)])) == ()

    def test_parallel_edges_ignored(self):
        assert chromatic(Graph(2, [(1, 2)] * 3)) == poly_of(0, -1, 1)

    def test_disconnected_multiplies(self):
        g = Graph(4, [(1, 2), (3, 4)])
        assert chromatic(g) == poly_of(0, 0, 1, -2, 1)  # t^2 (t-1)^2

    def test_isolated_vertices(self):
        g = Graph(3, [(1, 2)])
        assert chromatic(g) == poly_of(0, 0, -1, 1)  # t^2 (t-1)

    def test_whitney_agrees(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randint(2, 5)
            edges = [
                (rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(1, 7))
            ]
            g = Graph(n, edges)
            assert chromatic_whitney(g) == chromatic(g)

    def test_whitney_on_thompson_graphs(self):
        for g in enumerate_elements(4):
            graph = thompson_graph(g)
            assert chromatic_whitney(graph) == chromatic(graph)

    def test_evaluation_exact(self):
        g = thompson_graph(X0)
        assert chromatic_at(g, rat(3)) == rat(6)
        assert chromatic_at(g, Scalar.quadratic(Fraction(5, 2), Fraction(1, 2), 5)) == (
            Scalar.quadratic(Fraction(15, 2), Fraction(7, 2), 5)
        )


class TestTutte:
    def test_single_edge(self):
        assert tutte(Graph(2, [(1, 2)])) == {(1, 0): 1}

    def test_loop(self):
        assert tutte(Graph(1, [(1, 1)])) == {(0, 1): 1}

    def test_double_edge(self):
        assert tutte(Graph(2, [(1, 2), (1, 2)])) == {(1, 0): 1, (0, 1): 1}

    def test_triangle(self):
        t = tutte(Graph(3, [(1, 2), (2, 3), (1, 3)]))
        assert t == {(2, 0): 1, (1, 0): 1, (0, 1): 1}

    def test_chromatic_from_tutte(self):
        # chi(t) = (-1)^(n-1) t T(1-t, 0) for connected graphs
        for g in list(enumerate_elements(5))[::7]:
            graph = thompson_graph(g)
            assert graph.components() == 1
            n = graph.n
            for t in (rat(Fraction(7, 2)), rat(-2)):
                lhs = chromatic_at(graph, t)
                rhs = t * tutte_at(graph, one - t, rat(0))
                if (n - 1) % 2:
                    rhs = -rhs
                assert lhs == rhs

    def test_evaluation(self):
        g = Graph(3, [(1, 2), (2, 3), (1, 3)])
        # x^2 + x + y at (2, 3)
        assert tutte_at(g, rat(2), rat(3)) == rat(9)


class TestVacuumRoutes:
    def test_x0_frozen_values(self):
        assert vacuum_via_chromatic(X0, 2) == rat(0)
        assert vacuum_via_chromatic(X0, 3) == rat(Fraction(1, 2))
        assert vacuum_via_chromatic(X0, 4) == rat(Fraction(2, 3))
        assert vacuum_via_state_sum(X0, 4) == rat(Fraction(2, 3))

    def test_c_at_two(self):
        assert vacuum_via_chromatic(C, 2) == one
        assert vacuum_via_state_sum(C, 2) == one
        assert is_bipartite(thompson_graph(C))

    def test_identity_element(self):
        e = ThompsonElement.identity()
        assert vacuum_via_chromatic(e, 4) == one
        assert vacuum_via_state_sum(e, 4) == one

    def test_routes_agree_exactly(self):
        points = [rat(2), rat(3), rat(4), GOLDEN + one]
        for g in enumerate_elements(5):
            for t in points:
                w = VertexWeights.chromatic(t)
                reference = vacuum(g, w, backend="tl")
                assert vacuum_via_chromatic(g, t) == reference
                assert vacuum_via_state_sum(g, t) == reference
                assert vacuum_via_tutte(g, w) == reference

    def test_routes_agree_float(self):
        t = Scalar.flt(4.7)
        w = VertexWeights.chromatic(t)
        for g in list(enumerate_elements(5))[::11]:
            reference = vacuum(g, w, backend="tl")
            assert vacuum_via_chromatic(g, t).close_to(reference)
            assert vacuum_via_state_sum(g, t).close_to(reference)
            assert vacuum_via_tutte(g, w).close_to(reference)

    def test_tutte_general_weights(self):
        delta = rat(2)
        weights = [
            VertexWeights.equal_pair(delta),
            VertexWeights.ellipse(delta, 0.4),
            VertexWeights.ellipse(delta, 2.1),
        ]
        for g in list(enumerate_elements(6))[::17]:
            for w in weights:
                lhs = vacuum_via_tutte(g, w)
                rhs = vacuum(g, w, backend="tl")
                if w.is_exact():
                    assert lhs == rhs
                else:
                    assert lhs.close_to(rhs)

    def test_tutte_rejects_b_zero(self):
        with pytest.raises(ValueError):
            vacuum_via_tutte(X0, VertexWeights.b_zero(rat(2)))

    def test_k4_negative_at_golden_square(self):
        tau2 = GOLDEN * GOLDEN
        k4 = Graph(4, [(u, v) for u in range(1, 5) for v in range(u + 1, 5)])
        value = chromatic_at(k4, tau2)
        assert value == rat(-1)
        assert value.sign() < 0

    def test_five_leaf_pair_at_golden(self):
        g = ThompsonElement(Tree("111001000"), Tree("101100100"))
        value = vacuum_via_chromatic(g, GOLDEN + one)
        assert value == Scalar.quadratic(Fraction(25, 2), Fraction(-11, 2), 5)
        assert vacuum(g, VertexWeights.chromatic(GOLDEN + one)) == value


class TestStateSum:
    def test_x0_histogram_frozen(self):
        assert state_sum_histogram(X0) == {
            (0, 2): 1,
            (1, 1): 4,
            (2, 0): 5,
            (2, 2): 1,
            (3, 1): 4,
            (4, 2): 1,
        }

    def test_total_choice_count(self):
        for g in [X0, C, X0**3, multiply(X1, X0)]:
            hist = state_sum_histogram(g)
            assert sum(hist.values()) == 4 ** (g.leaves - 1)

    def test_pure_python_matches_jit(self):
        if _hist_jit is None:
            pytest.skip("jit unavailable")
        for g in [X0, C, X0**2, multiply(X0, X1.inverse())]:
            rows, nseg, _ = _wiring(g)
            m = rows.shape[0]
            nb = m // 2
            shape = (nb + 1, m - nb + 1, 2 * m + 2)
            h_py = np.zeros(shape, dtype=np.int64)
            h_jit = np.zeros(shape, dtype=np.int64)
            _histogram_loop(rows, nb, nseg, h_py)
            _hist_jit(rows, nb, nseg, h_jit)
            assert (h_py == h_jit).all()

    def test_histogram_matches_pair_structure(self):
        # summing the cascade choice-table counts over ks + kt = s must
        # reproduce the loop histogram: two very different traversals
        for g in enumerate_elements(5):
            ps = pair_structure(g, method="cascade")
            collapsed: dict[tuple[int, int], int] = {}
            for (ks, kt, loops), count in ps.terms.items():
                key = (ks + kt, loops)
                collapsed[key] = collapsed.get(key, 0) + count
            assert collapsed == state_sum_histogram(g)

    def test_choice_histogram_matches_cascade(self):
        # the compiled enumerator and the cascade build the identical
        # (ks, kt, loops) table, split and all, on every small element
        for g in enumerate_elements(5):
            assert choice_histogram(g) == pair_structure(g, method="cascade").terms

    def test_euler_relation(self):
        for g in enumerate_elements(4):
            assert state_sum_euler_check(g)
        assert state_sum_euler_check(ThompsonElement(Tree("111001000"), Tree("101100100")))

    def test_identity_histogram(self):
        assert state_sum_histogram(ThompsonElement.identity()) == {(0, 0): 1}


class TestConeIdentity:
    def test_pendant_vertex(self):
        base = Graph(3, [(1, 2), (2, 3), (1, 2)])
        assert chromatic(base) == poly_of(0, 1, -2, 1)  # t (t-1)^2
        # a pendant apex multiplies by (t - 1)
        assert cone_chromatic(base, [2]) == poly_of(0, -1, 3, -3, 1)
        assert cone_identity_check(base, [2])

    def test_apex_over_edge_is_triangle(self):
        base = Graph(2, [(1, 2)])
        assert cone_chromatic(base, [1, 2]) == poly_of(0, 2, -3, 1)
        assert cone_identity_check(base, [1, 2])

    def test_identity_small_graphs(self):
        base = Graph(3, [(1, 2), (2, 3), (1, 2)])
        for attach in ([2], [1, 3], [1, 2, 3]):
            assert cone_identity_check(base, attach)

    def test_identity_on_thompson_graphs(self):
        rng = random.Random(11)
        pool = list(enumerate_elements(5))
        for g in rng.sample(pool, 10):
            graph = thompson_graph(g)
            vertices = list(range(1, graph.n + 1))
            attach = rng.sample(vertices, rng.randint(1, graph.n))
            assert cone_identity_check(graph, attach)


class TestInequality:
    def test_x0(self):
        report = inequality_check(X0, 3)
        assert report["lhs"] == rat(6)
        assert report["rhs"] == rat(12)
        assert report["holds"] and report["strict"]
        assert not report["is_tree"]

    def test_identity_attains_bound(self):
        report = inequality_check(ThompsonElement.identity(), 3)
        assert report["lhs"] == report["rhs"]
        assert report["holds"] and not report["strict"]
        assert report["is_tree"]

    def test_c_attains_bound_at_two(self):
        report = inequality_check(C, 2)
        assert report["lhs"] == report["rhs"] == rat(2)
        assert report["holds"] and not report["strict"]

    def test_golden_point(self):
        t = GOLDEN + one
        for g in enumerate_elements(4):
            assert inequality_check(g, t)["holds"]
