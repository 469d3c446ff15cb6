"""Diagram calculus: composition loops, dagger, tensor, tree functor anchors."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from tljones.forests import Forest, Tree, all_tree_bits, compose as forest_compose
from tljones.scalars import Scalar, sqrt_exact
from tljones.tl import (
    D1,
    D2,
    TLDiagram,
    TLMorphism,
    enumerate_diagrams,
    normalization_value,
    phi_forest,
    phi_tree,
    tl_compose,
    tl_dagger,
    tl_tensor,
    vertex,
)

R = Scalar.rational

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


class TestDiagramBasics:
    def test_identity_pairs(self):
        d = TLDiagram.identity(3)
        assert d.pairs() == frozenset(
            frozenset({("b", i), ("t", i)}) for i in (1, 2, 3)
        )

    def test_crossing_rejected(self):
        with pytest.raises(ValueError):
            TLDiagram.from_pairs(
                2, 2, [(("b", 1), ("t", 2)), (("b", 2), ("t", 1))]
            )

    def test_incomplete_matching_rejected(self):
        with pytest.raises(ValueError):
            TLDiagram.from_pairs(2, 2, [(("b", 1), ("t", 1))])

    def test_odd_point_count_rejected(self):
        with pytest.raises(ValueError):
            TLDiagram(1, 2, (1, 0, 2))

    def test_counts_are_catalan(self):
        for m in range(0, 7):
            for n in range(0, 7):
                if (m + n) % 2 == 0 and m + n <= 10:
                    count = sum(1 for _ in enumerate_diagrams(m, n))
                    assert count == CATALAN[(m + n) // 2], (m, n)


class TestCompose:
    def test_cap_after_cup_makes_one_loop(self):
        d, loops = tl_compose(TLDiagram.cap(), TLDiagram.cup())
        assert (d.m, d.n, loops) == (0, 0, 1)

    def test_identity_neutral(self):
        for diag in enumerate_diagrams(2, 4):
            assert tl_compose(TLDiagram.identity(4), diag) == (diag, 0)
            assert tl_compose(diag, TLDiagram.identity(2)) == (diag, 0)

    def test_snake_straightens(self):
        bend_up = tl_tensor(TLDiagram.identity(1), TLDiagram.cup())  # (1,3)
        bend_down = tl_tensor(TLDiagram.cap(), TLDiagram.identity(1))  # (3,1)
        d, loops = tl_compose(bend_down, bend_up)
        assert d == TLDiagram.identity(1) and loops == 0
        other_up = tl_tensor(TLDiagram.cup(), TLDiagram.identity(1))
        other_down = tl_tensor(TLDiagram.identity(1), TLDiagram.cap())
        d, loops = tl_compose(other_down, other_up)
        assert d == TLDiagram.identity(1) and loops == 0

    def test_interface_mismatch_raises(self):
        with pytest.raises(ValueError):
            tl_compose(TLDiagram.identity(3), TLDiagram.identity(2))

    def test_cup_over_cap_through_empty_interface(self):
        d, loops = tl_compose(TLDiagram.cup(), TLDiagram.cap())
        e = TLDiagram.from_pairs(2, 2, [(("b", 1), ("b", 2)), (("t", 1), ("t", 2))])
        assert d == e and loops == 0

    def test_jones_wenzl_style_projection_square(self):
        # e = cup over cap in TL_2 satisfies e.e = delta e (here: one loop)
        e = TLDiagram.from_pairs(2, 2, [(("b", 1), ("b", 2)), (("t", 1), ("t", 2))])
        d, loops = tl_compose(e, e)
        assert d == e and loops == 1

    def test_morphism_square_of_vertex_mix(self):
        # (a id + b e)^2 = a^2 id + (2ab + b^2 delta) e
        e = TLDiagram.from_pairs(2, 2, [(("b", 1), ("b", 2)), (("t", 1), ("t", 2))])
        r = TLMorphism.of(TLDiagram.identity(2), R(2)) + TLMorphism.of(e, R(3))
        sq = r.compose(r, R(5))
        expected = TLMorphism.of(TLDiagram.identity(2), R(4)) + TLMorphism.of(
            e, R(57)
        )
        assert sq == expected


class TestDagger:
    def test_dagger_of_d1(self):
        assert tl_dagger(D1) == TLDiagram.from_pairs(
            3, 1, [(("b", 1), ("t", 1)), (("b", 2), ("b", 3))]
        )

    def test_involution(self):
        for diag in enumerate_diagrams(2, 4):
            assert tl_dagger(tl_dagger(diag)) == diag

    def test_antimultiplicative(self):
        rng = random.Random(2)
        ups = list(enumerate_diagrams(2, 4))
        downs = list(enumerate_diagrams(4, 2))
        for _ in range(20):
            f, g = rng.choice(ups), rng.choice(downs)
            d1, l1 = tl_compose(f, g)
            d2, l2 = tl_compose(tl_dagger(g), tl_dagger(f))
            assert (tl_dagger(d1), l1) == (d2, l2)

    def test_morphism_dagger_conjugates(self):
        m = TLMorphism.of(D1, Scalar.cplx(1 + 2j))
        assert m.dagger().terms[tl_dagger(D1)] == Scalar.cplx(1 - 2j)


class TestTreeFunctor:
    def test_leaf_is_identity_strand(self):
        assert phi_tree(Tree.leaf(), R(1), R(1), R(2)) == TLMorphism.identity(1)

    def test_single_caret_is_vertex(self):
        assert phi_tree(Tree("100"), R(2), R(3), R(7)) == vertex(R(2), R(3))

    def test_b_zero_collapses_to_first_strand_with_cups(self):
        # with b = 0, a = 1 every tree maps to the single diagram that sends
        # the input to strand 1 and cups strands (2k, 2k+1)
        for n in range(1, 6):
            for bits in all_tree_bits(n):
                m = phi_tree(Tree(bits), R(1), R(0), R(2))
                pairs = [(("b", 1), ("t", 1))] + [
                    (("t", 2 * k), ("t", 2 * k + 1)) for k in range(1, n)
                ]
                expected = TLDiagram.from_pairs(1, 2 * n - 1, pairs)
                assert m == TLMorphism.of(expected, R(1)), bits

    def test_functor_respects_composition(self):
        rng = random.Random(13)
        a, b, d = R(1), R(1), R(3)
        for _ in range(10):
            lower = Forest(
                [Tree(rng.choice(all_tree_bits(rng.randint(1, 3)))) for _ in range(2)]
            )
            upper = Forest(
                [
                    Tree(rng.choice(all_tree_bits(rng.randint(1, 2))))
                    for _ in range(lower.leaves)
                ]
            )
            whole = forest_compose(upper, lower)
            lhs = phi_forest(whole, a, b, d)
            rhs = phi_forest(upper, a, b, d).compose(phi_forest(lower, a, b, d), d)
            assert lhs == rhs


class TestNormalization:
    def test_b_zero_point(self):
        a = sqrt_exact(Fraction(1, 2))  # delta = 2
        assert normalization_value(a, R(0), R(2)) == R(1)

    def test_equal_pair_point(self):
        a = sqrt_exact(Fraction(1, 8))  # delta = 3: 1/(2(delta+1))
        assert normalization_value(a, a, R(3)) == R(1)

    def test_chromatic_point_exact(self):
        # t = 4, delta = 2: a = sqrt(2/3), b = -sqrt(1/6), both in Q(sqrt6)
        a = sqrt_exact(Fraction(2, 3))
        b = -sqrt_exact(Fraction(1, 6))
        assert normalization_value(a, b, R(2)) == R(1)

    def test_matches_closed_formula_for_complex_pairs(self):
        rng = random.Random(4)
        for _ in range(15):
            a = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            b = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            delta = rng.uniform(1.2, 3.0)
            got = normalization_value(Scalar.cplx(a), Scalar.cplx(b), Scalar.flt(delta))
            want = delta * (abs(a) ** 2 + abs(b) ** 2) + (a.conjugate() * b).real * 2
            assert abs(got.to_complex() - want) < 1e-12

    def test_as_scalar_shape_guard(self):
        with pytest.raises(ValueError):
            vertex(R(1), R(1)).as_scalar()
