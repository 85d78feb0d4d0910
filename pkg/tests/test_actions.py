import random

import pytest

from cupweb import (
    BudgetExceededError,
    DiagramVector,
    Matching,
    StandardTableau,
    TabloidVector,
    TwoRowTableau,
    act_matching,
    act_polytabloid,
    act_web,
    canonicalize_columns,
    column_matching,
    column_matching_vector,
    cup_of_tableau,
    cup_polytabloid,
    enumerate_syt,
    garnir_straighten,
    paths_between,
    build_tableau_graph,
    shifted_product,
    t0,
    to_web_basis,
)
import cupweb.actions as actions_module
from _oracles import act_model, all_pairings, model_of_vector

T_FOUR = StandardTableau((1, 2, 4, 7), (3, 5, 6, 8))
R_FOUR = StandardTableau((1, 2, 4, 6), (3, 5, 7, 8))
FLAT_TWO = TwoRowTableau(((1, 3), (2, 4)))   # top 1 2 / bottom 3 4
BASE_TWO = TwoRowTableau(((1, 2), (3, 4)))   # the minimum tableau at n=2


def unit(tableau: StandardTableau) -> TabloidVector:
    return TabloidVector.unit(TwoRowTableau.from_standard(tableau))


class TestTwoRowTableau:
    def test_rows(self):
        assert FLAT_TWO.top == (1, 2)
        assert FLAT_TWO.bottom == (3, 4)
        assert FLAT_TWO.is_standard()

    def test_nonstandard(self):
        tab = TwoRowTableau(((1, 4), (2, 3)))
        assert not tab.is_standard()
        with pytest.raises(ValueError):
            tab.to_standard()

    @pytest.mark.parametrize(
        "cols",
        [((2, 1), (3, 4)), ((3, 4), (1, 2)), ((1, 2), (2, 3))],
    )
    def test_rejects_non_normal_form(self, cols):
        with pytest.raises(ValueError):
            TwoRowTableau(cols)

    def test_canonicalize_sign(self):
        tab, sign = canonicalize_columns([(2, 1), (3, 4)])
        assert (tab, sign) == (BASE_TWO, -1)
        tab, sign = canonicalize_columns([(4, 1), (3, 2)])
        assert (tab, sign) == (TwoRowTableau(((1, 4), (2, 3))), 1)

    def test_round_trip_standard(self):
        assert TwoRowTableau.from_standard(T_FOUR).to_standard() == T_FOUR


class TestVectors:
    def test_algebra(self):
        a = TabloidVector.unit(FLAT_TWO)
        b = TabloidVector.unit(BASE_TWO, 2)
        combo = 3 * a - b
        assert combo.terms == {FLAT_TWO: 3, BASE_TWO: -2}
        assert (combo - combo).is_zero()

    def test_zero_coefficients_dropped(self):
        v = TabloidVector(2, {FLAT_TWO: 0})
        assert v.is_zero()

    def test_key_validation(self):
        with pytest.raises(ValueError):
            TabloidVector(3, {FLAT_TWO: 1})
        with pytest.raises(ValueError):
            DiagramVector(6, {Matching([(1, 2)]): 1})

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            TabloidVector.unit(FLAT_TWO) + TabloidVector(3, {})

    def test_json(self):
        v = TabloidVector.unit(FLAT_TWO) - 2 * TabloidVector.unit(BASE_TWO)
        assert TabloidVector.from_json(2, v.to_json()) == v
        d = DiagramVector.unit(Matching([(1, 2), (3, 4)]), 5)
        assert DiagramVector.from_json(4, d.to_json()) == d


class TestActMatching:
    M = Matching([(1, 3), (2, 4), (5, 6)])

    def test_same_arc_negates(self):
        v = DiagramVector.unit(self.M)
        assert act_matching(5, v) == -1 * v

    def test_swap(self):
        v = DiagramVector.unit(self.M)
        m1 = Matching([(1, 3), (2, 5), (4, 6)])
        assert act_matching(4, v) == DiagramVector.unit(m1)

    def test_involution(self):
        rng = random.Random(1)
        for _ in range(100):
            n = rng.randint(1, 5)
            dots = list(range(1, 2 * n + 1))
            rng.shuffle(dots)
            m = Matching([(dots[2 * k], dots[2 * k + 1]) for k in range(n)])
            v = DiagramVector.unit(m, rng.choice([1, -2, 3]))
            i = rng.randint(1, 2 * n - 1)
            assert act_matching(i, act_matching(i, v)) == v

    def test_index_range(self):
        with pytest.raises(ValueError):
            act_matching(6, DiagramVector.unit(self.M))


class TestActWeb:
    def test_same_arc_negates(self):
        w = cup_of_tableau(T_FOUR)
        assert act_web(7, DiagramVector.unit(w)) == -1 * DiagramVector.unit(w)

    def test_right_left_pair_adds_outer(self):
        w = cup_of_tableau(T_FOUR)
        w_outer = Matching([(1, 8), (2, 3), (4, 5), (6, 7)])
        got = act_web(6, DiagramVector.unit(w))
        assert got == DiagramVector.unit(w) + DiagramVector.unit(w_outer)

    def test_single_crossing_resolution(self):
        w = Matching([(1, 2), (3, 4)])
        got = act_web(2, DiagramVector.unit(w))
        assert got == DiagramVector.unit(w) + DiagramVector.unit(
            Matching([(1, 4), (2, 3)])
        )

    def test_rejects_crossing_support(self):
        with pytest.raises(ValueError):
            act_web(1, DiagramVector.unit(Matching([(1, 3), (2, 4)])))

    def test_support_stays_noncrossing(self):
        from cupweb import is_noncrossing

        rng = random.Random(2)
        for n in (2, 3, 4):
            for tab in enumerate_syt(n):
                v = DiagramVector.unit(cup_of_tableau(tab))
                i = rng.randint(1, 2 * n - 1)
                out = act_web(i, v)
                assert all(is_noncrossing(k) for k in out.terms)


class TestActPolytabloid:
    def test_same_column_negates(self):
        v = unit(T_FOUR)
        assert act_polytabloid(7, v) == -1 * v

    def test_below_moves(self):
        assert act_polytabloid(6, unit(T_FOUR)) == unit(R_FOUR)

    def test_row_case_involution(self):
        v = unit(t0(2))
        once = act_polytabloid(2, v)
        assert once == unit(StandardTableau((1, 2), (3, 4)))
        assert act_polytabloid(2, once) == v

    def test_rejects_nonstandard_keys(self):
        v = TabloidVector.unit(TwoRowTableau(((1, 4), (2, 3))))
        with pytest.raises(ValueError):
            act_polytabloid(1, v)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_agrees_with_tabloid_model(self, n):
        for tab in enumerate_syt(n):
            v = unit(tab)
            for i in range(1, 2 * n):
                assert model_of_vector(act_polytabloid(i, v)) == act_model(
                    i, model_of_vector(v)
                )


class TestStraightening:
    def test_standard_fixed(self):
        v = garnir_straighten(FLAT_TWO)
        assert v == TabloidVector.unit(FLAT_TWO)

    def test_two_column_rewrite(self):
        tab = TwoRowTableau(((1, 4), (2, 3)))
        got = garnir_straighten(tab)
        assert got == TabloidVector.unit(FLAT_TWO) - TabloidVector.unit(BASE_TWO)

    def test_column_sort_sign(self):
        tab, sign = canonicalize_columns([(2, 1), (3, 4)])
        got = sign * garnir_straighten(tab)
        assert got == -1 * TabloidVector.unit(BASE_TWO)

    def test_output_keys_standard(self):
        for cols in all_pairings(range(1, 7)):
            for key in garnir_straighten(TwoRowTableau(cols)).terms:
                assert key.is_standard()

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_tabloid_model_exhaustive(self, n):
        for cols in all_pairings(range(1, 2 * n + 1)):
            tab = TwoRowTableau(cols)
            assert model_of_vector(garnir_straighten(tab)) == model_of_vector(
                TabloidVector.unit(tab)
            )

    def test_matches_tabloid_model_n4_sample(self):
        rng = random.Random(3)
        fillings = list(all_pairings(range(1, 9)))
        for cols in rng.sample(fillings, 40):
            tab = TwoRowTableau(cols)
            assert model_of_vector(garnir_straighten(tab)) == model_of_vector(
                TabloidVector.unit(tab)
            )

    def test_linear_input(self):
        tab = TwoRowTableau(((1, 4), (2, 3)))
        v = 2 * TabloidVector.unit(tab) + TabloidVector.unit(FLAT_TWO)
        got = garnir_straighten(v)
        assert got == 3 * TabloidVector.unit(FLAT_TWO) - 2 * TabloidVector.unit(
            BASE_TWO
        )

    def test_step_budget(self):
        cols = tuple((k, 12 - k + 1) for k in range(1, 7))
        tab = TwoRowTableau(tuple(sorted(cols)))
        actions_module._STRAIGHTEN_CACHE.pop(tab, None)
        with pytest.raises(BudgetExceededError):
            garnir_straighten(tab, step_budget=2)


class TestIntertwining:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_column_map_intertwines(self, n):
        # compare in the noncrossing basis: the straightened image of a
        # row-case swap differs from the plain dot swap by crossing
        # relations, which resolution quotients out
        for tab in enumerate_syt(n):
            v = unit(tab)
            for i in range(1, 2 * n):
                lhs = column_matching_vector(act_polytabloid(i, v))
                rhs = act_matching(i, column_matching_vector(v))
                assert to_web_basis(lhs) == to_web_basis(rhs)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_formal_equality_outside_row_case(self, n):
        from cupweb import EntryCase, classify

        for tab in enumerate_syt(n):
            v = unit(tab)
            for i in range(1, 2 * n):
                if classify(tab, i) is EntryCase.SAME_ROW:
                    continue
                lhs = column_matching_vector(act_polytabloid(i, v))
                rhs = act_matching(i, column_matching_vector(v))
                assert lhs == rhs


class TestCupPolytabloid:
    def test_five_cup_preimage(self):
        w = cup_of_tableau(StandardTableau((1, 3, 4, 6, 9), (2, 5, 7, 8, 10)))
        tab, _ = cup_polytabloid(w)
        assert tab.top == (1, 3, 4, 6, 9)
        assert tab.bottom == (2, 8, 5, 7, 10)

    def test_base_cup(self):
        w = cup_of_tableau(t0(3))
        tab, vec = cup_polytabloid(w)
        assert tab == TwoRowTableau.from_standard(t0(3))
        assert vec == TabloidVector.unit(tab)

    def test_two_cup_straightening(self):
        tab, vec = cup_polytabloid(Matching([(1, 4), (2, 3)]))
        assert vec == TabloidVector.unit(FLAT_TWO) - TabloidVector.unit(BASE_TWO)

    def test_rejects_crossing(self):
        with pytest.raises(ValueError):
            cup_polytabloid(Matching([(1, 3), (2, 4)]))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_model_agrees_with_arcs(self, n):
        # straightening must preserve the underlying module element
        for tab in enumerate_syt(n):
            w = cup_of_tableau(tab)
            raw, vec = cup_polytabloid(w)
            assert model_of_vector(vec) == model_of_vector(
                TabloidVector.unit(raw)
            )


class TestShiftedProduct:
    def test_empty_word(self):
        assert shifted_product(2, []) == unit(t0(2))

    def test_single_letter(self):
        got = shifted_product(2, [2])
        assert got == unit(StandardTableau((1, 2), (3, 4))) - unit(t0(2))
        assert got == cup_polytabloid(Matching([(1, 4), (2, 3)]))[1]

    def test_reversed_path_word_agrees_with_preimage(self):
        graph = build_tableau_graph(3)
        w = Matching([(1, 6), (2, 3), (4, 5)])
        target = StandardTableau((1, 2, 4), (3, 5, 6))
        expected = cup_polytabloid(w)[1]
        for path in paths_between(graph, t0(3), target):
            assert shifted_product(3, list(reversed(path))) == expected

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_every_path_gives_the_same_vector(self, n):
        graph = build_tableau_graph(n)
        for target in graph.vertices:
            expected = cup_polytabloid(cup_of_tableau(target))[1]
            for path in paths_between(graph, t0(n), target):
                assert shifted_product(n, list(reversed(path))) == expected


class TestColumnMatchingVector:
    def test_base(self):
        got = column_matching_vector(unit(t0(3)))
        assert got == DiagramVector.unit(Matching([(1, 2), (3, 4), (5, 6)]))

    def test_three_column_example(self):
        tab = StandardTableau((1, 2, 4), (3, 5, 6))
        got = column_matching_vector(unit(tab))
        assert got == DiagramVector.unit(Matching([(1, 3), (2, 5), (4, 6)]))

    def test_linearity(self):
        s, t = unit(t0(2)), unit(StandardTableau((1, 2), (3, 4)))
        assert column_matching_vector(2 * s - t) == 2 * column_matching_vector(
            s
        ) - column_matching_vector(t)


def _coxeter_cases(n):
    pairs = [(i, j) for i in range(1, 2 * n) for j in range(1, 2 * n)]
    return {
        "square": [i for i in range(1, 2 * n)],
        "commute": [(i, j) for i, j in pairs if abs(i - j) >= 2],
        "braid": [i for i in range(1, 2 * n - 1)],
    }


class TestCoxeterRelations:
    @pytest.mark.parametrize("n", [2, 3])
    def test_polytabloid_exhaustive(self, n):
        cases = _coxeter_cases(n)
        for tab in enumerate_syt(n):
            v = unit(tab)
            for i in cases["square"]:
                assert act_polytabloid(i, act_polytabloid(i, v)) == v
            for i, j in cases["commute"]:
                assert act_polytabloid(i, act_polytabloid(j, v)) == \
                    act_polytabloid(j, act_polytabloid(i, v))
            for i in cases["braid"]:
                lhs = act_polytabloid(
                    i, act_polytabloid(i + 1, act_polytabloid(i, v))
                )
                rhs = act_polytabloid(
                    i + 1, act_polytabloid(i, act_polytabloid(i + 1, v))
                )
                assert lhs == rhs

    @pytest.mark.parametrize("n", [2, 3])
    def test_matching_and_web_exhaustive(self, n):
        cases = _coxeter_cases(n)
        rng = random.Random(4)
        for tab in enumerate_syt(n):
            w = DiagramVector.unit(cup_of_tableau(tab))
            m = DiagramVector.unit(
                Matching(
                    list(
                        zip(*(iter(rng.sample(range(1, 2 * n + 1), 2 * n)),) * 2)
                    )
                )
            )
            for act, v in ((act_web, w), (act_matching, m)):
                for i in cases["square"]:
                    assert act(i, act(i, v)) == v
                for i, j in cases["commute"]:
                    assert act(i, act(j, v)) == act(j, act(i, v))
                for i in cases["braid"]:
                    assert act(i, act(i + 1, act(i, v))) == act(
                        i + 1, act(i, act(i + 1, v))
                    )
