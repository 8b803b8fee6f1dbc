from itertools import combinations_with_replacement, product

import pytest

from bitournament import (
    BoundedSeq,
    BoundMismatch,
    NotFeasible,
    SumMismatch,
    avery_check,
    corollary_symmetry,
    feasible,
    landau_check,
    moon_check,
    moon_table,
    trim_check,
)

from brute import digraph_scores, tournament_scores

MOON_SUMS = [1, 2, 4, 6, 8, 4, 5, 7, 9, 11, 8, 9, 11, 13, 15, 13, 14, 16, 18, 20]
MOON_PRODUCTS = [1, 2, 3, 4, 5, 2, 4, 6, 8, 10, 3, 6, 9, 12, 15, 4, 8, 12, 16, 20]


class TestFeasible:
    def test_worked_pair(self):
        pair = feasible(BoundedSeq((5, 3, 2, 0), 5), BoundedSeq((1, 2, 2, 2, 3), 4))
        assert (pair.m, pair.n) == (4, 5)

    def test_empty(self):
        pair = feasible(BoundedSeq((), 0), BoundedSeq((), 0))
        assert (pair.m, pair.n) == (0, 0)

    def test_sum_mismatch(self):
        with pytest.raises(SumMismatch) as info:
            feasible(BoundedSeq((1,), 1), BoundedSeq((1,), 1))
        assert (info.value.actual, info.value.expected) == (2, 1)

    def test_bound_mismatch(self):
        with pytest.raises(BoundMismatch):
            feasible(BoundedSeq((1,), 3), BoundedSeq((0, 0), 1))


class TestMoon:
    def test_table_matches_published_values(self):
        table = moon_table((1, 3, 4, 5), (0, 1, 2, 2, 2))
        assert [(r.k, r.l) for r in table] == [(k, l) for k in range(1, 5) for l in range(1, 6)]
        assert [r.total for r in table] == MOON_SUMS
        assert [r.product for r in table] == MOON_PRODUCTS
        assert moon_check((1, 3, 4, 5), (0, 1, 2, 2, 2)).accepted

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_symmetric_constant_pair(self, p):
        seq = (p,) * (2 * p)
        assert moon_check(seq, seq).accepted
        assert trim_check(seq, seq).accepted

    def test_single_edge_unoriented(self):
        rep = moon_check((0,), (0,))
        assert not rep.accepted
        assert rep.witness.kind == "moon" and rep.witness.where == (1, 1)
        assert (rep.witness.lhs, rep.witness.rhs) == (0, 1)

    def test_sorts_input(self):
        assert moon_check((5, 1, 4, 3), (2, 0, 2, 1, 2)).accepted

    def test_total_too_large_fails_equality(self):
        rep = moon_check((1, 1), (1, 2))
        assert rep.witness.where == (2, 2) and rep.witness.lhs == 5

    def test_lexicographically_smallest_witness(self):
        # sorted a=(0,0), b=(0,2): (1,1) is 0 < 1
        rep = moon_check((0, 0), (2, 0))
        assert rep.witness.where == (1, 1)

    def test_out_of_bound(self):
        rep = moon_check((3,), (0, 0))
        assert rep.witness.kind == "bound" and rep.witness.where == (0, 0)

    def test_degenerate_sizes(self):
        assert moon_check((), ()).accepted
        assert moon_check((0, 0), ()).accepted
        assert moon_check((), (0, 0, 0)).accepted
        assert moon_check((1,), ()).witness.kind == "bound"


class TestTrimCheck:
    def test_section_three_example(self):
        rep = trim_check((1, 1, 2, 2, 3, 4), (1, 2, 3, 5, 6))
        assert rep.accepted and rep.criterion == "trimming"
        assert rep.trace.final.elems == (0, 0, 0, 0, 0)
        assert rep.trace.start.elems == (5, 4, 3, 1, 0)

    def test_concluding_example(self):
        rep = trim_check((1, 3, 4, 5), (0, 1, 2, 2, 2))
        assert rep.trace.sequences() == [
            (4, 3, 2, 2, 2),
            (3, 3, 2, 2, 2),
            (2, 2, 1, 2, 2),
            (1, 1, 1, 1, 1),
            (0, 0, 0, 0, 0),
        ]

    @pytest.mark.parametrize("m, n", [(1, 1), (3, 2), (2, 5)])
    def test_zero_x_side(self, m, n):
        assert trim_check((0,) * m, (m,) * n).accepted
        assert trim_check((n,) * m, (0,) * n).accepted

    def test_trim_failure_witness(self):
        # feasible but not realizable: conj(b)=(2,0) has one positive when a_2=2 arrives
        rep = trim_check((0, 2), (0, 2))
        assert not rep.accepted
        assert rep.witness.kind == "trim" and rep.witness.where == (2,)
        assert (rep.witness.lhs, rep.witness.rhs) == (2, 1)

    def test_sum_witness(self):
        rep = trim_check((0,), (0,))
        assert rep.witness.kind == "sum" and (rep.witness.lhs, rep.witness.rhs) == (0, 1)

    def test_bound_witness(self):
        rep = trim_check((0, 0), (3,))
        assert rep.witness.kind == "bound" and rep.witness.where == (1, 0)

    def test_accepts_bounded_seq_input(self):
        assert trim_check(BoundedSeq((1, 3, 4, 5), 5), BoundedSeq((0, 1, 2, 2, 2), 4)).accepted

    def test_report_json_shape(self):
        d = trim_check((1, 1), (1, 1)).to_dict()
        assert d["verdict"] == "accept" and d["trace"][-1] == [0, 0]
        assert d["schedule"] == [1, 1]


def test_moon_equals_trim_on_bounded_pairs():
    for m in range(5):
        for n in range(5):
            for a in combinations_with_replacement(range(n + 1), m):
                for b in combinations_with_replacement(range(m + 1), n):
                    assert moon_check(a, b).accepted == trim_check(a, b).accepted, (a, b)


class TestLandau:
    def test_examples(self):
        assert landau_check((0,)).accepted
        assert landau_check((1, 1, 1)).accepted
        rep = landau_check((0, 0, 2))
        assert rep.witness.where == (2,) and (rep.witness.lhs, rep.witness.rhs) == (0, 1)

    def test_brute_force_frozen(self):
        assert tournament_scores(3) == {(0, 1, 2), (1, 1, 1)}
        assert (1, 1, 1) in tournament_scores(3)
        assert (0, 0, 2) not in tournament_scores(3)

    def test_empty(self):
        assert landau_check(()).accepted

    def test_agrees_with_brute_force(self):
        for n in range(1, 6):
            real = tournament_scores(n)
            for s in combinations_with_replacement(range(n + 1), n):
                assert landau_check(s).accepted == (s in real), s


class TestAvery:
    def test_examples(self):
        assert avery_check((0,)).accepted
        assert avery_check((1, 1)).accepted
        rep = avery_check((0, 1))
        assert rep.witness.where == (2,) and (rep.witness.lhs, rep.witness.rhs) == (1, 2)

    def test_brute_force_frozen(self):
        assert digraph_scores(2) == {(0, 2), (1, 1)}

    def test_agrees_with_brute_force(self):
        for n in range(1, 4):
            real = digraph_scores(n)
            assert real == digraph_scores(n, oriented_only=True)
            for s in combinations_with_replacement(range(2 * n), n):
                assert avery_check(s).accepted == (s in real), s


class TestCorollary:
    def test_worked_pair(self):
        assert corollary_symmetry(BoundedSeq((5, 3, 2, 0), 5), BoundedSeq((1, 2, 2, 2, 3), 4)) == (
            True,
            True,
        )

    def test_zero_side(self):
        assert corollary_symmetry(BoundedSeq((0, 0), 1), BoundedSeq((2,), 2)) == (True, True)

    def test_not_feasible(self):
        with pytest.raises(NotFeasible):
            corollary_symmetry(BoundedSeq((1,), 1), BoundedSeq((1,), 1))

    def test_exhaustive_small(self):
        seen = set()
        for m in range(4):
            for n in range(4):
                for a in product(range(n + 1), repeat=m):
                    for b in product(range(m + 1), repeat=n):
                        if sum(a) + sum(b) != m * n:
                            continue
                        left, right = corollary_symmetry(BoundedSeq(a, n), BoundedSeq(b, m))
                        assert left == right, (a, b)
                        seen.add(left)
        assert seen == {True, False}
