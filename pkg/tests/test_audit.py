from fractions import Fraction

import pytest

from pardom import (
    FamilySpec,
    Graph,
    SamplingError,
    SplitMix64,
    audit_suite,
    check_big_gamma,
    check_ceiling_bound,
    check_half_bound,
    check_monotonicity,
    check_nordhaus_gaddum,
    complement,
    complete_multipartite_graph,
    cycle_graph,
    gamma_exact,
    grid_graph,
    is_connected,
    nordhaus_gaddum_rhs,
    path_graph,
    sample_connected_coconnected,
    spider_graph,
)

HALF = Fraction(1, 2)
ONE = Fraction(1)


class TestMonotonicity:
    def test_p6_half_vs_one(self):
        recs = check_monotonicity(path_graph(6), [HALF, ONE])
        assert len(recs) == 1
        assert (recs[0].lhs, recs[0].rhs) == (1, 2)
        assert recs[0].holds

    def test_degenerate_pair_skipped(self):
        assert check_monotonicity(path_graph(6), [HALF, HALF]) == []

    def test_spider(self):
        recs = check_monotonicity(spider_graph(8), [HALF, ONE])
        assert (recs[0].lhs, recs[0].rhs) == (1, 8)

    def test_equality_noted(self):
        recs = check_monotonicity(cycle_graph(3), [HALF, ONE])
        assert recs[0].lhs == recs[0].rhs == 1
        assert "equality" in recs[0].note

    def test_unsorted_rejected(self):
        with pytest.raises(ValueError):
            check_monotonicity(path_graph(4), [ONE, HALF])


class TestCeilingBound:
    def test_p6(self):
        rec = check_ceiling_bound(path_graph(6), 1, 2)
        assert (rec.lhs, rec.rhs) == (1, 1)  # gamma(P_6) = 2, ceil(2/2) = 1
        assert rec.holds

    def test_complete_graph_needs_ceiling(self):
        for n in range(1, 8):
            kn = complete_multipartite_graph((1,) * n) if n > 1 else Graph.from_edges(1, [])
            rec = check_ceiling_bound(kn, 1, 2)
            assert (rec.lhs, rec.rhs) == (1, 1)
            assert rec.holds
            # without the ceiling the bound would read 1 <= 1/2 and fail
            assert 2 * rec.lhs > gamma_exact(kn).cardinality

    def test_c12_two_thirds(self):
        rec = check_ceiling_bound(cycle_graph(12), 2, 3)
        assert rec.rhs == 3  # ceil(2 * gamma / 3) with gamma = 4
        assert rec.lhs <= 3 and rec.holds

    def test_disconnected_gated(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        rec = check_ceiling_bound(g, 1, 2)
        assert not rec.hypothesis_met
        assert rec.holds is None

    def test_half_bound_specialization(self):
        rec = check_half_bound(spider_graph(8))
        assert rec.tag == "half-bound"
        assert (rec.lhs, rec.rhs) == (1, 4)
        grid = check_half_bound(grid_graph(3, 5))
        assert grid.lhs == 2 and grid.holds


class TestNordhausGaddum:
    def test_p4_self_complementary(self):
        rec = check_nordhaus_gaddum(path_graph(4), 1, 2)
        assert (rec.lhs, rec.rhs) == (2, 3)
        assert rec.holds and "half form agrees" in rec.note

    def test_c5(self):
        rec = check_nordhaus_gaddum(cycle_graph(5), 1, 2)
        assert (rec.lhs, rec.rhs) == (2, 3)

    def test_star_complement_disconnected(self):
        star = complete_multipartite_graph((1, 4))  # K_{1,4}
        rec = check_nordhaus_gaddum(star, 1, 2)
        assert not rec.hypothesis_met
        assert rec.holds is None
        assert "complement not connected" in rec.note

    def test_rhs_forms_agree_for_all_n(self):
        for n in range(4, 201):
            assert nordhaus_gaddum_rhs(n, 1, 2) == -(-(n // 2) // 2) + 2


class TestBigGammaCheck:
    def test_p6_strict(self):
        rec = check_big_gamma(path_graph(6), HALF)
        assert (rec.lhs, rec.rhs) == (1, 2)
        assert rec.note == "strict"

    def test_k4_equality(self):
        rec = check_big_gamma(complete_multipartite_graph((1,) * 4), ONE)
        assert (rec.lhs, rec.rhs) == (1, 1)
        assert rec.note == "equality"

    def test_c8(self):
        rec = check_big_gamma(cycle_graph(8), HALF)
        assert rec.holds


class TestSampler:
    def test_reproducible(self):
        a = sample_connected_coconnected(8, HALF, seed=1)
        b = sample_connected_coconnected(8, HALF, seed=1)
        assert a == b

    def test_postcondition(self):
        for seed in range(5):
            g = sample_connected_coconnected(8, HALF, seed=seed)
            assert is_connected(g) and is_connected(complement(g))

    def test_four_vertex_samples_are_known_graphs(self):
        # All labeled 4-vertex graphs that are connected with connected
        # complement (enumerated exhaustively) are the twelve labeled paths.
        import itertools

        valid = set()
        pairs = list(itertools.combinations(range(4), 2))
        for bits in range(1 << 6):
            edges = [pairs[i] for i in range(6) if (bits >> i) & 1]
            g = Graph.from_edges(4, edges)
            if is_connected(g) and is_connected(complement(g)):
                valid.add(tuple(sorted(g.edges())))
        assert len(valid) == 12
        for seed in range(6):
            g = sample_connected_coconnected(4, HALF, seed=seed)
            assert tuple(sorted(g.edges())) in valid

    def test_zero_probability_fails(self):
        with pytest.raises(SamplingError, match="edge_probability"):
            sample_connected_coconnected(6, Fraction(0), seed=3, max_rounds=20)

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            sample_connected_coconnected(3, HALF, seed=0)

    def test_splitmix_reference_values(self):
        # First outputs for seed 1234567, from the published reference
        # implementation of SplitMix64.
        rng = SplitMix64(1234567)
        assert rng.next_u64() == 6457827717110365317
        assert rng.next_u64() == 3203168211198807973


class TestAuditSuite:
    def test_p6_all_hold(self):
        report = audit_suite(path_graph(6), [HALF, ONE], graph_id="path:6")
        assert report.checks
        assert report.all_hold()
        tags = {c.tag for c in report.checks}
        assert tags >= {"monotone-in-p", "ceiling-bound", "half-bound", "nordhaus-gaddum", "max-minimal-vs-min"}

    def test_disconnected_graph_gates_checks(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        report = audit_suite(g, [HALF])
        gated = [c for c in report.checks if not c.hypothesis_met]
        assert gated
        assert all(c.holds is None for c in gated)
        assert report.all_hold()  # no verdicts, hence no violations

    def test_spider_disjointness_regression(self):
        report = audit_suite(
            spider_graph(8), [HALF], family=FamilySpec("spider", (8,))
        )
        rec = [c for c in report.checks if c.tag == "disjoint-from-gamma-set"]
        assert len(rec) == 1
        assert rec[0].lhs == 0 and rec[0].holds
        assert "witness=[0]" in rec[0].note

    def test_capacity_skip_records(self):
        report = audit_suite(grid_graph(5, 6), [HALF])  # n = 30 > Gamma_p cap
        skips = [c for c in report.checks if c.holds is None and "capacity" in c.note]
        assert skips
        assert report.all_hold()

    def test_sampled_graphs_up_to_20(self):
        # A slice of the broader invariant: on hypothesis-satisfying samples
        # every inequality holds at every tested proportion.
        ps = [Fraction(1, 4), Fraction(1, 3), HALF, Fraction(2, 3), Fraction(3, 4)]
        for n, seed in [(10, 0), (14, 1), (17, 2), (20, 3)]:
            g = sample_connected_coconnected(n, HALF, seed=seed)
            report = audit_suite(g, ps, include_big_gamma=(n <= 14))
            assert report.all_hold(), report.violations()
