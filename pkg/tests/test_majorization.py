"""Exact predicates: sorting, majorization, conversion probability, bridge."""

import numpy as np
import pytest

from majmc import (
    BridgeWalk,
    DimensionMismatchError,
    ProbVector,
    RngStream,
    SortedProbVector,
    ZeroDenominatorError,
    bridge_walk,
    conversion_probability,
    limit_conversion_probability,
    majorizes,
    poisson_chain_from_spacings,
    sample_uniform_simplex,
    sort_desc,
    time_above_origin,
)


def sorted_vec(values) -> SortedProbVector:
    return sort_desc(ProbVector(values))


class TestProbVector:
    def test_rejects_negative_entries(self):
        with pytest.raises(ValueError):
            ProbVector([0.5, 0.6, -0.1])

    def test_rejects_bad_normalization(self):
        with pytest.raises(ValueError):
            ProbVector([0.5, 0.5 + 1e-6])

    def test_accepts_single_point(self):
        assert ProbVector([1.0]).n == 1

    def test_values_are_immutable(self):
        v = ProbVector([0.25, 0.75])
        with pytest.raises(ValueError):
            v.values[0] = 0.5


class TestSortDesc:
    def test_basic(self):
        s = sorted_vec([0.2, 0.5, 0.3])
        np.testing.assert_allclose(s.values_desc, [0.5, 0.3, 0.2])
        np.testing.assert_allclose(s.suffix_sums, [1.0, 0.5, 0.2])

    def test_single(self):
        s = sorted_vec([1.0])
        np.testing.assert_allclose(s.values_desc, [1.0])
        np.testing.assert_allclose(s.suffix_sums, [1.0])

    def test_already_sorted(self):
        s = sorted_vec([0.25, 0.25, 0.25, 0.25])
        np.testing.assert_allclose(s.values_desc, [0.25] * 4)
        np.testing.assert_allclose(s.suffix_sums, [1.0, 0.75, 0.5, 0.25])

    def test_suffix_consistency_on_random_vectors(self):
        for i in range(50):
            s = sort_desc(sample_uniform_simplex(40, RngStream(11, i)))
            assert np.all(np.diff(s.values_desc) <= 0.0)
            tail = np.append(s.suffix_sums[1:], 0.0)
            np.testing.assert_allclose(s.suffix_sums - tail, s.values_desc, atol=1e-12)
            assert abs(s.suffix_sums[0] - 1.0) <= 1e-12

    def test_invalid_direct_construction(self):
        with pytest.raises(ValueError):
            SortedProbVector(values_desc=[0.2, 0.8], suffix_sums=[1.0, 0.8])


class TestMajorizes:
    def test_uniform_is_majorized_by_everything(self):
        for i in range(20):
            n = 5
            y = sort_desc(sample_uniform_simplex(n, RngStream(21, i)))
            x = sorted_vec([1.0 / n] * n)
            assert majorizes(x, y)

    def test_reflexive(self):
        x = sorted_vec([0.4, 0.35, 0.25])
        assert majorizes(x, x)

    def test_directed_pair(self):
        x = sorted_vec([0.5, 0.3, 0.2])
        y = sorted_vec([0.6, 0.3, 0.1])
        assert majorizes(x, y)
        assert not majorizes(y, x)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            majorizes(sorted_vec([0.5, 0.5]), sorted_vec([0.5, 0.3, 0.2]))

    def test_antisymmetry_within_tolerance(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            base = rng.dirichlet(np.ones(6))
            x = sort_desc(ProbVector(base))
            y = sort_desc(ProbVector(rng.permutation(base)))
            assert majorizes(x, y) and majorizes(y, x)
            np.testing.assert_allclose(x.values_desc, y.values_desc, atol=1e-10)

    def test_transitivity_on_exact_dyadic_vectors(self):
        # multiples of 1/64 are exact doubles, so comparisons are exact
        rng = np.random.default_rng(17)
        chains = 0
        for _ in range(600):
            vecs = [
                sort_desc(ProbVector(rng.multinomial(64, [0.25] * 4) / 64.0))
                for _ in range(3)
            ]
            for x, y, z in [(a, b, c) for a in vecs for b in vecs for c in vecs]:
                if majorizes(x, y) and majorizes(y, z):
                    chains += 1
                    assert majorizes(x, z)
        assert chains > 100


class TestConversionProbability:
    def test_identity_is_one(self):
        for i in range(10):
            x = sort_desc(sample_uniform_simplex(8, RngStream(31, i)))
            assert conversion_probability(x, x) == 1.0

    def test_min_of_suffix_ratios(self):
        x = sorted_vec([0.7, 0.2, 0.1])
        y = sorted_vec([0.4, 0.35, 0.25])
        # ratios are 1, 0.3/0.6, 0.1/0.25; the minimum is 0.4
        assert conversion_probability(x, y) == pytest.approx(0.4, rel=1e-12)

    def test_majorized_direction_is_exactly_one(self):
        x = sorted_vec([0.4, 0.35, 0.25])
        y = sorted_vec([0.7, 0.2, 0.1])
        assert conversion_probability(x, y) == 1.0

    def test_zero_denominator(self):
        x = sorted_vec([0.5, 0.3, 0.2])
        y = sorted_vec([0.7, 0.3, 0.0])
        with pytest.raises(ZeroDenominatorError):
            conversion_probability(x, y)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            conversion_probability(sorted_vec([1.0]), sorted_vec([0.5, 0.5]))

    def test_range_and_full_ratio(self):
        for i in range(50):
            x = sort_desc(sample_uniform_simplex(12, RngStream(41, 2 * i)))
            y = sort_desc(sample_uniform_simplex(12, RngStream(41, 2 * i + 1)))
            p = conversion_probability(x, y)
            assert 0.0 < p <= 1.0
            assert abs(x.suffix_sums[0] / y.suffix_sums[0] - 1.0) <= 1e-12


class TestBridgeWalk:
    def test_equal_vectors_give_zero_walk(self):
        x = sorted_vec([0.5, 0.3, 0.2])
        w = bridge_walk(x, x)
        np.testing.assert_allclose(w.partial_sums, 0.0, atol=1e-15)

    def test_hand_evaluated_walks(self):
        w = bridge_walk(sorted_vec([0.5, 0.5]), sorted_vec([0.8, 0.2]))
        np.testing.assert_allclose(w.partial_sums, [0.3, 0.0], atol=1e-12)
        w = bridge_walk(sorted_vec([0.6, 0.3, 0.1]), sorted_vec([0.5, 0.3, 0.2]))
        np.testing.assert_allclose(w.partial_sums, [-0.1, -0.1, 0.0], atol=1e-12)

    def test_returns_to_zero_for_random_pairs(self):
        for i in range(50):
            x = sort_desc(sample_uniform_simplex(64, RngStream(51, 2 * i)))
            y = sort_desc(sample_uniform_simplex(64, RngStream(51, 2 * i + 1)))
            assert abs(bridge_walk(x, y).partial_sums[-1]) <= 1e-10

    def test_rejects_open_walks(self):
        with pytest.raises(ValueError):
            BridgeWalk(partial_sums=[0.1, 0.2])


class TestTimeAboveOrigin:
    def test_all_zero_counts_everything(self):
        assert time_above_origin(BridgeWalk(partial_sums=[0.0, 0.0, 0.0])) == 3

    def test_partial_counts(self):
        assert time_above_origin(BridgeWalk(partial_sums=[0.1, -0.05, 0.0])) == 2
        assert time_above_origin(BridgeWalk(partial_sums=[-0.3, -0.1, 0.0])) == 1


class TestLimitConversionProbability:
    def test_identical_chains(self):
        v = poisson_chain_from_spacings([0.3, 1.2, 0.7, 2.0])
        assert limit_conversion_probability(v, v, 4) == 1.0

    def test_constant_spacings_ratio(self):
        v = poisson_chain_from_spacings([1.0] * 20)
        w = poisson_chain_from_spacings([2.0] * 20)
        assert limit_conversion_probability(v, w, 20) == pytest.approx(0.5, rel=1e-12)
        # swapped arguments: the raw infimum exceeds 1
        assert limit_conversion_probability(w, v, 20) == pytest.approx(2.0, rel=1e-12)

    def test_non_increasing_in_k_max(self):
        rng = np.random.default_rng(3)
        v = poisson_chain_from_spacings(rng.exponential(size=50))
        w = poisson_chain_from_spacings(rng.exponential(size=50))
        vals = [limit_conversion_probability(v, w, k) for k in range(1, 51)]
        assert np.all(np.diff(vals) <= 0.0)

    def test_k_max_validation(self):
        v = poisson_chain_from_spacings([1.0, 1.0])
        with pytest.raises(ValueError):
            limit_conversion_probability(v, v, 3)
        with pytest.raises(ValueError):
            limit_conversion_probability(v, v, 0)

    def test_rejects_non_increasing_input(self):
        with pytest.raises(ValueError):
            limit_conversion_probability([1.0, 0.5], [1.0, 2.0], 2)


class TestEquivalenceOfCriteria:
    def test_conversion_majorization_bridge_agree(self):
        # the three views must agree pairwise on random pairs of every size
        for n in (2, 3, 8, 16, 64):
            for i in range(200):
                x = sort_desc(sample_uniform_simplex(n, RngStream(1000 + n, 2 * i)))
                y = sort_desc(sample_uniform_simplex(n, RngStream(1000 + n, 2 * i + 1)))
                maj = majorizes(x, y)
                assert (conversion_probability(x, y) == 1.0) == maj
                assert (bridge_walk(x, y).partial_sums.min() >= -1e-12) == maj
