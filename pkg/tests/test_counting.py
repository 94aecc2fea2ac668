import json
from fractions import Fraction

import pytest

from trailfrac import (
    EdgeSubset,
    count_family_closed_form,
    count_trails_exact,
    estimate_trail_fraction,
    gen_family,
    gen_path,
    gen_random_multigraph,
    is_trail,
    wilson_interval,
)

from helpers import brute_force_d, small_corpus


class TestExactCount:
    def test_single_edge(self):
        report = count_trails_exact(gen_path(1))
        assert report.d == 1
        assert report.f == Fraction(1, 2)

    def test_two_edge_path(self):
        report = count_trails_exact(gen_path(2))
        assert report.d == 3
        assert report.f == Fraction(3, 4)

    def test_family_4(self):
        report = count_trails_exact(gen_family(4))
        assert report.d == 13
        assert report.f == Fraction(13, 16)

    def test_family_6(self):
        report = count_trails_exact(gen_family(6))
        assert report.d == 49
        assert report.f == Fraction(49, 64)

    def test_edgeless_graph(self):
        report = count_trails_exact(gen_random_multigraph(3, 0, seed=1))
        assert report.d == 0
        assert report.f == 0

    def test_matches_permutation_oracle_brute_force(self):
        for name, g in small_corpus():
            if g.m <= 6:
                assert count_trails_exact(g).d == brute_force_d(g), name

    def test_matches_is_trail_sum(self):
        g = gen_random_multigraph(4, 9, seed=77)
        expected = sum(
            is_trail(g, EdgeSubset(mask, g.m)).is_trail for mask in range(1 << g.m)
        )
        report = count_trails_exact(g)
        assert report.d == expected
        assert 0 <= report.d <= (1 << g.m) - 1  # empty subset never counts

    @pytest.mark.parametrize("lanes", [1, 2, 3, 4, 8, 64])
    def test_lane_independence(self, lanes):
        for g in (gen_path(4), gen_family(6), gen_random_multigraph(5, 10, seed=5)):
            assert count_trails_exact(g, lanes=lanes).d == count_trails_exact(g).d

    def test_lanes_recorded(self):
        assert count_trails_exact(gen_path(2), lanes=4).lanes == 4

    def test_invalid_lanes(self):
        with pytest.raises(ValueError, match="lanes"):
            count_trails_exact(gen_path(2), lanes=0)

    def test_enumeration_cap(self):
        g = gen_random_multigraph(6, 31, seed=2)
        with pytest.raises(ValueError, match="too large"):
            count_trails_exact(g)

    def test_json_fields(self):
        payload = count_trails_exact(gen_family(4)).to_json_dict()
        assert list(payload) == ["m", "d", "f", "f_decimal", "elapsed", "lanes"]
        assert payload["f"] == "13/16"
        assert payload["f_decimal"] == 0.8125
        json.dumps(payload)


class TestFamilyClosedForm:
    @pytest.mark.parametrize(
        "m,even,odd,total",
        [(2, 1, 2, 3), (4, 5, 8, 13), (6, 19, 30, 49)],
    )
    def test_small_values(self, m, even, odd, total):
        fc = count_family_closed_form(m)
        assert (fc.even_count, fc.odd_count, fc.total) == (even, odd, total)

    @pytest.mark.parametrize("m", [-2, 0, 1, 3, 7])
    def test_rejects_bad_m(self, m):
        with pytest.raises(ValueError):
            count_family_closed_form(m)

    @pytest.mark.parametrize("m", [2, 4, 6, 8, 10, 12])
    def test_agrees_with_enumeration(self, m):
        assert count_family_closed_form(m).total == count_trails_exact(gen_family(m)).d

    def test_parity_split_agrees_with_enumeration(self):
        g = gen_family(8)
        even = odd = 0
        for mask in range(1, 1 << 8):
            if is_trail(g, EdgeSubset(mask, 8)).is_trail:
                if mask.bit_count() % 2:
                    odd += 1
                else:
                    even += 1
        fc = count_family_closed_form(8)
        assert (fc.even_count, fc.odd_count) == (even, odd)


class TestEstimate:
    def test_bit_identical_for_fixed_seed(self):
        g = gen_family(6)
        a = estimate_trail_fraction(g, samples=5000, seed=42)
        b = estimate_trail_fraction(g, samples=5000, seed=42)
        assert a == b

    def test_different_seeds_differ(self):
        g = gen_family(6)
        a = estimate_trail_fraction(g, samples=5000, seed=1)
        b = estimate_trail_fraction(g, samples=5000, seed=2)
        assert a.estimate != b.estimate

    def test_family4_close_to_exact(self):
        g = gen_family(4)
        f = 13 / 16
        report = estimate_trail_fraction(g, samples=100_000, seed=2024)
        assert abs(report.estimate - f) <= 4 * (f * (1 - f) / 100_000) ** 0.5
        assert report.ci_low <= report.estimate <= report.ci_high

    def test_single_sample_degenerate(self):
        report = estimate_trail_fraction(gen_path(1), samples=1, seed=9)
        assert report.estimate in (0.0, 1.0)
        assert 0.0 <= report.ci_low <= report.ci_high <= 1.0

    def test_estimate_within_interval_always(self):
        g = gen_path(3)
        for seed in range(5):
            r = estimate_trail_fraction(g, samples=257, seed=seed)
            assert r.ci_low <= r.estimate <= r.ci_high

    def test_invalid_confidence(self):
        with pytest.raises(ValueError, match="confidence"):
            estimate_trail_fraction(gen_path(1), samples=10, seed=0, confidence=1.0)

    def test_invalid_samples(self):
        with pytest.raises(ValueError, match="samples"):
            estimate_trail_fraction(gen_path(1), samples=0, seed=0)

    def test_edgeless_graph_estimates_zero(self):
        report = estimate_trail_fraction(gen_random_multigraph(3, 0, seed=0), samples=100, seed=5)
        assert report.estimate == 0.0

    def test_wide_graph_uses_multiple_words_per_sample(self):
        g = gen_random_multigraph(4, 70, seed=1)
        a = estimate_trail_fraction(g, samples=2000, seed=9)
        b = estimate_trail_fraction(g, samples=2000, seed=9)
        assert a == b
        assert 0.0 <= a.estimate <= 1.0

    def test_negative_seed_accepted_and_echoed(self):
        report = estimate_trail_fraction(gen_family(4), samples=1000, seed=-12345)
        assert report.seed == -12345
        assert 0.0 <= report.estimate <= 1.0

    def test_single_edge_interval_coverage_over_seeds(self):
        # true f = 1/2; the 95% interval should cover it in >= 90% of seeds
        g = gen_path(1)
        covered = sum(
            1
            for s in range(50)
            if (r := estimate_trail_fraction(g, samples=10_000, seed=s)).ci_low
            <= 0.5
            <= r.ci_high
        )
        assert covered >= 45

    def test_json_fields(self):
        payload = estimate_trail_fraction(gen_path(1), samples=10, seed=3).to_json_dict()
        assert list(payload) == ["estimate", "ci_low", "ci_high", "confidence", "samples", "seed"]
        json.dumps(payload)


class TestWilson:
    def test_against_statsmodels(self):
        proportion = pytest.importorskip("statsmodels.stats.proportion")
        for successes, samples, conf in [(0, 10, 0.95), (10, 10, 0.95), (7, 13, 0.9), (500, 1000, 0.99)]:
            lo, hi = wilson_interval(successes, samples, conf)
            ref_lo, ref_hi = proportion.proportion_confint(
                successes, samples, alpha=1 - conf, method="wilson"
            )
            assert lo == pytest.approx(ref_lo, abs=1e-12)
            assert hi == pytest.approx(ref_hi, abs=1e-12)

    def test_width_shrinks_with_samples(self):
        widths = []
        for n in (100, 400, 1600):
            lo, hi = wilson_interval(n // 2, n, 0.95)
            widths.append(hi - lo)
        assert widths[0] > widths[1] > widths[2]
        assert widths[0] / widths[2] == pytest.approx(4.0, rel=0.05)
