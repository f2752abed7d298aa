import math

import pytest

import rankdep as rd


def test_statistics_of_identity():
    x = list(range(1, 51))
    stats = rd.statistics(x, x)
    assert stats["n"] == 50
    assert stats["spearman"] == 1.0
    assert stats["xi"] == pytest.approx(1 - 147 / 2499, abs=1e-14)
    assert stats["combined"] == pytest.approx(math.sqrt(2.5) * stats["xi"], abs=1e-14)


def test_ranks_and_statistics_agree():
    x = [0.3, -1.2, 2.5, 0.0, 1.1]
    y = [1.0, 3.0, -2.0, 0.5, 4.0]
    ranks = rd.concomitant_ranks(x, y)
    assert sorted(ranks) == [1, 2, 3, 4, 5]
    stats = rd.statistics(x, y)
    assert rd.xi(ranks) == stats["xi"]
    assert rd.spearman(ranks) == stats["spearman"]
    assert rd.combined(ranks) == stats["combined"]


def test_ties_raise_with_code():
    with pytest.raises(rd.RankdepError) as info:
        rd.statistics([1, 2, 3], [1, 1, 2])
    assert info.value.code == "TiesPresent"
    assert isinstance(info.value, ValueError)
    ranks = rd.concomitant_ranks([1, 2, 3], [1, 1, 2], ties="random", seed=4)
    assert ranks == rd.concomitant_ranks([1, 2, 3], [1, 1, 2], ties="random", seed=4)


def test_asymptotic_pvalues():
    assert rd.combined_pvalue_asymptotic(0.0, 10) == 1.0
    assert rd.normal_cdf(1.959963984540054) == pytest.approx(0.975, abs=1e-15)
    assert rd.spearman_pvalue_asymptotic(0.3, 100) == pytest.approx(0.0026997960632601890, rel=1e-12)
    assert rd.xi_pvalue_asymptotic(0.2, 40) == pytest.approx(0.022750131948179207, rel=1e-12)


def test_permutation_and_exact_tests():
    x = [1, 2, 3, 4, 5, 6]
    y = [2, 1, 4, 3, 6, 5]
    perm = rd.test(x, y, rd.Method.SPEARMAN, pvalue="permutation", permutations=999, seed=7)
    assert perm.p_source == "permutation"
    assert perm.permutations_used == 999
    again = rd.test(x, y, rd.Method.SPEARMAN, pvalue="permutation", permutations=999, seed=7, threads=2)
    assert again.p_value == perm.p_value
    exact = rd.test(x, y, rd.Method.SPEARMAN, pvalue="exact")
    assert exact.p_source == "exact"
    assert abs(perm.p_value - exact.p_value) < 0.05
    p, text = rd.exact_pvalue([1, 2, 3], rd.Method.CHATTERJEE)
    assert text == "1/3" and p == pytest.approx(1 / 3)


def test_exact_oracles():
    atoms = rd.enumerate_null(3)
    assert len(atoms) == 6
    assert ([1, 2, 3], "1/1", "1/4") in atoms
    for n in range(2, 9):
        assert rd.exact_covariance(n) == "0/1"
    assert rd.exact_covariance(3, absolute=True) == "1/24"
    with pytest.raises(rd.RankdepError):
        rd.enumerate_null(9)


def test_bh_adjust():
    result = rd.bh_adjust([0.01, 0.04, 0.03, 0.5], q=0.05)
    assert result["adjusted_p"] == pytest.approx([0.04, 0.16 / 3, 0.16 / 3, 0.5], abs=1e-15)
    assert result["rejected"] == [True, False, False, False]
    assert result["rejected_count"] == 1


def test_extremal():
    r = rd.case1_ranks(5)
    assert r == [5, 3, 1, 2, 4]
    assert rd.xi(r) == pytest.approx(1 - 21 / 24)
    assert rd.case2_ranks(3, 2) == [1, 4, 2, 5, 3, 6, 7, 8]
    with pytest.raises(rd.RankdepError) as info:
        rd.case1_ranks(4)
    assert info.value.code == "EvenN"


def test_simulation():
    x, y = rd.generate("linear", 30, seed=1)
    assert len(x) == len(y) == 30
    assert (x, y) == rd.generate("linear", 30, seed=1)
    power = rd.estimate_power("linear", 60, runs=200, seed=3)
    assert set(power) == {"spearman", "chatterjee", "combined"}
    assert power["spearman"][0] > 0.8
    mean_bias, samples = rd.bias_study(20, runs=100, permutations=1000, seed=2)
    assert len(samples) == 100
    assert mean_bias == pytest.approx(sum(samples) / 100)
    pts = rd.null_joint_sample(10, 50, seed=1)
    assert len(pts) == 50
