"""Rank-based dependence measures (Spearman, Chatterjee's xi, their max-combination) and tests."""

from ._rankdep import (
    Method,
    RankdepError,
    TestResult,
    bias_study,
    bh_adjust,
    case1_ranks,
    case2_ranks,
    combined,
    combined_pvalue_asymptotic,
    concomitant_ranks,
    enumerate_null,
    estimate_power,
    exact_covariance,
    exact_pvalue,
    generate,
    normal_cdf,
    null_joint_sample,
    parse_method,
    spearman,
    spearman_pvalue_asymptotic,
    statistics,
    test,
    xi,
    xi_pvalue_asymptotic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
