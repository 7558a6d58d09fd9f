import numpy as np
import pytest

from kzlat import (
    KzStats,
    OverflowWatch,
    RankDeficient,
    assert_kz_reduced,
    exact_det_sign,
    gen_case1,
    is_lll_reduced,
    kz_reduce_improved,
    kz_reduce_zqw,
    se_search_original,
)
from kzlat.harness import EXAMPLE2_MATRIX
from kzlat.lll import LLLParams

PARAMS = LLLParams(0.99)


@pytest.mark.parametrize("reduce_fn", [kz_reduce_improved, kz_reduce_zqw])
def test_outputs_certify(reduce_fn):
    for seed in (1, 2, 3):
        a = gen_case1(3, seed)  # 6 x 6 real
        red = reduce_fn(a, PARAMS)
        cert = assert_kz_reduced(red.r, red.z, a, 0.99)
        assert cert.all_pass, cert.details


def test_pipelines_agree_on_diagonal():
    # KZ diagonal magnitudes are intrinsic to the lattice, so both
    # pipelines must produce the same |r_ii| profile
    for seed in (5, 6):
        a = gen_case1(3, seed)
        d1 = np.abs(np.diag(kz_reduce_improved(a, PARAMS).r))
        d2 = np.abs(np.diag(kz_reduce_zqw(a, PARAMS).r))
        assert np.allclose(d1, d2, rtol=1e-8)


def test_kz_implies_lll():
    a = gen_case1(4, 9)
    red = kz_reduce_improved(a, PARAMS)
    assert is_lll_reduced(red.r, PARAMS)


def test_first_diagonal_is_lambda():
    a = gen_case1(3, 11)
    red = kz_reduce_improved(a, PARAMS)
    lam = se_search_original(red.r).norm
    assert np.isclose(abs(red.r[0, 0]), lam, rtol=1e-10)


def test_stats_bookkeeping():
    a = gen_case1(4, 21)
    stats = KzStats()
    red = kz_reduce_improved(a, PARAMS, stats=stats)
    n = a.shape[1]
    assert len(stats.svp_solutions) == n - 1
    assert stats.e1_skips + stats.expansions == n - 1
    assert stats.search.nodes > 0
    assert abs(exact_det_sign(red.z)) == 1


def test_rank_deficient_input():
    a = np.ones((4, 4))
    with pytest.raises(RankDeficient):
        kz_reduce_improved(a, PARAMS)


def test_baseline_watchdog_on_ill_conditioned_input():
    with pytest.raises(OverflowWatch):
        kz_reduce_zqw(EXAMPLE2_MATRIX, PARAMS, watchdog=True)
    # the improved pipeline handles the same input under the watchdog
    red = kz_reduce_improved(EXAMPLE2_MATRIX, PARAMS, watchdog=True)
    cert = assert_kz_reduced(red.r, red.z, EXAMPLE2_MATRIX, 0.99)
    assert cert.all_pass, cert.details
