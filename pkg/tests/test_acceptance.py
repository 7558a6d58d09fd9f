"""Acceptance gate: ten criteria, one printed PASS/FAIL line each.

The report fixture suspends pytest's capture while printing, so the
PASS/FAIL lines always show up in the saved run log.
"""

import math
import time

import numpy as np
import pytest

from helpers import random_lll_r
from kzlat import (
    assert_kz_reduced,
    brute_force_lambda,
    cmd_example2,
    gen_case1,
    gen_case2,
    kz_reduce_improved,
    kz_reduce_zqw,
    lll_reduce,
    orthogonality_defect,
    qr_factorize,
    se_search_dkwz,
    se_search_improved,
    se_search_original,
)
from kzlat import bounds as B
from kzlat.harness import trial_seed
from kzlat.lll import LLLParams

PARAMS = LLLParams(0.99)


@pytest.fixture
def report(capfd):
    def _line(num, name, ok, detail=""):
        tail = f" ({detail})" if detail else ""
        line = f"ACCEPTANCE {num:02d} {name}: {'PASS' if ok else 'FAIL'}{tail}"
        with capfd.disabled():
            print(line, flush=True)
        assert ok, line

    return _line


def test_criterion_01_bound_golden_tables(report):
    f_expected = [
        1.0,
        4.0 / 3.0,
        2.0 ** (3.0 / 2.0) / math.sqrt(3.0),
        2.0 ** (11.0 / 6.0) / math.sqrt(3.0),
        2.0 ** (25.0 / 12.0) / math.sqrt(3.0),
        2.0 ** (161.0 / 60.0) / 3.0 ** (7.0 / 10.0),
        2.0 ** (161.0 / 60.0) / 3.0 ** (8.0 / 15.0),
        2.0 ** (1227.0 / 420.0) / 3.0 ** (8.0 / 15.0),
    ]
    ok_f = all(B.kz_constant_bound(n) == f_expected[n - 1] for n in range(1, 9))
    g_printed = [1.0, 1.34, 1.75, 2.27, 2.89, 3.64, 4.54, 5.60]
    ok_g = all(
        abs(B.column_ratio_bound(i) - g_printed[i - 1]) <= 0.005
        for i in range(1, 9)
    )
    h_expected = [
        1.0,
        2.0 / math.sqrt(3.0),
        math.sqrt(2.0),
        2.0,
        math.sqrt(8.0),
        8.0 / math.sqrt(3.0),
        8.0,
        16.0,
    ]
    ok_h = all(B.od_h(n) == h_expected[n - 1] for n in range(1, 9)) and all(
        np.isclose(B.od_h(n), (n / 8.0 + 6.0 / 5.0) ** (n / 2.0), rtol=1e-14)
        for n in (9, 16)
    )
    report(1, "bound golden tables", ok_f and ok_g and ok_h,
            f"f={ok_f} g={ok_g} h={ok_h}")


def test_criterion_02_hermite_consistency(report):
    known = (1, 2, 3, 4, 5, 6, 7, 8, 24)
    ok_dom = all(B.hermite_linear_bound(n) > B.hermite_exact(n) for n in known)
    crossover = next(
        n for n in range(3, 100)
        if B.hermite_linear_bound(n) < B.neu17_linear_bound(n)
    )
    ratios = [
        B.hermite_linear_bound(n) / B.blichfeldt_bound(n) for n in range(2, 2001)
    ]
    ok_curve = all(math.isfinite(v) and v > 0 for v in ratios)
    report(2, "Hermite consistency", ok_dom and crossover == 20 and ok_curve,
            f"crossover={crossover}")


def test_criterion_03_svp_oracle(report):
    checked = brute = 0
    ok = True
    for t in range(200):
        dim = 2 + t % 11  # real dimension 2..12
        r = random_lll_r(dim, 9000 + t)
        norms = [
            fn(r).norm
            for fn in (se_search_original, se_search_dkwz, se_search_improved)
        ]
        ref = norms[0]
        ok &= all(abs(v - ref) <= 1e-12 * ref for v in norms)
        checked += 1
        if dim <= 6:
            box = [
                math.ceil(B.svp_entry_bound(dim, i, 0.99))
                for i in range(1, dim + 1)
            ]
            ok &= abs(brute_force_lambda(r, box) - ref) <= 1e-9 * ref
            brute += 1
    report(3, "SVP correctness oracle", ok,
            f"{checked} instances, {brute} brute-forced")


def test_criterion_04_pruning_efficiency(report):
    ok_nodes = True
    means = {}
    for dim in (4, 8, 12, 16, 20):
        n = dim // 2
        flops = {"original": 0, "dkwz": 0, "improved": 0}
        for t in range(200):
            a = gen_case1(n, trial_seed(2, 1, n, t))
            red = lll_reduce(qr_factorize(a).r, PARAMS)
            so = se_search_original(red.r)
            sd = se_search_dkwz(red.r)
            si = se_search_improved(red.r)
            ok_nodes &= (
                si.counters.nodes <= sd.counters.nodes <= so.counters.nodes
            )
            flops["original"] += so.counters.flops
            flops["dkwz"] += sd.counters.flops
            flops["improved"] += si.counters.flops
        means[dim] = flops["improved"] / flops["original"]
    ok_flops = all(v < 1.0 for v in means.values())
    report(4, "pruning efficiency", ok_nodes and ok_flops,
            "improved/original flop ratios "
            + " ".join(f"dim{d}={v:.2f}" for d, v in means.items()))


@pytest.fixture(scope="module")
def kz_certified():
    """50 Case-1 + 50 Case-2 improved reductions with full certificates."""
    out = []
    for case, gen in ((1, gen_case1), (2, gen_case2)):
        for t in range(50):
            n = 2 + t % 5  # real dimension 4..12
            a = gen(n, trial_seed(5, case, n, t))
            red = kz_reduce_improved(a, PARAMS)
            cert = assert_kz_reduced(red.r, red.z, a, 0.99)
            out.append((case, a, red, cert))
    return out


def test_criterion_05_kz_certification(kz_certified, report):
    failures = [
        (case, cert.details)
        for case, _, _, cert in kz_certified
        if not cert.all_pass
    ]
    report(5, "KZ certification", not failures,
            f"{len(kz_certified)} matrices, {len(failures)} failures")


def test_criterion_06_example2_replication(report):
    result = cmd_example2(0.99)
    imp = result["improved"]
    ok_imp = (
        imp["lll_reduced"]
        and abs(imp["det_z"]) == 1
        and imp["all_svp_e1"]
        and imp["certificate_pass"]
        and all(
            abs(d - e) <= 5e-4
            for d, e in zip(imp["diag"], imp["expected_diag"])
        )
    )
    base = result["baseline"]
    ok_base = base["watchdog_fired"] or not base.get("certificate_pass", True)
    ok_cond = 5e4 < result["condition_number"] < 2e5
    report(6, "example-2 replication", ok_imp and ok_base and ok_cond,
            f"cond={result['condition_number']:.3g} "
            f"watchdog={base['watchdog_fired']}")


def test_criterion_07_bound_conformance(kz_certified, report):
    viol = 0
    for _, _, red, _ in kz_certified:
        r = red.r
        n = r.shape[0]
        r11_sq = r[0, 0] ** 2
        for i in range(1, n + 1):
            rii_sq = r[i - 1, i - 1] ** 2
            if r11_sq > B.kz_constant_bound(i) * rii_sq * (1 + 1e-9):
                viol += 1
            col_sq = float(r[:i, i - 1] @ r[:i, i - 1])
            if col_sq > B.column_ratio_bound(i) * rii_sq * (1 + 1e-9):
                viol += 1
        if orthogonality_defect(r) > B.od_bound(n) * (1 + 1e-9):
            viol += 1
    report(7, "reduction bound conformance", viol == 0, f"{viol} violations")


def test_criterion_08_svp_entry_envelope(report):
    viol = 0
    for t in range(500):
        dim = 2 + t % 11
        r = random_lll_r(dim, 30_000 + t)
        sol = se_search_original(r)
        for i, zi in enumerate(sol.z, start=1):
            if abs(zi) > B.svp_entry_bound(dim, i, 0.99) * (1 + 1e-9):
                viol += 1
    ok_factor = all(
        B.svp_entry_factor(n, n, 0.99) == 1.0 for n in range(1, 13)
    )
    report(8, "SVP entry envelope", viol == 0 and ok_factor,
            f"{viol} violations over 500 searches")


def test_criterion_09_kz_speedup(report):
    dims = (4, 8, 12)
    # warm both code paths before timing
    for fn in (kz_reduce_improved, kz_reduce_zqw):
        fn(gen_case1(2, 1), PARAMS)
    elapsed = {}
    for case, gen in ((1, gen_case1), (2, gen_case2)):
        for dim in dims:
            n = dim // 2
            t_imp = t_zqw = 0
            for trial in range(50):
                a = gen(n, trial_seed(7, case, n, trial))
                t0 = time.perf_counter_ns()
                kz_reduce_improved(a, PARAMS)
                t_imp += time.perf_counter_ns() - t0
                t0 = time.perf_counter_ns()
                kz_reduce_zqw(a, PARAMS)
                t_zqw += time.perf_counter_ns() - t0
            elapsed[(case, dim)] = (t_imp, t_zqw)
    ok_faster = all(ti < tz for ti, tz in elapsed.values())
    ratios = [elapsed[(2, d)][1] / elapsed[(2, d)][0] for d in dims]
    ok_growth = ratios[0] < ratios[1] < ratios[2]
    report(9, "KZ speedup", ok_faster and ok_growth,
            "case-2 zqw/improved ratios "
            + " ".join(f"dim{d}={r:.2f}" for d, r in zip(dims, ratios)))


def test_criterion_10_sharper_than_prior(report):
    ok_f = all(
        B.kz_constant_bound(n) <= B.hanrot_stehle_bound(n)
        for n in range(2, 201)
    )
    # At n = 2 the prior orthogonality-defect bound evaluates to 0.943,
    # below the attainable minimum defect of 1, so it is vacuous there
    # (the same degeneracy its n = 1 value 0.408 exhibits); the sharpness
    # comparison is meaningful from n = 3 on.
    ok_degenerate = B.boosted_od_bound(2) < 1.0 <= B.od_bound(2)
    ok_od = all(
        B.od_bound(n) <= B.boosted_od_bound(n) for n in range(3, 65)
    )
    report(10, "sharper than prior bounds", ok_f and ok_od and ok_degenerate,
            "f on 2..200, od on 3..64 with pinned n=2 degeneracy")
