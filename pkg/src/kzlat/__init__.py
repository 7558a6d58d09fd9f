"""kzlat: KZ and LLL lattice reduction with certified outputs.

Public surface re-exported here; see the module docstrings for details.
"""

from .bounds import (
    blichfeldt_bound,
    boosted_column_bound,
    boosted_diag_bound,
    boosted_od_bound,
    column_ratio_bound,
    hanrot_stehle_bound,
    hermite_exact,
    hermite_linear_bound,
    kz_constant_bound,
    lemma1_envelope,
    neu17_linear_bound,
    od_bound,
    od_h,
    remark_bounds,
    svp_alpha,
    svp_entry_bound,
    svp_entry_factor,
)
from .errors import (
    BothZero,
    DegenerateRotation,
    DimensionTooLarge,
    DomainError,
    LatticeError,
    NonConvergence,
    OverflowWatch,
    RankDeficient,
    SquareRootFailure,
    UnknownHermiteConstant,
)
from .expand import basis_expand_improved, basis_expand_zqw, ext_gcd, unimodular_pair
from .harness import BenchSpec, cmd_example2, gen_case1, gen_case2, run_bench
from .kz import KzStats, kz_reduce_improved, kz_reduce_zqw
from .linalg import (
    FlopCounter,
    QRFactors,
    givens_pair,
    qr_factorize,
    read_int_matrix,
    read_matrix,
    round_tie_small,
    write_matrix,
)
from .lll import LLLParams, ReducedBasis, is_lll_reduced, is_size_reduced, lll_reduce
from .svp import (
    SvpSolution,
    lll_aided_svp,
    se_search_dkwz,
    se_search_improved,
    se_search_original,
)
from .verify import (
    ReductionCertificate,
    assert_kz_reduced,
    brute_force_lambda,
    exact_det_sign,
    orthogonality_defect,
)
