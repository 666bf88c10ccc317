"""Zero counts and roots of x^(2^l+1)+x+a and its companion affine and
linearized polynomials over GF(2^k), with an exhaustive brute-force oracle.
"""

from ._scan import BACKEND as scan_backend
from .affine import FaSolution, character_sum, classify_f, f_census, root_trace_class, solve_f
from .cnz import CnzValues, c_eval, cnz_values, count_zeros_cn, count_zeros_zn, v_map, y_eval, z_eval
from .distributions import DistributionReport, f_predicted_counts, p_predicted_counts
from .dobbertin import (
    AB_eval,
    CoprimeParams,
    H_eval,
    R_eval,
    T_l_eval,
    TraceClassSets,
    e_exp,
    multiset_image,
    q_eval,
    q_perm,
)
from .field import (
    FieldCtx,
    RootSet,
    SubfieldParams,
    half_trace,
    linearized_solutions,
    make_field,
    smallest_irreducible,
    solve_artin_schreier,
)
from .linearized import QClassification, classify_q, q_kernel, r_power_test, unit_circle
from .oracle import OracleResult, census, kernel_q, roots_f, roots_p
from .psolver import (
    PaClass,
    PaClassification,
    classify,
    distribution,
    gcd1_criterion,
    la_correspondence_check,
    solve,
    solve_checked,
)
from .tower import ExtContext

__version__ = "0.1.0"
