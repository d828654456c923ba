"""Exact q-enumeration of tableaux, order ideals, and toggle statistics.

Everything is computed with big-integer polynomial arithmetic: generating
functions for linear extensions and weakly increasing fillings, product
formulas, weighted order-ideal distributions with toggle-symmetric
expectations, an exact rational-function solver for forced toggle constants,
a value-escalation pairing on extension prefixes, and lattice-path models.
No floating point anywhere.
"""

from .distributions import (
    WeightedEnsemble,
    check_toggle_symmetry,
    ensemble_lin,
    ensemble_rank,
    ensemble_rpp,
    ensemble_uniform,
    expectation,
    statistic_ddeg,
    statistic_toggle,
    theta,
    theta_m,
    theta_star,
)
from .extensions import (
    BsvLinearExtension,
    LinearExtension,
    descents,
    comaj,
    enumerate_bsv,
    enumerate_linear_extensions,
    format_tableau,
    gf_bsv,
    gf_comaj,
    gf_comaj_hook_formula,
    maj,
    parse_tableau,
)
from .posets import (
    Poset,
    PosetSpecError,
    build_minuscule,
    build_propeller,
    build_rectangle,
    build_shape,
    build_shifted,
    dual,
    order_ideals,
    parse_poset_spec,
    rank_data,
)
from .ppartitions import (
    bender_knuth_gf,
    enumerate_rpp,
    gansner_series,
    gf_bsv_rpp,
    macmahon_gf,
    minuscule_gf,
    rpp_size_gf,
    rpp_size_series,
)
from .qpoly import (
    QLaurent,
    QPoly,
    QTPoly,
    RatFunc,
    format_poly,
    format_qt_poly,
    parse_poly,
    parse_qt_poly,
    qbinom,
    qfact,
    qnum,
    qt_num,
)
from .solver import (
    predict_constant,
    statistic_diagonal,
    statistic_row,
    toggle_solve,
    verify_refinements,
)
from .togglebij import inverse_toggle_bijection, toggle_bijection

__version__ = "0.1.0"

__all__ = [
    "BsvLinearExtension",
    "LinearExtension",
    "Poset",
    "PosetSpecError",
    "QLaurent",
    "QPoly",
    "QTPoly",
    "RatFunc",
    "WeightedEnsemble",
    "__version__",
    "bender_knuth_gf",
    "build_minuscule",
    "build_propeller",
    "build_rectangle",
    "build_shape",
    "build_shifted",
    "check_toggle_symmetry",
    "comaj",
    "descents",
    "dual",
    "ensemble_lin",
    "ensemble_rank",
    "ensemble_rpp",
    "ensemble_uniform",
    "enumerate_bsv",
    "enumerate_linear_extensions",
    "enumerate_rpp",
    "expectation",
    "format_poly",
    "format_qt_poly",
    "format_tableau",
    "gansner_series",
    "gf_bsv",
    "gf_bsv_rpp",
    "gf_comaj",
    "gf_comaj_hook_formula",
    "inverse_toggle_bijection",
    "macmahon_gf",
    "maj",
    "minuscule_gf",
    "order_ideals",
    "parse_poly",
    "parse_poset_spec",
    "parse_qt_poly",
    "parse_tableau",
    "predict_constant",
    "qbinom",
    "qfact",
    "qnum",
    "qt_num",
    "rank_data",
    "rpp_size_gf",
    "rpp_size_series",
    "statistic_ddeg",
    "statistic_diagonal",
    "statistic_row",
    "statistic_toggle",
    "theta",
    "theta_m",
    "theta_star",
    "toggle_bijection",
    "toggle_solve",
    "verify_refinements",
]
