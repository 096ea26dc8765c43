"""Odd- and even-sunflowers: detectors, constructions, bounds, MOS enumeration, 3DM reduction."""

from .bounds import (
    ExtremalRecord,
    LogBound,
    construction3_bound,
    exact_extremal,
    mu_lower_bound,
    verify_supermultiplicativity,
)
from .constructions import (
    LabelMap,
    binary_tree_family,
    c_n,
    c_n_plus,
    construction1,
    construction2,
    direct_power,
    direct_sum,
    optimal_wreath_n,
    wreath,
)
from .detectors import (
    BudgetExceeded,
    Certificate,
    Kind,
    MultiClassification,
    MultiTag,
    classify_multifamily,
    find_classic_sunflower,
    find_even_sunflower,
    find_odd_sunflower,
    is_even_sunflower,
    is_odd_sunflower,
    verify_certificate,
)
from .family import (
    MultiFamily,
    SetFamily,
    degree_vector,
    is_antichain,
    is_uniform,
    make_family,
    restrict,
    slice_family,
)
from .mos import (
    CanonicalClass,
    MosSearchConfig,
    canonical_form,
    enumerate_mos,
    is_minimal_odd_sunflower,
    mos_size_bound,
)
from .reduction import ThreeDMInstance, reduce_3dm, solve_3dm, verify_reduction

__version__ = "0.1.0"
