"""Exact computation of graded partition counts, Weyl alternation sets and
weight multiplicities for the simple Lie algebras, in simple-root
coordinates over the rationals."""

from .qpoly import QPolynomial
from .rootsys import (
    LieType,
    RootSystem,
    Weight,
    WeightClass,
    build_root_system,
    cartan_matrix,
    classify_weight,
    weight_height,
    weyl_group_order,
)
from .weyl import (
    DEFAULT_MAX_GROUP_ORDER,
    AlternationRecord,
    OrderExceededError,
    WeylElement,
    alternation_set,
    apply,
    canonical_word,
    compose,
    determinant,
    enumerate_group,
    group_order_bfs,
    identity_element,
    length_by_negative_roots,
    simple_reflection,
    word_str,
)
from .partition import (
    PartitionMultiset,
    kostant_partition,
    partition_genfunc,
    partition_genfunc_batch,
    partition_tree_count,
    partition_tree_list,
)
from .multiplicity import (
    ExponentReport,
    MultiplicityResult,
    compute_m,
    compute_mq,
    full_group_mq,
    reference_exponents,
    verify_exponents,
)

__all__ = [
    "AlternationRecord",
    "DEFAULT_MAX_GROUP_ORDER",
    "ExponentReport",
    "LieType",
    "MultiplicityResult",
    "OrderExceededError",
    "PartitionMultiset",
    "QPolynomial",
    "RootSystem",
    "Weight",
    "WeightClass",
    "WeylElement",
    "alternation_set",
    "apply",
    "build_root_system",
    "canonical_word",
    "cartan_matrix",
    "classify_weight",
    "compose",
    "compute_m",
    "compute_mq",
    "determinant",
    "enumerate_group",
    "full_group_mq",
    "group_order_bfs",
    "identity_element",
    "kostant_partition",
    "length_by_negative_roots",
    "partition_genfunc",
    "partition_genfunc_batch",
    "partition_tree_count",
    "partition_tree_list",
    "reference_exponents",
    "simple_reflection",
    "verify_exponents",
    "weight_height",
    "weyl_group_order",
    "word_str",
]

__version__ = "0.1.0"
