"""
分拆模块
分拆、共轭、m 向量、spec 规范化与 μ 链
"""

from .partition import (
    Partition,
    conjugate,
    parse_partition,
    vec_add,
    vec_sub,
    is_partition_vector,
    unit_vector,
    column_vector,
    partitions_between,
    partitions_inside,
    partitions_of,
    mvec_to_partition,
    partition_to_mvec,
)
from .chain import MChain
from .spec import (
    FusionSpec,
    normalize_spec,
    parse_spec,
    format_spec,
    module_dimension,
    spec_dimension,
    mu_nu_k,
    spec_from_chain_top,
    chain_to_spec,
)

__all__ = [
    'Partition',
    'conjugate',
    'parse_partition',
    'vec_add',
    'vec_sub',
    'is_partition_vector',
    'unit_vector',
    'column_vector',
    'partitions_between',
    'partitions_inside',
    'partitions_of',
    'mvec_to_partition',
    'partition_to_mvec',
    'MChain',
    'FusionSpec',
    'normalize_spec',
    'parse_spec',
    'format_spec',
    'module_dimension',
    'spec_dimension',
    'mu_nu_k',
    'spec_from_chain_top',
    'chain_to_spec',
]
