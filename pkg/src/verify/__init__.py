"""
verify 套件模块
"""

from .suites import SUITES, verify_suites, run_suite, clamp_bounds, fusion_specs
from .sweeps import sweep_specs, level_partitions, z_choices

__all__ = [
    'SUITES',
    'verify_suites',
    'run_suite',
    'clamp_bounds',
    'fusion_specs',
    'sweep_specs',
    'level_partitions',
    'z_choices',
]
