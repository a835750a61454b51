"""
工具函数模块
"""

from .memo_cache import MemoCache, register_cache, clear_all_caches, get_all_stats

__all__ = [
    'MemoCache',
    'register_cache',
    'clear_all_caches',
    'get_all_stats',
]
