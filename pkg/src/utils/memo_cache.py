"""
记忆表
特征标递归、Kostka 剥离等纯函数的结果缓存，LRU 有界，线程安全
"""
import logging
from collections import OrderedDict
from threading import Lock
from typing import Any, Callable, Dict, Hashable, List, Optional

logger = logging.getLogger(__name__)

_MISSING = object()


class MemoCache:
    """有界 LRU 记忆表（线程安全）"""

    def __init__(self, name: str, capacity: Optional[int] = None):
        """
        初始化记忆表

        Args:
            name: 表名（用于日志和统计）
            capacity: 容量上限，None 表示使用 settings.memo_cap
        """
        self.name = name
        self._capacity = capacity
        self._data: "OrderedDict[Hashable, Any]" = OrderedDict()
        self._lock = Lock()
        self._hits = 0
        self._misses = 0
        self._evictions = 0

    @property
    def capacity(self) -> int:
        if self._capacity is not None:
            return self._capacity
        from src.config import settings
        return max(1, settings.memo_cap)

    def get(self, key: Hashable) -> Optional[Any]:
        """
        读取缓存

        Args:
            key: 规范化的键

        Returns:
            缓存值，不存在则返回 None
        """
        with self._lock:
            value = self._data.get(key, _MISSING)
            if value is _MISSING:
                self._misses += 1
                return None
            self._hits += 1
            self._data.move_to_end(key)
            return value

    def set(self, key: Hashable, value: Any) -> Any:
        """
        插入缓存（若已存在则保留先写入的值）

        Returns:
            表中最终保存的值
        """
        with self._lock:
            existing = self._data.get(key, _MISSING)
            if existing is not _MISSING:
                return existing
            self._data[key] = value
            while len(self._data) > self.capacity:
                self._data.popitem(last=False)
                self._evictions += 1
                logger.debug(f"记忆表 {self.name} 淘汰最旧条目")
            return value

    def get_or_compute(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        """
        读取缓存，未命中时计算并原子插入

        计算本身在锁外进行；两个线程同时未命中时，先插入者胜出，
        两者返回同一个值。
        """
        value = self.get(key)
        if value is not None:
            return value
        return self.set(key, compute())

    def clear(self):
        """清空记忆表"""
        with self._lock:
            self._data.clear()
            self._hits = self._misses = self._evictions = 0
            logger.info(f"记忆表 {self.name} 已清空")

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)

    def get_stats(self) -> Dict[str, Any]:
        """获取统计信息"""
        with self._lock:
            return {
                'name': self.name,
                'size': len(self._data),
                'capacity': self.capacity,
                'hits': self._hits,
                'misses': self._misses,
                'evictions': self._evictions,
            }


# 全局注册表
_registry: List[MemoCache] = []
_registry_lock = Lock()


def register_cache(name: str, capacity: Optional[int] = None) -> MemoCache:
    """创建并登记一张全局记忆表"""
    cache = MemoCache(name, capacity)
    with _registry_lock:
        _registry.append(cache)
    return cache


def clear_all_caches():
    """清空所有已登记的记忆表"""
    with _registry_lock:
        caches = list(_registry)
    for cache in caches:
        cache.clear()


def get_all_stats() -> List[Dict[str, Any]]:
    """所有记忆表的统计信息"""
    with _registry_lock:
        caches = list(_registry)
    return [cache.get_stats() for cache in caches]
