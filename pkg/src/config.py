"""
配置管理模块
所有参数均可通过 FUSIONCHAR_ 前缀的环境变量或 .env 文件覆盖
"""
import os

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """运行配置"""

    # 并发（0 = 使用全部可用核心）
    threads: int = 0

    # 资源上限
    max_monomials: int = 20000  # oracle 每个分次片段的单项式数量上限
    memo_cap: int = 50000  # 每张记忆表的 LRU 容量

    # 精确秩计算后端: bareiss | sympy
    rank_method: str = "bareiss"

    # 过滤张量积的额外算子模式数（N-1 之外）
    mode_margin: int = 0

    # verify 扫描范围（默认即验收规模）
    sweep_max_rank: int = 3
    sweep_max_boxes: int = 6
    sweep_max_level: int = 3
    sweep_max_partition: int = 7
    sweep_max_factors: int = 4
    sweep_boxes_cap: int = 8  # 防止指数爆炸的硬上限

    # 日志
    log_level: str = "WARNING"
    log_json_format: bool = False

    class Config:
        env_file = ".env"
        env_prefix = "FUSIONCHAR_"
        case_sensitive = False

    def worker_count(self) -> int:
        """解析实际工作线程数"""
        if self.threads > 0:
            return self.threads
        return os.cpu_count() or 1


settings = Settings()
